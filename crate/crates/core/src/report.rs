//! Full analysis of one function: every module run in turn, each checked
//! statement recorded as a named pass/fail entry.
//!
//! Checks come in two kinds. An `invariant` is a statement the crate
//! guarantees; a failing invariant is a bug and makes [`AnalysisReport::ok`]
//! false. A `claim` is a published statement whose reading is ambiguous or
//! known to fail for some inputs; its outcome is recorded but never fatal.
//! Per-preimage checks are aggregated under one name, with the failing
//! output values listed in `detail`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::annihil::{ai_vectorial, lda_of_set, lda_product, product_annihilators};
use crate::bounds::{
    ai_lower_corollary, ai_upper, ai_upper_for_fiber, binomial_sum, consecutive_zero_bound_with,
    lda_lower_from_distance, nonzero_weight_claim, BoundReport, Thm12Convention,
};
use crate::codes::{
    code_report, generator_g_f, generator_g_f_by_gcd, ht_bound, is_lcd, code_from_preimage,
    CodeReport, CyclicCode, Distance, HtBound, HtCoprime, LcdCheck, DEFAULT_BUDGET,
};
use crate::complement::{
    an_identity_holds, an_identity_nonzero_reading_holds, complement_generator_division,
    complement_vectorial, fiber_lda_sandwich, lda_sandwich, FiberCase,
};
use crate::field::FieldSpec;
use crate::funcrep::{BooleanFunction, VectorialFunction};
use crate::seq::{min_annihilator_complexity, spectral_immunity};

/// Knobs shared by `analyze` and the corpus tools.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    /// Cap on enumerated codewords / searched supports per code.
    pub budget: u64,
    /// Coprimality reading used for the reported consecutive-root bounds.
    pub ht_coprime: HtCoprime,
    /// Summation start used for the reported distance-to-degree bounds.
    pub thm12: Thm12Convention,
    /// Record wall time per stage (makes reports non-reproducible).
    pub timings: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            budget: DEFAULT_BUDGET,
            ht_coprime: HtCoprime::Order,
            thm12: Thm12Convention::Strict,
            timings: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Invariant,
    Claim,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub kind: CheckKind,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// How a reported number was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    Bracket,
    FlaggedDegenerate,
}

const MAX_DETAILS: usize = 8;

#[derive(Default)]
struct CheckLog {
    checks: Vec<Check>,
    details: Vec<Vec<String>>,
}

impl CheckLog {
    /// Records one outcome; `None` leaves the check as it was (skipped if new).
    fn note(&mut self, name: &str, kind: CheckKind, outcome: Option<bool>, context: impl FnOnce() -> String) {
        let i = match self.checks.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                self.checks.push(Check {
                    name: name.to_string(),
                    kind,
                    status: CheckStatus::Skipped,
                    detail: None,
                });
                self.details.push(Vec::new());
                self.checks.len() - 1
            }
        };
        match outcome {
            None => {}
            Some(true) => {
                if self.checks[i].status == CheckStatus::Skipped {
                    self.checks[i].status = CheckStatus::Pass;
                }
            }
            Some(false) => {
                self.checks[i].status = CheckStatus::Fail;
                self.details[i].push(context());
            }
        }
    }

    fn invariant(&mut self, name: &str, outcome: Option<bool>, context: impl FnOnce() -> String) {
        self.note(name, CheckKind::Invariant, outcome, context);
    }

    fn claim(&mut self, name: &str, outcome: Option<bool>, context: impl FnOnce() -> String) {
        self.note(name, CheckKind::Claim, outcome, context);
    }

    fn absorb(&mut self, other: CheckLog) {
        for (c, d) in other.checks.into_iter().zip(other.details) {
            if d.is_empty() {
                let status = c.status;
                self.note(&c.name, c.kind, (status != CheckStatus::Skipped).then_some(true), String::new);
            }
            for msg in d {
                self.note(&c.name, c.kind, Some(false), || msg);
            }
        }
    }

    fn finish(self) -> Vec<Check> {
        self.checks
            .into_iter()
            .zip(self.details)
            .map(|(mut c, d)| {
                if !d.is_empty() {
                    let extra = d.len().saturating_sub(MAX_DETAILS);
                    let mut s = d.into_iter().take(MAX_DETAILS).collect::<Vec<_>>().join("; ");
                    if extra > 0 {
                        let _ = write!(s, "; and {extra} more");
                    }
                    c.detail = Some(s);
                }
                c
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImmunityReport {
    pub ai: u32,
    pub ai_method: Method,
    pub witness: Option<u16>,
    /// `LDA(F^-1(b))` per output value, `null` for empty or total fibers.
    pub lda_per_preimage: Vec<Option<u32>>,
    /// Lowest degree of `g` with `g F = 0`; `null` when `F` vanishes nowhere.
    pub lda_product: Option<u32>,
    pub lda_product_method: Method,
    /// Upper bound on AI from the smallest nonempty fiber.
    pub ai_upper_smallest_fiber: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorReport {
    pub coeffs: Vec<String>,
    pub degree: usize,
    pub defining_set: Vec<usize>,
    /// The gcd construction from the univariate form gave the same generator;
    /// `null` when `m` does not divide `n`.
    pub paths_agree: Option<bool>,
    pub lcd: LcdCheck,
    /// `G_F = x^N + 1`: the code has no nonzero word.
    pub degenerate: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PreimageReport {
    pub b: u16,
    pub size: usize,
    pub contains_zero: bool,
    pub fiber_case: FiberCase,
    pub lda: Option<u32>,
    pub code: CodeReport,
    pub ht: HtBound,
    pub bounds: Vec<BoundReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementReport {
    pub table: Vec<String>,
    pub ai: u32,
    pub ai_method: Method,
    pub lda_product: Option<u32>,
    /// `G_F / G_{F^c}`.
    pub quotient: Vec<String>,
    pub loses_zero: u16,
    pub gains_zero: u16,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralReport {
    pub value: Distance,
    pub zero_code: bool,
    /// `sum_{i <= LDA} C(n, i)` with the product-sense LDA.
    pub bound_lda_product: Option<u64>,
    /// `sum_{i <= AI} C(n, i)`.
    pub bound_ai: Option<u64>,
    /// Least number of nonzero folded univariate coefficients over product
    /// annihilators nonzero on the multiplicative group (small `n` only).
    pub min_annihilator_complexity: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    /// SHA-256 of the field parameters and the truth table.
    pub function_id: String,
    pub n: u32,
    pub m: u32,
    pub field: FieldSpec,
    pub degree: u32,
    pub surjective: bool,
    pub immunity: ImmunityReport,
    pub generator: GeneratorReport,
    pub preimages: Vec<PreimageReport>,
    pub complement: ComplementReport,
    pub spectral_immunity: SpectralReport,
    pub bounds: Vec<BoundReport>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

impl AnalysisReport {
    /// Names of failed invariants.
    pub fn failed_invariants(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.kind == CheckKind::Invariant && c.status == CheckStatus::Fail)
            .map(|c| c.name.as_str())
            .collect()
    }

    pub fn ok(&self) -> bool {
        self.failed_invariants().is_empty()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Compact human-readable summary.
    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "function   {}", self.function_id);
        let _ = writeln!(s, "n, m       {}, {}", self.n, self.m);
        let _ = writeln!(s, "field      poly {} alpha {}", self.field.poly_bits, self.field.alpha_bits);
        let _ = writeln!(s, "degree     {}", self.degree);
        let _ = writeln!(s, "AI         {} ({:?})", self.immunity.ai, self.immunity.ai_method);
        let _ = writeln!(s, "LDA(gF=0)  {}", opt(self.immunity.lda_product));
        let _ = writeln!(
            s,
            "G_F        degree {}, lcd {}{}",
            self.generator.degree,
            self.generator.lcd.lcd,
            if self.generator.degenerate { ", zero code" } else { "" }
        );
        let _ = writeln!(s, "SI         {}", distance_text(&self.spectral_immunity.value));
        let _ = writeln!(s, "preimages");
        let _ = writeln!(s, "  {:>5} {:>5} {:>4} {:>4} {:>10} {:>3} {:>4}", "b", "size", "lda", "wh", "distance", "ht", "lcd");
        for p in &self.preimages {
            let _ = writeln!(
                s,
                "  {:>5x} {:>5} {:>4} {:>4} {:>10} {:>3} {:>4}",
                p.b,
                p.size,
                opt(p.lda),
                opt(p.code.min_weight_height),
                distance_text(&p.code.min_distance),
                p.ht.value,
                p.code.lcd
            );
        }
        let _ = writeln!(s, "checks");
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "skip",
            };
            let kind = match c.kind {
                CheckKind::Invariant => "invariant",
                CheckKind::Claim => "claim",
            };
            let _ = write!(s, "  {status} {kind:<9} {}", c.name);
            if let Some(d) = &c.detail {
                let _ = write!(s, "  [{d}]");
            }
            s.push('\n');
        }
        s
    }
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn distance_text(d: &Distance) -> String {
    match *d {
        Distance::Exact { value, .. } => value.to_string(),
        Distance::Bracket { lower, upper, .. } => format!("[{lower},{upper}]"),
        Distance::ZeroCode => "zero-code".to_string(),
    }
}

/// Hex SHA-256 over the field parameters, `n`, `m` and the output table.
pub fn function_id(f: &VectorialFunction) -> String {
    let spec = f.field().spec();
    let mut h = Sha256::new();
    h.update(format!("{}:{}:{}:{}:", spec.n, spec.poly_bits, spec.alpha_bits, f.m()));
    for &v in f.table() {
        h.update(v.to_le_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Maps `f` over `items` on scoped threads, keeping the input order.
pub fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let threads = std::thread::available_parallelism()
        .map_or(1, |p| p.get())
        .min(items.len());
    if threads <= 1 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(threads);
    let f = &f;
    std::thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| s.spawn(move || c.iter().map(f).collect::<Vec<R>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("analysis worker panicked"))
            .collect()
    })
}

/// Whether a code minimum weight is at most `bound`; `None` when a bracket
/// straddles it or the code is zero.
fn weight_at_most(d: &Distance, bound: u64) -> Option<bool> {
    match *d {
        Distance::Exact { value, .. } => Some(value as u64 <= bound),
        Distance::Bracket { lower, upper, .. } => {
            if upper as u64 <= bound {
                Some(true)
            } else if lower as u64 > bound {
                Some(false)
            } else {
                None
            }
        }
        Distance::ZeroCode => None,
    }
}

fn fiber_report(
    f: &VectorialFunction,
    b: u16,
    opts: &AnalysisOptions,
) -> Option<(PreimageReport, CheckLog)> {
    let n = f.n();
    let size = 1usize << n;
    let order = size - 1;
    let pc = code_from_preimage(f, b);
    if pc.preimage.is_empty() {
        return None;
    }
    let mut log = CheckLog::default();
    let code = &pc.code;
    let defining = code.defining_set().to_vec();
    let lda = if pc.preimage.len() == size {
        None
    } else {
        lda_of_set(&pc.preimage, n).ok()
    };
    let report = code_report(code, pc.contains_zero(), opts.budget);
    let dist = report.min_distance;

    if let Some(l) = lda {
        log.invariant("weight_height_equals_lda", report.min_weight_height.map(|w| w == l), || {
            format!("b={b:x}: weight-height {:?}, lda {l}", report.min_weight_height)
        });
    }

    let w0 = BooleanFunction::indicator(n, &pc.preimage).walsh_dot()[0];
    log.invariant("walsh_fiber_size", Some(2 * pc.preimage.len() as i64 == size as i64 - w0), || {
        format!("b={b:x}: size {}, W(0) {w0}", pc.preimage.len())
    });
    let expected_roots = pc.preimage.len() - pc.contains_zero() as usize;
    log.invariant(
        "code_dimension",
        Some(code.dimension() == order - defining.len() && defining.len() == expected_roots),
        || format!("b={b:x}: dimension {}, roots {}", code.dimension(), defining.len()),
    );
    log.claim("dimension_equals_fiber_size", Some(code.dimension() == pc.preimage.len()), || {
        format!("b={b:x}: dimension {} vs size {}", code.dimension(), pc.preimage.len())
    });

    let lcd = is_lcd(code);
    log.invariant("lcd_direct_agreement", lcd.direct.map(|d| d == lcd.lcd), || {
        format!("b={b:x}: reciprocity {} vs rank {:?}", lcd.lcd, lcd.direct)
    });
    log.claim("preimage_code_lcd", Some(lcd.lcd), || {
        format!("b={b:x}: root {:?} without its inverse", lcd.witness)
    });

    let mut bounds = Vec::new();
    if let (Some(l), Some(lower)) = (lda, dist.lower()) {
        let lower = lower as u64;
        for conv in [Thm12Convention::Strict, Thm12Convention::Weak] {
            let r = lda_lower_from_distance(lower, n, conv).expect("distance within 1..=2^n");
            let ok = r.value <= l as i64;
            let ctx = || format!("b={b:x}: distance {lower} gives {} > lda {l}", r.value);
            match conv {
                Thm12Convention::Strict => log.invariant("lda_lower_strict", Some(ok), ctx),
                Thm12Convention::Weak => log.claim("lda_lower_weak", Some(ok), ctx),
            }
            if conv == opts.thm12 {
                bounds.push(r);
            }
        }
    }
    if let Some(d) = dist.exact() {
        log.claim("nonzero_weights_exceed_n", nonzero_weight_claim(n, d as u64), || {
            format!("b={b:x}: distance {d} with n = {n}")
        });
    }

    let ht = ht_bound(&defining, n, opts.ht_coprime);
    if let Some(d) = dist.exact() {
        for conv in [HtCoprime::Order, HtCoprime::Degree] {
            let v = if conv == opts.ht_coprime {
                ht.value
            } else {
                ht_bound(&defining, n, conv).value
            };
            let ctx = || format!("b={b:x}: bound {v} vs distance {d}");
            match conv {
                HtCoprime::Order => log.invariant("ht_bound_order", Some(v < d), ctx),
                HtCoprime::Degree => log.claim("ht_bound_degree", Some(v < d), ctx),
            }
        }
    }

    if let Some(l) = lda {
        for conv in [Thm12Convention::Strict, Thm12Convention::Weak] {
            let Some(r) = consecutive_zero_bound_with(&defining, n, false, HtCoprime::Order, conv) else {
                continue;
            };
            let ok = r.value <= l as i64;
            let ctx = || format!("b={b:x}: bound {} > lda {l}", r.value);
            match conv {
                Thm12Convention::Strict => log.invariant("consecutive_zero_lower_strict", Some(ok), ctx),
                Thm12Convention::Weak => log.claim("consecutive_zero_lower_weak", Some(ok), ctx),
            }
        }
        let outside: Vec<usize> = (0..size).filter(|x| pc.preimage.binary_search(x).is_err()).collect();
        let lda_out = lda_of_set(&outside, n).ok();
        if let (Some(c), Some(lo)) = (
            consecutive_zero_bound_with(&defining, n, true, HtCoprime::Order, Thm12Convention::Weak),
            lda_out,
        ) {
            let ok = c.value <= lo as i64;
            let ctx = || format!("b={b:x}: bound {} > lda of complement {lo}", c.value);
            if c.hypotheses_hold {
                log.invariant("lda_complement_lower", Some(ok), ctx);
            } else {
                log.claim("lda_complement_lower_without_hypotheses", Some(ok), ctx);
            }
            if let Some(e) = ai_lower_corollary(&defining, n, HtCoprime::Order) {
                let ai = l.min(lo) as i64;
                let ok = e.value <= ai;
                let ctx = || format!("b={b:x}: corollary {} > {ai}", e.value);
                if e.hypotheses_hold {
                    log.invariant("ai_lower_corollary", Some(ok), ctx);
                } else {
                    log.claim("ai_lower_corollary_without_hypotheses", Some(ok), ctx);
                }
            }
        }
    }
    if !defining.is_empty() {
        if let Some(r) = consecutive_zero_bound_with(&defining, n, false, opts.ht_coprime, opts.thm12) {
            bounds.push(r);
        }
        if let Some(r) = consecutive_zero_bound_with(&defining, n, true, opts.ht_coprime, opts.thm12) {
            bounds.push(r);
        }
        if let Some(r) = ai_lower_corollary(&defining, n, opts.ht_coprime) {
            bounds.push(r);
        }
    }

    let pair_case = {
        let f0 = f.eval(0);
        let ones = ((1u32 << f.m()) - 1) as u16;
        if f0 == b {
            FiberCase::LosesZero
        } else if f0 ^ ones == b {
            FiberCase::GainsZero
        } else {
            FiberCase::Unchanged
        }
    };

    Some((
        PreimageReport {
            b,
            size: pc.preimage.len(),
            contains_zero: pc.contains_zero(),
            fiber_case: pair_case,
            lda,
            code: report,
            ht,
            bounds,
        },
        log,
    ))
}

/// Runs the whole pipeline on `f`.
pub fn analyze(f: &VectorialFunction, opts: &AnalysisOptions) -> AnalysisReport {
    let n = f.n();
    let m = f.m();
    let field = f.field();
    let mut log = CheckLog::default();
    let mut timings = BTreeMap::new();
    let mut clock = Instant::now();
    let mut lap = |name: &str, timings: &mut BTreeMap<String, f64>| {
        let now = Instant::now();
        timings.insert(name.to_string(), (now - clock).as_secs_f64() * 1e3);
        clock = now;
    };

    // immunity
    let ai = ai_vectorial(f);
    let lp = lda_product(f);
    let smallest = f
        .preimages()
        .iter()
        .map(|p| p.len())
        .filter(|&s| s > 0 && s < 1 << n)
        .min();
    let ai_upper_fiber = smallest.map(|s| ai_upper_for_fiber(n, s as u64));
    if !ai.degenerate {
        log.invariant("ai_upper_smallest_fiber", ai_upper_fiber.map(|u| ai.value <= u), || {
            format!("AI {} above {:?}", ai.value, ai_upper_fiber)
        });
    }
    let upper = ai_upper(n, m.min(n));
    if !ai.degenerate {
        let ok = Some(ai.value as i64 <= upper.value);
        let ctx = || format!("AI {} > {}", ai.value, upper.value);
        if f.is_surjective() {
            log.invariant("ai_upper_surjective", ok, ctx);
        } else {
            log.claim("ai_upper_any", ok, ctx);
        }
    }
    let immunity = ImmunityReport {
        ai: ai.value,
        ai_method: if ai.degenerate { Method::FlaggedDegenerate } else { Method::Exact },
        witness: ai.witness,
        lda_per_preimage: ai.per_preimage.clone(),
        lda_product: lp,
        lda_product_method: if lp.is_some() { Method::Exact } else { Method::FlaggedDegenerate },
        ai_upper_smallest_fiber: ai_upper_fiber,
    };
    lap("immunity", &mut timings);

    // generator and product annihilators
    let g_f = generator_g_f(f);
    let by_gcd = generator_g_f_by_gcd(f).ok();
    let paths_agree = by_gcd.as_ref().map(|g| *g == g_f);
    log.invariant("generator_paths_agree", paths_agree, || "root and gcd constructions differ".into());
    let code_gf = CyclicCode::new(field.clone(), g_f.clone());
    let lcd = is_lcd(&code_gf);
    log.invariant("lcd_direct_agreement", lcd.direct.map(|d| d == lcd.lcd), || {
        format!("G_F: reciprocity {} vs rank {:?}", lcd.lcd, lcd.direct)
    });
    let annihilators = product_annihilators(f, n).expect("degree n is in range");
    for (i, g) in annihilators.basis.iter().enumerate() {
        let Ok(uni) = g.univariate(field) else { continue };
        let ok = code_gf.contains(&uni) && code_gf.contains_by_division(&uni);
        log.invariant("product_annihilators_in_code", Some(ok), || format!("basis element {i}"));
        // literal vector a_1 .. a_N on positions 0 .. N-1
        let literal = &uni[1..];
        log.claim("product_annihilators_in_code_literal", Some(code_gf.contains(literal)), || {
            format!("basis element {i} with g(0) = {}", g.eval(0))
        });
    }
    let generator = GeneratorReport {
        coeffs: g_f.to_hex(),
        degree: g_f.degree(),
        defining_set: g_f.roots.clone(),
        paths_agree,
        degenerate: code_gf.is_zero_code(),
        lcd,
    };
    lap("generator", &mut timings);

    // per-preimage codes and bounds
    let values: Vec<u16> = (0..1u32 << m).map(|b| b as u16).collect();
    let fibers = par_map(&values, |&b| fiber_report(f, b, opts));
    let mut preimages = Vec::new();
    for (report, sub) in fibers.into_iter().flatten() {
        log.absorb(sub);
        preimages.push(report);
    }
    if !ai.degenerate {
        let min_wh = preimages
            .iter()
            .filter(|p| p.lda.is_some())
            .filter_map(|p| p.code.min_weight_height)
            .min();
        log.invariant("ai_equals_min_weight_height", Some(min_wh == Some(ai.value)), || {
            format!("AI {} vs min weight-height {:?}", ai.value, min_wh)
        });
    }
    lap("codes", &mut timings);

    // complement
    let pair = complement_vectorial(f);
    log.invariant("complement_involution", Some(pair.involution_holds()), || "double complement differs".into());
    log.invariant(
        "complement_pointwise",
        Some(pair.pointwise_shift_holds() && pair.agrees_off_zero()),
        || "F^c differs from F + Delta (1, ..., 1)".into(),
    );
    let case_checks = par_map(&values, |&b| {
        let an = an_identity_holds(&pair, b).ok();
        let an_literal = (n <= 6).then(|| an_identity_nonzero_reading_holds(&pair, b).ok()).flatten();
        (
            pair.trichotomy_holds(b),
            pair.literal_gain_reading_holds(b),
            an,
            an_literal,
            fiber_lda_sandwich(&pair, b),
        )
    });
    for (&b, (tri, lit, an, an_lit, sandwich)) in values.iter().zip(case_checks) {
        log.invariant("preimage_trichotomy", Some(tri), || format!("b={b:x}"));
        log.claim("preimage_literal_gain", Some(lit), || format!("b={b:x}"));
        log.invariant("annihilator_set_identity", an, || format!("b={b:x}"));
        log.claim("annihilator_set_identity_nonzero", an_lit, || format!("b={b:x}"));
        log.invariant("fiber_lda_sandwich", sandwich, || format!("b={b:x}"));
    }
    log.invariant("lda_sandwich", lda_sandwich(&pair), || {
        format!("LDA {:?} vs complement {:?}", lp, lda_product(&pair.fc))
    });
    let division = complement_generator_division(f);
    log.invariant(
        "complement_generator_division",
        Some(division.divides && division.preimage_codes_nested),
        || format!("divides {}, nested {}", division.divides, division.preimage_codes_nested),
    );
    let ai_c = ai_vectorial(&pair.fc);
    let f0 = f.eval(0);
    let complement = ComplementReport {
        table: pair.fc.table_hex(),
        ai: ai_c.value,
        ai_method: if ai_c.degenerate { Method::FlaggedDegenerate } else { Method::Exact },
        lda_product: lda_product(&pair.fc),
        quotient: division.quotient.to_hex(),
        loses_zero: f0,
        gains_zero: f0 ^ (((1u32 << m) - 1) as u16),
    };
    lap("complement", &mut timings);

    // spectral immunity
    let si = spectral_immunity(f, opts.budget);
    let bound_lp = lp.map(|d| binomial_sum(n, 0, d));
    let bound_ai = (!ai.degenerate).then(|| binomial_sum(n, 0, ai.value));
    if let Some(bd) = bound_lp {
        log.invariant("si_bound_lda_product", weight_at_most(&si.value, bd), || {
            format!("SI {} > {bd}", distance_text(&si.value))
        });
    }
    if let Some(bd) = bound_ai {
        log.claim("si_bound_ai", weight_at_most(&si.value, bd), || {
            format!("SI {} > {bd}", distance_text(&si.value))
        });
    }
    let mac = if n <= 4 {
        min_annihilator_complexity(f).ok().flatten()
    } else {
        None
    };
    if let Some(c) = mac {
        log.invariant("si_at_most_annihilator_complexity", weight_at_most(&si.value, c as u64), || {
            format!("SI {} > {c}", distance_text(&si.value))
        });
        log.claim("si_equals_annihilator_complexity", si.value.exact().map(|v| v == c), || {
            format!("SI {} vs {c}", distance_text(&si.value))
        });
    }
    let spectral = SpectralReport {
        value: si.value,
        zero_code: si.zero_code,
        bound_lda_product: bound_lp,
        bound_ai,
        min_annihilator_complexity: mac,
    };
    lap("spectral", &mut timings);

    AnalysisReport {
        function_id: function_id(f),
        n,
        m,
        field: field.spec(),
        degree: f.degree(),
        surjective: f.is_surjective(),
        immunity,
        generator,
        preimages,
        complement,
        spectral_immunity: spectral,
        bounds: vec![upper],
        checks: log.finish(),
        timings_ms: opts.timings.then_some(timings),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn boolean(n: u32, bits: u64) -> VectorialFunction {
        let field = make_field(n).unwrap();
        VectorialFunction::from_boolean(field, &BooleanFunction::from_bits(n, bits)).unwrap()
    }

    #[test]
    fn majority() {
        let r = analyze(&boolean(3, 0xe8), &AnalysisOptions::default());
        assert_eq!(r.immunity.ai, 2);
        assert_eq!(r.immunity.ai_method, Method::Exact);
        assert!(r.spectral_immunity.value.exact().is_some());
        assert_eq!(r.preimages.len(), 2);
        assert!(r.ok(), "{:?}", r.failed_invariants());
    }

    #[test]
    fn identity_is_degenerate_code() {
        let field = make_field(3).unwrap();
        let f = VectorialFunction::identity(field);
        let r = analyze(&f, &AnalysisOptions::default());
        assert_eq!(r.immunity.ai, 1);
        assert!(r.generator.degenerate);
        assert!(r.spectral_immunity.zero_code);
        assert!(r.ok(), "{:?}", r.failed_invariants());
    }

    #[test]
    fn constant_zero() {
        let r = analyze(&boolean(3, 0), &AnalysisOptions::default());
        assert_eq!(r.immunity.ai_method, Method::FlaggedDegenerate);
        assert!(r.ok(), "{:?}", r.failed_invariants());
    }

    #[test]
    fn reports_are_reproducible() {
        let f = boolean(4, 0x1f3a);
        let a = analyze(&f, &AnalysisOptions::default()).to_json();
        let b = analyze(&f, &AnalysisOptions::default()).to_json();
        assert_eq!(a, b);
        assert!(!a.contains("timings_ms"));
    }

    #[test]
    fn check_log_aggregates() {
        let mut log = CheckLog::default();
        log.invariant("x", Some(true), String::new);
        log.invariant("x", Some(false), || "b=1".into());
        log.invariant("x", Some(true), String::new);
        log.claim("y", None, String::new);
        let checks = log.finish();
        assert_eq!(checks[0].status, CheckStatus::Fail);
        assert_eq!(checks[0].detail.as_deref(), Some("b=1"));
        assert_eq!(checks[1].status, CheckStatus::Skipped);
    }
}
