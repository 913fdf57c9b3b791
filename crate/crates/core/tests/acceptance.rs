//! Acceptance run: one PASS/FAIL line per criterion, INFO lines for the
//! literal readings that are measured but not required.
//!
//! The process exits nonzero when a criterion fails, except those listed in
//! `EXPECTED_RED`, whose failure is a known property of the statement under
//! test rather than of this crate. `ACCEPTANCE_STRICT=1` makes every failure
//! fatal.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use algimm::annihil::{ai_vectorial, lda_of_set, lda_product, product_annihilators};
use algimm::bounds::{binomial_sum, lda_lower_from_distance, Thm12Convention};
use algimm::codes::{
    code_from_pointset, code_from_preimage, generator_g_f, ht_bound, intersection_is_trivial,
    is_lcd, min_distance, min_weight_height, min_weight_height_reading, preimage_weight_height,
    CyclicCode, GenPoly, HtCoprime, WhReading, DEFAULT_BUDGET,
};
use algimm::complement::{
    an_identity_holds, an_identity_nonzero_reading_holds, complement_generator_division,
    complement_vectorial, lda_sandwich,
};
use algimm::corpus::support_distance;
use algimm::seq::{berlekamp_massey, min_annihilator_complexity, FilterGenerator};
use algimm::{make_field, BooleanFunction, Field, FieldElement, VectorialFunction};

const EXPECTED_RED: &[u32] = &[4];

struct Outcome {
    id: u32,
    pass: bool,
}

fn report(id: u32, title: &str, pass: bool, elapsed: Duration, detail: String) -> Outcome {
    println!(
        "{} criterion {id}: {title} ({:.1}s) {detail}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    Outcome { id, pass }
}

fn info(id: u32, msg: String) {
    println!("INFO criterion {id}: {msg}");
}

fn booleans3(field: &Field) -> Vec<VectorialFunction> {
    (0..256u64)
        .map(|b| VectorialFunction::from_boolean(field.clone(), &BooleanFunction::from_bits(3, b)).unwrap())
        .collect()
}

fn random_functions(field: &Field, m: u32, count: usize, rng: &mut ChaCha8Rng) -> Vec<VectorialFunction> {
    (0..count)
        .map(|_| VectorialFunction::from_fn(field.clone(), m, |_| rng.gen_range(0..1u32 << m) as u16).unwrap())
        .collect()
}

fn corpus(rng: &mut ChaCha8Rng) -> Vec<VectorialFunction> {
    let f3 = make_field(3).unwrap();
    let f4 = make_field(4).unwrap();
    let mut all = booleans3(&f3);
    for m in [2, 3] {
        all.extend(random_functions(&f3, m, 200, rng));
    }
    for m in [1, 2, 4] {
        all.extend(random_functions(&f4, m, 60, rng));
    }
    all
}

/// Theorem 8 reading: every product annihilator of degree at most n, folded
/// mod x^N + 1, lies in the code generated by G_F.
fn criterion1() -> Outcome {
    let t = Instant::now();
    let f3 = make_field(3).unwrap();
    let f4 = make_field(4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut fs = booleans3(&f3);
    for m in [1, 2, 4] {
        fs.extend(random_functions(&f4, m, 70, &mut rng));
    }
    let (mut checked, mut bad, mut literal_bad, mut dim_bad) = (0usize, 0usize, 0usize, 0usize);
    for f in &fs {
        let n = f.n();
        let field = f.field();
        let code = CyclicCode::new(field.clone(), generator_g_f(f));
        let basis = product_annihilators(f, n).unwrap();
        // functions vanishing wherever F is nonzero: one free value per zero of F
        if basis.dimension() != (1 << n) - f.nonzero_set().len() {
            dim_bad += 1;
        }
        let members: Vec<BooleanFunction> = if n == 3 {
            basis.span_packed().into_iter().filter(|&g| g != 0).map(|g| BooleanFunction::from_bits(3, g)).collect()
        } else {
            basis.basis.clone()
        };
        for g in members {
            let uni = g.univariate(field).unwrap();
            checked += 1;
            if !(code.contains(&uni) && code.contains_by_division(&uni)) {
                bad += 1;
            }
            if !code.contains(&uni[1..]) {
                literal_bad += 1;
            }
        }
    }
    info(1, format!("literal vector (a_1..a_N) on positions 0..N-1: {literal_bad}/{checked} annihilators fail (exactly those with g(0) = 1)"));
    let el = t.elapsed();
    report(
        1,
        "product annihilators lie in the code of G_F",
        bad == 0 && dim_bad == 0 && el < Duration::from_secs(120),
        el,
        format!("{} functions, {checked} annihilators, {bad} outside the code, {dim_bad} space-dimension mismatches", fs.len()),
    )
}

/// AI equals the least weight-height over preimage codes.
fn criterion2() -> Outcome {
    let t = Instant::now();
    let f3 = make_field(3).unwrap();
    let f4 = make_field(4).unwrap();
    let mut bad = 0usize;
    let mut total = 0usize;
    let mut shifted_bad = 0usize;
    let mut folded_bad = 0usize;

    let check = |f: &VectorialFunction| -> Option<bool> {
        let ai = ai_vectorial(f);
        if ai.degenerate {
            return None;
        }
        let wh = (0..1u32 << f.m())
            .filter(|&b| {
                let p = f.preimage(b as u16);
                !p.is_empty() && p.len() < 1 << f.n()
            })
            .map(|b| preimage_weight_height(&code_from_preimage(f, b as u16)).unwrap())
            .min();
        Some(wh == Some(ai.value))
    };

    for f in booleans3(&f3) {
        if let Some(ok) = check(&f) {
            total += 1;
            bad += !ok as usize;
            let ai = ai_vectorial(&f).value;
            for (reading, counter) in [(WhReading::Shifted, &mut shifted_bad), (WhReading::Folded, &mut folded_bad)] {
                let wh = (0..2u16)
                    .filter_map(|b| {
                        let pc = code_from_preimage(&f, b);
                        min_weight_height_reading(&pc.code, false, reading).ok()
                    })
                    .min();
                if wh != Some(ai) {
                    *counter += 1;
                }
            }
        }
    }
    info(2, format!("exponents 1..N reading: {shifted_bad}/{total} Boolean functions at n = 3 disagree; folded length-N reading: {folded_bad}/{total}"));

    // all 8^8 functions GF(8) -> F_2^3 through a table over the 256 subsets
    let size = 8usize;
    let mut lda_t = [None; 256];
    let mut wh_t = [None; 256];
    for s in 1..255usize {
        let pts: Vec<usize> = (0..size).filter(|&x| s >> x & 1 == 1).collect();
        lda_t[s] = Some(lda_of_set(&pts, 3).unwrap());
        let nz: Vec<FieldElement> = pts.iter().filter(|&&x| x != 0).map(|&x| f3.elem(x)).collect();
        let code = code_from_pointset(&f3, &nz).unwrap();
        wh_t[s] = Some(min_weight_height(&code, s & 1 == 1).unwrap());
    }
    let table_bad = (1..255).filter(|&s| lda_t[s] != wh_t[s]).count();
    let mut exhaustive_bad = 0u64;
    for idx in 0..1u32 << 24 {
        let mut masks = [0u8; 8];
        for x in 0..8 {
            masks[(idx >> (3 * x) & 7) as usize] |= 1 << x;
        }
        let proper = masks.iter().filter(|&&s| s != 0 && s != 0xff);
        let ai = proper.clone().map(|&s| lda_t[s as usize].unwrap()).min();
        let wh = proper.map(|&s| wh_t[s as usize].unwrap()).min();
        if ai != wh {
            exhaustive_bad += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let mut sampled = random_functions(&f3, 3, 2000, &mut rng);
    for m in [1, 2, 4] {
        sampled.extend(random_functions(&f4, m, 60, &mut rng));
    }
    for f in &sampled {
        if let Some(ok) = check(f) {
            total += 1;
            bad += !ok as usize;
        }
    }
    let el = t.elapsed();
    report(
        2,
        "AI = min over b of the weight-height of C(F^-1(b))",
        bad == 0 && table_bad == 0 && exhaustive_bad == 0 && el < Duration::from_secs(600),
        el,
        format!(
            "{total} functions through the full pipeline ({bad} mismatches); all 2^24 (3,3)-functions via the 254 fiber table ({exhaustive_bad} mismatches, {table_bad} fiber mismatches)"
        ),
    )
}

/// Distance-to-degree bound, both summation conventions.
fn criterion3() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let fs = corpus(&mut rng);
    let (mut cases, mut strict_bad, mut weak_bad, mut both_bad, mut oracle_bad) = (0, 0, 0, 0, 0);
    for f in &fs {
        let n = f.n();
        for b in 0..1u32 << f.m() {
            let pc = code_from_preimage(f, b as u16);
            if pc.preimage.is_empty() || pc.preimage.len() == 1 << n {
                continue;
            }
            let Some(d) = min_distance(&pc.code, DEFAULT_BUDGET).min_distance.exact() else {
                continue;
            };
            if n == 3 && support_distance(f, b as u16) != Some(d) {
                oracle_bad += 1;
            }
            let lda = lda_of_set(&pc.preimage, n).unwrap() as i64;
            cases += 1;
            let s = lda_lower_from_distance(d as u64, n, Thm12Convention::Strict).unwrap().value > lda;
            let w = lda_lower_from_distance(d as u64, n, Thm12Convention::Weak).unwrap().value > lda;
            strict_bad += s as usize;
            weak_bad += w as usize;
            both_bad += (s && w) as usize;
        }
    }
    info(3, format!("weak convention (sum from i = 1): {weak_bad}/{cases} fibers exceed the measured LDA"));
    let el = t.elapsed();
    report(
        3,
        "e from the exact distance of C(F^-1(b)) never exceeds LDA",
        both_bad == 0 && oracle_bad == 0,
        el,
        format!("{} functions, {cases} fibers; strict violations {strict_bad}, violations under both {both_bad}, distance oracle mismatches {oracle_bad}", fs.len()),
    )
}

/// Spectral immunity at n = 3 by full enumeration.
fn criterion4() -> Outcome {
    let t = Instant::now();
    let f3 = make_field(3).unwrap();
    let (mut tested, mut bound_bad, mut eq_bad, mut product_bad, mut skipped) = (0, 0, 0, 0, 0);
    let mut example = None;
    for f in booleans3(&f3) {
        let code = CyclicCode::new(f3.clone(), generator_g_f(&f));
        let profile = min_distance(&code, u64::MAX);
        let ai = ai_vectorial(&f);
        let Some(si) = profile.min_distance.exact() else {
            skipped += 1;
            continue;
        };
        assert!(profile.distribution.is_some(), "n = 3 codes are enumerated");
        if ai.degenerate {
            skipped += 1;
            continue;
        }
        tested += 1;
        if si as u64 > binomial_sum(3, 0, ai.value) {
            bound_bad += 1;
            example.get_or_insert(format!("f = {} has SI {si}, AI {}", f.coordinate(0).to_hex(), ai.value));
        }
        if let Some(lp) = lda_product(&f) {
            if si as u64 > binomial_sum(3, 0, lp) {
                product_bad += 1;
            }
        }
        match min_annihilator_complexity(&f).unwrap() {
            Some(c) if c == si => {}
            Some(c) => {
                eq_bad += 1;
                if si == 2 && c == 3 {
                    example.get_or_insert(format!("f = {} has SI {si}, lightest annihilator {c}", f.coordinate(0).to_hex()));
                }
            }
            None => eq_bad += 1,
        }
    }
    info(4, format!("bound with the product-sense LDA in place of AI: {product_bad}/{tested} violations"));
    if let Some(e) = &example {
        info(4, format!("counterexample: {e}"));
    }
    let el = t.elapsed();
    report(
        4,
        "SI <= sum_{i<=AI} C(n,i) and SI = least annihilator coefficient count",
        bound_bad == 0 && eq_bad == 0 && el < Duration::from_secs(300),
        el,
        format!("{tested} functions ({skipped} constant or zero-code skipped); bound violations {bound_bad}, equality violations {eq_bad}"),
    )
}

#[derive(Default)]
struct Tally {
    total: usize,
    pass: usize,
}

impl Tally {
    fn add(&mut self, ok: bool) {
        self.total += 1;
        self.pass += ok as usize;
    }

    fn rate(&self) -> f64 {
        if self.total == 0 {
            1.0
        } else {
            self.pass as f64 / self.total as f64
        }
    }

    fn show(&self) -> String {
        format!("{}/{}", self.pass, self.total)
    }
}

/// Complement identities.
fn criterion5() -> Outcome {
    let t = Instant::now();
    let f3 = make_field(3).unwrap();
    let f4 = make_field(4).unwrap();
    let f5 = make_field(5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let mut fs = booleans3(&f3);
    fs.extend(random_functions(&f3, 2, 1000, &mut rng));
    fs.extend(random_functions(&f3, 3, 1000, &mut rng));
    for m in [1, 2, 4] {
        fs.extend(random_functions(&f4, m, 100, &mut rng));
    }
    for m in [1, 5] {
        fs.extend(random_functions(&f5, m, 20, &mut rng));
    }
    let mut pointwise = Tally::default();
    let mut involution = Tally::default();
    let mut trichotomy = Tally::default();
    let mut an = Tally::default();
    let mut sandwich = Tally::default();
    let mut literal_gain = Tally::default();
    let mut an_nonzero = Tally::default();
    for f in &fs {
        let pair = complement_vectorial(f);
        pointwise.add(pair.pointwise_shift_holds() && pair.agrees_off_zero());
        involution.add(pair.involution_holds());
        let bs: Vec<u16> = (0..1u32 << f.m()).map(|b| b as u16).collect();
        trichotomy.add(bs.iter().all(|&b| pair.trichotomy_holds(b)));
        literal_gain.add(bs.iter().all(|&b| pair.literal_gain_reading_holds(b)));
        an.add(bs.iter().all(|&b| an_identity_holds(&pair, b).unwrap()));
        if f.n() <= 4 {
            an_nonzero.add(bs.iter().all(|&b| an_identity_nonzero_reading_holds(&pair, b).unwrap()));
        }
        if let Some(ok) = lda_sandwich(&pair) {
            sandwich.add(ok);
        }
    }
    info(5, format!("literal reading '(F^c)^-1(b) = F^-1(b) with 0 added whenever 0 is not in F^-1(b)': {} functions", literal_gain.show()));
    info(5, format!("annihilator sets read as nonzero functions only: {} functions", an_nonzero.show()));
    let ok = pointwise.rate() == 1.0
        && [&involution, &trichotomy, &an, &sandwich].iter().all(|t| t.rate() >= 0.99);
    let el = t.elapsed();
    report(
        5,
        "complement identities",
        ok,
        el,
        format!(
            "{} functions; pointwise {}, involution {}, trichotomy {}, annihilator sets {}, LDA sandwich {}",
            fs.len(),
            pointwise.show(),
            involution.show(),
            trichotomy.show(),
            an.show(),
            sandwich.show()
        ),
    )
}

/// LCD test, Walsh count of fibers, and G_F divisibility.
fn criterion6() -> Outcome {
    let t = Instant::now();
    let f3 = make_field(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let fs = corpus(&mut rng);
    let mut lcd_agree = Tally::default();
    let mut lcd_claim = Tally::default();
    // every cyclic code of length 7 over GF(8)
    for set in 0..1u32 << 7 {
        let exps: Vec<usize> = (0..7).filter(|&e| set >> e & 1 == 1).collect();
        let code = CyclicCode::new(f3.clone(), GenPoly::from_exponents(&f3, &exps));
        lcd_agree.add(is_lcd(&code).lcd == intersection_is_trivial(&code));
    }
    let mut walsh = Tally::default();
    let mut division = Tally::default();
    let mut dim_statement = Tally::default();
    for f in &fs {
        let n = f.n();
        let size = 1i64 << n;
        for b in 0..1u32 << f.m() {
            let pc = code_from_preimage(f, b as u16);
            let w0 = BooleanFunction::indicator(n, &pc.preimage).walsh_dot()[0];
            walsh.add(2 * pc.preimage.len() as i64 == size - w0);
            if pc.preimage.is_empty() {
                continue;
            }
            if n == 3 {
                lcd_agree.add(is_lcd(&pc.code).lcd == intersection_is_trivial(&pc.code));
            }
            lcd_claim.add(is_lcd(&pc.code).lcd);
            dim_statement.add(pc.code.dimension() == pc.preimage.len());
        }
        if n == 3 {
            let code = CyclicCode::new(f.field().clone(), generator_g_f(f));
            lcd_agree.add(is_lcd(&code).lcd == intersection_is_trivial(&code));
        }
        let d = complement_generator_division(f);
        division.add(d.divides && d.preimage_codes_nested);
    }
    info(6, format!("preimage codes that are LCD: {}", lcd_claim.show()));
    info(6, format!("preimage codes whose dimension equals |F^-1(b)|: {}", dim_statement.show()));
    let el = t.elapsed();
    report(
        6,
        "LCD test, Walsh fiber count, G_F = G_F^c h",
        lcd_agree.rate() == 1.0 && walsh.rate() == 1.0 && division.rate() == 1.0,
        el,
        format!(
            "LCD reciprocity vs rank {}, Walsh identity {}, divisibility {}",
            lcd_agree.show(),
            walsh.show(),
            division.show()
        ),
    )
}

/// Hartmann-Tzeng bound below the exact distance.
fn criterion7() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    let mut codes: Vec<(u32, Vec<usize>)> = Vec::new();
    for set in 1..1u32 << 7 {
        codes.push((3, (0..7).filter(|&e| set >> e & 1 == 1).collect()));
    }
    for _ in 0..400 {
        let density = rng.gen_range(0.2..0.9);
        let exps: Vec<usize> = (0..15).filter(|_| rng.gen_bool(density)).collect();
        codes.push((4, exps));
    }
    let (mut exact, mut order_bad, mut degree_bad, mut neither) = (0, 0, 0, 0);
    for (n, exps) in &codes {
        let field = make_field(*n).unwrap();
        let code = CyclicCode::new(field.clone(), GenPoly::from_exponents(&field, exps));
        let Some(d) = min_distance(&code, DEFAULT_BUDGET).min_distance.exact() else {
            continue;
        };
        exact += 1;
        let o = ht_bound(code.defining_set(), *n, HtCoprime::Order).value >= d;
        let g = ht_bound(code.defining_set(), *n, HtCoprime::Degree).value >= d;
        order_bad += o as usize;
        degree_bad += g as usize;
        neither += (o && g) as usize;
    }
    info(7, format!("coprimality to n: {degree_bad}/{exact} codes where the bound reaches the distance"));
    let mut pair_ok = true;
    let mut pair_detail = Vec::new();
    for n in [3, 4] {
        let field = make_field(n).unwrap();
        let code = CyclicCode::new(field.clone(), GenPoly::from_exponents(&field, &[1, 2]));
        let h = ht_bound(code.defining_set(), n, HtCoprime::Order).value;
        let d = min_distance(&code, DEFAULT_BUDGET).min_distance.exact();
        pair_ok &= h == 2 && d.is_some_and(|d| d >= 3);
        pair_detail.push(format!("n = {n}: bound {h}, distance {d:?}"));
    }
    let el = t.elapsed();
    report(
        7,
        "HT bound below the exact distance",
        neither == 0 && pair_ok,
        el,
        format!(
            "{exact} codes with exact distance; order convention violations {order_bad}, violations under both {neither}; roots {{1,2}}: {}",
            pair_detail.join(", ")
        ),
    )
}

/// Parseval, BM regeneration, univariate round trip.
fn criterion8() -> Outcome {
    let t = Instant::now();
    let f3 = make_field(3).unwrap();
    let f8 = make_field(8).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    let mut parseval = Tally::default();
    for bits in 0..256u64 {
        let f = BooleanFunction::from_bits(3, bits);
        let s: i64 = f.walsh(&f3).unwrap().values.iter().map(|v| v * v).sum();
        parseval.add(s == 1 << 6);
    }
    for _ in 0..1000 {
        let f = BooleanFunction::from_fn(8, |_| rng.gen_bool(0.5));
        let w = f.walsh(&f8).unwrap().values;
        // direct evaluation of one coefficient checks the fast transform
        let u = f8.elem(rng.gen_range(0..256));
        let direct: i64 = (0..256)
            .map(|x| {
                let tr = f8.abs_trace(f8.mul(u, f8.elem(x)));
                if (f.eval(x) as u8 ^ tr) & 1 == 0 { 1 } else { -1 }
            })
            .sum();
        let s: i64 = w.iter().map(|v| v * v).sum();
        parseval.add(s == 1 << 16 && w[u.bits() as usize] == direct);
    }
    let mut bm = Tally::default();
    for len in 1..=200 {
        let s: Vec<u8> = (0..len).map(|_| rng.gen_range(0..2)).collect();
        let l = berlekamp_massey(&s);
        bm.add(l.regenerates(&s) && l.lc <= len);
    }
    for n in [3, 4, 5, 6] {
        let field = make_field(n).unwrap();
        for _ in 0..20 {
            let f = VectorialFunction::from_fn(field.clone(), 1, |_| rng.gen_range(0..2)).unwrap();
            let gen = FilterGenerator::new(f, field.elem(rng.gen_range(1..field.size()))).unwrap();
            let z: Vec<u8> = gen.keystream(2 * field.order()).iter().map(|&v| v as u8).collect();
            bm.add(berlekamp_massey(&z).regenerates(&z));
        }
    }
    let mut round = Tally::default();
    let mut fs = booleans3(&f3);
    fs.extend(random_functions(&f3, 3, 500, &mut rng));
    for f in &fs {
        let uni = f.univariate().unwrap();
        let back = VectorialFunction::from_univariate(f.field().clone(), f.m(), &uni).unwrap();
        round.add(back == *f);
    }
    let el = t.elapsed();
    report(
        8,
        "Parseval, Berlekamp-Massey regeneration, univariate round trip",
        parseval.rate() == 1.0 && bm.rate() == 1.0 && round.rate() == 1.0 && el < Duration::from_secs(60),
        el,
        format!("Parseval {}, BM {}, round trip {}", parseval.show(), bm.show(), round.show()),
    )
}

fn main() {
    let strict = std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    let outcomes = [
        criterion1(),
        criterion2(),
        criterion3(),
        criterion4(),
        criterion5(),
        criterion6(),
        criterion7(),
        criterion8(),
    ];
    let failed: Vec<u32> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    let fatal: Vec<u32> = failed
        .iter()
        .copied()
        .filter(|id| strict || !EXPECTED_RED.contains(id))
        .collect();
    println!(
        "{} of {} criteria pass; failing: {:?}; expected red: {:?}",
        outcomes.len() - failed.len(),
        outcomes.len(),
        failed,
        EXPECTED_RED
    );
    for id in EXPECTED_RED {
        if !failed.contains(id) {
            println!("NOTE criterion {id} is listed as expected red but passed");
        }
    }
    if !fatal.is_empty() {
        std::process::exit(1);
    }
}
