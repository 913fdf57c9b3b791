//! 2^n-ary cyclic codes of length `N = 2^n - 1` over GF(2^n).
//!
//! A code is given by a monic generator dividing `x^N + 1`; its defining set
//! is the sorted list of exponents `e` with `G(alpha^e) = 0`. Words are
//! coefficient vectors `c_0 .. c_{N-1}`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{two_weight, Field, FieldElement};
use crate::funcrep::VectorialFunction;
use crate::linalg::{field_kernel_vector, field_rank};
use crate::poly::Poly;

/// Default cap on enumerated codewords and searched supports.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// A monic generator polynomial together with its root exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenPoly {
    pub poly: Poly,
    pub roots: Vec<usize>,
}

impl GenPoly {
    /// Builds `prod (x - alpha^e)` over distinct exponents mod `N`.
    pub fn from_exponents(field: &Field, exponents: &[usize]) -> GenPoly {
        let order = field.order();
        let mut roots: Vec<usize> = exponents.iter().map(|e| e % order).collect();
        roots.sort_unstable();
        roots.dedup();
        let poly = Poly::from_roots(field, roots.iter().map(|&e| field.alpha_pow(e as i64)));
        GenPoly { poly, roots }
    }

    /// Recovers the root exponents of a divisor of `x^N + 1`.
    pub fn from_poly(field: &Field, poly: Poly) -> Result<GenPoly> {
        let order = field.order();
        let (_, rem) = Poly::x_pow_plus_one(order).div_rem(field, &poly);
        if poly.is_zero() || !rem.is_zero() {
            return Err(Error::DimensionMismatch(format!(
                "generator does not divide x^{order} + 1"
            )));
        }
        let poly = poly.monic(field);
        let roots = (0..order)
            .filter(|&e| poly.eval(field, field.alpha_pow(e as i64)).is_zero())
            .collect();
        Ok(GenPoly { poly, roots })
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// Whether `x^deg G(1/x) / G(0) = G`.
    pub fn is_self_reciprocal(&self, field: &Field) -> bool {
        let c0 = self.poly.coeff(0);
        let Ok(inv) = field.inv(c0) else {
            return false;
        };
        self.poly.reciprocal().scale(field, inv) == self.poly
    }

    pub fn to_hex(&self) -> Vec<String> {
        self.poly.to_hex()
    }
}

/// A cyclic code of length `2^n - 1` over GF(2^n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCode {
    field: Field,
    gen: GenPoly,
}

impl CyclicCode {
    pub fn new(field: Field, gen: GenPoly) -> CyclicCode {
        CyclicCode { field, gen }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn gen(&self) -> &GenPoly {
        &self.gen
    }

    pub fn length(&self) -> usize {
        self.field.order()
    }

    pub fn dimension(&self) -> usize {
        self.length() - self.gen.degree()
    }

    pub fn defining_set(&self) -> &[usize] {
        &self.gen.roots
    }

    pub fn is_zero_code(&self) -> bool {
        self.dimension() == 0
    }

    /// Codeword test by evaluation at every root.
    pub fn contains(&self, word: &[FieldElement]) -> bool {
        let p = fold_word(word, self.length());
        self.gen
            .roots
            .iter()
            .all(|&e| p.eval(&self.field, self.field.alpha_pow(e as i64)).is_zero())
    }

    /// Codeword test by polynomial division.
    pub fn contains_by_division(&self, word: &[FieldElement]) -> bool {
        let p = fold_word(word, self.length());
        p.div_rem(&self.field, &self.gen.poly).1.is_zero()
    }

    /// Codeword `m(x) G(x)` for a message of length at most `dimension`.
    pub fn encode(&self, message: &[FieldElement]) -> Vec<FieldElement> {
        assert!(message.len() <= self.dimension(), "message longer than dimension");
        let c = Poly::new(message.to_vec()).mul(&self.field, &self.gen.poly);
        word_of(&c, self.length())
    }

    /// Rows `x^i G(x)`, `0 <= i < dimension`.
    pub fn generator_matrix(&self) -> Vec<Vec<FieldElement>> {
        (0..self.dimension())
            .map(|i| word_of(&Poly::monomial(i).mul(&self.field, &self.gen.poly), self.length()))
            .collect()
    }

    /// Cyclic shift by one position (multiplication by `x` mod `x^N + 1`).
    pub fn shift(word: &[FieldElement]) -> Vec<FieldElement> {
        let mut w = word.to_vec();
        w.rotate_right(1);
        w
    }

    pub fn dual(&self) -> CyclicCode {
        CyclicCode::new(self.field.clone(), dual_generator(self))
    }
}

/// Reduces a coefficient vector of any length modulo `x^N + 1`.
pub fn fold_word(word: &[FieldElement], order: usize) -> Poly {
    let mut c = vec![FieldElement::ZERO; order];
    for (i, &a) in word.iter().enumerate() {
        c[i % order] += a;
    }
    Poly::new(c)
}

fn word_of(p: &Poly, len: usize) -> Vec<FieldElement> {
    let mut w = vec![FieldElement::ZERO; len];
    for (i, &a) in p.coeffs().iter().enumerate() {
        w[i % len] += a;
    }
    w
}

/// The code whose defining set is a set of nonzero points.
pub fn code_from_pointset(field: &Field, points: &[FieldElement]) -> Result<CyclicCode> {
    let mut exps = Vec::with_capacity(points.len());
    for &p in points {
        exps.push(field.log(p).ok_or(Error::ZeroNotAllowed)?);
    }
    Ok(CyclicCode::new(field.clone(), GenPoly::from_exponents(field, &exps)))
}

fn nonzero_exponents(field: &Field, points: &[usize]) -> Vec<usize> {
    points
        .iter()
        .filter_map(|&p| field.log(field.elem(p)))
        .collect()
}

/// `G_F = prod (x - r)` over nonzero `r` with `F(r) != 0`.
pub fn generator_g_f(f: &VectorialFunction) -> GenPoly {
    let field = f.field();
    let roots = nonzero_exponents(field, &f.nonzero_set());
    GenPoly::from_exponents(field, &roots)
}

/// `G_F` as `prod_{a != 0} gcd(F(x) - a, x^N + 1)` from the univariate form.
pub fn generator_g_f_by_gcd(f: &VectorialFunction) -> Result<GenPoly> {
    let field = f.field();
    let uni = Poly::new(f.univariate()?);
    let modulus = Poly::x_pow_plus_one(field.order());
    let mut g = Poly::one();
    for a in field.elements().skip(1) {
        let shifted = uni.add(&Poly::constant(a));
        if shifted.is_zero() {
            // F = a everywhere: every nonzero point is a root
            g = g.mul(field, &modulus);
            continue;
        }
        g = g.mul(field, &shifted.gcd(field, &modulus));
    }
    GenPoly::from_poly(field, g)
}

/// The code `C(F^-1(b))` with defining set `F^-1(b) \ {0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreimageCode {
    pub b: u16,
    pub preimage: Vec<usize>,
    pub code: CyclicCode,
}

impl PreimageCode {
    /// Whether `0` belongs to the preimage; annihilators then also vanish at 0.
    pub fn contains_zero(&self) -> bool {
        self.preimage.first() == Some(&0)
    }
}

pub fn code_from_preimage(f: &VectorialFunction, b: u16) -> PreimageCode {
    let field = f.field();
    let preimage = f.preimage(b);
    let exps = nonzero_exponents(field, &preimage);
    PreimageCode {
        b,
        preimage,
        code: CyclicCode::new(field.clone(), GenPoly::from_exponents(field, &exps)),
    }
}

/// `x^k p(1/x) / p(0)` with `p = (x^N + 1) / G` and `k = deg p`.
pub fn dual_generator(c: &CyclicCode) -> GenPoly {
    let field = c.field();
    let (p, _) = Poly::x_pow_plus_one(c.length()).div_rem(field, &c.gen().poly);
    let inv = field.inv(p.coeff(0)).expect("p divides x^N + 1 so p(0) != 0");
    let dual = p.reciprocal().scale(field, inv);
    GenPoly::from_poly(field, dual).expect("reciprocal of a divisor divides x^N + 1")
}

/// Outcome of the LCD test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LcdCheck {
    pub lcd: bool,
    /// A root exponent whose negative is not a root, when not LCD.
    pub witness: Option<usize>,
    /// `rank [G; G_dual] == N`, computed only for `n <= 4`.
    pub direct: Option<bool>,
}

pub fn is_lcd(c: &CyclicCode) -> LcdCheck {
    let order = c.length();
    let roots = c.defining_set();
    let witness = roots
        .iter()
        .copied()
        .find(|&e| roots.binary_search(&((order - e) % order)).is_err());
    let self_rec = c.gen().is_self_reciprocal(c.field());
    debug_assert_eq!(self_rec, witness.is_none());
    let direct = (c.field().n() <= 4).then(|| intersection_is_trivial(c));
    LcdCheck {
        lcd: witness.is_none(),
        witness,
        direct,
    }
}

/// `C ∩ C^⊥ = {0}` by the rank of the stacked generator matrices.
pub fn intersection_is_trivial(c: &CyclicCode) -> bool {
    let mut rows = c.generator_matrix();
    rows.extend(c.dual().generator_matrix());
    if rows.is_empty() {
        return true;
    }
    field_rank(c.field(), &rows) == c.length()
}

/// Euclidean inner product over GF(2^n).
pub fn dot(field: &Field, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    a.iter()
        .zip(b)
        .fold(FieldElement::ZERO, |acc, (&x, &y)| acc + field.mul(x, y))
}

/// How a distance value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceMethod {
    Enumeration,
    SupportSearch,
    HtBound,
    Sampling,
}

/// Minimum distance: exact, a bracket, or undefined for the zero code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Distance {
    Exact {
        value: usize,
        method: DistanceMethod,
    },
    Bracket {
        lower: usize,
        upper: usize,
        lower_method: DistanceMethod,
    },
    ZeroCode,
}

impl Distance {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            Distance::Exact { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn lower(&self) -> Option<usize> {
        match *self {
            Distance::Exact { value, .. } => Some(value),
            Distance::Bracket { lower, .. } => Some(lower),
            Distance::ZeroCode => None,
        }
    }
}

/// Minimum distance with an optional full weight distribution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightProfile {
    pub min_distance: Distance,
    /// `weight -> number of codewords`, zero word included.
    pub distribution: Option<BTreeMap<usize, u64>>,
}

fn message_space(c: &CyclicCode) -> Option<u64> {
    (c.field().size() as u64).checked_pow(c.dimension() as u32)
}

/// Weight distribution by enumerating all `q^k` messages. Messages are
/// walked projectively (highest nonzero coefficient equal to 1) and counts
/// are scaled by `q - 1`.
pub fn weight_distribution(c: &CyclicCode) -> BTreeMap<usize, u64> {
    let field = c.field();
    let q = field.size();
    let len = c.length();
    let k = c.dimension();
    let rows = c.generator_matrix();
    // table[i][v] = v * row_i
    let table: Vec<Vec<Vec<u16>>> = rows
        .iter()
        .map(|row| {
            field
                .elements()
                .map(|v| row.iter().map(|&x| field.mul(v, x).0).collect())
                .collect()
        })
        .collect();
    let mut counts = vec![0u64; len + 1];
    let mut bufs = vec![vec![0u16; len]; k + 1];
    for lead in 0..k {
        bufs[lead].copy_from_slice(&table[lead][1]);
        walk(&table, &mut bufs, lead, &mut counts);
    }
    let mut dist = BTreeMap::new();
    dist.insert(0, 1);
    for (w, &cnt) in counts.iter().enumerate() {
        if cnt > 0 {
            *dist.entry(w).or_insert(0) += cnt * (q as u64 - 1);
        }
    }
    dist
}

fn walk(table: &[Vec<Vec<u16>>], bufs: &mut [Vec<u16>], level: usize, counts: &mut [u64]) {
    if level == 0 {
        let w = bufs[0].iter().filter(|&&x| x != 0).count();
        counts[w] += 1;
        return;
    }
    let (lo, hi) = bufs.split_at_mut(level);
    let acc = &hi[0];
    for row in &table[level - 1] {
        for ((o, &a), &r) in lo[level - 1].iter_mut().zip(acc).zip(row) {
            *o = a ^ r;
        }
        walk(table, lo, level - 1, counts);
    }
}

/// Smallest weight `w` such that some support of size `w` (containing
/// position 0, by cyclicity) carries a nonzero codeword. `Err` holds the
/// largest weight ruled out when the search cost would exceed `budget`.
fn support_search(c: &CyclicCode, budget: u64) -> std::result::Result<usize, usize> {
    let field = c.field();
    let len = c.length();
    let roots = c.defining_set();
    if roots.is_empty() {
        return Ok(1);
    }
    let column = |j: usize| -> Vec<FieldElement> {
        roots
            .iter()
            .map(|&e| field.alpha_pow((e * j % len) as i64))
            .collect()
    };
    let columns: Vec<Vec<FieldElement>> = (0..len).map(column).collect();
    let mut spent = 0u64;
    for w in 1..=roots.len() + 1 {
        // each support costs a rank computation on a |D| x w matrix
        let cost = binomial(len as u64 - 1, w as u64 - 1)
            .saturating_mul((w * roots.len()) as u64);
        spent = spent.saturating_add(cost);
        if spent > budget {
            return Err(w - 1);
        }
        let mut found = false;
        for_each_subset(len - 1, w - 1, |rest| {
            let mut rows: Vec<Vec<FieldElement>> = vec![Vec::with_capacity(w); roots.len()];
            for (r, row) in rows.iter_mut().enumerate() {
                row.push(columns[0][r]);
                row.extend(rest.iter().map(|&j| columns[j + 1][r]));
            }
            if field_rank(field, &rows) < w {
                found = true;
            }
            found
        });
        if found {
            return Ok(w);
        }
    }
    unreachable!("a support of size |D| + 1 always carries a codeword")
}

/// Calls `f` on each `k`-subset of `0..n` in lexicographic order until it
/// returns `true`.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn sampled_upper(c: &CyclicCode, samples: u64) -> usize {
    let mut best = c.gen().poly.weight();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let q = c.field().size();
    for _ in 0..samples {
        let msg: Vec<FieldElement> = (0..c.dimension())
            .map(|_| c.field().elem(rng.gen_range(0..q)))
            .collect();
        let w = c.encode(&msg).iter().filter(|x| !x.is_zero()).count();
        if w > 0 {
            best = best.min(w);
        }
    }
    best
}

/// Minimum distance and, when the message space fits the budget, the full
/// weight distribution. Otherwise a support search, and failing that a
/// bracket between the HT bound and the lightest sampled codeword.
pub fn min_distance(c: &CyclicCode, budget: u64) -> WeightProfile {
    if c.is_zero_code() {
        return WeightProfile {
            min_distance: Distance::ZeroCode,
            distribution: None,
        };
    }
    if message_space(c).is_some_and(|s| s <= budget) {
        let dist = weight_distribution(c);
        let d = dist.keys().copied().find(|&w| w > 0).expect("nonzero code");
        return WeightProfile {
            min_distance: Distance::Exact {
                value: d,
                method: DistanceMethod::Enumeration,
            },
            distribution: Some(dist),
        };
    }
    WeightProfile {
        min_distance: distance(c, budget),
        distribution: None,
    }
}

/// Minimum distance without the distribution, preferring the support search.
pub fn distance(c: &CyclicCode, budget: u64) -> Distance {
    if c.is_zero_code() {
        return Distance::ZeroCode;
    }
    match support_search(c, budget) {
        Ok(value) => Distance::Exact {
            value,
            method: DistanceMethod::SupportSearch,
        },
        Err(ruled_out) => {
            let ht = ht_bound(c.defining_set(), c.field().n(), HtCoprime::Order).value + 1;
            let (lower, lower_method) = if ht > ruled_out + 1 {
                (ht, DistanceMethod::HtBound)
            } else {
                (ruled_out + 1, DistanceMethod::SupportSearch)
            };
            let upper = sampled_upper(c, budget.min(4096));
            if lower >= upper {
                Distance::Exact {
                    value: upper,
                    method: lower_method,
                }
            } else {
                Distance::Bracket {
                    lower,
                    upper,
                    lower_method,
                }
            }
        }
    }
}

/// Which exponents a weight-height codeword may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WhReading {
    /// Exponents `0..=N`, i.e. univariate polynomials of degree at most
    /// `N`; an extra `a_0 = 0` row applies when 0 lies in the preimage.
    Univariate,
    /// Exponents `1..=N`, no zero constraint.
    Shifted,
    /// Exponents `0..N`, words of the length-`N` code, no zero constraint.
    Folded,
}

/// Minimum weight-height of a nonzero word vanishing on the defining set,
/// under the univariate reading. `vanish_at_zero` adds the constraint
/// `a_0 = 0`.
pub fn min_weight_height(c: &CyclicCode, vanish_at_zero: bool) -> Result<u32> {
    min_weight_height_reading(c, vanish_at_zero, WhReading::Univariate)
}

/// Weight-height of the preimage code, with `a_0 = 0` iff `0 ∈ F^-1(b)`.
pub fn preimage_weight_height(pc: &PreimageCode) -> Result<u32> {
    min_weight_height(&pc.code, pc.contains_zero())
}

/// Smallest `d` such that the exponents of 2-weight at most `d` (within the
/// chosen range) support a nonzero word. Decided exactly by a rank test.
pub fn min_weight_height_reading(
    c: &CyclicCode,
    vanish_at_zero: bool,
    reading: WhReading,
) -> Result<u32> {
    let field = c.field();
    let n = field.n();
    let order = c.length();
    let exps: Vec<usize> = match reading {
        WhReading::Univariate => (0..=order).collect(),
        WhReading::Shifted => (1..=order).collect(),
        WhReading::Folded => (0..order).collect(),
    };
    let zero_row = vanish_at_zero && reading == WhReading::Univariate;
    for d in 0..=n {
        let cols: Vec<usize> = exps
            .iter()
            .copied()
            .filter(|&e| two_weight(e) <= d)
            .collect();
        let mut rows: Vec<Vec<FieldElement>> = c
            .defining_set()
            .iter()
            .map(|&r| {
                cols.iter()
                    .map(|&e| field.alpha_pow((r * e % order) as i64))
                    .collect()
            })
            .collect();
        if zero_row {
            rows.push(
                cols.iter()
                    .map(|&e| if e == 0 { FieldElement::ONE } else { FieldElement::ZERO })
                    .collect(),
            );
        }
        if field_rank(field, &rows) < cols.len() {
            return Ok(d);
        }
    }
    Err(Error::NoCodeword)
}

/// A lightest-height word found by the rank test, as coefficients on
/// exponents `0..=N` (univariate reading).
pub fn weight_height_witness(c: &CyclicCode, vanish_at_zero: bool) -> Result<Vec<FieldElement>> {
    let d = min_weight_height(c, vanish_at_zero)?;
    let field = c.field();
    let order = c.length();
    let cols: Vec<usize> = (0..=order).filter(|&e| two_weight(e) <= d).collect();
    let mut rows: Vec<Vec<FieldElement>> = c
        .defining_set()
        .iter()
        .map(|&r| {
            cols.iter()
                .map(|&e| field.alpha_pow((r * e % order) as i64))
                .collect()
        })
        .collect();
    if vanish_at_zero {
        rows.push(
            cols.iter()
                .map(|&e| if e == 0 { FieldElement::ONE } else { FieldElement::ZERO })
                .collect(),
        );
    }
    let v = field_kernel_vector(field, &rows, cols.len()).ok_or(Error::NoCodeword)?;
    let mut word = vec![FieldElement::ZERO; order + 1];
    for (&e, a) in cols.iter().zip(v) {
        word[e] = a;
    }
    Ok(word)
}

/// Side condition on the step `m'` of a Hartmann–Tzeng pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HtCoprime {
    /// `gcd(m', 2^n - 1) = 1`.
    Order,
    /// `gcd(m', n) = 1`.
    Degree,
}

/// Best pattern `{r + i m' + j : 0 <= i <= k, 0 <= j < t}` inside a defining
/// set; the distance exceeds `value = t + k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HtBound {
    pub value: usize,
    pub t: usize,
    pub k: usize,
    pub r: usize,
    pub step: usize,
    pub convention: HtCoprime,
    /// False when only `m' = 1` was searched (large fields).
    pub exhaustive: bool,
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Exhaustive Hartmann–Tzeng search over the exponent ring `Z_{2^n - 1}`.
/// Returns value 0 for an empty defining set.
pub fn ht_bound(defining: &[usize], n: u32, convention: HtCoprime) -> HtBound {
    let order = (1usize << n) - 1;
    let mut member = vec![false; order];
    for &e in defining {
        member[e % order] = true;
    }
    // run[e] = length of the run e, e+1, ... inside the set (capped at order)
    let mut run = vec![0usize; order];
    if member.iter().all(|&m| m) {
        run.fill(order);
    } else {
        let start = member.iter().position(|&m| !m).unwrap();
        for off in 1..=order {
            let e = (start + order - off) % order;
            run[e] = if member[e] { run[(e + 1) % order] + 1 } else { 0 };
        }
    }
    let exhaustive = order <= 1023;
    if member.iter().all(|&m| m) {
        return HtBound {
            value: order,
            t: order,
            k: 0,
            r: 0,
            step: 1,
            convention,
            exhaustive,
        };
    }
    let steps: Vec<usize> = if exhaustive {
        (1..order.max(2))
            .filter(|&s| match convention {
                HtCoprime::Order => gcd(s, order) == 1,
                HtCoprime::Degree => gcd(s, n as usize) == 1,
            })
            .collect()
    } else {
        vec![1]
    };
    let mut best = HtBound {
        value: 0,
        t: 0,
        k: 0,
        r: 0,
        step: 1,
        convention,
        exhaustive,
    };
    for r in 0..order {
        if run[r] == 0 {
            continue;
        }
        if run[r] > best.value {
            best = HtBound {
                value: run[r],
                t: run[r],
                k: 0,
                r,
                step: 1,
                ..best
            };
        }
        for &s in &steps {
            let mut t = run[r];
            // positions r + i s stay distinct for i < order / gcd(s, order)
            for i in 1..order / gcd(s, order) {
                let e = (r + i * s) % order;
                t = t.min(run[e]);
                if t == 0 || t + order - 1 <= best.value {
                    break;
                }
                if t + i > best.value {
                    best = HtBound {
                        value: t + i,
                        t,
                        k: i,
                        r,
                        step: s,
                        ..best
                    };
                }
            }
        }
    }
    best.value = best.value.min(order);
    best
}

/// JSON code report.
#[derive(Clone, Debug, Serialize)]
pub struct CodeReport {
    pub length: usize,
    pub dimension: usize,
    pub gen_coeffs: Vec<String>,
    pub defining_set: Vec<usize>,
    pub lcd: bool,
    pub min_distance: Distance,
    pub min_weight_height: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distribution: Option<BTreeMap<usize, u64>>,
}

pub fn code_report(c: &CyclicCode, vanish_at_zero: bool, budget: u64) -> CodeReport {
    let profile = min_distance(c, budget);
    CodeReport {
        length: c.length(),
        dimension: c.dimension(),
        gen_coeffs: c.gen().to_hex(),
        defining_set: c.defining_set().to_vec(),
        lcd: is_lcd(c).lcd,
        min_distance: profile.min_distance,
        min_weight_height: min_weight_height(c, vanish_at_zero).ok(),
        distribution: profile.distribution,
    }
}
