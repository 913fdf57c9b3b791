//! Boolean and vectorial functions: truth tables, algebraic normal form,
//! univariate form over GF(2^n), Walsh spectrum and preimages.
//!
//! A point `x = (x_1, ..., x_n)` is the integer `sum x_i 2^(i-1)` and also the
//! field element with that bit pattern, so truth tables, ANF vectors and
//! univariate evaluations all share one indexing.

use crate::error::{Error, Result};
use crate::field::{two_weight, Embedding, Field, FieldElement};

/// In-place binary Möbius transform. It is its own inverse.
fn mobius_in_place(v: &mut [u8]) {
    let len = v.len();
    let mut step = 1;
    while step < len {
        for block in (0..len).step_by(2 * step) {
            for i in block..block + step {
                v[i + step] ^= v[i];
            }
        }
        step <<= 1;
    }
}

fn log2_exact(len: usize) -> Result<u32> {
    if len == 0 || !len.is_power_of_two() {
        return Err(Error::Shape(len));
    }
    Ok(len.trailing_zeros())
}

/// ANF coefficients (index `u` = monomial `prod x_i^(u_i)`) from a truth table.
pub fn anf_from_tt(tt: &[u8]) -> Result<Vec<u8>> {
    log2_exact(tt.len())?;
    let mut v: Vec<u8> = tt.iter().map(|b| b & 1).collect();
    mobius_in_place(&mut v);
    Ok(v)
}

/// Truth table from ANF coefficients.
pub fn tt_from_anf(anf: &[u8]) -> Result<Vec<u8>> {
    anf_from_tt(anf)
}

/// Unique polynomial of degree <= 2^n - 1 taking the given values.
///
/// `values[x]` is the value at the field element with bits `x`. Uses
/// `d_0 = F(0)`, `d_i = sum_{x != 0} F(x) x^(-i)` for `0 < i < 2^n - 1` and
/// `d_(2^n-1) = sum_x F(x)`.
pub fn univariate_from_table(field: &Field, values: &[FieldElement]) -> Result<Vec<FieldElement>> {
    if values.len() != field.size() {
        return Err(Error::DimensionMismatch(format!(
            "table has {} entries, field has {}",
            values.len(),
            field.size()
        )));
    }
    let order = field.order();
    let mut coeffs = vec![FieldElement::ZERO; field.size()];
    coeffs[0] = values[0];
    let nonzero: Vec<(usize, FieldElement)> = values
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, v)| !v.is_zero())
        .map(|(x, &v)| (field.log(field.elem(x)).expect("x != 0"), v))
        .collect();
    for (i, c) in coeffs.iter_mut().enumerate().take(order).skip(1) {
        let mut acc = FieldElement::ZERO;
        for &(lx, v) in &nonzero {
            // x^(-i) = alpha^(-i log x)
            acc += field.mul(v, field.alpha_pow(-((i * lx) as i64)));
        }
        *c = acc;
    }
    let mut total = FieldElement::ZERO;
    for &v in values {
        total += v;
    }
    coeffs[order] = total;
    Ok(coeffs)
}

/// Evaluates a coefficient sequence at `x` (with `0^0 = 1`).
pub fn eval_univariate(field: &Field, coeffs: &[FieldElement], x: FieldElement) -> FieldElement {
    coeffs
        .iter()
        .rev()
        .fold(FieldElement::ZERO, |acc, &c| field.mul(acc, x) + c)
}

/// Evaluates a coefficient sequence at every field element.
pub fn table_from_univariate(field: &Field, coeffs: &[FieldElement]) -> Vec<FieldElement> {
    field.elements().map(|x| eval_univariate(field, coeffs, x)).collect()
}

/// Max 2-weight over exponents with a nonzero coefficient (0 for the zero polynomial).
pub fn univariate_degree(coeffs: &[FieldElement]) -> u32 {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, _)| two_weight(j))
        .max()
        .unwrap_or(0)
}

/// A function F_2^n -> F_2, kept as both truth table and ANF.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: u32,
    tt: Vec<u8>,
    anf: Vec<u8>,
}

impl BooleanFunction {
    /// From a 0/1 truth table of length `2^n`.
    pub fn from_tt(tt: Vec<u8>) -> Result<BooleanFunction> {
        let n = log2_exact(tt.len())?;
        let tt: Vec<u8> = tt.into_iter().map(|b| b & 1).collect();
        let anf = anf_from_tt(&tt)?;
        Ok(BooleanFunction { n, tt, anf })
    }

    /// From ANF coefficients of length `2^n`.
    pub fn from_anf(anf: Vec<u8>) -> Result<BooleanFunction> {
        let n = log2_exact(anf.len())?;
        let anf: Vec<u8> = anf.into_iter().map(|b| b & 1).collect();
        let tt = tt_from_anf(&anf)?;
        Ok(BooleanFunction { n, tt, anf })
    }

    pub fn from_fn(n: u32, mut f: impl FnMut(usize) -> bool) -> BooleanFunction {
        let tt = (0..1usize << n).map(|x| f(x) as u8).collect();
        BooleanFunction::from_tt(tt).expect("power-of-two length")
    }

    /// Truth table packed in an integer, bit `x` = f(x). Requires `n <= 6`.
    pub fn from_bits(n: u32, bits: u64) -> BooleanFunction {
        assert!(n <= 6, "from_bits holds at most 64 points");
        BooleanFunction::from_fn(n, |x| (bits >> x) & 1 == 1)
    }

    pub fn zero(n: u32) -> BooleanFunction {
        BooleanFunction::from_fn(n, |_| false)
    }

    pub fn one(n: u32) -> BooleanFunction {
        BooleanFunction::from_fn(n, |_| true)
    }

    /// `prod (1 + x_i)`, the indicator of the zero point.
    pub fn delta(n: u32) -> BooleanFunction {
        BooleanFunction::from_fn(n, |x| x == 0)
    }

    /// Indicator of a point set.
    pub fn indicator(n: u32, points: &[usize]) -> BooleanFunction {
        let mut tt = vec![0u8; 1 << n];
        for &p in points {
            tt[p] = 1;
        }
        BooleanFunction::from_tt(tt).expect("power-of-two length")
    }

    /// The coordinate `x_i`, `i` in `1..=n`.
    pub fn variable(n: u32, i: u32) -> BooleanFunction {
        assert!((1..=n).contains(&i));
        BooleanFunction::from_fn(n, |x| (x >> (i - 1)) & 1 == 1)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.tt.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tt.is_empty()
    }

    pub fn tt(&self) -> &[u8] {
        &self.tt
    }

    pub fn anf(&self) -> &[u8] {
        &self.anf
    }

    #[inline]
    pub fn eval(&self, x: usize) -> bool {
        self.tt[x] == 1
    }

    pub fn is_zero(&self) -> bool {
        self.tt.iter().all(|&b| b == 0)
    }

    pub fn weight(&self) -> usize {
        self.tt.iter().filter(|&&b| b == 1).count()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.weight() == self.tt.len()
    }

    /// Algebraic degree from the ANF; the zero function has degree 0.
    pub fn degree(&self) -> u32 {
        self.anf
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 1)
            .map(|(u, _)| two_weight(u))
            .max()
            .unwrap_or(0)
    }

    /// `supp(f)` in increasing order.
    pub fn support(&self) -> Vec<usize> {
        (0..self.tt.len()).filter(|&x| self.tt[x] == 1).collect()
    }

    /// Pointwise sum.
    pub fn add(&self, other: &BooleanFunction) -> BooleanFunction {
        assert_eq!(self.n, other.n);
        BooleanFunction {
            n: self.n,
            tt: self.tt.iter().zip(&other.tt).map(|(a, b)| a ^ b).collect(),
            anf: self.anf.iter().zip(&other.anf).map(|(a, b)| a ^ b).collect(),
        }
    }

    /// Pointwise product.
    pub fn mul(&self, other: &BooleanFunction) -> BooleanFunction {
        assert_eq!(self.n, other.n);
        BooleanFunction::from_tt(self.tt.iter().zip(&other.tt).map(|(a, b)| a & b).collect())
            .expect("same shape")
    }

    /// `1 + f`.
    pub fn negate(&self) -> BooleanFunction {
        BooleanFunction::from_tt(self.tt.iter().map(|b| b ^ 1).collect()).expect("same shape")
    }

    /// Univariate coefficients over `field`, with `f` embedded as 0/1.
    pub fn univariate(&self, field: &Field) -> Result<Vec<FieldElement>> {
        self.check_field(field)?;
        let values: Vec<FieldElement> = self.tt.iter().map(|&b| FieldElement(b as u16)).collect();
        univariate_from_table(field, &values)
    }

    fn check_field(&self, field: &Field) -> Result<()> {
        if field.n() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "function on {} variables, field GF(2^{})",
                self.n,
                field.n()
            )));
        }
        Ok(())
    }

    /// Fast Walsh–Hadamard transform with the dot-product pairing:
    /// `sum_x (-1)^(f(x) + u.x)`.
    pub fn walsh_dot(&self) -> Vec<i64> {
        let mut w: Vec<i64> = self.tt.iter().map(|&b| 1 - 2 * b as i64).collect();
        let len = w.len();
        let mut step = 1;
        while step < len {
            for block in (0..len).step_by(2 * step) {
                for i in block..block + step {
                    let (a, b) = (w[i], w[i + step]);
                    w[i] = a + b;
                    w[i + step] = a - b;
                }
            }
            step <<= 1;
        }
        w
    }

    /// Walsh spectrum with the trace pairing, `W_f(u) = sum_x (-1)^(f(x) + Tr(u x))`.
    ///
    /// Computed from [`BooleanFunction::walsh_dot`]: `Tr(u x) = w(u) . x` where
    /// `w(u)_i = Tr(u e_i)` for the polynomial basis `e_i`.
    pub fn walsh(&self, field: &Field) -> Result<WalshSpectrum> {
        self.check_field(field)?;
        let dot = self.walsh_dot();
        let n = self.n;
        let values = field
            .elements()
            .map(|u| {
                let mut w = 0usize;
                for i in 0..n {
                    if field.abs_trace(field.mul(u, FieldElement(1 << i))) == 1 {
                        w |= 1 << i;
                    }
                }
                dot[w]
            })
            .collect();
        Ok(WalshSpectrum { values })
    }

    /// Truth table as hex of the integer whose bit `x` is `f(x)`.
    pub fn to_hex(&self) -> String {
        bits_to_hex(&self.tt)
    }

    pub fn from_hex(n: u32, s: &str) -> Result<BooleanFunction> {
        BooleanFunction::from_tt(hex_to_bits(n, s)?)
    }
}

/// Lowercase hex of a 0/1 vector read as an integer (entry `i` = bit `i`),
/// padded to `len/4` digits (at least one).
pub fn bits_to_hex(bits: &[u8]) -> String {
    let digits = bits.len().div_ceil(4).max(1);
    (0..digits)
        .rev()
        .map(|d| {
            let mut v = 0u32;
            for k in 0..4 {
                if bits.get(4 * d + k).copied().unwrap_or(0) & 1 == 1 {
                    v |= 1 << k;
                }
            }
            char::from_digit(v, 16).expect("nibble")
        })
        .collect()
}

/// Parses hex produced by [`bits_to_hex`] into `2^n` bits.
pub fn hex_to_bits(n: u32, s: &str) -> Result<Vec<u8>> {
    let len = 1usize << n;
    let mut bits = vec![0u8; len];
    for (d, ch) in s.trim().chars().rev().enumerate() {
        let v = ch
            .to_digit(16)
            .ok_or_else(|| Error::parse("data", format!("invalid hex digit `{ch}`")))?;
        for k in 0..4 {
            if (v >> k) & 1 == 1 {
                let i = 4 * d + k;
                if i >= len {
                    return Err(Error::parse("data", format!("hex value exceeds {len} bits")));
                }
                bits[i] = 1;
            }
        }
    }
    Ok(bits)
}

/// Walsh values indexed by `u` (field element bits).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    pub values: Vec<i64>,
}

impl WalshSpectrum {
    /// `sum_u W(u)^2`, which is `2^(2n)` for any Boolean function.
    pub fn parseval_sum(&self) -> i128 {
        self.values.iter().map(|&v| (v as i128) * (v as i128)).sum()
    }

    pub fn at(&self, u: usize) -> i64 {
        self.values[u]
    }
}

/// A function F_2^n -> F_2^m with its field GF(2^n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorialFunction {
    field: Field,
    m: u32,
    table: Vec<u16>,
}

impl VectorialFunction {
    pub fn new(field: Field, m: u32, table: Vec<u16>) -> Result<VectorialFunction> {
        if table.len() != field.size() {
            return Err(Error::DimensionMismatch(format!(
                "table has {} entries, expected {}",
                table.len(),
                field.size()
            )));
        }
        if m == 0 || m > 16 {
            return Err(Error::DimensionMismatch(format!("output width m = {m}")));
        }
        if let Some(&v) = table.iter().find(|&&v| (v as u32) >> m != 0) {
            return Err(Error::DimensionMismatch(format!("output {v:#x} exceeds {m} bits")));
        }
        Ok(VectorialFunction { field, m, table })
    }

    pub fn from_fn(field: Field, m: u32, f: impl FnMut(usize) -> u16) -> Result<VectorialFunction> {
        let table = (0..field.size()).map(f).collect();
        VectorialFunction::new(field, m, table)
    }

    /// A Boolean function as an (n,1)-function.
    pub fn from_boolean(field: Field, f: &BooleanFunction) -> Result<VectorialFunction> {
        if field.n() != f.n() {
            return Err(Error::DimensionMismatch("field/function degree".into()));
        }
        VectorialFunction::new(field, 1, f.tt().iter().map(|&b| b as u16).collect())
    }

    /// From univariate coefficients whose values lie in the subfield GF(2^m).
    pub fn from_univariate(
        field: Field,
        m: u32,
        coeffs: &[FieldElement],
    ) -> Result<VectorialFunction> {
        let emb = field.embedding(m)?;
        if coeffs.len() > field.size() {
            return Err(Error::DimensionMismatch("more than 2^n coefficients".into()));
        }
        let table = table_from_univariate(&field, coeffs)
            .into_iter()
            .enumerate()
            .map(|(x, y)| {
                emb.project(y).ok_or_else(|| {
                    Error::parse("data", format!("F({x:#x}) = {y} is outside GF(2^{m})"))
                })
            })
            .collect::<Result<Vec<u16>>>()?;
        VectorialFunction::new(field, m, table)
    }

    /// `F(x) = x` on GF(2^n).
    pub fn identity(field: Field) -> VectorialFunction {
        let n = field.n();
        VectorialFunction::from_fn(field, n, |x| x as u16).expect("valid identity")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> u32 {
        self.field.n()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn table(&self) -> &[u16] {
        &self.table
    }

    #[inline]
    pub fn eval(&self, x: usize) -> u16 {
        self.table[x]
    }

    /// Coordinate function `f_i`, `i` in `0..m` (bit `i` of the output).
    pub fn coordinate(&self, i: u32) -> BooleanFunction {
        assert!(i < self.m);
        BooleanFunction::from_tt(self.table.iter().map(|&v| ((v >> i) & 1) as u8).collect())
            .expect("power-of-two table")
    }

    pub fn coordinates(&self) -> Vec<BooleanFunction> {
        (0..self.m).map(|i| self.coordinate(i)).collect()
    }

    /// Component function `x -> Tr^m_1(v F(x))` for a nonzero `v` in GF(2^m).
    pub fn component(&self, v: u16) -> Result<BooleanFunction> {
        let emb = self.embedding()?;
        let field = &self.field;
        let v = emb.embed(v);
        let m = self.m;
        Ok(BooleanFunction::from_fn(self.n(), |x| {
            let y = field.mul(v, emb.embed(self.table[x]));
            let mut acc = FieldElement::ZERO;
            let mut z = y;
            for _ in 0..m {
                acc += z;
                z = field.square(z);
            }
            acc == FieldElement::ONE
        }))
    }

    pub fn embedding(&self) -> Result<Embedding> {
        self.field.embedding(self.m)
    }

    /// Univariate coefficients of `F` viewed as GF(2^n) -> GF(2^m) ⊆ GF(2^n).
    pub fn univariate(&self) -> Result<Vec<FieldElement>> {
        let emb = self.embedding()?;
        let values: Vec<FieldElement> = self.table.iter().map(|&v| emb.embed(v)).collect();
        univariate_from_table(&self.field, &values)
    }

    /// Algebraic degree: the maximum over coordinate functions.
    pub fn degree(&self) -> u32 {
        self.coordinates().iter().map(|f| f.degree()).max().unwrap_or(0)
    }

    /// `F^{-1}(b)` in increasing order.
    pub fn preimage(&self, b: u16) -> Vec<usize> {
        (0..self.table.len()).filter(|&x| self.table[x] == b).collect()
    }

    /// All preimages, indexed by `b` in `0..2^m`.
    pub fn preimages(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); 1 << self.m];
        for (x, &v) in self.table.iter().enumerate() {
            out[v as usize].push(x);
        }
        out
    }

    /// `{x : F(x) != 0}`.
    pub fn nonzero_set(&self) -> Vec<usize> {
        (0..self.table.len()).filter(|&x| self.table[x] != 0).collect()
    }

    pub fn is_constant(&self) -> bool {
        self.table.iter().all(|&v| v == self.table[0])
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; 1 << self.m];
        for &v in &self.table {
            hit[v as usize] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// Canonical truth-table text used for hashing and file output.
    pub fn table_hex(&self) -> Vec<String> {
        self.table.iter().map(|v| format!("{v:x}")).collect()
    }
}
