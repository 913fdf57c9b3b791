//! Arithmetic in GF(2^n) for 1 <= n <= 16.
//!
//! Elements are polynomial-basis bit vectors: bit `i` of a [`FieldElement`] is
//! the coefficient of `x^i`. Every [`Field`] carries a fixed primitive element
//! `alpha` together with exp/log tables for it, so multiplication and
//! inversion are table lookups.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 16;

/// Reduction polynomial and primitive element for each degree 1..=16.
///
/// The polynomial is the numerically smallest irreducible polynomial of the
/// lowest possible weight; `alpha` is the numerically smallest element of
/// multiplicative order `2^n - 1`.
const DEFAULT_PARAMS: [(u32, u16); 16] = [
    (0x3, 0x1),
    (0x7, 0x2),
    (0xb, 0x2),
    (0x13, 0x2),
    (0x25, 0x2),
    (0x43, 0x2),
    (0x83, 0x2),
    (0x11b, 0x3),
    (0x203, 0x7),
    (0x409, 0x2),
    (0x805, 0x2),
    (0x1009, 0x3),
    (0x201b, 0x2),
    (0x4021, 0x7),
    (0x8003, 0x2),
    (0x1002b, 0x3),
];

/// An element of GF(2^n) in polynomial basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn bits(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

impl std::ops::AddAssign for FieldElement {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: FieldElement) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

/// Carry-less multiplication of `a` and `b` reduced modulo `poly` (degree `n`).
pub(crate) fn clmul_mod(mut a: u32, mut b: u32, poly: u32, n: u32) -> u32 {
    let mut acc = 0u32;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if (a >> n) & 1 == 1 {
            a ^= poly;
        }
    }
    acc
}

/// Remainder of `a` modulo `m` as GF(2)[x] polynomials.
pub(crate) fn gf2_poly_rem(mut a: u64, m: u64) -> u64 {
    let dm = 63 - m.leading_zeros();
    while a != 0 && 63 - a.leading_zeros() >= dm {
        let shift = (63 - a.leading_zeros()) - dm;
        a ^= m << shift;
    }
    a
}

/// Trial division by every polynomial of degree 1..=deg/2.
pub fn is_irreducible(poly: u32) -> bool {
    if poly < 2 {
        return false;
    }
    let n = 31 - poly.leading_zeros();
    for d in 1..=n / 2 {
        for q in (1u64 << d)..(1u64 << (d + 1)) {
            if gf2_poly_rem(poly as u64, q) == 0 {
                return false;
            }
        }
    }
    true
}

struct Tables {
    n: u32,
    poly: u32,
    alpha: u16,
    /// `exp[i] = alpha^i` for `0 <= i < 2 * order` (doubled to skip a reduction).
    exp: Vec<u16>,
    /// `log[a] = i` with `alpha^i = a`; `log[0]` is unused.
    log: Vec<u32>,
}

/// GF(2^n) with a fixed reduction polynomial and primitive element.
///
/// Cloning is cheap; the tables are shared.
#[derive(Clone)]
pub struct Field {
    t: Arc<Tables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("n", &self.t.n)
            .field("poly", &format_args!("{:#x}", self.t.poly))
            .field("alpha", &format_args!("{:#x}", self.t.alpha))
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.t.n == other.t.n && self.t.poly == other.t.poly && self.t.alpha == other.t.alpha
    }
}

impl Eq for Field {}

/// Builds the default field of degree `n`.
pub fn make_field(n: u32) -> Result<Field> {
    if !(1..=MAX_DEGREE).contains(&n) {
        return Err(Error::UnsupportedDegree(n));
    }
    let (poly, alpha) = DEFAULT_PARAMS[(n - 1) as usize];
    Field::with_params(n, poly, alpha)
}

impl Field {
    /// Builds GF(2^n) from an explicit reduction polynomial and primitive element.
    pub fn with_params(n: u32, poly: u32, alpha: u16) -> Result<Field> {
        if !(1..=MAX_DEGREE).contains(&n) {
            return Err(Error::UnsupportedDegree(n));
        }
        if 31 - poly.leading_zeros() != n {
            return Err(Error::InvalidField(format!(
                "reduction polynomial {poly:#x} does not have degree {n}"
            )));
        }
        if !is_irreducible(poly) {
            return Err(Error::InvalidField(format!("{poly:#x} is reducible")));
        }
        let size = 1usize << n;
        if alpha == 0 || (alpha as usize) >= size {
            return Err(Error::InvalidField(format!("alpha {alpha:#x} out of range")));
        }
        let order = size - 1;
        let mut exp = vec![0u16; 2 * order];
        let mut log = vec![u32::MAX; size];
        let mut x = 1u32;
        #[allow(clippy::needless_range_loop)]
        for i in 0..order {
            if log[x as usize] != u32::MAX {
                return Err(Error::InvalidField(format!(
                    "alpha {alpha:#x} is not primitive (order {i})"
                )));
            }
            exp[i] = x as u16;
            log[x as usize] = i as u32;
            x = clmul_mod(x, alpha as u32, poly, n);
        }
        if x != 1 {
            return Err(Error::InvalidField(format!("alpha {alpha:#x} is not primitive")));
        }
        for i in order..2 * order {
            exp[i] = exp[i - order];
        }
        Ok(Field {
            t: Arc::new(Tables {
                n,
                poly,
                alpha,
                exp,
                log,
            }),
        })
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.t.n
    }

    /// Number of elements, `2^n`.
    #[inline]
    pub fn size(&self) -> usize {
        1usize << self.t.n
    }

    /// Multiplicative order of `alpha`, `2^n - 1`. Also the code length.
    #[inline]
    pub fn order(&self) -> usize {
        self.size() - 1
    }

    pub fn poly(&self) -> u32 {
        self.t.poly
    }

    pub fn alpha(&self) -> FieldElement {
        FieldElement(self.t.alpha)
    }

    /// Element with the given bit pattern (masked to n bits).
    #[inline]
    pub fn elem(&self, bits: usize) -> FieldElement {
        FieldElement((bits & (self.size() - 1)) as u16)
    }

    /// Iterates over all `2^n` elements in integer order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.size()).map(|i| FieldElement(i as u16))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        a + b
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let i = self.t.log[a.0 as usize] + self.t.log[b.0 as usize];
        FieldElement(self.t.exp[i as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let l = self.t.log[a.0 as usize] as usize;
        Ok(FieldElement(self.t.exp[(self.order() - l) % self.order()]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `alpha^e` for any integer exponent (reduced modulo `2^n - 1`).
    #[inline]
    pub fn alpha_pow(&self, e: i64) -> FieldElement {
        let o = self.order() as i64;
        FieldElement(self.t.exp[e.rem_euclid(o) as usize])
    }

    /// Discrete logarithm to base `alpha`; `None` for zero.
    #[inline]
    pub fn log(&self, a: FieldElement) -> Option<usize> {
        if a.0 == 0 {
            None
        } else {
            Some(self.t.log[a.0 as usize] as usize)
        }
    }

    /// `a^e` with the convention `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        match self.log(a) {
            None => FieldElement::ZERO,
            Some(l) => {
                let o = self.order() as u64;
                FieldElement(self.t.exp[((l as u64 * (e % o)) % o) as usize])
            }
        }
    }

    #[inline]
    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    /// Relative trace `Tr^n_m(a) = a + a^(2^m) + ... + a^(2^(n-m))`.
    pub fn trace(&self, m: u32, a: FieldElement) -> Result<FieldElement> {
        let n = self.n();
        if m == 0 || !n.is_multiple_of(m) {
            return Err(Error::InvalidSubfield { n, m });
        }
        let mut acc = FieldElement::ZERO;
        let mut x = a;
        for _ in 0..n / m {
            acc += x;
            for _ in 0..m {
                x = self.square(x);
            }
        }
        Ok(acc)
    }

    /// Absolute trace as a bit.
    pub fn abs_trace(&self, a: FieldElement) -> u8 {
        // Tr^n_1 always lands in {0, 1}
        self.trace(1, a).map(|t| t.0 as u8).unwrap_or(0)
    }

    /// The JSON-facing description of this field.
    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            n: self.n(),
            poly_bits: format!("{:x}", self.poly()),
            alpha_bits: format!("{:x}", self.alpha().0),
        }
    }

    /// The embedding of `m`-bit vectors into the subfield GF(2^m).
    pub fn embedding(&self, m: u32) -> Result<Embedding> {
        Embedding::new(self, m)
    }
}

/// Serialized field parameters. Hex strings hold the integer whose bit `i`
/// is the coefficient of `x^i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub n: u32,
    pub poly_bits: String,
    pub alpha_bits: String,
}

impl FieldSpec {
    pub fn to_field(&self) -> Result<Field> {
        let poly = u32::from_str_radix(&self.poly_bits, 16)
            .map_err(|e| Error::parse("field.poly_bits", e.to_string()))?;
        let alpha = u16::from_str_radix(&self.alpha_bits, 16)
            .map_err(|e| Error::parse("field.alpha_bits", e.to_string()))?;
        Field::with_params(self.n, poly, alpha)
    }
}

/// F2-linear bijection between `m`-bit vectors and the subfield GF(2^m) of
/// GF(2^n).
///
/// For `m = n` the bit pattern is kept as is. For a proper subfield the basis
/// is `1, beta, ..., beta^(m-1)` with `beta = alpha^((2^n-1)/(2^m-1))`; for
/// `m = 1` this sends 0 and 1 to themselves.
#[derive(Clone, Debug)]
pub struct Embedding {
    m: u32,
    forward: Vec<FieldElement>,
    /// Indexed by field element bits; `u16::MAX` marks elements outside the subfield.
    backward: Vec<u16>,
}

impl Embedding {
    fn new(field: &Field, m: u32) -> Result<Embedding> {
        let n = field.n();
        if m == 0 || !n.is_multiple_of(m) {
            return Err(Error::InvalidEmbedding { n, m });
        }
        let count = 1usize << m;
        let mut forward = Vec::with_capacity(count);
        if m == n {
            forward.extend(field.elements());
        } else {
            let beta = field.alpha_pow((field.order() / (count - 1)) as i64);
            let basis: Vec<FieldElement> = (0..m).map(|i| field.pow(beta, i as u64)).collect();
            for v in 0..count {
                let mut acc = FieldElement::ZERO;
                for (i, b) in basis.iter().enumerate() {
                    if (v >> i) & 1 == 1 {
                        acc += *b;
                    }
                }
                forward.push(acc);
            }
        }
        let mut backward = vec![u16::MAX; field.size()];
        for (v, e) in forward.iter().enumerate() {
            backward[e.0 as usize] = v as u16;
        }
        Ok(Embedding {
            m,
            forward,
            backward,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn embed(&self, v: u16) -> FieldElement {
        self.forward[v as usize]
    }

    /// Inverse of [`Embedding::embed`]; `None` if `a` is not in the subfield.
    #[inline]
    pub fn project(&self, a: FieldElement) -> Option<u16> {
        match self.backward[a.0 as usize] {
            u16::MAX => None,
            v => Some(v),
        }
    }
}

/// Number of ones in the binary expansion of `j`.
#[inline]
pub fn two_weight(j: usize) -> u32 {
    j.count_ones()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8() -> Field {
        make_field(3).unwrap()
    }

    #[test]
    fn default_table_matches_search() {
        for n in 1..=MAX_DEGREE {
            let f = make_field(n).unwrap();
            let weight = f.poly().count_ones();
            // no irreducible of smaller weight, none of equal weight that is smaller
            for p in (1u32 << n)..f.poly() {
                if p & 1 == 1 && p.count_ones() <= weight {
                    assert!(!is_irreducible(p), "n={n}: {p:#x} beats {:#x}", f.poly());
                }
            }
            if n <= 12 {
                for a in 1..f.alpha().0 {
                    assert!(Field::with_params(n, f.poly(), a).is_err());
                }
            }
        }
    }

    #[test]
    fn small_fields() {
        assert_eq!(make_field(3).unwrap().poly(), 0b1011);
        let f1 = make_field(1).unwrap();
        assert_eq!(f1.poly(), 0b11);
        assert_eq!(f1.alpha(), FieldElement::ONE);
        let f4 = make_field(4).unwrap();
        assert_eq!(f4.poly(), 0b10011);
        assert_eq!(f4.alpha(), FieldElement(2));
        assert_eq!(make_field(0).unwrap_err(), Error::UnsupportedDegree(0));
        assert_eq!(make_field(17).unwrap_err(), Error::UnsupportedDegree(17));
    }

    #[test]
    fn mul_examples() {
        let f = gf8();
        let a = f.alpha();
        assert_eq!(f.mul(a, f.square(a)), FieldElement(0b011));
        assert_eq!(f.mul(f.alpha_pow(3), f.alpha_pow(4)), FieldElement::ONE);
        for x in f.elements() {
            assert_eq!(f.mul(x, FieldElement::ZERO), FieldElement::ZERO);
        }
    }

    #[test]
    fn inv_examples() {
        let f = gf8();
        assert_eq!(f.inv(FieldElement::ONE).unwrap(), FieldElement::ONE);
        assert_eq!(f.inv(f.alpha()).unwrap(), f.alpha_pow(6));
        assert_eq!(f.inv(f.alpha_pow(3)).unwrap(), f.alpha_pow(4));
        assert_eq!(f.inv(FieldElement::ZERO), Err(Error::DivisionByZero));
        for n in 1..=8 {
            let f = make_field(n).unwrap();
            for x in f.elements().skip(1) {
                assert_eq!(f.mul(x, f.inv(x).unwrap()), FieldElement::ONE);
            }
        }
    }

    #[test]
    fn table_mul_agrees_with_shift_and_add() {
        for n in 1..=6 {
            let f = make_field(n).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    let slow = clmul_mod(a.0 as u32, b.0 as u32, f.poly(), n) as u16;
                    assert_eq!(f.mul(a, b).0, slow);
                }
            }
        }
    }

    #[test]
    fn ring_axioms_exhaustive() {
        for n in 1..=4 {
            let f = make_field(n).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.square(a + b), f.square(a) + f.square(b));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, b + c), f.mul(a, b) + f.mul(a, c));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn alpha_powers_enumerate_units() {
        for n in 1..=10 {
            let f = make_field(n).unwrap();
            let mut seen = vec![false; f.size()];
            for e in 0..f.order() {
                let x = f.alpha_pow(e as i64);
                assert!(!x.is_zero() && !seen[x.0 as usize]);
                seen[x.0 as usize] = true;
            }
        }
    }

    #[test]
    fn trace_examples() {
        let f = gf8();
        assert_eq!(f.trace(1, FieldElement::ONE).unwrap(), FieldElement::ONE);
        for a in f.elements() {
            assert_eq!(f.trace(3, a).unwrap(), a);
        }
        assert_eq!(
            f.trace(2, FieldElement::ONE),
            Err(Error::InvalidSubfield { n: 3, m: 2 })
        );
        let f16 = make_field(4).unwrap();
        let a = f16.alpha();
        let t = f16.trace(2, a).unwrap();
        assert_eq!(t, a + f16.pow(a, 4));
        assert_eq!(f16.pow(t, 4), t);
    }

    #[test]
    fn trace_is_transitive_and_additive() {
        for n in 1..=6 {
            let f = make_field(n).unwrap();
            for m in (1..=n).filter(|m| n % m == 0) {
                for a in f.elements() {
                    let inner = f.trace(m, a).unwrap();
                    // Tr^m_1 computed inside GF(2^n) on a subfield element
                    let mut outer = FieldElement::ZERO;
                    let mut x = inner;
                    for _ in 0..m {
                        outer += x;
                        x = f.square(x);
                    }
                    assert_eq!(outer, f.trace(1, a).unwrap());
                    assert_eq!(f.pow(inner, 1 << m), inner);
                    for b in f.elements().step_by(3) {
                        assert_eq!(f.trace(m, a + b).unwrap(), inner + f.trace(m, b).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn embedding_is_subfield_bijection() {
        for n in 1..=8 {
            let f = make_field(n).unwrap();
            for m in (1..=n).filter(|m| n % m == 0) {
                let e = f.embedding(m).unwrap();
                for v in 0..(1u16 << m) {
                    let x = e.embed(v);
                    assert_eq!(f.pow(x, 1 << m), x);
                    assert_eq!(e.project(x), Some(v));
                }
                if m == 1 {
                    assert_eq!(e.embed(1), FieldElement::ONE);
                }
            }
            assert!(f.embedding(0).is_err());
        }
        let f = make_field(4).unwrap();
        assert!(f.embedding(3).is_err());
        let id = f.embedding(4).unwrap();
        assert_eq!(id.embed(0b1010), FieldElement(0b1010));
    }

    #[test]
    fn spec_round_trip() {
        let f = make_field(8).unwrap();
        let s = f.spec();
        assert_eq!(s.poly_bits, "11b");
        assert_eq!(s.to_field().unwrap(), f);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"n":8,"poly_bits":"11b","alpha_bits":"3"}"#);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(Field::with_params(3, 0b1001, 2).is_err()); // x^3+1 reducible
        assert!(Field::with_params(4, 0b11111, 2).is_err()); // x has order 5
        assert!(Field::with_params(4, 0b10011, 1).is_err());
    }
}
