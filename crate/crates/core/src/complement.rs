//! Algebraic complements: `f^c` has exactly the ANF monomials absent from
//! `f`, so `f^c = f + Delta` with `Delta` the indicator of the zero point.

use serde::Serialize;

use crate::annihil::{annihilator_basis, lda_of_set, lda_product, pack_tt};
use crate::codes::{code_from_preimage, generator_g_f, GenPoly};
use crate::error::Result;
use crate::funcrep::{BooleanFunction, VectorialFunction};
use crate::linalg::BitMatrix;

/// ANF-wise monomial complement.
pub fn complement_boolean(f: &BooleanFunction) -> BooleanFunction {
    let anf = f.anf().iter().map(|&c| c ^ 1).collect();
    BooleanFunction::from_anf(anf).expect("power-of-two length")
}

/// A function with its coordinatewise algebraic complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementPair {
    pub f: VectorialFunction,
    pub fc: VectorialFunction,
    pub delta: BooleanFunction,
}

pub fn complement_vectorial(f: &VectorialFunction) -> ComplementPair {
    let coords: Vec<BooleanFunction> = f.coordinates().iter().map(complement_boolean).collect();
    let fc = VectorialFunction::from_fn(f.field().clone(), f.m(), |x| {
        coords
            .iter()
            .enumerate()
            .fold(0u16, |acc, (i, c)| acc | ((c.eval(x) as u16) << i))
    })
    .expect("complement keeps the output width");
    ComplementPair {
        f: f.clone(),
        fc,
        delta: BooleanFunction::delta(f.n()),
    }
}

impl ComplementPair {
    fn ones(&self) -> u16 {
        ((1u32 << self.f.m()) - 1) as u16
    }

    /// `F^c(x) = F(x)` for `x != 0`.
    pub fn agrees_off_zero(&self) -> bool {
        (1..self.f.table().len()).all(|x| self.f.eval(x) == self.fc.eval(x))
    }

    /// `F^c(x) = F(x) + Delta(x) (1, ..., 1)` for every `x`.
    pub fn pointwise_shift_holds(&self) -> bool {
        let ones = self.ones();
        (0..self.f.table().len()).all(|x| {
            let shift = if self.delta.eval(x) { ones } else { 0 };
            self.fc.eval(x) == self.f.eval(x) ^ shift
        })
    }

    /// Complementing `F^c` returns `F`, in every representation.
    pub fn involution_holds(&self) -> bool {
        let back = complement_vectorial(&self.fc).fc;
        back == self.f
            && self
                .f
                .coordinates()
                .iter()
                .all(|c| complement_boolean(&complement_boolean(c)) == *c)
    }

    /// Which way the fiber over `b` changes.
    pub fn fiber_case(&self, b: u16) -> FiberCase {
        let f0 = self.f.eval(0);
        if f0 == b {
            FiberCase::LosesZero
        } else if f0 ^ self.ones() == b {
            FiberCase::GainsZero
        } else {
            FiberCase::Unchanged
        }
    }

    /// The preimage relation predicted by [`FiberCase`] for `b`.
    pub fn trichotomy_holds(&self, b: u16) -> bool {
        let p = self.f.preimage(b);
        let q = self.fc.preimage(b);
        let expected: Vec<usize> = match self.fiber_case(b) {
            FiberCase::LosesZero => p.iter().copied().filter(|&x| x != 0).collect(),
            FiberCase::GainsZero => {
                let mut v = p.clone();
                v.insert(0, 0);
                v
            }
            FiberCase::Unchanged => p,
        };
        q == expected
    }

    /// The literal three-item reading: whenever `0` is not in `F^-1(b)`,
    /// `(F^c)^-1(b) = F^-1(b) ∪ {0}`. False for unchanged fibers (`m >= 2`).
    pub fn literal_gain_reading_holds(&self, b: u16) -> bool {
        let p = self.f.preimage(b);
        if p.first() == Some(&0) {
            return true;
        }
        let mut expected = p;
        expected.insert(0, 0);
        self.fc.preimage(b) == expected
    }
}

/// How `(F^c)^-1(b)` relates to `F^-1(b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FiberCase {
    /// `b = F(0)`: the fiber loses the zero point.
    LosesZero,
    /// `b = F(0) + (1, ..., 1)`: the fiber gains the zero point.
    GainsZero,
    /// Any other `b`: the fiber is unchanged.
    Unchanged,
}

/// Span of the annihilators of degree at most `n` (zero included) with
/// `Delta` adjoined or not, compared by rank.
fn span_rows(n: u32, funcs: &[BooleanFunction]) -> BitMatrix {
    let mut m = BitMatrix::new(1 << n);
    for g in funcs {
        m.push_row_from(g.support());
    }
    m
}

fn same_span(n: u32, a: &[BooleanFunction], b: &[BooleanFunction]) -> bool {
    let ra = span_rows(n, a).rank();
    let rb = span_rows(n, b).rank();
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    let rab = span_rows(n, &all).rank();
    ra == rb && rb == rab
}

/// Annihilator-set identities for the fiber over `b`, with annihilator sets
/// taken as full spaces (zero included) of functions of degree at most `n`:
///
/// * loses zero: `AN(F^c) = AN(F) ∪ AN(F)^c`
/// * gains zero: `AN(F) = AN(F^c) ∪ AN(F^c)^c`
/// * unchanged: `AN(F) = AN(F^c)`
///
/// where `A^c = {g + Delta : g in A}`. Enumerated as sets when the spaces
/// have at most 2^16 elements and `n <= 6`, otherwise compared by rank (the
/// union of a subspace and its `Delta` translate is the span with `Delta`).
pub fn an_identity_holds(pair: &ComplementPair, b: u16) -> Result<bool> {
    let n = pair.f.n();
    let p = annihilator_basis(&pair.f.preimage(b), n, n)?;
    let q = annihilator_basis(&pair.fc.preimage(b), n, n)?;
    let (big, small) = match pair.fiber_case(b) {
        FiberCase::LosesZero => (q, p),
        FiberCase::GainsZero => (p, q),
        FiberCase::Unchanged => return Ok(equal_spaces(n, &p.basis, &q.basis)),
    };
    let delta = BooleanFunction::delta(n);
    if n <= 6 && big.dimension() <= 16 && small.dimension() <= 16 {
        let d = pack_tt(&delta);
        let mut lhs = big.span_packed();
        let mut rhs = small.span_packed();
        let translate: Vec<u64> = rhs.iter().map(|g| g ^ d).collect();
        rhs.extend(translate);
        lhs.sort_unstable();
        rhs.sort_unstable();
        rhs.dedup();
        return Ok(lhs == rhs);
    }
    let mut with_delta = small.basis.clone();
    with_delta.push(delta);
    Ok(same_span(n, &big.basis, &with_delta))
}

fn equal_spaces(n: u32, a: &[BooleanFunction], b: &[BooleanFunction]) -> bool {
    same_span(n, a, b)
}

/// The same identities with annihilator sets read as nonzero functions
/// only. The translate of the zero function, `Delta`, is then missing from
/// the right-hand side, so the first two identities fail whenever `Delta`
/// belongs to the left-hand side.
pub fn an_identity_nonzero_reading_holds(pair: &ComplementPair, b: u16) -> Result<bool> {
    let n = pair.f.n();
    let p = annihilator_basis(&pair.f.preimage(b), n, n)?;
    let q = annihilator_basis(&pair.fc.preimage(b), n, n)?;
    let (big, small) = match pair.fiber_case(b) {
        FiberCase::LosesZero => (q, p),
        FiberCase::GainsZero => (p, q),
        FiberCase::Unchanged => return Ok(equal_spaces(n, &p.basis, &q.basis)),
    };
    assert!(n <= 6, "nonzero reading is enumerated, n <= 6");
    let d = pack_tt(&BooleanFunction::delta(n));
    let mut lhs: Vec<u64> = big.span_packed().into_iter().filter(|&g| g != 0).collect();
    let nonzero: Vec<u64> = small.span_packed().into_iter().filter(|&g| g != 0).collect();
    let mut rhs: Vec<u64> = nonzero.iter().flat_map(|&g| [g, g ^ d]).filter(|&g| g != 0).collect();
    lhs.sort_unstable();
    rhs.sort_unstable();
    rhs.dedup();
    Ok(lhs == rhs)
}

/// `LDA(F) - 1 <= LDA(F^c) <= LDA(F) + 1` with LDA in the product sense.
/// `None` when either side has no annihilator.
pub fn lda_sandwich(pair: &ComplementPair) -> Option<bool> {
    let a = lda_product(&pair.f)?;
    let c = lda_product(&pair.fc)?;
    Some(c + 1 >= a && c <= a + 1)
}

/// The same sandwich for per-fiber LDA over a fixed `b`.
pub fn fiber_lda_sandwich(pair: &ComplementPair, b: u16) -> Option<bool> {
    let n = pair.f.n();
    let p = pair.f.preimage(b);
    let q = pair.fc.preimage(b);
    if p.is_empty() || q.is_empty() {
        return None;
    }
    let a = lda_of_set(&p, n).ok()?;
    let c = lda_of_set(&q, n).ok()?;
    Some(c + 1 >= a && c <= a + 1)
}

/// Result of dividing `G_F` by `G_{F^c}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorDivision {
    pub g_f: GenPoly,
    pub g_fc: GenPoly,
    pub quotient: crate::poly::Poly,
    pub divides: bool,
    /// Every generator row of `C(F^-1(b))` lies in `C((F^c)^-1(b))`, all `b`.
    pub preimage_codes_nested: bool,
}

pub fn complement_generator_division(f: &VectorialFunction) -> GeneratorDivision {
    let pair = complement_vectorial(f);
    let field = f.field();
    let g_f = generator_g_f(f);
    let g_fc = generator_g_f(&pair.fc);
    let (quotient, rem) = g_f.poly.div_rem(field, &g_fc.poly);
    let preimage_codes_nested = (0..1u32 << f.m()).all(|b| {
        let c = code_from_preimage(f, b as u16).code;
        let cc = code_from_preimage(&pair.fc, b as u16).code;
        c.generator_matrix().iter().all(|row| cc.contains(row))
    });
    GeneratorDivision {
        g_f,
        g_fc,
        quotient,
        divides: rem.is_zero(),
        preimage_codes_nested,
    }
}
