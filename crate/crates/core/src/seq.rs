//! Filter-generator keystreams `z_t = F(x alpha^t)`, Berlekamp–Massey over
//! GF(2), annihilating sequences and spectral immunity.

use serde::Serialize;

use crate::codes::{distance, generator_g_f, min_distance, CyclicCode, Distance};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::funcrep::{bits_to_hex, BooleanFunction, VectorialFunction};
use crate::annihil::annihilator_basis;

/// An LFSR state `x` filtered through `F`.
#[derive(Clone, Debug)]
pub struct FilterGenerator {
    f: VectorialFunction,
    state: FieldElement,
}

impl FilterGenerator {
    pub fn new(f: VectorialFunction, state: FieldElement) -> Result<FilterGenerator> {
        if state.is_zero() {
            return Err(Error::DegenerateOrbit);
        }
        Ok(FilterGenerator { f, state })
    }

    pub fn function(&self) -> &VectorialFunction {
        &self.f
    }

    pub fn state(&self) -> FieldElement {
        self.state
    }

    /// The orbit point `x alpha^t`.
    pub fn point(&self, t: usize) -> FieldElement {
        let field = self.f.field();
        field.mul(self.state, field.alpha_pow(t as i64))
    }

    /// The first `len` symbols.
    pub fn keystream(&self, len: usize) -> Vec<u16> {
        (0..len).map(|t| self.f.eval(self.point(t).bits() as usize)).collect()
    }

    /// Least period of the keystream; divides `2^n - 1`.
    pub fn period(&self) -> usize {
        let order = self.f.field().order();
        let one = self.keystream(order);
        divisors(order)
            .into_iter()
            .find(|&p| (0..order).all(|t| one[t] == one[(t + p) % order]))
            .unwrap_or(order)
    }

    /// `u_t = g(x alpha^t)` for an annihilator `g` of `F` in the product
    /// sense. Fails at the first `t < len` where `u_t z_t != 0`.
    pub fn annihilating_sequence(
        &self,
        g: &BooleanFunction,
        len: usize,
    ) -> Result<AnnihilatingSequence> {
        let bits: Vec<u8> = (0..len)
            .map(|t| g.eval(self.point(t).bits() as usize) as u8)
            .collect();
        let z = self.keystream(len);
        if let Some(t) = (0..len).find(|&t| bits[t] == 1 && z[t] != 0) {
            return Err(Error::NotAnnihilator(t));
        }
        let zero = bits.iter().all(|&b| b == 0);
        Ok(AnnihilatingSequence { bits, zero })
    }
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Alias for [`FilterGenerator::annihilating_sequence`].
pub fn sequence_annihilator_from_function(
    g: &BooleanFunction,
    gen: &FilterGenerator,
    len: usize,
) -> Result<AnnihilatingSequence> {
    gen.annihilating_sequence(g, len)
}

/// A binary sequence `u` with `u_t z_t = 0` over the window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatingSequence {
    pub bits: Vec<u8>,
    /// Set when `u` is identically zero on the window (e.g. `g = Delta`).
    pub zero: bool,
}

/// Shortest LFSR `s_i = sum_{j=1}^{L} c_j s_{i-j}` generating a window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lfsr {
    pub lc: usize,
    /// Connection polynomial `1 + c_1 x + ... + c_L x^L`, bit `j` = `c_j`.
    #[serde(skip)]
    pub poly: Vec<u8>,
    pub poly_bits: String,
}

impl Lfsr {
    /// Whether the recurrence reproduces the window from its first `L` bits.
    pub fn regenerates(&self, s: &[u8]) -> bool {
        (self.lc..s.len()).all(|i| {
            let v = (1..=self.lc).fold(0u8, |acc, j| acc ^ (self.poly[j] & s[i - j]));
            v == s[i]
        })
    }

    /// Extends a seed of length `L` to `len` symbols.
    pub fn generate(&self, seed: &[u8], len: usize) -> Vec<u8> {
        let mut out = seed[..self.lc.min(seed.len())].to_vec();
        while out.len() < len {
            let i = out.len();
            out.push((1..=self.lc).fold(0u8, |acc, j| acc ^ (self.poly[j] & out[i - j])));
        }
        out.truncate(len);
        out
    }
}

/// Berlekamp–Massey over GF(2).
pub fn berlekamp_massey(s: &[u8]) -> Lfsr {
    let n = s.len();
    let mut c = vec![0u8; n + 1];
    let mut b = vec![0u8; n + 1];
    c[0] = 1;
    b[0] = 1;
    let mut l = 0usize;
    let mut m = 1usize;
    for i in 0..n {
        let d = (1..=l).fold(s[i] & 1, |acc, j| acc ^ (c[j] & s[i - j]));
        if d == 0 {
            m += 1;
            continue;
        }
        let t = c.clone();
        for j in 0..=n - m {
            c[j + m] ^= b[j];
        }
        if 2 * l <= i {
            l = i + 1 - l;
            b = t;
            m = 1;
        } else {
            m += 1;
        }
    }
    c.truncate(l + 1);
    let poly_bits = bits_to_hex(&c);
    Lfsr {
        lc: l,
        poly: c,
        poly_bits,
    }
}

/// Number of nonzero coefficients of `g`'s univariate form reduced modulo
/// `x^N + 1` (exponents `0` and `N` merged); the linear complexity of any
/// full-period sequence `g(x alpha^t)`.
pub fn folded_weight(g: &BooleanFunction, field: &crate::field::Field) -> Result<usize> {
    let uni = g.univariate(field)?;
    let order = field.order();
    let mut folded = uni[..order].to_vec();
    folded[0] += uni[order];
    Ok(folded.iter().filter(|c| !c.is_zero()).count())
}

/// Spectral immunity: the minimum weight of the code generated by `G_F`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralImmunity {
    pub value: Distance,
    /// Set when `G_F = x^N + 1` and the code has no nonzero word.
    pub zero_code: bool,
}

pub fn spectral_immunity(f: &VectorialFunction, budget: u64) -> SpectralImmunity {
    let code = CyclicCode::new(f.field().clone(), generator_g_f(f));
    let value = min_distance(&code, budget).min_distance;
    SpectralImmunity {
        zero_code: value == Distance::ZeroCode,
        value,
    }
}

/// Faster variant without the weight distribution.
pub fn spectral_immunity_fast(f: &VectorialFunction, budget: u64) -> SpectralImmunity {
    let code = CyclicCode::new(f.field().clone(), generator_g_f(f));
    let value = distance(&code, budget);
    SpectralImmunity {
        zero_code: value == Distance::ZeroCode,
        value,
    }
}

/// Minimum linear complexity of a nonzero annihilating sequence `g(x alpha^t)`
/// over all Boolean product annihilators `g` of `F`, by enumerating the full
/// annihilator space (`n <= 6`, at most 2^20 functions). `None` when every
/// annihilator vanishes on the whole orbit.
pub fn min_annihilator_complexity(f: &VectorialFunction) -> Result<Option<usize>> {
    let n = f.n();
    let field = f.field();
    let basis = annihilator_basis(&f.nonzero_set(), n, n)?;
    if basis.dimension() > 20 {
        return Err(Error::DimensionMismatch(format!(
            "annihilator space of dimension {} too large to enumerate",
            basis.dimension()
        )));
    }
    let mut best: Option<usize> = None;
    for packed in basis.span_packed() {
        // the orbit avoids 0, so only the nonzero points matter
        if packed & !1 == 0 {
            continue;
        }
        let g = BooleanFunction::from_bits(n, packed);
        let w = folded_weight(&g, field)?;
        best = Some(best.map_or(w, |b| b.min(w)));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annihil::lda_product;
    use crate::field::make_field;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Shortest recurrence by trying every connection polynomial.
    fn naive_lc(s: &[u8]) -> usize {
        for l in 0..=s.len() {
            for c in 0..1u32 << l {
                let ok = (l..s.len()).all(|i| {
                    (1..=l).fold(0u8, |acc, j| acc ^ (((c >> (j - 1)) & 1) as u8 & s[i - j])) == s[i]
                });
                if ok {
                    return l;
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn bm_examples() {
        assert_eq!(berlekamp_massey(&[0; 10]).lc, 0);
        // s_{t+3} = s_{t+1} + s_t
        let mut s = vec![1u8, 0, 0];
        while s.len() < 14 {
            let i = s.len();
            s.push(s[i - 2] ^ s[i - 3]);
        }
        let l = berlekamp_massey(&s);
        assert_eq!(l.lc, 3);
        assert_eq!(l.poly, vec![1, 0, 1, 1]);
        assert!(l.regenerates(&s));
        let impulse = [1u8, 0, 0, 0, 0, 0];
        assert_eq!(berlekamp_massey(&impulse).lc, naive_lc(&impulse));
    }

    #[test]
    fn bm_matches_naive_up_to_length_8() {
        for len in 1..=8 {
            for bits in 0..1u32 << len {
                let s: Vec<u8> = (0..len).map(|i| ((bits >> i) & 1) as u8).collect();
                let l = berlekamp_massey(&s);
                assert_eq!(l.lc, naive_lc(&s), "{s:?}");
                assert!(l.regenerates(&s));
                assert_eq!(l.generate(&s, len), s);
            }
        }
    }

    #[test]
    fn keystream_examples() {
        let field = make_field(3).unwrap();
        let c = VectorialFunction::from_fn(field.clone(), 2, |_| 3).unwrap();
        let g = FilterGenerator::new(c, FieldElement::ONE).unwrap();
        assert_eq!(g.keystream(5), vec![3; 5]);
        assert_eq!(g.period(), 1);

        let id = VectorialFunction::identity(field.clone());
        let g = FilterGenerator::new(id, field.elem(3)).unwrap();
        assert_eq!(g.period(), 7);

        let tr = BooleanFunction::from_fn(3, |x| field.abs_trace(field.pow(field.elem(x), 3)) == 1);
        let v = VectorialFunction::from_boolean(field.clone(), &tr).unwrap();
        let g = FilterGenerator::new(v, FieldElement::ONE).unwrap();
        let z = g.keystream(7);
        for (t, &zt) in z.iter().enumerate() {
            assert_eq!(zt, tr.eval(field.alpha_pow(t as i64).bits() as usize) as u16);
        }
        assert_eq!(7 % g.period(), 0);
        assert!(FilterGenerator::new(
            VectorialFunction::identity(field),
            FieldElement::ZERO
        )
        .is_err());
    }

    #[test]
    fn annihilating_sequences() {
        let field = make_field(3).unwrap();
        let f = BooleanFunction::indicator(3, &[1, 2, 4]);
        let v = VectorialFunction::from_boolean(field.clone(), &f).unwrap();
        let gen = FilterGenerator::new(v, FieldElement::ONE).unwrap();
        let delta = BooleanFunction::delta(3);
        let u = gen.annihilating_sequence(&delta, 14).unwrap();
        assert!(u.zero);
        let g = f.negate();
        let u = gen.annihilating_sequence(&g, 14).unwrap();
        assert!(!u.zero);
        let z = gen.keystream(14);
        assert!(u.bits.iter().zip(&z).all(|(&a, &b)| a == 0 || b == 0));
        assert_eq!(
            gen.annihilating_sequence(&BooleanFunction::one(3), 14),
            Err(Error::NotAnnihilator(0))
        );
    }

    #[test]
    fn sequence_complexity_equals_folded_weight_n3() {
        let field = make_field(3).unwrap();
        for bits in 0..256u64 {
            let g = BooleanFunction::from_bits(3, bits);
            for x in 1..8 {
                let gen = FilterGenerator::new(
                    VectorialFunction::from_fn(field.clone(), 1, |_| 0).unwrap(),
                    field.elem(x),
                )
                .unwrap();
                let u = gen.annihilating_sequence(&g, 14).unwrap();
                assert_eq!(berlekamp_massey(&u.bits).lc, folded_weight(&g, &field).unwrap());
            }
        }
    }

    #[test]
    fn si_examples_and_bound() {
        let field = make_field(3).unwrap();
        let zero = VectorialFunction::from_fn(field.clone(), 1, |_| 0).unwrap();
        assert_eq!(spectral_immunity(&zero, 1 << 24).value.exact(), Some(1));
        let id = VectorialFunction::identity(field.clone());
        assert!(spectral_immunity(&id, 1 << 24).zero_code);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let f = BooleanFunction::from_fn(3, |_| rng.gen());
            let v = VectorialFunction::from_boolean(field.clone(), &f).unwrap();
            let si = spectral_immunity(&v, 1 << 24);
            if si.zero_code {
                continue;
            }
            let lda = lda_product(&v).unwrap();
            let bound: u64 = (0..=lda as u64).map(|i| crate::codes::binomial(3, i)).sum();
            assert!(si.value.exact().unwrap() as u64 <= bound);
            assert_eq!(si.value.exact(), spectral_immunity_fast(&v, 1 << 24).value.exact());
        }
    }

    #[test]
    fn code_minimum_can_beat_boolean_annihilators() {
        // f = indicator of {1}: G_F = x + 1 has the weight-2 word x + 1, but
        // Boolean univariate supports are unions of cyclotomic cosets.
        let field = make_field(3).unwrap();
        let f = BooleanFunction::indicator(3, &[1]);
        let v = VectorialFunction::from_boolean(field, &f).unwrap();
        assert_eq!(spectral_immunity(&v, 1 << 24).value.exact(), Some(2));
        assert_eq!(min_annihilator_complexity(&v).unwrap(), Some(3));
    }
}
