//! Univariate polynomials over GF(2^n), coefficients stored low degree first.

use crate::field::{Field, FieldElement};

/// A polynomial over GF(2^n). The zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(FieldElement::ONE)
    }

    pub fn constant(c: FieldElement) -> Poly {
        Poly::new(vec![c])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Poly {
        let mut c = vec![FieldElement::ZERO; k + 1];
        c[k] = FieldElement::ONE;
        Poly { coeffs: c }
    }

    /// `x^k + 1`.
    pub fn x_pow_plus_one(k: usize) -> Poly {
        let mut p = Poly::monomial(k);
        p.coeffs[0] += FieldElement::ONE;
        Poly::new(p.coeffs)
    }

    /// `x - r`, which in characteristic 2 is `x + r`.
    pub fn linear(r: FieldElement) -> Poly {
        Poly::new(vec![r, FieldElement::ONE])
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or_default()
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn scale(&self, field: &Field, c: FieldElement) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    pub fn mul(&self, field: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += field.mul(a, b);
            }
        }
        Poly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, field: &Field, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = field.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![FieldElement::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c.is_zero() {
                continue;
            }
            let q = field.mul(c, lead_inv);
            quot[i - dd] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] += field.mul(q, d);
            }
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Scales to a monic polynomial (zero stays zero).
    pub fn monic(&self, field: &Field) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = field.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(field, inv)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, field: &Field, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(field, &b);
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// Horner evaluation.
    pub fn eval(&self, field: &Field, x: FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| field.mul(acc, x) + c)
    }

    /// `x^deg * p(1/x)`: the coefficient sequence reversed.
    pub fn reciprocal(&self) -> Poly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Poly::new(c)
    }

    /// Product of `(x - r)` over the given roots.
    pub fn from_roots<I: IntoIterator<Item = FieldElement>>(field: &Field, roots: I) -> Poly {
        let mut p = Poly::one();
        for r in roots {
            p = p.mul(field, &Poly::linear(r));
        }
        p
    }

    /// Coefficients as lowercase hex field elements.
    pub fn to_hex(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| format!("{:x}", c.0)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn division_identity() {
        let f = make_field(4).unwrap();
        let a = Poly::new((0..9).map(|i| f.alpha_pow(i * 3)).collect());
        let b = Poly::new(vec![f.alpha(), FieldElement::ZERO, FieldElement(5), FieldElement::ONE]);
        let (q, r) = a.div_rem(&f, &b);
        assert_eq!(q.mul(&f, &b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 3);
    }

    #[test]
    fn x_n_minus_one_splits_over_units() {
        let f = make_field(3).unwrap();
        let all = Poly::from_roots(&f, f.elements().skip(1));
        assert_eq!(all, Poly::x_pow_plus_one(7));
    }

    #[test]
    fn gcd_is_product_of_common_roots() {
        let f = make_field(3).unwrap();
        let a = Poly::from_roots(&f, [f.alpha_pow(1), f.alpha_pow(2), f.alpha_pow(5)]);
        let b = Poly::from_roots(&f, [f.alpha_pow(2), f.alpha_pow(5), f.alpha_pow(6)]);
        let g = a.gcd(&f, &b);
        assert_eq!(g, Poly::from_roots(&f, [f.alpha_pow(2), f.alpha_pow(5)]));
    }

    #[test]
    fn eval_and_reciprocal() {
        let f = make_field(3).unwrap();
        let p = Poly::linear(f.alpha());
        assert!(p.eval(&f, f.alpha()).is_zero());
        // reciprocal of x + a is a x + 1, with root a^-1
        let r = p.reciprocal();
        assert!(r.eval(&f, f.inv(f.alpha()).unwrap()).is_zero());
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::new(vec![FieldElement::ZERO]).degree(), None);
    }
}
