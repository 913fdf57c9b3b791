//! Annihilator spaces and algebraic immunity by row reduction over GF(2).
//!
//! An annihilator of a point set `S` is a nonzero Boolean function vanishing
//! on `S`. Annihilators of degree at most `d` form the kernel of the
//! evaluation matrix whose rows are the points of `S` and whose columns are
//! the monomials `x^u` with `wt(u) <= d`, ordered by `u`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::funcrep::{bits_to_hex, BooleanFunction, VectorialFunction};
use crate::linalg::BitMatrix;

/// Monomial indices `u` with `wt(u) <= d`, ascending.
pub fn monomials_up_to(n: u32, d: u32) -> Vec<usize> {
    (0..1usize << n).filter(|u| u.count_ones() <= d).collect()
}

fn evaluation_matrix(points: &[usize], monomials: &[usize]) -> BitMatrix {
    let mut m = BitMatrix::new(monomials.len());
    for &x in points {
        // x^u = 1 iff u is a sub-mask of x
        m.push_row_from(
            monomials
                .iter()
                .enumerate()
                .filter(|(_, &u)| u & x == u)
                .map(|(c, _)| c),
        );
    }
    m
}

fn check_points(points: &[usize], n: u32) -> Result<Vec<usize>> {
    let size = 1usize << n;
    if let Some(&p) = points.iter().find(|&&p| p >= size) {
        return Err(Error::DimensionMismatch(format!("point {p:#x} outside F_2^{n}")));
    }
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    Ok(pts)
}

/// Basis of the annihilators of a set with degree at most `degree_bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorBasis {
    pub n: u32,
    pub degree_bound: u32,
    pub basis: Vec<BooleanFunction>,
}

impl AnnihilatorBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Lowest degree among basis elements. This is not in general the lowest
    /// degree in the span; use [`lda_of_set`] for that.
    pub fn min_basis_degree(&self) -> Option<u32> {
        self.basis.iter().map(BooleanFunction::degree).min()
    }

    /// Every element of the span, zero included, as packed truth tables
    /// (`n <= 6`). Panics when the span has more than 2^24 elements.
    pub fn span_packed(&self) -> Vec<u64> {
        assert!(self.n <= 6, "packed truth tables hold at most 64 points");
        assert!(self.basis.len() <= 24, "span too large to enumerate");
        let packed: Vec<u64> = self.basis.iter().map(pack_tt).collect();
        let mut out = Vec::with_capacity(1 << packed.len());
        out.push(0u64);
        for p in packed {
            let len = out.len();
            for i in 0..len {
                out.push(out[i] ^ p);
            }
        }
        out
    }

    pub fn to_json(&self) -> AnnihilatorBasisJson {
        AnnihilatorBasisJson {
            degree_bound: self.degree_bound,
            dimension: self.dimension(),
            basis_anf: self.basis.iter().map(|g| bits_to_hex(g.anf())).collect(),
        }
    }
}

/// Truth table of a function on at most 6 variables packed into a `u64`.
pub fn pack_tt(f: &BooleanFunction) -> u64 {
    f.tt()
        .iter()
        .enumerate()
        .fold(0u64, |acc, (x, &b)| acc | ((b as u64) << x))
}

/// Serialized form of an [`AnnihilatorBasis`]: ANF hex strings.
#[derive(Clone, Debug, Serialize)]
pub struct AnnihilatorBasisJson {
    pub degree_bound: u32,
    pub dimension: usize,
    pub basis_anf: Vec<String>,
}

/// Basis of `{g : deg g <= d, g(x) = 0 for x in points}` (zero excluded from
/// the basis, so it may be empty).
pub fn annihilator_basis(points: &[usize], d: u32, n: u32) -> Result<AnnihilatorBasis> {
    if d > n {
        return Err(Error::DimensionMismatch(format!("degree bound {d} exceeds n = {n}")));
    }
    let pts = check_points(points, n)?;
    let monomials = monomials_up_to(n, d);
    let kernel = evaluation_matrix(&pts, &monomials).kernel();
    let basis = kernel
        .into_iter()
        .map(|cols| {
            let mut anf = vec![0u8; 1 << n];
            for c in cols {
                anf[monomials[c]] = 1;
            }
            BooleanFunction::from_anf(anf).expect("power-of-two length")
        })
        .collect();
    Ok(AnnihilatorBasis {
        n,
        degree_bound: d,
        basis,
    })
}

/// Whether some nonzero function of degree `<= d` vanishes on the points.
pub fn has_annihilator(points: &[usize], d: u32, n: u32) -> Result<bool> {
    let pts = check_points(points, n)?;
    let monomials = monomials_up_to(n, d.min(n));
    Ok(evaluation_matrix(&pts, &monomials).rank() < monomials.len())
}

/// Lowest degree of a nonzero annihilator of the set.
pub fn lda_of_set(points: &[usize], n: u32) -> Result<u32> {
    let pts = check_points(points, n)?;
    if pts.len() == 1usize << n {
        return Err(Error::NoAnnihilator);
    }
    for d in 0..=n {
        if has_annihilator(&pts, d, n)? {
            return Ok(d);
        }
    }
    unreachable!("a proper subset is annihilated by the indicator of a missing point")
}

/// Algebraic immunity of a vectorial function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraicImmunity {
    /// Minimum over nonempty proper preimages; 0 when `degenerate`.
    pub value: u32,
    /// Set for constant functions, where no preimage is a proper subset.
    pub degenerate: bool,
    /// An output value `b` attaining the minimum.
    pub witness: Option<u16>,
    /// `LDA(F^{-1}(b))` for every `b`; `None` for empty or total preimages.
    pub per_preimage: Vec<Option<u32>>,
}

/// `min_b LDA(F^{-1}(b))` over the nonempty preimages.
///
/// Empty preimages are skipped. A constant function has a single preimage
/// equal to the whole space and is reported as degenerate with value 0.
pub fn ai_vectorial(f: &VectorialFunction) -> AlgebraicImmunity {
    let n = f.n();
    let per_preimage: Vec<Option<u32>> = f
        .preimages()
        .iter()
        .map(|pre| {
            if pre.is_empty() {
                None
            } else {
                lda_of_set(pre, n).ok()
            }
        })
        .collect();
    let best = per_preimage
        .iter()
        .enumerate()
        .filter_map(|(b, v)| v.map(|v| (v, b as u16)))
        .min();
    match best {
        Some((value, b)) => AlgebraicImmunity {
            value,
            degenerate: false,
            witness: Some(b),
            per_preimage,
        },
        None => AlgebraicImmunity {
            value: 0,
            degenerate: true,
            witness: None,
            per_preimage,
        },
    }
}

/// Classical AI of a Boolean function: `min(LDA(supp f), LDA(supp(1+f)))`.
pub fn ai_boolean(f: &BooleanFunction) -> Option<u32> {
    let sup = f.support();
    let zeros = f.negate().support();
    let n = f.n();
    [sup, zeros]
        .iter()
        .filter(|s| !s.is_empty())
        .filter_map(|s| lda_of_set(s, n).ok())
        .min()
}

/// Annihilators in the product sense, `g(x) F(x) = 0` for all `x`, i.e. the
/// annihilators of `{x : F(x) != 0}`. The basis is empty when `F` vanishes
/// nowhere and `d = n` has no room left.
pub fn product_annihilators(f: &VectorialFunction, d: u32) -> Result<AnnihilatorBasis> {
    annihilator_basis(&f.nonzero_set(), d, f.n())
}

/// Lowest degree of a product annihilator; `None` when `F` vanishes nowhere.
pub fn lda_product(f: &VectorialFunction) -> Option<u32> {
    lda_of_set(&f.nonzero_set(), f.n()).ok()
}
