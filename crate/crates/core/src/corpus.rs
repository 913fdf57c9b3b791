//! Reproducible function corpora with a manifest of reference values.
//!
//! Reference values are computed without the annihilator solver where
//! possible: for `n <= 4` every candidate annihilator is enumerated, for
//! `n = 5` the linear solve is restricted to degree at most 3, and minimum
//! distances at `n = 3` come from a search over all supports.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::annihil::has_annihilator;
use crate::codes::code_from_preimage;
use crate::error::{Error, Result};
use crate::field::{make_field, FieldElement};
use crate::funcrep::VectorialFunction;
use crate::io::{FunctionFile, Repr};
use crate::linalg::field_rank;
use crate::report::function_id;

/// Degree cap of the restricted solve used at `n = 5`.
pub const DEGREE_CAP_N5: u32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleKind {
    /// Every candidate annihilator enumerated.
    BruteForce,
    /// Linear solve restricted to degree at most [`DEGREE_CAP_N5`].
    DegreeBounded,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub file: String,
    pub function_id: String,
    /// `null` for constant functions or when no oracle ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ai: Option<u32>,
    /// Per output value; `null` for empty or total fibers, or beyond the cap.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lda_per_preimage: Option<Vec<Option<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lda_product: Option<Option<u32>>,
    /// Minimum distance of `C(F^-1(b))` per output value (`n = 3` only);
    /// `null` for empty fibers and zero codes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distances: Option<Vec<Option<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub n: u32,
    pub m: u32,
    pub count: usize,
    pub seed: u64,
    pub exhaustive: bool,
    pub oracle: OracleKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    pub entries: Vec<ManifestEntry>,
}

/// The functions of a corpus, in file order. When `count` reaches the number
/// of all `(n, m)`-functions they are listed exhaustively in index order
/// (table entry `x` is digit `x` of the index in base `2^m`); otherwise they
/// are drawn from ChaCha8 seeded with `seed`.
pub fn corpus_functions(n: u32, m: u32, count: usize, seed: u64) -> Result<(Vec<VectorialFunction>, bool)> {
    let field = make_field(n)?;
    if m == 0 || m > 16 {
        return Err(Error::DimensionMismatch(format!("output width {m} outside 1..=16")));
    }
    let size = 1usize << n;
    let total_bits = m as usize * size;
    if total_bits < 64 && count as u64 >= 1u64 << total_bits {
        let all = (0..1u64 << total_bits)
            .map(|idx| {
                VectorialFunction::from_fn(field.clone(), m, |x| {
                    ((idx >> (x * m as usize)) & ((1 << m) - 1)) as u16
                })
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok((all, true));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fs = (0..count)
        .map(|_| VectorialFunction::from_fn(field.clone(), m, |_| rng.gen_range(0..1u32 << m) as u16))
        .collect::<Result<Vec<_>>>()?;
    Ok((fs, false))
}

/// Algebraic degree of the Boolean function whose truth table is the low
/// `2^n` bits of `tt` (`n <= 6`), by an in-word Moebius transform.
pub fn packed_degree(tt: u64, n: u32) -> Option<u32> {
    const MASKS: [u64; 6] = [
        0x5555_5555_5555_5555,
        0x3333_3333_3333_3333,
        0x0f0f_0f0f_0f0f_0f0f,
        0x00ff_00ff_00ff_00ff,
        0x0000_ffff_0000_ffff,
        0x0000_0000_ffff_ffff,
    ];
    if tt == 0 {
        return None;
    }
    let mut a = tt;
    for (i, &mask) in MASKS.iter().enumerate().take(n as usize) {
        let s = 1u32 << i;
        a ^= (a & mask) << s;
    }
    let len = 1u32 << n;
    let a = if len == 64 { a } else { a & ((1u64 << len) - 1) };
    let mut best = 0;
    let mut bits = a;
    while bits != 0 {
        let u = bits.trailing_zeros();
        best = best.max(u.count_ones());
        bits &= bits - 1;
    }
    Some(best)
}

/// Lowest degree of a nonzero function vanishing on `points`, by trying
/// every function supported off `points` (`n <= 4`). `None` when `points`
/// is the whole space.
pub fn brute_lda(points: &[usize], n: u32) -> Option<u32> {
    assert!(n <= 4, "enumeration limited to n <= 4");
    let full: u64 = (1u64 << (1 << n)) - 1;
    let set = points.iter().fold(0u64, |acc, &x| acc | 1 << x);
    let free = full & !set;
    let mut best = None;
    let mut sub = free;
    while sub != 0 {
        let d = packed_degree(sub, n).expect("nonzero");
        best = Some(best.map_or(d, |b: u32| b.min(d)));
        sub = (sub - 1) & free;
    }
    best
}

/// LDA by a linear solve capped at degree `cap`; `None` when no annihilator
/// of degree at most `cap` exists.
pub fn capped_lda(points: &[usize], n: u32, cap: u32) -> Option<u32> {
    (0..=cap.min(n)).find(|&d| has_annihilator(points, d, n).unwrap_or(false))
}

/// Minimum distance of `C(F^-1(b))` by testing every support for a nonzero
/// codeword (`n <= 4`). `None` for the zero code.
pub fn support_distance(f: &VectorialFunction, b: u16) -> Option<usize> {
    let pc = code_from_preimage(f, b);
    let field = f.field();
    let len = field.order();
    assert!(len <= 15, "support search limited to n <= 4");
    let roots = pc.code.defining_set();
    let mut best: Option<usize> = None;
    for support in 1u32..1 << len {
        let w = support.count_ones() as usize;
        if best.is_some_and(|b| w >= b) {
            continue;
        }
        let positions: Vec<usize> = (0..len).filter(|&j| support >> j & 1 == 1).collect();
        // columns of the parity checks c(alpha^r) = 0 restricted to the support
        let rows: Vec<Vec<FieldElement>> = roots
            .iter()
            .map(|&r| positions.iter().map(|&j| field.alpha_pow((r * j) as i64)).collect())
            .collect();
        if field_rank(field, &rows) < w {
            best = Some(w);
        }
    }
    best
}

fn oracle_entry(f: &VectorialFunction, file: String) -> ManifestEntry {
    let n = f.n();
    let size = 1usize << n;
    let kind = oracle_kind(n);
    let lda = |pts: &[usize]| -> Option<u32> {
        if pts.is_empty() || pts.len() == size {
            return None;
        }
        match kind {
            OracleKind::BruteForce => brute_lda(pts, n),
            OracleKind::DegreeBounded => capped_lda(pts, n, DEGREE_CAP_N5),
            OracleKind::None => None,
        }
    };
    let mut entry = ManifestEntry {
        file,
        function_id: function_id(f),
        ai: None,
        lda_per_preimage: None,
        lda_product: None,
        distances: None,
    };
    if kind == OracleKind::None {
        return entry;
    }
    let per: Vec<Option<u32>> = f.preimages().iter().map(|p| lda(p)).collect();
    entry.ai = per.iter().flatten().min().copied();
    entry.lda_per_preimage = Some(per);
    let nz = f.nonzero_set();
    entry.lda_product = Some(match kind {
        OracleKind::BruteForce if nz.len() < size => brute_lda(&nz, n),
        OracleKind::DegreeBounded if nz.len() < size => capped_lda(&nz, n, n),
        _ => None,
    });
    if n == 3 {
        entry.distances = Some(
            (0..1u32 << f.m())
                .map(|b| {
                    if f.preimage(b as u16).is_empty() {
                        None
                    } else {
                        support_distance(f, b as u16)
                    }
                })
                .collect(),
        );
    }
    entry
}

fn oracle_kind(n: u32) -> OracleKind {
    match n {
        0..=4 => OracleKind::BruteForce,
        5 => OracleKind::DegreeBounded,
        _ => OracleKind::None,
    }
}

/// Builds the corpus in memory: function files (named `fNNNN.json`) and the
/// manifest.
pub fn build_corpus(n: u32, m: u32, count: usize, seed: u64) -> Result<(Vec<(String, FunctionFile)>, Manifest)> {
    let (fs, exhaustive) = corpus_functions(n, m, count, seed)?;
    let width = fs.len().saturating_sub(1).to_string().len().max(4);
    let names: Vec<String> = (0..fs.len()).map(|i| format!("f{i:0width$}.json")).collect();
    let items: Vec<(usize, &VectorialFunction)> = fs.iter().enumerate().collect();
    let entries = crate::report::par_map(&items, |&(i, f)| oracle_entry(f, names[i].clone()));
    let files = fs
        .iter()
        .zip(&names)
        .map(|(f, name)| Ok((name.clone(), FunctionFile::from_function(f, Repr::Tt)?)))
        .collect::<Result<Vec<_>>>()?;
    let oracle = oracle_kind(n);
    let mut warnings = Vec::new();
    if oracle == OracleKind::None {
        warnings.push(format!("n = {n} is too large for reference values; oracle fields omitted (limit n <= 5)"));
    }
    Ok((
        files,
        Manifest {
            n,
            m,
            count: fs.len(),
            seed,
            exhaustive,
            oracle,
            warnings,
            entries,
        },
    ))
}

/// Writes the corpus files and `manifest.json` into `dir`.
pub fn write_corpus(dir: &Path, n: u32, m: u32, count: usize, seed: u64) -> Result<Manifest> {
    let (files, manifest) = build_corpus(n, m, count, seed)?;
    std::fs::create_dir_all(dir)?;
    for (name, file) in &files {
        std::fs::write(dir.join(name), file.to_json() + "\n")?;
    }
    let text = serde_json::to_string_pretty(&manifest).expect("manifests serialize");
    std::fs::write(dir.join("manifest.json"), text + "\n")?;
    Ok(manifest)
}
