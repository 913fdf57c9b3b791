//! Binomial-sum bounds on annihilator degrees, each with its certificate.

use serde::Serialize;

use crate::codes::{binomial, ht_bound, HtCoprime};
use crate::error::{Error, Result};

/// `sum_{i=lo}^{hi} C(n, i)`.
pub fn binomial_sum(n: u32, lo: u32, hi: u32) -> u64 {
    (lo..=hi.min(n)).map(|i| binomial(n as u64, i as u64)).sum()
}

/// Reading of the distance-to-degree bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Thm12Convention {
    /// Smallest `e >= 0` with `sum_{i=0}^{e} C(n,i) >= delta`.
    Strict,
    /// Smallest `e >= 1` with `sum_{i=1}^{e} C(n,i) >= delta`.
    Weak,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    LdaLower,
    LdaComplementLower,
    AiUpper,
    AiLowerCorollary,
}

/// The data a bound was derived from.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Certificate {
    /// Minimum distance, or `t + 1` for a run of `t` consecutive roots.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    /// The binomial-sum threshold that `e` had to reach.
    pub threshold: u64,
    /// First summation index (0 or 1).
    pub sum_from: u32,
    pub e: u32,
    /// `(l, step, t, k)` of the root pattern, when one was used.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pattern: Option<(usize, usize, usize, usize)>,
}

/// A bound together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub value: i64,
    pub certificate: Certificate,
    pub convention_flags: Vec<String>,
    /// False when a structural hypothesis of the bound was checked and fails.
    pub hypotheses_hold: bool,
}

impl BoundReport {
    /// Recomputes `e` from the certificate.
    pub fn certificate_consistent(&self, n: u32) -> bool {
        let c = &self.certificate;
        smallest_e(n, c.sum_from, c.threshold) == c.e
    }
}

/// Smallest `e >= from` with `sum_{i=from}^{e} C(n,i) >= threshold`;
/// `n + 1` when no such `e <= n` exists.
fn smallest_e(n: u32, from: u32, threshold: u64) -> u32 {
    (from..=n)
        .find(|&e| binomial_sum(n, from, e) >= threshold)
        .unwrap_or(n + 1)
}

/// Lower bound on the annihilator degree from the minimum distance `delta`
/// of the attached code.
pub fn lda_lower_from_distance(delta: u64, n: u32, conv: Thm12Convention) -> Result<BoundReport> {
    if delta == 0 || delta > 1u64 << n {
        return Err(Error::ImpossibleDistance { delta, n });
    }
    let from = match conv {
        Thm12Convention::Strict => 0,
        Thm12Convention::Weak => 1,
    };
    let e = smallest_e(n, from, delta);
    Ok(BoundReport {
        kind: BoundKind::LdaLower,
        value: e as i64,
        certificate: Certificate {
            delta: Some(delta),
            threshold: delta,
            sum_from: from,
            e,
            ..Certificate::default()
        },
        convention_flags: vec![format!("thm12={}", conv_name(conv))],
        hypotheses_hold: true,
    })
}

/// Largest `e'` with `sum_{i=0}^{e'} C(n,i) < delta`: no annihilator of
/// degree at most `e'` exists. `None` when `delta <= 1`.
pub fn no_annihilator_up_to(delta: u64, n: u32) -> Option<u32> {
    (0..=n).rev().find(|&e| binomial_sum(n, 0, e) < delta)
}

fn conv_name(c: Thm12Convention) -> &'static str {
    match c {
        Thm12Convention::Strict => "strict",
        Thm12Convention::Weak => "weak",
    }
}

fn ht_name(c: HtCoprime) -> &'static str {
    match c {
        HtCoprime::Order => "order",
        HtCoprime::Degree => "n",
    }
}

/// Bound from runs of consecutive roots `alpha^l, ..., alpha^{l+delta-2}`
/// repeated with step `m'` (`k + 1` runs) inside the defining set `D` of
/// `C(supp f)`.
///
/// Without `for_complemented`: `LDA(f) >= e` with `e` the smallest positive
/// integer such that `sum_{i=1}^{e} C(n,i) >= delta + k`.
///
/// With `for_complemented`: `LDA(1+f) >= e - 1` with threshold
/// `2^n - delta + k`. Its hypothesis, that the nonzero zeros of `f` contain
/// the runs of length `2^n - delta` starting at `l + i m' + delta - 1`, is
/// checked against `D` and reported in `hypotheses_hold`.
///
/// Returns `None` when `D` is empty.
pub fn consecutive_zero_bound(
    defining: &[usize],
    n: u32,
    for_complemented: bool,
    coprime: HtCoprime,
) -> Option<BoundReport> {
    consecutive_zero_bound_with(defining, n, for_complemented, coprime, Thm12Convention::Weak)
}

/// As [`consecutive_zero_bound`], with the summation start of the
/// uncomplemented bound chosen by `conv`: `Weak` sums from `i = 1` as stated,
/// `Strict` sums from `i = 0`, which follows from the distance bound
/// `delta + k` and [`lda_lower_from_distance`]. The complemented bound always
/// sums from 1.
pub fn consecutive_zero_bound_with(
    defining: &[usize],
    n: u32,
    for_complemented: bool,
    coprime: HtCoprime,
    conv: Thm12Convention,
) -> Option<BoundReport> {
    let ht = ht_bound(defining, n, coprime);
    if ht.value == 0 {
        return None;
    }
    let order = (1usize << n) - 1;
    let delta = ht.t as u64 + 1;
    let k = ht.k as u64;
    let pattern = Some((ht.r, ht.step, ht.t, ht.k));
    let mut flags = vec![format!("ht_coprime={}", ht_name(coprime))];
    if !for_complemented {
        let from = match conv {
            Thm12Convention::Strict => 0,
            Thm12Convention::Weak => 1,
        };
        flags.push(format!("thm12={}", conv_name(conv)));
        let threshold = delta + k;
        let e = smallest_e(n, from, threshold);
        return Some(BoundReport {
            kind: BoundKind::LdaLower,
            value: e as i64,
            certificate: Certificate {
                delta: Some(delta),
                k: Some(k),
                threshold,
                sum_from: from,
                e,
                pattern,
            },
            convention_flags: flags,
            hypotheses_hold: true,
        });
    }
    let mut in_d = vec![false; order];
    for &e in defining {
        in_d[e % order] = true;
    }
    let run_len = (1usize << n) - delta as usize;
    let hypotheses_hold = (0..=ht.k).all(|i| {
        let start = ht.r + i * ht.step + delta as usize - 1;
        (0..run_len).all(|j| !in_d[(start + j) % order])
    });
    let threshold = (1u64 << n) - delta + k;
    let e = smallest_e(n, 1, threshold);
    Some(BoundReport {
        kind: BoundKind::LdaComplementLower,
        value: e as i64 - 1,
        certificate: Certificate {
            delta: Some(delta),
            k: Some(k),
            threshold,
            sum_from: 1,
            e,
            pattern,
        },
        convention_flags: flags,
        hypotheses_hold,
    })
}

/// `AI(f) >= e - 1` with threshold `min(delta + k, 2^n - delta + k)`, from
/// the same root pattern. `hypotheses_hold` carries the complemented
/// bound's support check.
pub fn ai_lower_corollary(defining: &[usize], n: u32, coprime: HtCoprime) -> Option<BoundReport> {
    let comp = consecutive_zero_bound(defining, n, true, coprime)?;
    let c = &comp.certificate;
    let delta = c.delta.unwrap();
    let k = c.k.unwrap();
    let threshold = (delta + k).min((1u64 << n) - delta + k);
    let e = smallest_e(n, 1, threshold);
    Some(BoundReport {
        kind: BoundKind::AiLowerCorollary,
        value: e as i64 - 1,
        certificate: Certificate {
            threshold,
            e,
            ..c.clone()
        },
        convention_flags: comp.convention_flags.clone(),
        hypotheses_hold: comp.hypotheses_hold,
    })
}

/// Smallest `d` with `sum_{i=0}^{d} C(n,i) > 2^(n-m)`.
pub fn ai_upper(n: u32, m: u32) -> BoundReport {
    let threshold = (1u64 << (n - m.min(n))) + 1;
    let e = smallest_e(n, 0, threshold);
    BoundReport {
        kind: BoundKind::AiUpper,
        value: e as i64,
        certificate: Certificate {
            threshold,
            sum_from: 0,
            e,
            ..Certificate::default()
        },
        convention_flags: vec![],
        hypotheses_hold: true,
    }
}

/// Smallest `d` with `sum_{i=0}^{d} C(n,i) > s`: any set of `s` points has
/// an annihilator of degree at most `d`.
pub fn ai_upper_for_fiber(n: u32, s: u64) -> u32 {
    smallest_e(n, 0, s + 1)
}

/// The claim that a code of minimum distance `delta` whose `e` (strict) is 1
/// has all nonzero weights at least `n + 1`. `None` when `e != 1`.
pub fn nonzero_weight_claim(n: u32, delta: u64) -> Option<bool> {
    (smallest_e(n, 0, delta) == 1).then_some(delta > n as u64)
}
