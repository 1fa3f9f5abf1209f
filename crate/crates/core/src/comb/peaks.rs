//! Peak statistics of vector compositions: the coordinate-run factorization,
//! the odd factorization, and the bijection between odd compositions and
//! admissible peak-set / color-word pairs.

use std::collections::BTreeSet;

use super::composition::VectorComposition;
use super::lpartite::LPartite;
use crate::error::Error;
use crate::Result;

/// The coordinate-run factorization statistic.
///
/// Every composition factors uniquely as `I = I_1 ... I_m` where each block
/// except the last is a (possibly empty) run of weight-one columns followed by
/// one column of weight at least two, and the last block is a possibly empty
/// run of weight-one columns. `lambda(I)` records the block sums (an empty
/// trailing run contributes no column).
pub fn lambda(i: &VectorComposition) -> VectorComposition {
    let level = i.level();
    let mut cols = Vec::new();
    let mut acc = LPartite::zero(level);
    let mut pending = false;
    for c in i.cols() {
        acc = acc.checked_add(c).expect("uniform level");
        pending = true;
        if c.weight() >= 2 {
            cols.push(std::mem::replace(&mut acc, LPartite::zero(level)));
            pending = false;
        }
    }
    if pending {
        cols.push(acc);
    }
    VectorComposition::new(level, cols).expect("nonzero block sums")
}

/// Peak positions of a composition: the descent positions of its
/// coordinate-run factorization.
pub fn pof(i: &VectorComposition) -> BTreeSet<usize> {
    lambda(i).dof()
}

/// Is `s` a peak set in `{2, ..., n-1}` (interior, no two adjacent)?
pub fn is_peak_set(s: &BTreeSet<usize>, n: usize) -> bool {
    let mut prev: Option<usize> = None;
    for &x in s {
        if x < 2 || x + 1 > n {
            return false;
        }
        if let Some(p) = prev {
            if x == p + 1 {
                return false;
            }
        }
        prev = Some(x);
    }
    true
}

/// The odd factorization statistic.
///
/// Requires the last column of `I` to have odd weight. Then `I` factors
/// uniquely into blocks whose final column has odd weight while the earlier
/// columns of each block have even weight; the result records the block sums.
/// The output is an odd composition (all columns of odd weight).
pub fn odd_part(i: &VectorComposition) -> Result<VectorComposition> {
    if let Some(last) = i.cols().last() {
        if last.weight() % 2 == 0 {
            return Err(Error::precondition(
                "odd factorization needs a final column of odd weight",
            ));
        }
    }
    let level = i.level();
    let mut cols = Vec::new();
    let mut acc = LPartite::zero(level);
    for c in i.cols() {
        acc = acc.checked_add(c).expect("uniform level");
        if c.weight() % 2 == 1 {
            cols.push(std::mem::replace(&mut acc, LPartite::zero(level)));
        }
    }
    debug_assert!(acc.is_zero());
    VectorComposition::new(level, cols)
}

/// Replace each column of an odd composition by columns of weight two and a
/// final column of weight one, preserving the coloring word.
pub fn tilde(i: &VectorComposition) -> Result<VectorComposition> {
    if i.cols().iter().any(|c| c.weight() % 2 == 0) {
        return Err(Error::precondition(
            "tilde is defined on odd compositions only",
        ));
    }
    let level = i.level();
    let mut cols = Vec::new();
    for c in i.cols() {
        let run = c.color_run();
        let mut pos = 0usize;
        while pos + 1 < run.len() {
            cols.push(LPartite::mdeg(level, &run[pos..pos + 2]));
            pos += 2;
        }
        cols.push(LPartite::mdeg(level, &run[pos..pos + 1]));
    }
    VectorComposition::new(level, cols)
}

/// The unique composition with columns of weight one or two, coloring word
/// `u`, and peak positions `s`: for each `p` in `s` the letters at positions
/// `p-1, p` share a column, all other letters sit alone.
pub fn comp_from_peaks(level: usize, s: &BTreeSet<usize>, u: &[u8]) -> Result<VectorComposition> {
    let n = u.len();
    if !is_peak_set(s, n) {
        return Err(Error::precondition(format!(
            "{s:?} is not a peak set for a word of length {n}"
        )));
    }
    if u.iter().any(|&c| c as usize >= level) {
        return Err(Error::precondition("color out of range for level"));
    }
    let mut cols = Vec::new();
    let mut pos = 1usize;
    while pos <= n {
        if s.contains(&(pos + 1)) {
            cols.push(LPartite::mdeg(level, &u[pos - 1..pos + 1]));
            pos += 2;
        } else {
            cols.push(LPartite::mdeg(level, &u[pos - 1..pos]));
            pos += 1;
        }
    }
    VectorComposition::new(level, cols)
}

/// A peak-set / color-word pair `(s, u)` is admissible when the odd
/// factorization of its weight-(1,2) composition has coloring word `u` again.
pub fn is_admissible(level: usize, s: &BTreeSet<usize>, u: &[u8]) -> Result<bool> {
    let i = comp_from_peaks(level, s, u)?;
    let o = odd_part(&i)?;
    Ok(o.cof() == u)
}
