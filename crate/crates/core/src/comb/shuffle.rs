use std::collections::BTreeMap;

use super::composition::VectorComposition;
use super::lpartite::LPartite;
use crate::error::Error;
use crate::Result;

/// Multiset of quasi-shuffles of two vector compositions: interleavings in
/// which two columns passing one another may also be merged into their sum.
/// Values are multiplicities.
pub fn quasi_shuffles(
    a: &VectorComposition,
    b: &VectorComposition,
) -> Result<BTreeMap<VectorComposition, u64>> {
    if a.level() != b.level() {
        return Err(Error::LevelMismatch(a.level(), b.level()));
    }
    let mut out = BTreeMap::new();
    rec(
        a.level(),
        a.cols(),
        b.cols(),
        true,
        &mut Vec::new(),
        &mut out,
    );
    Ok(out)
}

/// Multiset of plain shuffles (interleavings without merging).
pub fn shuffles(
    a: &VectorComposition,
    b: &VectorComposition,
) -> Result<BTreeMap<VectorComposition, u64>> {
    if a.level() != b.level() {
        return Err(Error::LevelMismatch(a.level(), b.level()));
    }
    let mut out = BTreeMap::new();
    rec(
        a.level(),
        a.cols(),
        b.cols(),
        false,
        &mut Vec::new(),
        &mut out,
    );
    Ok(out)
}

fn rec(
    level: usize,
    a: &[LPartite],
    b: &[LPartite],
    merge: bool,
    acc: &mut Vec<LPartite>,
    out: &mut BTreeMap<VectorComposition, u64>,
) {
    if a.is_empty() && b.is_empty() {
        let comp = VectorComposition::new(level, acc.clone()).expect("nonzero columns");
        *out.entry(comp).or_insert(0) += 1;
        return;
    }
    if let Some((head, rest)) = a.split_first() {
        acc.push(head.clone());
        rec(level, rest, b, merge, acc, out);
        acc.pop();
    }
    if let Some((head, rest)) = b.split_first() {
        acc.push(head.clone());
        rec(level, a, rest, merge, acc, out);
        acc.pop();
    }
    if merge {
        if let (Some((ha, ra)), Some((hb, rb))) = (a.split_first(), b.split_first()) {
            acc.push(ha.checked_add(hb).expect("uniform level"));
            rec(level, ra, rb, merge, acc, out);
            acc.pop();
        }
    }
}

/// All ways to write `I` as a concatenation of `m` (possibly empty) parts.
pub fn concat_splits(i: &VectorComposition, m: usize) -> Vec<Vec<VectorComposition>> {
    fn rec(
        i: &VectorComposition,
        start: usize,
        parts_left: usize,
        acc: &mut Vec<VectorComposition>,
        out: &mut Vec<Vec<VectorComposition>>,
    ) {
        let n = i.len();
        if parts_left == 1 {
            let cols = i.cols()[start..].to_vec();
            acc.push(VectorComposition::new(i.level(), cols).expect("columns of a composition"));
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for end in start..=n {
            let cols = i.cols()[start..end].to_vec();
            acc.push(VectorComposition::new(i.level(), cols).expect("columns of a composition"));
            rec(i, end, parts_left - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        if i.is_empty() {
            out.push(Vec::new());
        }
        return out;
    }
    rec(i, 0, m, &mut Vec::new(), &mut out);
    out
}
