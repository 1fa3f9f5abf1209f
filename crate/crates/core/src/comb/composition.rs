use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use super::lpartite::LPartite;
use crate::error::Error;
use crate::Result;

/// A vector composition: an ordered sequence of nonzero `l`-partite columns.
///
/// The empty sequence is the unique composition of the zero vector. The level
/// is stored explicitly so the empty composition knows where it lives.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VectorComposition {
    level: usize,
    cols: Vec<LPartite>,
}

/// The three refinement orders on vector compositions of a fixed `l`-partite
/// number. In each case `J` refines `I` when `J` factors as consecutive blocks
/// `J_1 ... J_m` with `J_k` a composition of the k-th column of `I`:
///
/// - [`Order::Blockwise`]: no further condition.
/// - [`Order::Weak`]: within each block, every color in the support of a column
///   is `<=` every color in the supports of the columns to its right.
/// - [`Order::Strict`]: as above with strict inequality.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Order {
    Blockwise,
    Weak,
    Strict,
}

impl VectorComposition {
    pub fn new(level: usize, cols: Vec<LPartite>) -> Result<Self> {
        for c in &cols {
            if c.level() != level {
                return Err(Error::LevelMismatch(level, c.level()));
            }
            if c.is_zero() {
                return Err(Error::precondition("zero column in vector composition"));
            }
        }
        Ok(VectorComposition { level, cols })
    }

    /// The empty composition (of the zero vector) at a given level.
    pub fn empty(level: usize) -> Self {
        VectorComposition {
            level,
            cols: Vec::new(),
        }
    }

    /// Build from raw column entry vectors.
    pub fn from_rows(level: usize, cols: Vec<Vec<u32>>) -> Result<Self> {
        VectorComposition::new(level, cols.into_iter().map(LPartite).collect())
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn cols(&self) -> &[LPartite] {
        &self.cols
    }

    /// The `l`-partite number this composes (sum of the columns).
    pub fn total(&self) -> LPartite {
        let mut t = LPartite::zero(self.level);
        for c in &self.cols {
            t = t.checked_add(c).expect("uniform level");
        }
        t
    }

    /// Total weight `|I|`.
    pub fn weight(&self) -> u32 {
        self.cols.iter().map(|c| c.weight()).sum()
    }

    /// The reversed composition.
    pub fn reverse(&self) -> Self {
        let mut cols = self.cols.clone();
        cols.reverse();
        VectorComposition {
            level: self.level,
            cols,
        }
    }

    /// Concatenation `IJ`.
    pub fn concat(&self, other: &VectorComposition) -> Result<Self> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        Ok(VectorComposition {
            level: self.level,
            cols,
        })
    }

    /// Descent composition positions: partial sums of the column weights,
    /// excluding the total.
    pub fn dof(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        let mut acc = 0usize;
        for c in &self.cols[..self.cols.len().saturating_sub(1)] {
            acc += c.weight() as usize;
            out.insert(acc);
        }
        out
    }

    /// Coloring word: each column contributes its colors in ascending order,
    /// columns read left to right.
    pub fn cof(&self) -> Vec<u8> {
        let mut w = Vec::with_capacity(self.weight() as usize);
        for c in &self.cols {
            w.extend(c.color_run());
        }
        w
    }

    /// The composition with a given coloring word and descent positions.
    ///
    /// `dof` must contain the descent set of `word` (positions `i` with
    /// `word[i-1] > word[i]`, 1-indexed) and lie inside `1..word.len()`.
    pub fn from_dof_cof(level: usize, word: &[u8], dof: &BTreeSet<usize>) -> Result<Self> {
        let n = word.len();
        for &s in dof {
            if s == 0 || s >= n {
                return Err(Error::precondition(format!(
                    "split position {s} outside 1..{n}"
                )));
            }
        }
        for i in 1..n {
            if word[i - 1] > word[i] && !dof.contains(&i) {
                return Err(Error::precondition(format!(
                    "descent of the color word at {i} not contained in the split set"
                )));
            }
        }
        if word.iter().any(|&c| c as usize >= level) {
            return Err(Error::precondition("color out of range for level"));
        }
        let mut cols = Vec::new();
        let mut start = 0usize;
        let mut bounds: Vec<usize> = dof.iter().copied().collect();
        bounds.push(n);
        for b in bounds {
            if b > start {
                cols.push(LPartite::mdeg(level, &word[start..b]));
            }
            start = b;
        }
        VectorComposition::new(level, cols)
    }

    /// All vector compositions of `n`, columns chosen in lexicographic order.
    pub fn compositions_of(n: &LPartite) -> Vec<VectorComposition> {
        fn rec(n: &LPartite, acc: &mut Vec<LPartite>, out: &mut Vec<VectorComposition>) {
            if n.is_zero() {
                out.push(VectorComposition {
                    level: n.level(),
                    cols: acc.clone(),
                });
                return;
            }
            for c in n.sub_vectors() {
                if c.is_zero() {
                    continue;
                }
                let rest = n.checked_sub(&c).expect("sub vector");
                acc.push(c);
                rec(&rest, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out
    }

    /// All `l`-partite numbers of a given weight, in lexicographic order.
    pub fn lpartites_of_weight(level: usize, w: u32) -> Vec<LPartite> {
        fn rec(level: usize, w: u32, acc: &mut Vec<u32>, out: &mut Vec<LPartite>) {
            if acc.len() + 1 == level {
                let mut v = acc.clone();
                v.push(w);
                out.push(LPartite(v));
                return;
            }
            for x in 0..=w {
                acc.push(x);
                rec(level, w - x, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        if level == 0 {
            return out;
        }
        rec(level, w, &mut Vec::new(), &mut out);
        out
    }

    /// All vector compositions of all `l`-partite numbers of a given weight.
    pub fn compositions_of_weight(level: usize, w: u32) -> Vec<VectorComposition> {
        Self::lpartites_of_weight(level, w)
            .iter()
            .flat_map(Self::compositions_of)
            .collect()
    }

    /// The block decomposition of `self` (the finer composition) with respect
    /// to a coarser candidate: block end indices such that consecutive runs of
    /// columns sum to the columns of `coarse`. Returns `None` if there is none;
    /// it is unique when it exists.
    pub fn block_ends(&self, coarse: &VectorComposition) -> Option<Vec<usize>> {
        if self.level != coarse.level {
            return None;
        }
        let mut ends = Vec::with_capacity(coarse.len());
        let mut pos = 0usize;
        for target in &coarse.cols {
            let mut acc = LPartite::zero(self.level);
            let mut matched = false;
            while pos < self.cols.len() {
                acc = acc.checked_add(&self.cols[pos]).expect("uniform level");
                pos += 1;
                if &acc == target {
                    matched = true;
                    break;
                }
                if !acc.le(target) {
                    return None;
                }
            }
            if !matched {
                return None;
            }
            ends.push(pos);
        }
        if pos == self.cols.len() {
            Some(ends)
        } else {
            None
        }
    }

    /// Does `fine` refine `coarse` in the given order?
    pub fn refines(fine: &VectorComposition, coarse: &VectorComposition, order: Order) -> bool {
        let Some(ends) = fine.block_ends(coarse) else {
            return false;
        };
        if order == Order::Blockwise {
            return true;
        }
        let mut start = 0usize;
        for &end in &ends {
            let block = &fine.cols[start..end];
            for w in block.windows(2) {
                let left_max = w[0].support().into_iter().max();
                let right_min = w[1].support().into_iter().min();
                let (Some(a), Some(b)) = (left_max, right_min) else {
                    return false;
                };
                let ok = match order {
                    Order::Weak => a <= b,
                    Order::Strict => a < b,
                    Order::Blockwise => unreachable!(),
                };
                if !ok {
                    return false;
                }
            }
            start = end;
        }
        true
    }

    /// Iterate over decompositions of `self` into consecutive nonempty blocks
    /// (there are `2^(len-1)` of them, or one for the empty composition: the
    /// empty decomposition). Each item is the list of block column-ranges.
    pub fn splits_nonempty(&self) -> Vec<Vec<(usize, usize)>> {
        let n = self.cols.len();
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::with_capacity(1 << (n - 1));
        for mask in 0..(1u64 << (n - 1)) {
            let mut blocks = Vec::new();
            let mut start = 0usize;
            for i in 0..n - 1 {
                if mask & (1 << i) != 0 {
                    blocks.push((start, i + 1));
                    start = i + 1;
                }
            }
            blocks.push((start, n));
            out.push(blocks);
        }
        out
    }

    /// The coarsening obtained by summing over each block of a decomposition.
    pub fn coarsen(&self, blocks: &[(usize, usize)]) -> VectorComposition {
        let cols = blocks
            .iter()
            .map(|&(a, b)| {
                let mut acc = LPartite::zero(self.level);
                for c in &self.cols[a..b] {
                    acc = acc.checked_add(c).expect("uniform level");
                }
                acc
            })
            .collect();
        VectorComposition {
            level: self.level,
            cols,
        }
    }

    /// All refinements of `self` in the blockwise order (every column replaced
    /// by one of its compositions).
    pub fn refinements_blockwise(&self) -> Vec<VectorComposition> {
        let per_col: Vec<Vec<VectorComposition>> = self
            .cols
            .iter()
            .map(Self::compositions_of)
            .collect();
        let mut out = vec![VectorComposition::empty(self.level)];
        for options in &per_col {
            let mut next = Vec::with_capacity(out.len() * options.len());
            for prefix in &out {
                for opt in options {
                    next.push(prefix.concat(opt).expect("uniform level"));
                }
            }
            out = next;
        }
        out
    }

    /// All refinements of `self` in the weak order.
    ///
    /// Within one column the admissible refinements are exactly the splits of
    /// its ascending color run into consecutive nonempty pieces.
    pub fn refinements_weak(&self) -> Vec<VectorComposition> {
        let per_col: Vec<Vec<Vec<LPartite>>> = self
            .cols
            .iter()
            .map(|c| {
                let run = c.color_run();
                let m = run.len();
                let mut opts = Vec::with_capacity(1 << (m - 1));
                for mask in 0..(1u64 << (m - 1)) {
                    let mut cols = Vec::new();
                    let mut start = 0usize;
                    for i in 0..m - 1 {
                        if mask & (1 << i) != 0 {
                            cols.push(LPartite::mdeg(self.level, &run[start..i + 1]));
                            start = i + 1;
                        }
                    }
                    cols.push(LPartite::mdeg(self.level, &run[start..]));
                    opts.push(cols);
                }
                opts
            })
            .collect();
        let mut out: Vec<Vec<LPartite>> = vec![Vec::new()];
        for options in &per_col {
            let mut next = Vec::with_capacity(out.len() * options.len());
            for prefix in &out {
                for opt in options {
                    let mut cols = prefix.clone();
                    cols.extend(opt.iter().cloned());
                    next.push(cols);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|cols| VectorComposition {
                level: self.level,
                cols,
            })
            .collect()
    }

    /// The underlying multiset of columns.
    pub fn to_partition(&self) -> VectorPartition {
        VectorPartition::new(self.cols.clone())
    }

    /// Product of the column weights.
    pub fn pi(&self) -> u64 {
        self.cols.iter().map(|c| c.weight() as u64).product()
    }

    /// Lyndon test with respect to a total order on columns: the column word
    /// must be strictly smaller than every proper cyclic rotation.
    pub fn is_lyndon_by(&self, cmp: impl Fn(&LPartite, &LPartite) -> Ordering) -> bool {
        let n = self.cols.len();
        if n == 0 {
            return false;
        }
        let word_cmp = |a: &[LPartite], b: &[LPartite]| -> Ordering {
            for (x, y) in a.iter().zip(b.iter()) {
                match cmp(x, y) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        };
        for r in 1..n {
            let rotation: Vec<LPartite> = self.cols[r..]
                .iter()
                .chain(self.cols[..r].iter())
                .cloned()
                .collect();
            if word_cmp(&self.cols, &rotation) != Ordering::Less {
                return false;
            }
        }
        true
    }

    /// Lyndon test in the default column order (lexicographic on entries).
    pub fn is_lyndon(&self) -> bool {
        self.is_lyndon_by(|a, b| a.cmp(b))
    }
}

impl PartialOrd for VectorComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical term order: by length, then columnwise lexicographic.
impl Ord for VectorComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cols
            .len()
            .cmp(&other.cols.len())
            .then_with(|| self.cols.cmp(&other.cols))
    }
}

impl fmt::Display for VectorComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.cols.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// A vector partition: a multiset of nonzero `l`-partite columns, kept sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VectorPartition {
    parts: Vec<LPartite>,
}

impl VectorPartition {
    pub fn new(mut parts: Vec<LPartite>) -> Self {
        parts.sort();
        VectorPartition { parts }
    }

    pub fn parts(&self) -> &[LPartite] {
        &self.parts
    }

    /// `z_lambda = prod_i m_i! * |i|^{m_i}` over the distinct parts `i` with
    /// multiplicities `m_i`.
    pub fn z(&self) -> u64 {
        let mut z = 1u64;
        let mut i = 0;
        while i < self.parts.len() {
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == self.parts[i] {
                j += 1;
            }
            let m = (j - i) as u64;
            let fact: u64 = (1..=m).product();
            z *= fact * (self.parts[i].weight() as u64).pow(m as u32);
            i = j;
        }
        z
    }

    /// All orderings of the parts as vector compositions (distinct sequences).
    pub fn orderings(&self, level: usize) -> Vec<VectorComposition> {
        use itertools::Itertools;
        self.parts
            .iter()
            .cloned()
            .permutations(self.parts.len())
            .unique()
            .map(|cols| VectorComposition { level, cols })
            .collect()
    }
}
