//! Multigraded posets (rank functions valued in vectors of naturals) and
//! colored posets, together with the combinatorial statistics feeding the
//! quasisymmetric side: Möbius functions, Eulerian tests, flag vectors, the
//! flag-vector homomorphism, generalized Dehn–Sommerville relations, linear
//! extensions, and the order-ideal lattice construction.

use std::collections::BTreeSet;

use crate::coef::{self};
use crate::comb::{ColoredPermutation, ExtVec, LPartite, VectorComposition};
use crate::error::Error;
use crate::qsym::QSymElem;
use crate::Result;

/// A finite graded poset with a vector-valued rank function: unique minimum
/// and maximum, rank of the minimum zero, and covers increasing the rank by
/// exactly one coordinate vector.
#[derive(Debug, Clone)]
pub struct MultigradedPoset {
    level: usize,
    names: Vec<String>,
    rank: Vec<LPartite>,
    /// Reflexive-transitive order relation: `leq[x][y]` iff x ≤ y.
    leq: Vec<Vec<bool>>,
    bottom: usize,
    top: usize,
}

impl MultigradedPoset {
    /// Build from explicit element names, cover pairs (smaller, larger), and
    /// ranks; validates all the poset axioms.
    pub fn new(
        level: usize,
        names: Vec<String>,
        covers: &[(usize, usize)],
        rank: Vec<LPartite>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::precondition("poset must be nonempty"));
        }
        if rank.len() != n {
            return Err(Error::precondition("one rank per element required"));
        }
        for r in &rank {
            if r.level() != level {
                return Err(Error::LevelMismatch(level, r.level()));
            }
        }
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::precondition("cover index out of range"));
            }
            let diff = rank[b].checked_sub(&rank[a]).map_err(|_| {
                Error::precondition("cover must increase rank componentwise")
            })?;
            if diff.weight() != 1 {
                return Err(Error::precondition(
                    "cover must increase rank by exactly one coordinate vector",
                ));
            }
            leq[a][b] = true;
        }
        // Transitive closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::precondition("cover relation contains a cycle"));
                }
            }
        }
        let bottoms: Vec<usize> = (0..n).filter(|&i| (0..n).all(|j| leq[i][j])).collect();
        let tops: Vec<usize> = (0..n).filter(|&i| (0..n).all(|j| leq[j][i])).collect();
        let (&bottom, &top) = match (bottoms.first(), tops.first()) {
            (Some(b), Some(t)) if bottoms.len() == 1 && tops.len() == 1 => (b, t),
            _ => {
                return Err(Error::precondition(
                    "poset must have a unique minimum and a unique maximum",
                ))
            }
        };
        if !rank[bottom].is_zero() {
            return Err(Error::precondition("minimum element must have rank zero"));
        }
        Ok(MultigradedPoset {
            level,
            names,
            rank,
            leq,
            bottom,
            top,
        })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rank_of(&self, x: usize) -> &LPartite {
        &self.rank[x]
    }

    /// Multirank of the whole poset (rank of the maximum).
    pub fn multirank(&self) -> LPartite {
        self.rank[self.top].clone()
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    /// Möbius value μ(x, y); zero when x ≰ y.
    pub fn mobius_between(&self, x: usize, y: usize) -> i64 {
        if !self.leq[x][y] {
            return 0;
        }
        if x == y {
            return 1;
        }
        let mut acc = 0i64;
        for z in 0..self.len() {
            if self.leq[x][z] && self.leq[z][y] && z != y {
                acc += self.mobius_between(x, z);
            }
        }
        -acc
    }

    /// Möbius value of the full interval between minimum and maximum.
    pub fn mobius(&self) -> i64 {
        self.mobius_between(self.bottom, self.top)
    }

    /// The interval [x, y] as a multigraded poset (ranks shifted to x).
    pub fn interval(&self, x: usize, y: usize) -> Result<MultigradedPoset> {
        if !self.leq[x][y] {
            return Err(Error::precondition("interval endpoints must satisfy x <= y"));
        }
        let members: Vec<usize> = (0..self.len())
            .filter(|&z| self.leq[x][z] && self.leq[z][y])
            .collect();
        let names = members.iter().map(|&z| self.names[z].clone()).collect();
        let rank: Vec<LPartite> = members
            .iter()
            .map(|&z| self.rank[z].checked_sub(&self.rank[x]))
            .collect::<Result<_>>()?;
        let mut covers = Vec::new();
        for (ai, &a) in members.iter().enumerate() {
            for (bi, &b) in members.iter().enumerate() {
                if a != b && self.leq[a][b] && self.covers_within(&members, a, b) {
                    covers.push((ai, bi));
                }
            }
        }
        MultigradedPoset::new(self.level, names, &covers, rank)
    }

    fn covers_within(&self, members: &[usize], a: usize, b: usize) -> bool {
        members
            .iter()
            .all(|&z| z == a || z == b || !(self.leq[a][z] && self.leq[z][b]))
    }

    /// Cartesian product with componentwise order and added ranks.
    pub fn product(&self, other: &MultigradedPoset) -> Result<MultigradedPoset> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        let n2 = other.len();
        let idx = |a: usize, b: usize| a * n2 + b;
        let mut names = Vec::with_capacity(self.len() * n2);
        let mut rank = Vec::with_capacity(self.len() * n2);
        for a in 0..self.len() {
            for b in 0..n2 {
                names.push(format!("({},{})", self.names[a], other.names[b]));
                rank.push(self.rank[a].checked_add(&other.rank[b])?);
            }
        }
        let mut covers = Vec::new();
        for a in 0..self.len() {
            for b in 0..n2 {
                for a2 in 0..self.len() {
                    if a2 != a && self.leq[a][a2] && self.is_cover(a, a2) {
                        covers.push((idx(a, b), idx(a2, b)));
                    }
                }
                for b2 in 0..n2 {
                    if b2 != b && other.leq[b][b2] && other.is_cover(b, b2) {
                        covers.push((idx(a, b), idx(a, b2)));
                    }
                }
            }
        }
        MultigradedPoset::new(self.level, names, &covers, rank)
    }

    fn is_cover(&self, a: usize, b: usize) -> bool {
        a != b
            && self.leq[a][b]
            && (0..self.len()).all(|z| z == a || z == b || !(self.leq[a][z] && self.leq[z][b]))
    }

    /// Every interval whose rank is dominated by k has Möbius value
    /// (−1)^(weight of the rank).
    pub fn is_k_eulerian(&self, k: &ExtVec) -> Result<bool> {
        if k.level() != self.level {
            return Err(Error::LevelMismatch(self.level, k.level()));
        }
        for x in 0..self.len() {
            for y in 0..self.len() {
                if !self.leq[x][y] {
                    continue;
                }
                let diff = self.rank[y].checked_sub(&self.rank[x])?;
                if !k.dominates(&diff) {
                    continue;
                }
                let expect = if diff.weight() % 2 == 0 { 1 } else { -1 };
                if self.mobius_between(x, y) != expect {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_eulerian(&self) -> Result<bool> {
        self.is_k_eulerian(&ExtVec::inf(self.level))
    }

    /// Number of chains from the minimum to the maximum with the prescribed
    /// sequence of rank jumps.
    pub fn flag_f(&self, i: &VectorComposition) -> Result<u64> {
        if i.level() != self.level {
            return Err(Error::LevelMismatch(self.level, i.level()));
        }
        if i.total() != self.multirank() {
            return Err(Error::precondition(
                "flag index must be a composition of the poset multirank",
            ));
        }
        Ok(self.count_chains(self.bottom, i.cols()))
    }

    fn count_chains(&self, from: usize, jumps: &[LPartite]) -> u64 {
        let Some((step, rest)) = jumps.split_first() else {
            return u64::from(from == self.top);
        };
        let mut acc = 0;
        for z in 0..self.len() {
            if z != from && self.leq[from][z] {
                if let Ok(diff) = self.rank[z].checked_sub(&self.rank[from]) {
                    if &diff == step {
                        acc += self.count_chains(z, rest);
                    }
                }
            }
        }
        acc
    }

    /// The flag quasisymmetric function: the sum of flag numbers times
    /// monomial basis elements over compositions of the multirank.
    pub fn f_homomorphism(&self) -> Result<QSymElem> {
        let mut out = QSymElem::zero(self.level);
        let n = self.multirank();
        if n.is_zero() {
            return Ok(QSymElem::unit(self.level));
        }
        for i in VectorComposition::compositions_of(&n) {
            let f = self.flag_f(&i)?;
            if f != 0 {
                out.add_assign_term(i, coef::from_i64(f as i64));
            }
        }
        Ok(out)
    }

    /// Verify the generalized Dehn–Sommerville relations at every position
    /// whose column is dominated by k; returns the violations as pairs of
    /// (composition, position).
    pub fn dehn_sommerville_check(
        &self,
        k: &ExtVec,
    ) -> Result<Vec<(VectorComposition, usize)>> {
        if k.level() != self.level {
            return Err(Error::LevelMismatch(self.level, k.level()));
        }
        let n = self.multirank();
        let mut violations = Vec::new();
        for i in VectorComposition::compositions_of(&n) {
            for r in 0..i.len() {
                let col = &i.cols()[r];
                if !k.dominates(col) {
                    continue;
                }
                let mut acc = 0i64;
                for j in col.sub_vectors() {
                    let rest = col.checked_sub(&j)?;
                    let mut cols: Vec<LPartite> = i.cols()[..r].to_vec();
                    if !j.is_zero() {
                        cols.push(j.clone());
                    }
                    if !rest.is_zero() {
                        cols.push(rest);
                    }
                    cols.extend(i.cols()[r + 1..].iter().cloned());
                    let idx = VectorComposition::new(self.level, cols)?;
                    let sign = if j.weight() % 2 == 0 { 1 } else { -1 };
                    acc += sign * self.flag_f(&idx)? as i64;
                }
                if acc != 0 {
                    violations.push((i.clone(), r));
                }
            }
        }
        Ok(violations)
    }

    /// The Boolean lattice on `coloring.len()` atoms, with the rank of a
    /// subset the sum of the coordinate vectors of its atoms' colors. The
    /// standard multigraded Eulerian family.
    pub fn boolean(level: usize, coloring: &[u8]) -> Result<MultigradedPoset> {
        let n = coloring.len();
        if n >= 16 {
            return Err(Error::precondition("boolean lattice limited to 15 atoms"));
        }
        if coloring.iter().any(|&c| (c as usize) >= level) {
            return Err(Error::precondition("atom color exceeds level"));
        }
        let size = 1usize << n;
        let mut names = Vec::with_capacity(size);
        let mut rank = Vec::with_capacity(size);
        for mask in 0..size {
            names.push(format!("{mask:b}"));
            let mut r = LPartite::zero(level);
            for (i, &c) in coloring.iter().enumerate() {
                if (mask >> i) & 1 == 1 {
                    r = r.checked_add(&LPartite::coordinate(level, c as usize))?;
                }
            }
            rank.push(r);
        }
        let mut covers = Vec::new();
        for mask in 0..size {
            for i in 0..n {
                if (mask >> i) & 1 == 0 {
                    covers.push((mask, mask | (1 << i)));
                }
            }
        }
        MultigradedPoset::new(level, names, &covers, rank)
    }

    /// The two-element chain with the given coordinate color, and chains of
    /// coordinate steps in general.
    pub fn chain(level: usize, steps: &[u8]) -> Result<MultigradedPoset> {
        let n = steps.len();
        if steps.iter().any(|&c| (c as usize) >= level) {
            return Err(Error::precondition("step color exceeds level"));
        }
        let mut rank = vec![LPartite::zero(level)];
        for (i, &c) in steps.iter().enumerate() {
            let next = rank[i].checked_add(&LPartite::coordinate(level, c as usize))?;
            rank.push(next);
        }
        let names = (0..=n).map(|i| i.to_string()).collect();
        let covers: Vec<(usize, usize)> = (0..n).map(|i| (i, i + 1)).collect();
        MultigradedPoset::new(level, names, &covers, rank)
    }
}

/// A poset of colored labels: elements are pairs (absolute value, color)
/// where the absolute values are exactly 1..n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredPoset {
    level: usize,
    /// colors[i] is the color of the element with absolute value i+1.
    colors: Vec<u8>,
    /// Strict order: less[i][j] iff element i+1 < element j+1.
    less: Vec<Vec<bool>>,
}

impl ColoredPoset {
    /// Build from colors (indexed by absolute value − 1) and strict relations
    /// (pairs of absolute values, 1-based); the transitive closure is taken.
    pub fn new(level: usize, colors: Vec<u8>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = colors.len();
        if colors.iter().any(|&c| (c as usize) >= level) {
            return Err(Error::precondition("element color exceeds level"));
        }
        let mut less = vec![vec![false; n]; n];
        for &(a, b) in relations {
            if a == 0 || b == 0 || a > n || b > n || a == b {
                return Err(Error::precondition("relation uses invalid absolute values"));
            }
            less[a - 1][b - 1] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    for j in 0..n {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            if less[i][i] {
                return Err(Error::precondition("order relation contains a cycle"));
            }
        }
        Ok(ColoredPoset {
            level,
            colors,
            less,
        })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.less[a - 1][b - 1]
    }

    /// Multidegree: the count of each color.
    pub fn mdeg(&self) -> LPartite {
        LPartite::mdeg(self.level, &self.colors)
    }

    /// Disjoint union with the absolute values of `other` shifted up.
    pub fn disjoint_union(&self, other: &ColoredPoset) -> Result<ColoredPoset> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        let n = self.len();
        let mut colors = self.colors.clone();
        colors.extend_from_slice(&other.colors);
        let mut relations = Vec::new();
        for a in 1..=n {
            for b in 1..=n {
                if a != b && self.lt(a, b) {
                    relations.push((a, b));
                }
            }
        }
        for a in 1..=other.len() {
            for b in 1..=other.len() {
                if a != b && other.lt(a, b) {
                    relations.push((a + n, b + n));
                }
            }
        }
        ColoredPoset::new(self.level, colors, &relations)
    }

    /// All linear extensions as colored permutations: the word of absolute
    /// values in extension order, with their colors.
    pub fn linear_extensions(&self) -> Result<Vec<ColoredPermutation>> {
        let n = self.len();
        let mut out = Vec::new();
        let mut used = vec![false; n];
        let mut word = Vec::with_capacity(n);
        self.extend_rec(&mut used, &mut word, &mut out)?;
        Ok(out)
    }

    fn extend_rec(
        &self,
        used: &mut Vec<bool>,
        word: &mut Vec<usize>,
        out: &mut Vec<ColoredPermutation>,
    ) -> Result<()> {
        let n = self.len();
        if word.len() == n {
            let colors = word.iter().map(|&v| self.colors[v - 1]).collect();
            out.push(ColoredPermutation::new(word.clone(), colors)?);
            return Ok(());
        }
        for v in 1..=n {
            if used[v - 1] {
                continue;
            }
            // All strictly smaller elements must already be placed.
            if (1..=n).any(|w| self.lt(w, v) && !used[w - 1]) {
                continue;
            }
            used[v - 1] = true;
            word.push(v);
            self.extend_rec(used, word, out)?;
            word.pop();
            used[v - 1] = false;
        }
        Ok(())
    }

    /// The quasisymmetric generating function: for each linear extension,
    /// the sum of monomial terms over compositions with the extension's
    /// color word whose descent set contains the extension's descents.
    pub fn gamma(&self) -> Result<QSymElem> {
        let mut out = QSymElem::zero(self.level);
        for ext in self.linear_extensions()? {
            let des = ext.descents();
            let u = ext.colors().to_vec();
            let n = self.len();
            let free: Vec<usize> = (1..n).filter(|p| !des.contains(p)).collect();
            for mask in 0u32..(1 << free.len()) {
                let mut dof: BTreeSet<usize> = des.clone();
                for (b, &p) in free.iter().enumerate() {
                    if (mask >> b) & 1 == 1 {
                        dof.insert(p);
                    }
                }
                let i = crate::comb::comp_of_color_word(self.level, &u, &dof)?;
                out.add_assign_term(i, coef::from_i64(1));
            }
        }
        Ok(out)
    }

    /// The lattice of order ideals, as a multigraded poset ranked by the
    /// colored multidegree of the ideal.
    pub fn j_map(&self) -> Result<MultigradedPoset> {
        let n = self.len();
        if n >= 16 {
            return Err(Error::precondition("ideal lattice limited to 15 elements"));
        }
        let is_ideal = |mask: usize| -> bool {
            (1..=n).all(|x| {
                (mask >> (x - 1)) & 1 == 0
                    || (1..=n).all(|y| !self.lt(y, x) || (mask >> (y - 1)) & 1 == 1)
            })
        };
        let ideals: Vec<usize> = (0..(1usize << n)).filter(|&m| is_ideal(m)).collect();
        let index_of = |m: usize| ideals.binary_search(&m).unwrap();
        let mut names = Vec::with_capacity(ideals.len());
        let mut rank = Vec::with_capacity(ideals.len());
        for &m in &ideals {
            names.push(format!("{m:b}"));
            let word: Vec<u8> = (0..n)
                .filter(|i| (m >> i) & 1 == 1)
                .map(|i| self.colors[i])
                .collect();
            rank.push(LPartite::mdeg(self.level, &word));
        }
        let mut covers = Vec::new();
        for &m in &ideals {
            for i in 0..n {
                if (m >> i) & 1 == 0 {
                    let bigger = m | (1 << i);
                    if is_ideal(bigger) {
                        covers.push((index_of(m), index_of(bigger)));
                    }
                }
            }
        }
        MultigradedPoset::new(self.level, names, &covers, rank)
    }
}
