use std::collections::BTreeSet;
use std::fmt;

use super::composition::VectorComposition;
use super::lpartite::LPartite;
use crate::error::Error;
use crate::Result;

/// A colored permutation: a permutation of `1..=n` together with a color word
/// of the same length (`colors[i]` colors position `i+1`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ColoredPermutation {
    sigma: Vec<usize>,
    colors: Vec<u8>,
}

impl ColoredPermutation {
    pub fn new(sigma: Vec<usize>, colors: Vec<u8>) -> Result<Self> {
        if sigma.len() != colors.len() {
            return Err(Error::precondition(
                "permutation and color word lengths differ",
            ));
        }
        let n = sigma.len();
        let mut seen = vec![false; n + 1];
        for &v in &sigma {
            if v == 0 || v > n || seen[v] {
                return Err(Error::precondition(format!(
                    "not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(ColoredPermutation { sigma, colors })
    }

    /// The empty colored permutation.
    pub fn identity(n: usize, colors: Vec<u8>) -> Result<Self> {
        ColoredPermutation::new((1..=n).collect(), colors)
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    /// Color multidegree of the color word.
    pub fn mdeg(&self, level: usize) -> LPartite {
        LPartite::mdeg(level, &self.colors)
    }

    /// Descent set: positions `i` with `sigma_i > sigma_{i+1}`, 1-indexed.
    pub fn descents(&self) -> BTreeSet<usize> {
        (1..self.sigma.len())
            .filter(|&i| self.sigma[i - 1] > self.sigma[i])
            .collect()
    }

    /// Peak set: interior positions `i` with `sigma_{i-1} < sigma_i > sigma_{i+1}`.
    pub fn peaks(&self) -> BTreeSet<usize> {
        (2..self.sigma.len())
            .filter(|&i| self.sigma[i - 2] < self.sigma[i - 1] && self.sigma[i - 1] > self.sigma[i])
            .collect()
    }

    /// The coordinate composition of the color word: one weight-one column per
    /// letter.
    pub fn coordinate_comp(&self, level: usize) -> Result<VectorComposition> {
        comp_of_color_word(level, &self.colors, &(1..self.n()).collect())
    }

    /// Weighted descent composition: the coordinate columns of the color word
    /// summed between consecutive descents of the permutation.
    pub fn wdes(&self, level: usize) -> Result<VectorComposition> {
        comp_of_color_word(level, &self.colors, &self.descents())
    }

    /// Standardization of a word of distinct integers: the permutation of
    /// `1..=k` in the same relative order.
    pub fn standardize(word: &[usize], colors: &[u8]) -> Result<ColoredPermutation> {
        let mut order: Vec<usize> = (0..word.len()).collect();
        order.sort_by_key(|&i| word[i]);
        let mut sigma = vec![0usize; word.len()];
        for (rank, &i) in order.iter().enumerate() {
            sigma[i] = rank + 1;
        }
        ColoredPermutation::new(sigma, colors.to_vec())
    }
}

/// Split a color word at the given positions and record the multidegree of
/// each run as a column.
pub fn comp_of_color_word(
    level: usize,
    colors: &[u8],
    splits: &BTreeSet<usize>,
) -> Result<VectorComposition> {
    if colors.iter().any(|&c| c as usize >= level) {
        return Err(Error::precondition("color out of range for level"));
    }
    let mut cols = Vec::new();
    let mut start = 0usize;
    let mut bounds: Vec<usize> = splits.iter().copied().collect();
    bounds.push(colors.len());
    for b in bounds {
        if b > start {
            cols.push(LPartite::mdeg(level, &colors[start..b]));
        }
        start = b;
    }
    VectorComposition::new(level, cols)
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for v in &self.sigma {
            write!(f, "{v}")?;
        }
        write!(f, ",")?;
        for c in &self.colors {
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
