use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;
use crate::Result;

/// An `l`-partite number: a vector of naturals of length `l` (the level).
///
/// These index the grading of every algebra in this crate. Entries are held in
/// a plain `Vec<u32>`; the level is the length of the vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LPartite(pub Vec<u32>);

impl LPartite {
    pub fn new(entries: Vec<u32>) -> Self {
        LPartite(entries)
    }

    /// The zero vector at a given level.
    pub fn zero(level: usize) -> Self {
        LPartite(vec![0; level])
    }

    /// The coordinate vector `e_c` at a given level.
    pub fn coordinate(level: usize, c: usize) -> Self {
        let mut v = vec![0; level];
        v[c] = 1;
        LPartite(v)
    }

    /// Multidegree of a color word: entry `c` counts occurrences of color `c`.
    pub fn mdeg(level: usize, word: &[u8]) -> Self {
        let mut v = vec![0u32; level];
        for &c in word {
            v[c as usize] += 1;
        }
        LPartite(v)
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    /// Weight: the sum of the entries.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Support: the set of colors with a nonzero entry, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    /// Componentwise order (partial): `self <= other` in every coordinate.
    pub fn le(&self, other: &LPartite) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &LPartite) -> Result<LPartite> {
        if self.level() != other.level() {
            return Err(Error::LevelMismatch(self.level(), other.level()));
        }
        Ok(LPartite(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Componentwise difference; requires `other <= self`.
    pub fn checked_sub(&self, other: &LPartite) -> Result<LPartite> {
        if !other.le(self) {
            return Err(Error::precondition(format!(
                "{other} is not componentwise <= {self}"
            )));
        }
        Ok(LPartite(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    /// All vectors `0 <= v <= self` componentwise, in lexicographic order.
    pub fn sub_vectors(&self) -> Vec<LPartite> {
        let mut out = vec![Vec::new()];
        for &bound in &self.0 {
            let mut next = Vec::with_capacity(out.len() * (bound as usize + 1));
            for prefix in &out {
                for x in 0..=bound {
                    let mut v = prefix.clone();
                    v.push(x);
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter().map(LPartite).collect()
    }

    /// The color word of this single column: `entry[c]` copies of color `c`,
    /// colors ascending.
    pub fn color_run(&self) -> Vec<u8> {
        let mut w = Vec::with_capacity(self.weight() as usize);
        for (c, &m) in self.0.iter().enumerate() {
            for _ in 0..m {
                w.push(c as u8);
            }
        }
        w
    }
}

impl PartialOrd for LPartite {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used for canonical term ordering and the default Lyndon order:
/// lexicographic on the entry sequence.
impl Ord for LPartite {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for LPartite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A natural number extended with infinity; used for the parameter `k` of the
/// k-odd and k-even constructions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtNat {
    Finite(u32),
    Inf,
}

impl ExtNat {
    pub fn at_least(&self, n: u32) -> bool {
        match self {
            ExtNat::Finite(k) => *k >= n,
            ExtNat::Inf => true,
        }
    }
}

/// An extended `l`-partite number: entries in the naturals plus infinity,
/// ordered componentwise with infinity maximal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtVec(pub Vec<ExtNat>);

impl ExtVec {
    pub fn level(&self) -> usize {
        self.0.len()
    }

    /// All-infinity vector at a given level.
    pub fn inf(level: usize) -> Self {
        ExtVec(vec![ExtNat::Inf; level])
    }

    pub fn finite(entries: Vec<u32>) -> Self {
        ExtVec(entries.into_iter().map(ExtNat::Finite).collect())
    }

    /// Componentwise test `n <= self` for a finite vector `n`.
    pub fn dominates(&self, n: &LPartite) -> bool {
        self.0.len() == n.0.len()
            && self
                .0
                .iter()
                .zip(&n.0)
                .all(|(k, &x)| k.at_least(x))
    }

    /// Componentwise minimum with a finite vector, yielding a finite vector.
    pub fn min_with(&self, bound: &LPartite) -> LPartite {
        LPartite(
            self.0
                .iter()
                .zip(&bound.0)
                .map(|(k, &b)| match k {
                    ExtNat::Finite(k) => (*k).min(b),
                    ExtNat::Inf => b,
                })
                .collect(),
        )
    }
}

impl fmt::Display for ExtVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match x {
                ExtNat::Finite(k) => write!(f, "{k}")?,
                ExtNat::Inf => write!(f, "inf")?,
            }
        }
        write!(f, ")")
    }
}
