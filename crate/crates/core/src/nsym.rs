//! Multigraded noncommutative symmetric functions, the graded dual of the
//! quasisymmetric side.
//!
//! Elements are stored in the complete basis `S^I` (product: concatenation of
//! indices; coproduct: the multiplicative extension of the binomial-type
//! coproduct of the generators `S_n`). The power basis `Phi` and the
//! `Upsilon` basis are reached by columnwise triangular conversions.

use std::collections::BTreeMap;

use num::traits::{One, Zero};

use crate::coef::{self, Coef};
use crate::comb::{LPartite, VectorComposition};
use crate::error::Error;
use crate::qsym::{add_term, QSymElem};
use crate::Result;

/// The supported bases of the noncommutative side.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NSymBasis {
    /// Complete basis (canonical internal representation).
    S,
    /// Noncommutative power sums (of the second kind), dual to `P`.
    Phi,
    /// Upsilon basis, dual to eta.
    Upsilon,
}

impl NSymBasis {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "S" => Ok(NSymBasis::S),
            "Phi" | "phi" => Ok(NSymBasis::Phi),
            "Upsilon" | "upsilon" => Ok(NSymBasis::Upsilon),
            _ => Err(Error::parse(format!("unknown NSym basis {s:?}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            NSymBasis::S => "S",
            NSymBasis::Phi => "Phi",
            NSymBasis::Upsilon => "Upsilon",
        }
    }
}

/// An element of level-`l` NSym, internally expanded in the complete basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NSymElem {
    level: usize,
    terms: BTreeMap<VectorComposition, Coef>,
}

/// An element of NSym tensor NSym, expanded in `S (x) S`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NSymTensor {
    level: usize,
    terms: BTreeMap<(VectorComposition, VectorComposition), Coef>,
}

impl NSymElem {
    pub fn zero(level: usize) -> Self {
        NSymElem {
            level,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `S^()`.
    pub fn unit(level: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(VectorComposition::empty(level), Coef::one());
        NSymElem { level, terms }
    }

    /// A single complete-basis element.
    pub fn complete(index: VectorComposition) -> Self {
        let mut terms = BTreeMap::new();
        let level = index.level();
        terms.insert(index, Coef::one());
        NSymElem { level, terms }
    }

    /// The generator `S_n` (single column), or the unit for `n = 0`.
    pub fn s_of(n: &LPartite) -> Self {
        if n.is_zero() {
            return NSymElem::unit(n.level());
        }
        NSymElem::complete(
            VectorComposition::new(n.level(), vec![n.clone()]).expect("nonzero column"),
        )
    }

    pub fn from_terms(
        level: usize,
        basis: NSymBasis,
        terms: impl IntoIterator<Item = (VectorComposition, Coef)>,
    ) -> Result<Self> {
        let mut out = NSymElem::zero(level);
        for (index, c) in terms {
            if index.level() != level {
                return Err(Error::LevelMismatch(level, index.level()));
            }
            for (j, d) in basis_to_s(basis, &index) {
                add_term(&mut out.terms, j, d * &c);
            }
        }
        Ok(out)
    }

    pub fn basis_elem(basis: NSymBasis, index: VectorComposition) -> Self {
        let level = index.level();
        NSymElem::from_terms(level, basis, [(index, Coef::one())]).expect("level consistent")
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in the complete basis.
    pub fn terms(&self) -> &BTreeMap<VectorComposition, Coef> {
        &self.terms
    }

    pub fn add_assign_term(&mut self, index: VectorComposition, c: Coef) {
        add_term(&mut self.terms, index, c);
    }

    pub fn add(&self, other: &NSymElem) -> Result<NSymElem> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_term(&mut out.terms, k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coef) -> NSymElem {
        if c.is_zero() {
            return NSymElem::zero(self.level);
        }
        NSymElem {
            level: self.level,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn sub(&self, other: &NSymElem) -> Result<NSymElem> {
        self.add(&other.scale(&-Coef::one()))
    }

    /// Product: bilinear extension of concatenation of indices.
    pub fn mul(&self, other: &NSymElem) -> Result<NSymElem> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        let mut out = NSymElem::zero(self.level);
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                add_term(&mut out.terms, i.concat(j)?, a * b);
            }
        }
        Ok(out)
    }

    /// Coproduct: `Delta(S_n) = sum over n = i + j of S_i (x) S_j`, extended
    /// as an algebra map over concatenations.
    pub fn coproduct(&self) -> NSymTensor {
        let mut out = NSymTensor::zero(self.level);
        for (i, c) in &self.terms {
            // Iteratively tensor-multiply the coproducts of the columns.
            let mut acc: BTreeMap<(VectorComposition, VectorComposition), Coef> =
                BTreeMap::new();
            acc.insert(
                (
                    VectorComposition::empty(self.level),
                    VectorComposition::empty(self.level),
                ),
                c.clone(),
            );
            for col in i.cols() {
                let mut next = BTreeMap::new();
                for ((l, r), d) in &acc {
                    for part in col.sub_vectors() {
                        let rest = col.checked_sub(&part).expect("sub vector");
                        let mut left = l.clone();
                        if !part.is_zero() {
                            left = left
                                .concat(
                                    &VectorComposition::new(self.level, vec![part]).expect("col"),
                                )
                                .expect("level");
                        }
                        let mut right = r.clone();
                        if !rest.is_zero() {
                            right = right
                                .concat(
                                    &VectorComposition::new(self.level, vec![rest]).expect("col"),
                                )
                                .expect("level");
                        }
                        add_term(&mut next, (left, right), d.clone());
                    }
                }
                acc = next;
            }
            for (k, d) in acc {
                add_term(&mut out.terms, k, d);
            }
        }
        out
    }

    /// Counit: the coefficient of `S^()`.
    pub fn counit(&self) -> Coef {
        self.terms
            .get(&VectorComposition::empty(self.level))
            .cloned()
            .unwrap_or_else(Coef::zero)
    }

    /// Antipode: `S(S^I) = sum over J with rev(J) refining I of
    /// (-1)^{len J} S^J`.
    pub fn antipode(&self) -> NSymElem {
        let mut out = NSymElem::zero(self.level);
        for (i, c) in &self.terms {
            for k in i.refinements_blockwise() {
                let j = k.reverse();
                let sgn = coef::sign(j.len());
                add_term(&mut out.terms, j, c * &sgn);
            }
        }
        out
    }

    /// Expansion in a given basis.
    pub fn to_basis(&self, basis: NSymBasis) -> BTreeMap<VectorComposition, Coef> {
        let mut out = BTreeMap::new();
        for (i, c) in &self.terms {
            for (j, d) in s_to_basis(basis, i) {
                add_term(&mut out, j, d * c);
            }
        }
        out
    }

    pub fn degrees(&self) -> Vec<LPartite> {
        let mut seen = Vec::new();
        for i in self.terms.keys() {
            let n = i.total();
            if !seen.contains(&n) {
                seen.push(n);
            }
        }
        seen
    }

    pub fn graded_component(&self, n: &LPartite) -> NSymElem {
        NSymElem {
            level: self.level,
            terms: self
                .terms
                .iter()
                .filter(|(i, _)| &i.total() == n)
                .map(|(i, c)| (i.clone(), c.clone()))
                .collect(),
        }
    }

    /// Duality pairing `<S^I, M_J> = delta_{I,J}`, extended bilinearly.
    pub fn pair(&self, g: &QSymElem) -> Result<Coef> {
        if self.level != g.level() {
            return Err(Error::LevelMismatch(self.level, g.level()));
        }
        let mut acc = Coef::zero();
        for (i, c) in &self.terms {
            if let Some(d) = g.terms().get(i) {
                acc += c * d;
            }
        }
        Ok(acc)
    }
}

/// Columnwise expansion helper: expand each column by `col_expand` and
/// concatenate multiplicatively.
fn columnwise(
    level: usize,
    index: &VectorComposition,
    col_expand: impl Fn(&LPartite) -> Vec<(VectorComposition, Coef)>,
) -> Vec<(VectorComposition, Coef)> {
    let mut acc: Vec<(VectorComposition, Coef)> =
        vec![(VectorComposition::empty(level), Coef::one())];
    for col in index.cols() {
        let options = col_expand(col);
        let mut next = Vec::with_capacity(acc.len() * options.len());
        for (prefix, c) in &acc {
            for (opt, d) in &options {
                next.push((prefix.concat(opt).expect("level"), c * d));
            }
        }
        acc = next;
    }
    acc
}

/// Expansion of a single basis element in the complete basis.
fn basis_to_s(basis: NSymBasis, index: &VectorComposition) -> Vec<(VectorComposition, Coef)> {
    let level = index.level();
    match basis {
        NSymBasis::S => vec![(index.clone(), Coef::one())],
        // Phi_n = |n| * sum over J composing n of (-1)^{len J - 1} / len(J) S^J.
        NSymBasis::Phi => columnwise(level, index, |n| {
            let w = coef::from_i64(n.weight() as i64);
            VectorComposition::compositions_of(n)
                .into_iter()
                .map(|j| {
                    let c = coef::sign(j.len() - 1) * &w
                        / coef::from_i64(j.len() as i64);
                    (j, c)
                })
                .collect()
        }),
        // Upsilon_n = sum over J composing n of (-1)^{len J - 1} / 2^{len J} S^J.
        NSymBasis::Upsilon => columnwise(level, index, |n| {
            VectorComposition::compositions_of(n)
                .into_iter()
                .map(|j| {
                    let c = coef::sign(j.len() - 1) * coef::pow2(-(j.len() as i64));
                    (j, c)
                })
                .collect()
        }),
    }
}

/// Expansion of a single complete-basis element in another basis.
fn s_to_basis(basis: NSymBasis, index: &VectorComposition) -> Vec<(VectorComposition, Coef)> {
    let level = index.level();
    match basis {
        NSymBasis::S => vec![(index.clone(), Coef::one())],
        // S_n = sum over J composing n of 1 / (len(J)! * pi(J)) Phi^J.
        NSymBasis::Phi => columnwise(level, index, |n| {
            VectorComposition::compositions_of(n)
                .into_iter()
                .map(|j| {
                    let c = (coef::factorial(j.len())
                        * coef::from_i64(j.pi() as i64))
                    .recip();
                    (j, c)
                })
                .collect()
        }),
        // S_n = 2 * sum over J composing n of Upsilon^J.
        NSymBasis::Upsilon => columnwise(level, index, |n| {
            VectorComposition::compositions_of(n)
                .into_iter()
                .map(|j| (j, coef::from_i64(2)))
                .collect()
        }),
    }
}

impl NSymTensor {
    pub fn zero(level: usize) -> Self {
        NSymTensor {
            level,
            terms: BTreeMap::new(),
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn terms(&self) -> &BTreeMap<(VectorComposition, VectorComposition), Coef> {
        &self.terms
    }

    pub fn add_assign_term(
        &mut self,
        left: VectorComposition,
        right: VectorComposition,
        c: Coef,
    ) {
        add_term(&mut self.terms, (left, right), c);
    }

    /// Collapse the tensor by multiplying the two legs, optionally applying
    /// the antipode to one leg first.
    pub fn fold_mul(&self, antipode_leg: Option<usize>) -> Result<NSymElem> {
        let mut out = NSymElem::zero(self.level);
        for ((a, b), c) in &self.terms {
            let mut x = NSymElem::complete(a.clone());
            let mut y = NSymElem::complete(b.clone());
            match antipode_leg {
                Some(0) => x = x.antipode(),
                Some(1) => y = y.antipode(),
                _ => {}
            }
            out = out.add(&x.mul(&y)?.scale(c))?;
        }
        Ok(out)
    }
}

/// The Euler-characteristic element of degree `n != 0`: the alternating sum
/// over splittings `n = j + (n - j)` of `S^{(j, n-j)}`, zero-weight parts
/// omitted.
pub fn euler_chi(n: &LPartite) -> Result<NSymElem> {
    if n.is_zero() {
        return Err(Error::precondition(
            "the Euler element is defined in nonzero degree",
        ));
    }
    let level = n.level();
    let mut out = NSymElem::zero(level);
    for j in n.sub_vectors() {
        let rest = n.checked_sub(&j)?;
        let mut cols = Vec::new();
        if !j.is_zero() {
            cols.push(j.clone());
        }
        if !rest.is_zero() {
            cols.push(rest);
        }
        let sgn = coef::sign(j.weight() as usize);
        out.add_assign_term(VectorComposition::new(level, cols)?, sgn);
    }
    Ok(out)
}
