//! Multigraded quasisymmetric functions.
//!
//! Elements are stored as finite linear combinations of monomial functions
//! `M_I` indexed by vector compositions; the fundamental (`F`), power (`P`),
//! and eta bases are available through conversions. The product is the
//! quasi-shuffle of indices, the coproduct is deconcatenation, and the
//! antipode is the signed sum over coarsenings of the reversed index.

use std::collections::BTreeMap;

use num::traits::{One, Zero};

use crate::coef::{self, Coef};
use crate::comb::{quasi_shuffles, LPartite, VectorComposition, VectorPartition};
use crate::error::Error;
use crate::Result;

/// The supported bases of the quasisymmetric side.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QSymBasis {
    /// Monomial basis (canonical internal representation).
    M,
    /// Fundamental basis.
    F,
    /// Power (shuffle) basis, dual to the noncommutative power basis.
    P,
    /// Eta basis, dual to the Upsilon basis.
    Eta,
}

impl QSymBasis {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "M" => Ok(QSymBasis::M),
            "F" => Ok(QSymBasis::F),
            "P" => Ok(QSymBasis::P),
            "eta" | "Eta" => Ok(QSymBasis::Eta),
            _ => Err(Error::parse(format!("unknown QSym basis {s:?}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            QSymBasis::M => "M",
            QSymBasis::F => "F",
            QSymBasis::P => "P",
            QSymBasis::Eta => "eta",
        }
    }
}

/// A colored composition: a sequence of (positive weight, color) pairs. This
/// indexes the one-alphabet colored monomial quasisymmetric functions.
pub type ColoredComposition = Vec<(u32, u8)>;

/// An element of level-`l` QSym, internally expanded in the monomial basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSymElem {
    level: usize,
    terms: BTreeMap<VectorComposition, Coef>,
}

/// An element of QSym tensor QSym, expanded in `M (x) M`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSymTensor {
    level: usize,
    terms: BTreeMap<(VectorComposition, VectorComposition), Coef>,
}

pub(crate) fn add_term<K: Ord>(map: &mut BTreeMap<K, Coef>, key: K, c: Coef) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(key);
    match entry {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl QSymElem {
    pub fn zero(level: usize) -> Self {
        QSymElem {
            level,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `M_()`.
    pub fn unit(level: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(VectorComposition::empty(level), Coef::one());
        QSymElem { level, terms }
    }

    /// A single monomial-basis element.
    pub fn monomial(index: VectorComposition) -> Self {
        let mut terms = BTreeMap::new();
        let level = index.level();
        terms.insert(index, Coef::one());
        QSymElem { level, terms }
    }

    /// Build an element from terms in any supported basis.
    pub fn from_terms(
        level: usize,
        basis: QSymBasis,
        terms: impl IntoIterator<Item = (VectorComposition, Coef)>,
    ) -> Result<Self> {
        let mut out = QSymElem::zero(level);
        for (index, c) in terms {
            if index.level() != level {
                return Err(Error::LevelMismatch(level, index.level()));
            }
            let expanded = basis_to_m(basis, &index);
            for (j, d) in expanded {
                add_term(&mut out.terms, j, d * &c);
            }
        }
        Ok(out)
    }

    /// A single basis element in any supported basis.
    pub fn basis_elem(basis: QSymBasis, index: VectorComposition) -> Self {
        let level = index.level();
        QSymElem::from_terms(level, basis, [(index, Coef::one())]).expect("level consistent")
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in the monomial basis.
    pub fn terms(&self) -> &BTreeMap<VectorComposition, Coef> {
        &self.terms
    }

    pub fn add_assign_term(&mut self, index: VectorComposition, c: Coef) {
        add_term(&mut self.terms, index, c);
    }

    pub fn add(&self, other: &QSymElem) -> Result<QSymElem> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_term(&mut out.terms, k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coef) -> QSymElem {
        if c.is_zero() {
            return QSymElem::zero(self.level);
        }
        QSymElem {
            level: self.level,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn sub(&self, other: &QSymElem) -> Result<QSymElem> {
        self.add(&other.scale(&-Coef::one()))
    }

    /// Product: bilinear extension of the quasi-shuffle of indices.
    pub fn mul(&self, other: &QSymElem) -> Result<QSymElem> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        let mut out = QSymElem::zero(self.level);
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                let c = a * b;
                for (k, mult) in quasi_shuffles(i, j)? {
                    add_term(&mut out.terms, k, &c * coef::from_i64(mult as i64));
                }
            }
        }
        Ok(out)
    }

    /// Coproduct: deconcatenation of indices.
    pub fn coproduct(&self) -> QSymTensor {
        let mut out = QSymTensor::zero(self.level);
        for (i, c) in &self.terms {
            for cut in 0..=i.len() {
                let left =
                    VectorComposition::new(self.level, i.cols()[..cut].to_vec()).expect("cols");
                let right =
                    VectorComposition::new(self.level, i.cols()[cut..].to_vec()).expect("cols");
                add_term(&mut out.terms, (left, right), c.clone());
            }
        }
        out
    }

    /// Counit: the coefficient of `M_()`.
    pub fn counit(&self) -> Coef {
        self.terms
            .get(&VectorComposition::empty(self.level))
            .cloned()
            .unwrap_or_else(Coef::zero)
    }

    /// Antipode: `S(M_I) = (-1)^{len I} sum of M_J over coarsenings J of the
    /// reversal of I`.
    pub fn antipode(&self) -> QSymElem {
        let mut out = QSymElem::zero(self.level);
        for (i, c) in &self.terms {
            let rev = i.reverse();
            let sgn = coef::sign(i.len());
            for blocks in rev.splits_nonempty() {
                let j = rev.coarsen(&blocks);
                add_term(&mut out.terms, j, c * &sgn);
            }
        }
        out
    }

    /// Expansion in a given basis.
    pub fn to_basis(&self, basis: QSymBasis) -> BTreeMap<VectorComposition, Coef> {
        let mut out = BTreeMap::new();
        for (i, c) in &self.terms {
            for (j, d) in m_to_basis(basis, i) {
                add_term(&mut out, j, d * c);
            }
        }
        out
    }

    /// The degrees (with nonzero terms) of the element.
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

    /// The homogeneous component of degree `n`.
    pub fn graded_component(&self, n: &LPartite) -> QSymElem {
        QSymElem {
            level: self.level,
            terms: self
                .terms
                .iter()
                .filter(|(i, _)| &i.total() == n)
                .map(|(i, c)| (i.clone(), c.clone()))
                .collect(),
        }
    }

    /// Project each monomial term with monochromatic columns onto its colored
    /// composition (weight, color per column); terms with a multicolored
    /// column are sent to zero.
    pub fn monochromatic_project(&self) -> BTreeMap<ColoredComposition, Coef> {
        let mut out = BTreeMap::new();
        'term: for (i, c) in &self.terms {
            let mut key = Vec::with_capacity(i.len());
            for col in i.cols() {
                let supp = col.support();
                if supp.len() != 1 {
                    continue 'term;
                }
                key.push((col.weight(), supp[0] as u8));
            }
            add_term(&mut out, key, c.clone());
        }
        out
    }
}

/// Expansion of a single basis element in the monomial basis.
fn basis_to_m(basis: QSymBasis, index: &VectorComposition) -> Vec<(VectorComposition, Coef)> {
    match basis {
        QSymBasis::M => vec![(index.clone(), Coef::one())],
        QSymBasis::F => index
            .refinements_weak()
            .into_iter()
            .map(|j| (j, Coef::one()))
            .collect(),
        QSymBasis::Eta => index
            .splits_nonempty()
            .into_iter()
            .map(|blocks| {
                let j = index.coarsen(&blocks);
                let c = coef::pow2(j.len() as i64);
                (j, c)
            })
            .collect(),
        QSymBasis::P => index
            .splits_nonempty()
            .into_iter()
            .map(|blocks| {
                // 1 / prod over blocks of (block length)! * (block weights).
                let mut denom = Coef::one();
                for &(a, b) in &blocks {
                    denom *= coef::factorial(b - a);
                    for col in &index.cols()[a..b] {
                        denom *= coef::from_i64(col.weight() as i64);
                    }
                }
                (index.coarsen(&blocks), denom.recip())
            })
            .collect(),
    }
}

/// Expansion of a single monomial basis element in another basis.
fn m_to_basis(basis: QSymBasis, index: &VectorComposition) -> Vec<(VectorComposition, Coef)> {
    match basis {
        QSymBasis::M => vec![(index.clone(), Coef::one())],
        QSymBasis::F => index
            .refinements_weak()
            .into_iter()
            .map(|j| {
                let c = coef::sign(j.len() - index.len());
                (j, c)
            })
            .collect(),
        QSymBasis::Eta => index
            .splits_nonempty()
            .into_iter()
            .map(|blocks| {
                let j = index.coarsen(&blocks);
                let c = coef::sign(index.len() - j.len()) * coef::pow2(-(index.len() as i64));
                (j, c)
            })
            .collect(),
        QSymBasis::P => index
            .splits_nonempty()
            .into_iter()
            .map(|blocks| {
                // (-1)^{len I - len J} * pi(J) / prod of block lengths.
                let j = index.coarsen(&blocks);
                let mut c = coef::sign(index.len() - j.len());
                c *= coef::from_i64(j.pi() as i64);
                let mut denom = Coef::one();
                for &(a, b) in &blocks {
                    denom *= coef::from_i64((b - a) as i64);
                }
                (j, c / denom)
            })
            .collect(),
    }
}

impl QSymTensor {
    pub fn zero(level: usize) -> Self {
        QSymTensor {
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

    /// Componentwise product of tensors.
    pub fn mul(&self, other: &QSymTensor) -> Result<QSymTensor> {
        let mut out = QSymTensor::zero(self.level);
        for ((a1, a2), c) in &self.terms {
            let e1 = QSymElem::monomial(a1.clone());
            let e2 = QSymElem::monomial(a2.clone());
            for ((b1, b2), d) in &other.terms {
                let p1 = e1.mul(&QSymElem::monomial(b1.clone()))?;
                let p2 = e2.mul(&QSymElem::monomial(b2.clone()))?;
                let cd = c * d;
                for (i, x) in p1.terms() {
                    for (j, y) in p2.terms() {
                        add_term(
                            &mut out.terms,
                            (i.clone(), j.clone()),
                            &cd * x * y,
                        );
                    }
                }
            }
        }
        Ok(out)
    }

    /// Collapse the tensor by multiplying the two legs (used for Hopf-axiom
    /// checks), optionally applying the antipode to one leg first.
    pub fn fold_mul(&self, antipode_leg: Option<usize>) -> Result<QSymElem> {
        let mut out = QSymElem::zero(self.level);
        for ((a, b), c) in &self.terms {
            let mut x = QSymElem::monomial(a.clone());
            let mut y = QSymElem::monomial(b.clone());
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

/// The symmetric monomial function `m_lambda`: the sum of `M_I` over the
/// distinct orderings of the parts.
pub fn sym_m(level: usize, lambda: &VectorPartition) -> QSymElem {
    let mut out = QSymElem::zero(level);
    for i in lambda.orderings(level) {
        out.add_assign_term(i, Coef::one());
    }
    out
}

/// The complete homogeneous function `h_n`: the sum over compositions `I` of
/// `n` of `M_I` weighted by the number of color words compatible with each
/// column, i.e. the product of multinomial coefficients of the columns.
pub fn sym_h(n: &LPartite) -> QSymElem {
    fn multinomial(col: &LPartite) -> Coef {
        let mut c = coef::factorial(col.weight() as usize);
        for &e in &col.0 {
            c /= coef::factorial(e as usize);
        }
        c
    }
    let mut out = QSymElem::zero(n.level());
    for i in VectorComposition::compositions_of(n) {
        let mut c = Coef::one();
        for col in i.cols() {
            c *= multinomial(col);
        }
        out.add_assign_term(i, c);
    }
    out
}

/// The power sum `p_n = M_(n)`.
pub fn sym_p(n: &LPartite) -> Result<QSymElem> {
    if n.is_zero() {
        return Err(Error::precondition("power sum needs a nonzero degree"));
    }
    Ok(QSymElem::monomial(VectorComposition::new(
        n.level(),
        vec![n.clone()],
    )?))
}

/// The multiplicative power sum `p_lambda`.
pub fn sym_p_partition(level: usize, lambda: &VectorPartition) -> Result<QSymElem> {
    let mut out = QSymElem::unit(level);
    for part in lambda.parts() {
        out = out.mul(&sym_p(part)?)?;
    }
    Ok(out)
}

/// Expansion of the one-alphabet colored monomial function indexed by a
/// colored composition into level-`l` monomial functions: the sum of `M_I`
/// over the compositions strictly-refined by the coordinate blow-up of the
/// index (merging adjacent columns only across strictly increasing colors).
pub fn colored_monomial(level: usize, alpha: &[(u32, u8)]) -> Result<QSymElem> {
    for &(a, c) in alpha {
        if a == 0 {
            return Err(Error::precondition("zero part in colored composition"));
        }
        if c as usize >= level {
            return Err(Error::precondition("color out of range for level"));
        }
    }
    let m = alpha.len();
    let mut out = QSymElem::zero(level);
    if m == 0 {
        return Ok(QSymElem::unit(level));
    }
    // Choose split points; a block may only span strictly increasing colors.
    for mask in 0..(1u64 << (m - 1)) {
        let mut cols: Vec<LPartite> = Vec::new();
        let mut acc = LPartite::zero(level);
        let mut ok = true;
        for (r, &(a, c)) in alpha.iter().enumerate() {
            if !acc.is_zero() && alpha[r - 1].1 >= c {
                ok = false;
                break;
            }
            let mut col = vec![0u32; level];
            col[c as usize] = a;
            acc = acc.checked_add(&LPartite::new(col))?;
            let boundary = r == m - 1 || mask & (1 << r) != 0;
            if boundary {
                cols.push(std::mem::replace(&mut acc, LPartite::zero(level)));
            }
        }
        if !ok {
            continue;
        }
        out.add_assign_term(VectorComposition::new(level, cols)?, Coef::one());
    }
    Ok(out)
}
