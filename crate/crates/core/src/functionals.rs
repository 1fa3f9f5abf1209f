//! Graded linear functionals on the quasisymmetric side.
//!
//! A graded functional is determined by one dual element (on the
//! noncommutative side) per degree; evaluation pairs the degree-`n` component
//! against the degree-`n` part of the argument. Convolution corresponds to
//! the product of functionals through the coproduct, and characters are
//! inverted by the standard graded recursion.

use std::collections::BTreeMap;
use std::sync::Mutex;

use num::traits::{One, Zero};

use crate::coef::{self, Coef};
use crate::comb::{ExtVec, LPartite, VectorComposition};
use crate::error::Error;
use crate::nsym::{euler_chi, NSymElem};
use crate::qsym::QSymElem;
use crate::Result;

/// Defining rule of a graded functional.
#[derive(Clone, Debug)]
pub enum Rule {
    /// Counit: 1 in degree zero, 0 elsewhere.
    Epsilon,
    /// The universal character: 1 on the unit and on every `M` (or `F`) basis
    /// element with a single column. Degree-`n` component: `S_n`.
    Zeta,
    /// Degreewise sign twist of zeta: `(-1)^{|n|} S_n`.
    ZetaBar,
    /// Inverse of zeta: `zeta` composed with the antipode.
    ZetaInv,
    /// Hybrid: `zeta-bar` in degrees `n <= k`, `zeta` elsewhere.
    ZetaK(ExtVec),
    /// `nu^k = (zeta^k after the antipode) * zeta` (convolution).
    NuK(ExtVec),
    /// Euler character: degree-`n` component is the Euler element.
    Chi,
    /// Arbitrary components, zero outside the listed degrees.
    Explicit(BTreeMap<LPartite, NSymElem>),
    /// Convolution product of two functionals.
    Convolve(Box<GradedFunctional>, Box<GradedFunctional>),
    /// Degreewise sign twist.
    Bar(Box<GradedFunctional>),
    /// Convolution inverse (requires an invertible degree-zero term).
    Inverse(Box<GradedFunctional>),
}

/// A graded functional with memoized degree components.
#[derive(Debug)]
pub struct GradedFunctional {
    level: usize,
    rule: Rule,
    cache: Mutex<BTreeMap<LPartite, NSymElem>>,
}

impl Clone for GradedFunctional {
    fn clone(&self) -> Self {
        GradedFunctional {
            level: self.level,
            rule: self.rule.clone(),
            cache: Mutex::new(self.cache.lock().expect("cache lock").clone()),
        }
    }
}

impl GradedFunctional {
    pub fn new(level: usize, rule: Rule) -> Result<Self> {
        if level == 0 {
            return Err(Error::precondition("level must be positive"));
        }
        if let Rule::ZetaK(k) | Rule::NuK(k) = &rule {
            if k.level() != level {
                return Err(Error::LevelMismatch(level, k.level()));
            }
        }
        Ok(GradedFunctional {
            level,
            rule,
            cache: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn rule(&self) -> &Rule {
        &self.rule
    }

    pub fn epsilon(level: usize) -> Self {
        GradedFunctional::new(level, Rule::Epsilon).expect("positive level")
    }

    pub fn zeta(level: usize) -> Self {
        GradedFunctional::new(level, Rule::Zeta).expect("positive level")
    }

    pub fn convolve(self, other: GradedFunctional) -> Result<Self> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        GradedFunctional::new(self.level, Rule::Convolve(Box::new(self), Box::new(other)))
    }

    pub fn bar(self) -> Self {
        let level = self.level;
        GradedFunctional::new(level, Rule::Bar(Box::new(self))).expect("positive level")
    }

    pub fn inverse(self) -> Self {
        let level = self.level;
        GradedFunctional::new(level, Rule::Inverse(Box::new(self))).expect("positive level")
    }

    /// The degree-`n` component as an element of the noncommutative side.
    pub fn component(&self, n: &LPartite) -> Result<NSymElem> {
        if n.level() != self.level {
            return Err(Error::LevelMismatch(self.level, n.level()));
        }
        if let Some(hit) = self.cache.lock().expect("cache lock").get(n) {
            return Ok(hit.clone());
        }
        let computed = self.compute(n)?;
        self.cache
            .lock()
            .expect("cache lock")
            .insert(n.clone(), computed.clone());
        Ok(computed)
    }

    fn compute(&self, n: &LPartite) -> Result<NSymElem> {
        let level = self.level;
        match &self.rule {
            Rule::Epsilon => Ok(if n.is_zero() {
                NSymElem::unit(level)
            } else {
                NSymElem::zero(level)
            }),
            Rule::Zeta => Ok(NSymElem::s_of(n)),
            Rule::ZetaBar => Ok(NSymElem::s_of(n).scale(&coef::sign(n.weight() as usize))),
            Rule::ZetaInv => Ok(NSymElem::s_of(n).antipode()),
            Rule::ZetaK(k) => Ok(if k.dominates(n) {
                NSymElem::s_of(n).scale(&coef::sign(n.weight() as usize))
            } else {
                NSymElem::s_of(n)
            }),
            Rule::NuK(k) => {
                let zk = GradedFunctional::new(level, Rule::ZetaK(k.clone()))?;
                let mut out = NSymElem::zero(level);
                for i in n.sub_vectors() {
                    let rest = n.checked_sub(&i)?;
                    let left = zk.component(&i)?.antipode();
                    out = out.add(&left.mul(&NSymElem::s_of(&rest))?)?;
                }
                Ok(out)
            }
            Rule::Chi => {
                if n.is_zero() {
                    Ok(NSymElem::unit(level))
                } else {
                    euler_chi(n)
                }
            }
            Rule::Explicit(map) => Ok(map
                .get(n)
                .cloned()
                .unwrap_or_else(|| NSymElem::zero(level))),
            Rule::Convolve(f, g) => {
                let mut out = NSymElem::zero(level);
                for i in n.sub_vectors() {
                    let rest = n.checked_sub(&i)?;
                    out = out.add(&f.component(&i)?.mul(&g.component(&rest)?)?)?;
                }
                Ok(out)
            }
            Rule::Bar(f) => Ok(f
                .component(n)?
                .scale(&coef::sign(n.weight() as usize))),
            Rule::Inverse(f) => {
                let c0 = f.component(&LPartite::zero(level))?.counit();
                if c0.is_zero() {
                    return Err(Error::precondition(
                        "functional with vanishing unit term has no convolution inverse",
                    ));
                }
                if n.is_zero() {
                    return Ok(NSymElem::unit(level).scale(&c0.recip()));
                }
                let mut acc = NSymElem::zero(level);
                for i in n.sub_vectors() {
                    if i.is_zero() {
                        continue;
                    }
                    let rest = n.checked_sub(&i)?;
                    acc = acc.add(&f.component(&i)?.mul(&self.component(&rest)?)?)?;
                }
                Ok(acc.scale(&-c0.recip()))
            }
        }
    }

    /// Evaluate the functional on an element of the quasisymmetric side.
    pub fn evaluate(&self, g: &QSymElem) -> Result<Coef> {
        if g.level() != self.level {
            return Err(Error::LevelMismatch(self.level, g.level()));
        }
        let mut acc = Coef::zero();
        for n in g.degrees() {
            acc += self.component(&n)?.pair(&g.graded_component(&n))?;
        }
        Ok(acc)
    }

    /// Compare components with another functional for all degrees `n` with
    /// `n <= min(k, bound)` componentwise.
    pub fn agrees_with(
        &self,
        other: &GradedFunctional,
        k: &ExtVec,
        bound: &LPartite,
    ) -> Result<bool> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        let cap = k.min_with(bound);
        for n in cap.sub_vectors() {
            if self.component(&n)? != other.component(&n)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Is the functional k-odd (up to the given weight bound)? That is, does
    /// its degreewise sign twist agree with its convolution inverse in all
    /// degrees `n <= k`?
    pub fn is_k_odd(&self, k: &ExtVec, bound: &LPartite) -> Result<bool> {
        let bar = self.clone().bar();
        let inv = self.clone().inverse();
        bar.agrees_with(&inv, k, bound)
    }

    /// Is the functional k-even (up to the given weight bound)? That is, does
    /// its degreewise sign twist agree with itself in all degrees `n <= k`?
    pub fn is_k_even(&self, k: &ExtVec, bound: &LPartite) -> Result<bool> {
        let bar = self.clone().bar();
        bar.agrees_with(self, k, bound)
    }
}

/// Closed form for `nu^k` on a monomial basis element.
pub fn nu_k_on_monomial(k: &ExtVec, i: &VectorComposition) -> Result<Coef> {
    if k.level() != i.level() {
        return Err(Error::LevelMismatch(k.level(), i.level()));
    }
    let Some(last) = i.cols().last() else {
        return Ok(Coef::one());
    };
    let total = i.total();
    let len = i.len();
    let weight = i.weight() as usize;
    if last.weight() % 2 == 1 && k.dominates(&total) {
        return Ok(coef::from_i64(2) * coef::sign(len + weight));
    }
    let head = total.checked_sub(last)?;
    if (weight - last.weight() as usize) % 2 == 1
        && k.dominates(&head)
        && !k.dominates(&total)
    {
        return Ok(coef::from_i64(2) * coef::sign(len));
    }
    Ok(Coef::zero())
}

/// Closed form for `nu^k` on a fundamental basis element.
///
/// Nonzero only on the unit and on indices of the shape `(E, i)`: a run of
/// weight-one columns followed by one final column.
pub fn nu_k_on_fundamental(k: &ExtVec, i: &VectorComposition) -> Result<Coef> {
    if k.level() != i.level() {
        return Err(Error::LevelMismatch(k.level(), i.level()));
    }
    let Some((last, head)) = i.cols().split_last() else {
        return Ok(Coef::one());
    };
    if head.iter().any(|c| c.weight() != 1) {
        return Ok(Coef::zero());
    }
    let total = i.total();
    let head_sum = total.checked_sub(last)?;
    let e_len = head.len();
    // (1) The whole degree is dominated by k.
    if k.dominates(&total) {
        return Ok(coef::from_i64(2));
    }
    // (2) Odd run length with dominated run degree.
    if e_len % 2 == 1 && k.dominates(&head_sum) {
        return Ok(coef::from_i64(2));
    }
    // (3) Even run length, heavy final column, and domination after adding
    // the coordinate vector at the smallest color in the final column's
    // support (the unique coordinate vector e with (e, i - e) strictly
    // refining (i)).
    if e_len % 2 == 0 && last.weight() > 1 {
        let j = *last.support().first().expect("nonzero column");
        let bumped = head_sum.checked_add(&LPartite::coordinate(i.level(), j))?;
        if k.dominates(&bumped) {
            return Ok(coef::from_i64(2));
        }
    }
    Ok(Coef::zero())
}
