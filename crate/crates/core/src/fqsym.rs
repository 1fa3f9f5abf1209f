//! Level-ℓ free quasisymmetric functions: formal linear combinations of
//! colored permutations with the shifted-shuffle product, the subword-
//! standardization coproduct, the embedding of the complete noncommutative
//! symmetric functions, and the abelianization onto quasisymmetric functions.

use std::collections::{BTreeMap, BTreeSet};

use num::Zero;

use crate::coef::{self, Coef};
use crate::comb::{comp_of_color_word, ColoredPermutation, LPartite};
use crate::error::Error;
use crate::posets::ColoredPoset;
use crate::qsym::QSymElem;
use crate::Result;

/// An element of the free quasisymmetric algebra: a finitely supported
/// rational combination of colored permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FQSymElem {
    level: usize,
    terms: BTreeMap<ColoredPermutation, Coef>,
}

/// A sum of two-leg tensors of colored permutations (coproduct values).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FQSymTensor {
    level: usize,
    terms: BTreeMap<(ColoredPermutation, ColoredPermutation), Coef>,
}

impl FQSymElem {
    pub fn zero(level: usize) -> Self {
        FQSymElem {
            level,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(level: usize) -> Self {
        let mut e = Self::zero(level);
        e.terms.insert(
            ColoredPermutation::new(vec![], vec![]).expect("empty permutation"),
            coef::from_i64(1),
        );
        e
    }

    pub fn basis_elem(level: usize, p: ColoredPermutation) -> Result<Self> {
        if p.colors().iter().any(|&c| (c as usize) >= level) {
            return Err(Error::precondition("color exceeds level"));
        }
        let mut e = Self::zero(level);
        e.terms.insert(p, coef::from_i64(1));
        Ok(e)
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn terms(&self) -> &BTreeMap<ColoredPermutation, Coef> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_assign_term(&mut self, p: ColoredPermutation, c: Coef) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p).or_insert_with(Coef::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find_map(|(k, v)| v.is_zero().then(|| k.clone()));
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &FQSymElem) -> Result<FQSymElem> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_assign_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coef) -> FQSymElem {
        if c.is_zero() {
            return FQSymElem::zero(self.level);
        }
        let mut out = FQSymElem::zero(self.level);
        for (p, v) in &self.terms {
            out.terms.insert(p.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FQSymElem) -> Result<FQSymElem> {
        self.add(&other.scale(&-coef::from_i64(1)))
    }

    /// Shifted-shuffle product: shuffle the first word with the second
    /// shifted up, colors riding along with their letters.
    pub fn mul(&self, other: &FQSymElem) -> Result<FQSymElem> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        let mut out = FQSymElem::zero(self.level);
        for (p, cp) in &self.terms {
            for (q, cq) in &other.terms {
                let coef = cp.clone() * cq.clone();
                let shift = p.n();
                let a: Vec<(usize, u8)> = p
                    .sigma()
                    .iter()
                    .zip(p.colors())
                    .map(|(&s, &c)| (s, c))
                    .collect();
                let b: Vec<(usize, u8)> = q
                    .sigma()
                    .iter()
                    .zip(q.colors())
                    .map(|(&s, &c)| (s + shift, c))
                    .collect();
                for word in shuffle_words(&a, &b) {
                    let (sigma, colors): (Vec<usize>, Vec<u8>) = word.into_iter().unzip();
                    out.add_assign_term(ColoredPermutation::new(sigma, colors)?, coef.clone());
                }
            }
        }
        Ok(out)
    }

    /// Coproduct: split the word into a prefix and suffix and standardize
    /// both parts.
    pub fn coproduct(&self) -> Result<FQSymTensor> {
        let mut out = FQSymTensor::zero(self.level);
        for (p, c) in &self.terms {
            let n = p.n();
            for cut in 0..=n {
                let left =
                    ColoredPermutation::standardize(&p.sigma()[..cut], &p.colors()[..cut])?;
                let right =
                    ColoredPermutation::standardize(&p.sigma()[cut..], &p.colors()[cut..])?;
                out.add_assign_term(left, right, c.clone());
            }
        }
        Ok(out)
    }

    pub fn counit(&self) -> Coef {
        self.terms
            .iter()
            .filter(|(p, _)| p.n() == 0)
            .map(|(_, c)| c.clone())
            .fold(Coef::zero(), |a, b| a + b)
    }

    pub fn degrees(&self) -> Vec<LPartite> {
        let set: BTreeSet<LPartite> = self.terms.keys().map(|p| p.mdeg(self.level)).collect();
        set.into_iter().collect()
    }

    pub fn graded_component(&self, n: &LPartite) -> FQSymElem {
        let mut out = FQSymElem::zero(self.level);
        for (p, c) in &self.terms {
            if &p.mdeg(self.level) == n {
                out.terms.insert(p.clone(), c.clone());
            }
        }
        out
    }

    /// Antipode computed from the graded convolution recursion.
    pub fn antipode(&self) -> Result<FQSymElem> {
        let mut out = FQSymElem::zero(self.level);
        let mut cache: BTreeMap<ColoredPermutation, FQSymElem> = BTreeMap::new();
        for (p, c) in &self.terms {
            let s = self.antipode_basis(p, &mut cache)?;
            out = out.add(&s.scale(c))?;
        }
        Ok(out)
    }

    fn antipode_basis(
        &self,
        p: &ColoredPermutation,
        cache: &mut BTreeMap<ColoredPermutation, FQSymElem>,
    ) -> Result<FQSymElem> {
        if let Some(hit) = cache.get(p) {
            return Ok(hit.clone());
        }
        if p.n() == 0 {
            return Ok(FQSymElem::unit(self.level));
        }
        // S(x) = -x - sum S(x') * x'' over proper splits.
        let mut acc = FQSymElem::basis_elem(self.level, p.clone())?.scale(&-coef::from_i64(1));
        for cut in 1..p.n() {
            let left = ColoredPermutation::standardize(&p.sigma()[..cut], &p.colors()[..cut])?;
            let right = ColoredPermutation::standardize(&p.sigma()[cut..], &p.colors()[cut..])?;
            let s_left = self.antipode_basis(&left, cache)?;
            let prod = s_left.mul(&FQSymElem::basis_elem(self.level, right)?)?;
            acc = acc.sub(&prod)?;
        }
        cache.insert(p.clone(), acc.clone());
        Ok(acc)
    }

    /// Abelianization to quasisymmetric functions: each colored permutation
    /// contributes the monomial terms between its weighted descent
    /// composition and the all-coordinate-column composition of its colors.
    pub fn d_map(&self) -> Result<QSymElem> {
        let mut out = QSymElem::zero(self.level);
        for (p, c) in &self.terms {
            let des = p.descents();
            let u = p.colors().to_vec();
            let n = p.n();
            let free: Vec<usize> = (1..n).filter(|pos| !des.contains(pos)).collect();
            for mask in 0u32..(1 << free.len()) {
                let mut dof: BTreeSet<usize> = des.clone();
                for (b, &pos) in free.iter().enumerate() {
                    if (mask >> b) & 1 == 1 {
                        dof.insert(pos);
                    }
                }
                let i = comp_of_color_word(self.level, &u, &dof)?;
                out.add_assign_term(i, c.clone());
            }
        }
        Ok(out)
    }
}

impl FQSymTensor {
    pub fn zero(level: usize) -> Self {
        FQSymTensor {
            level,
            terms: BTreeMap::new(),
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn terms(&self) -> &BTreeMap<(ColoredPermutation, ColoredPermutation), Coef> {
        &self.terms
    }

    pub fn add_assign_term(
        &mut self,
        l: ColoredPermutation,
        r: ColoredPermutation,
        c: Coef,
    ) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((l, r)).or_insert_with(Coef::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find_map(|(k, v)| v.is_zero().then(|| k.clone()));
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    /// Multiply the legs back together (for the antipode identity tests).
    pub fn fold_mul(&self, antipode_leg: Option<usize>) -> Result<FQSymElem> {
        let mut out = FQSymElem::zero(self.level);
        for ((l, r), c) in &self.terms {
            let mut le = FQSymElem::basis_elem(self.level, l.clone())?;
            let mut re = FQSymElem::basis_elem(self.level, r.clone())?;
            match antipode_leg {
                Some(0) => le = le.antipode()?,
                Some(1) => re = re.antipode()?,
                _ => {}
            }
            out = out.add(&le.mul(&re)?.scale(c))?;
        }
        Ok(out)
    }
}

/// All shuffles of two sequences of (letter, color) pairs.
fn shuffle_words(a: &[(usize, u8)], b: &[(usize, u8)]) -> Vec<Vec<(usize, u8)>> {
    if a.is_empty() {
        return vec![b.to_vec()];
    }
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for mut w in shuffle_words(&a[1..], b) {
        w.insert(0, a[0]);
        out.push(w);
    }
    for mut w in shuffle_words(a, &b[1..]) {
        w.insert(0, b[0]);
        out.push(w);
    }
    out
}

/// The complete noncommutative symmetric function of a multidegree, realized
/// inside the free quasisymmetric algebra: the sum of identity-permutation
/// terms over all color words of that multidegree.
pub fn s_embed(n: &LPartite) -> Result<FQSymElem> {
    let level = n.level();
    let len = n.weight() as usize;
    let mut out = FQSymElem::zero(level);
    let mut word = Vec::with_capacity(len);
    fn rec(
        out: &mut FQSymElem,
        word: &mut Vec<u8>,
        remaining: &LPartite,
        len: usize,
    ) -> Result<()> {
        if word.len() == len {
            let p = ColoredPermutation::identity(len, word.clone())?;
            out.add_assign_term(p, coef::from_i64(1));
            return Ok(());
        }
        for c in 0..remaining.level() {
            if remaining.0[c] > 0 {
                let mut next = remaining.clone();
                next.0[c] -= 1;
                word.push(c as u8);
                rec(out, word, &next, len)?;
                word.pop();
            }
        }
        Ok(())
    }
    rec(&mut out, &mut word, n, len)?;
    Ok(out)
}

/// The free quasisymmetric generating function of a colored poset: the sum
/// of its linear extensions as basis elements.
pub fn gamma_hat(p: &ColoredPoset) -> Result<FQSymElem> {
    let mut out = FQSymElem::zero(p.level());
    for ext in p.linear_extensions()? {
        out.add_assign_term(ext, coef::from_i64(1));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsym::{sym_h, QSymBasis};

    fn perm(sigma: &[usize], colors: &[u8]) -> ColoredPermutation {
        ColoredPermutation::new(sigma.to_vec(), colors.to_vec()).unwrap()
    }

    fn basis(level: usize, sigma: &[usize], colors: &[u8]) -> FQSymElem {
        FQSymElem::basis_elem(level, perm(sigma, colors)).unwrap()
    }

    #[test]
    fn shifted_shuffle_product_worked_example() {
        let a = basis(3, &[2, 1], &[0, 2]);
        let b = basis(3, &[1, 2], &[1, 0]);
        let prod = a.mul(&b).unwrap();
        let expect = [
            (vec![2, 1, 3, 4], vec![0, 2, 1, 0]),
            (vec![2, 3, 1, 4], vec![0, 1, 2, 0]),
            (vec![2, 3, 4, 1], vec![0, 1, 0, 2]),
            (vec![3, 2, 4, 1], vec![1, 0, 0, 2]),
            (vec![3, 2, 1, 4], vec![1, 0, 2, 0]),
            (vec![3, 4, 2, 1], vec![1, 0, 0, 2]),
        ];
        assert_eq!(prod.terms().len(), 6);
        for (sigma, colors) in expect {
            assert_eq!(
                prod.terms().get(&perm(&sigma, &colors)).cloned().unwrap(),
                coef::from_i64(1),
                "term {:?}",
                sigma
            );
        }
    }

    #[test]
    fn unit_law() {
        let a = basis(2, &[2, 1, 3], &[0, 1, 1]);
        let u = FQSymElem::unit(2);
        assert_eq!(a.mul(&u).unwrap(), a);
        assert_eq!(u.mul(&a).unwrap(), a);
    }

    #[test]
    fn product_term_count_is_binomial() {
        let a = basis(1, &[1, 2], &[0, 0]);
        let b = basis(1, &[2, 1, 3], &[0, 0, 0]);
        // All shuffles distinct: C(5,2) = 10 terms.
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.terms().len(), 10);
    }

    #[test]
    fn coproduct_worked_example() {
        let a = basis(3, &[1, 4, 2, 3], &[0, 0, 2, 1]);
        let cop = a.coproduct().unwrap();
        let expect = [
            (vec![], vec![], vec![1, 4, 2, 3], vec![0, 0, 2, 1]),
            (vec![1], vec![0], vec![3, 1, 2], vec![0, 2, 1]),
            (vec![1, 2], vec![0, 0], vec![1, 2], vec![2, 1]),
            (vec![1, 3, 2], vec![0, 0, 2], vec![1], vec![1]),
            (vec![1, 4, 2, 3], vec![0, 0, 2, 1], vec![], vec![]),
        ];
        assert_eq!(cop.terms().len(), 5);
        for (ls, lc, rs, rc) in expect {
            let key = (perm(&ls, &lc), perm(&rs, &rc));
            assert_eq!(
                cop.terms().get(&key).cloned().unwrap(),
                coef::from_i64(1),
                "split {:?} | {:?}",
                ls,
                rs
            );
        }
    }

    #[test]
    fn coproduct_of_singleton() {
        let a = basis(2, &[1], &[1]);
        let cop = a.coproduct().unwrap();
        assert_eq!(cop.terms().len(), 2);
    }

    #[test]
    fn coassociativity_small() {
        // (Delta x id) Delta = (id x Delta) Delta on a sample of terms,
        // compared through the three-leg expansion.
        let samples = [
            basis(2, &[2, 1, 3], &[0, 1, 1]),
            basis(2, &[3, 1, 2, 4], &[1, 0, 0, 1]),
        ];
        for a in samples {
            let mut lhs: BTreeMap<
                (ColoredPermutation, ColoredPermutation, ColoredPermutation),
                Coef,
            > = BTreeMap::new();
            for ((l, r), c) in a.coproduct().unwrap().terms() {
                let le = FQSymElem::basis_elem(2, l.clone()).unwrap();
                for ((ll, lr), c2) in le.coproduct().unwrap().terms() {
                    *lhs.entry((ll.clone(), lr.clone(), r.clone()))
                        .or_insert_with(Coef::zero) += c.clone() * c2.clone();
                }
            }
            let mut rhs: BTreeMap<
                (ColoredPermutation, ColoredPermutation, ColoredPermutation),
                Coef,
            > = BTreeMap::new();
            for ((l, r), c) in a.coproduct().unwrap().terms() {
                let re = FQSymElem::basis_elem(2, r.clone()).unwrap();
                for ((rl, rr), c2) in re.coproduct().unwrap().terms() {
                    *rhs.entry((l.clone(), rl.clone(), rr.clone()))
                        .or_insert_with(Coef::zero) += c.clone() * c2.clone();
                }
            }
            lhs.retain(|_, v| !v.is_zero());
            rhs.retain(|_, v| !v.is_zero());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn antipode_convolution_identity() {
        let a = basis(2, &[2, 1, 3], &[0, 1, 1]);
        let folded = a.coproduct().unwrap().fold_mul(Some(0)).unwrap();
        assert_eq!(folded, FQSymElem::unit(2).scale(&a.counit()));
    }

    #[test]
    fn d_of_basis_is_fundamental_when_colors_descend_within_descents() {
        for n in 1..=4usize {
            for p in all_colored_perms(n, 2) {
                let des_sigma = p.descents();
                let des_u: BTreeSet<usize> = (1..n)
                    .filter(|&i| p.colors()[i - 1] > p.colors()[i])
                    .collect();
                if !des_u.is_subset(&des_sigma) {
                    continue;
                }
                let d = FQSymElem::basis_elem(2, p.clone())
                    .unwrap()
                    .d_map()
                    .unwrap();
                let wdes = p.wdes(2).unwrap();
                let f = QSymElem::basis_elem(QSymBasis::F, wdes);
                assert_eq!(d, f, "perm {:?}", p);
            }
        }
    }

    fn all_colored_perms(n: usize, level: u8) -> Vec<ColoredPermutation> {
        use itertools::Itertools;
        let mut out = Vec::new();
        for sigma in (1..=n).permutations(n) {
            let words = std::iter::repeat(0..level)
                .take(n)
                .multi_cartesian_product();
            for w in words {
                out.push(ColoredPermutation::new(sigma.clone(), w).unwrap());
            }
        }
        out
    }

    #[test]
    fn d_of_s_embed_is_complete_homogeneous() {
        for n in [
            LPartite::new(vec![2, 0]),
            LPartite::new(vec![1, 1]),
            LPartite::new(vec![2, 1]),
        ] {
            let s = s_embed(&n).unwrap();
            assert_eq!(s.d_map().unwrap(), sym_h(&n));
        }
    }

    #[test]
    fn d_is_an_algebra_morphism() {
        let a = basis(2, &[2, 1], &[0, 1]);
        let b = basis(2, &[1], &[1]);
        let lhs = a.mul(&b).unwrap().d_map().unwrap();
        let rhs = a.d_map().unwrap().mul(&b.d_map().unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn s_embed_span_closed_under_coproduct() {
        // Delta(S_n) = sum S_i (x) S_{n-i} realized inside the free algebra.
        let n = LPartite::new(vec![1, 1]);
        let s = s_embed(&n).unwrap();
        let cop = s.coproduct().unwrap();
        let mut expect = FQSymTensor::zero(2);
        for i in n.sub_vectors() {
            let j = n.checked_sub(&i).unwrap();
            for (l, cl) in s_embed(&i).unwrap().terms() {
                for (r, cr) in s_embed(&j).unwrap().terms() {
                    expect.add_assign_term(l.clone(), r.clone(), cl.clone() * cr.clone());
                }
            }
        }
        assert_eq!(cop.terms(), expect.terms());
    }

    #[test]
    fn gamma_factors_through_the_free_algebra() {
        let p = ColoredPoset::new(2, vec![1, 0, 0], &[(1, 2), (1, 3)]).unwrap();
        let via_hat = gamma_hat(&p).unwrap().d_map().unwrap();
        assert_eq!(via_hat, p.gamma().unwrap());
    }
}
