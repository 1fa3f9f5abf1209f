//! Canonical k-odd and k-even Hopf subalgebras of the level-ℓ quasisymmetric
//! functions, their orthogonal ideals in the noncommutative side, membership
//! tests, degreewise bases, and Hilbert series.

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};

use crate::coef::Coef;
use crate::comb::{ExtVec, LPartite, VectorComposition};
use crate::error::Error;
use crate::functionals::GradedFunctional;
use crate::nsym::{euler_chi, NSymBasis, NSymElem};
use crate::qsym::{QSymBasis, QSymElem};
use crate::Result;

/// Which parity condition the subalgebra imposes on small columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// Families of degreewise generators for the orthogonal ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    Phi,
    Upsilon,
    Chi,
    Complete,
}

/// A k-odd or k-even subalgebra specification: level, threshold vector k
/// (entries may be infinite), and the parity imposed on columns ≤ k.
#[derive(Debug, Clone)]
pub struct OddEvenSpec {
    level: usize,
    k: ExtVec,
    parity: Parity,
}

impl OddEvenSpec {
    pub fn new(level: usize, k: ExtVec, parity: Parity) -> Result<Self> {
        if level == 0 {
            return Err(Error::precondition("level must be positive"));
        }
        if k.level() != level {
            return Err(Error::LevelMismatch(level, k.level()));
        }
        Ok(OddEvenSpec { level, k, parity })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn k(&self) -> &ExtVec {
        &self.k
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// True when a column of this weight-parity below the threshold is
    /// excluded from basis indices (its parity disagrees with the spec).
    fn column_allowed(&self, col: &LPartite) -> bool {
        if !self.k.dominates(col) {
            return true;
        }
        match self.parity {
            Parity::Odd => col.weight() % 2 == 1,
            Parity::Even => col.weight() % 2 == 0,
        }
    }

    /// Nonzero degrees n ≤ k of weight ≤ `max_weight` whose parity is wrong
    /// for the subalgebra; these index the ideal generators.
    pub fn excluded_degrees(&self, max_weight: u32) -> Vec<LPartite> {
        let mut out = Vec::new();
        for w in 1..=max_weight {
            for n in VectorComposition::lpartites_of_weight(self.level, w) {
                if !self.column_allowed(&n) {
                    out.push(n);
                }
            }
        }
        out
    }

    /// Compositions of `n` indexing the degree-n basis of the subalgebra:
    /// every column dominated by k must have the spec's weight parity.
    pub fn basis_indices(&self, n: &LPartite) -> Result<Vec<VectorComposition>> {
        if n.level() != self.level {
            return Err(Error::LevelMismatch(self.level, n.level()));
        }
        Ok(VectorComposition::compositions_of(n)
            .into_iter()
            .filter(|i| i.cols().iter().all(|c| self.column_allowed(c)))
            .collect())
    }

    /// Degree-n basis elements of the subalgebra as quasisymmetric elements.
    /// The odd subalgebra is spanned by P- (or η-) basis elements, the even
    /// one by monomial basis elements.
    pub fn basis_elements(&self, n: &LPartite, basis: QSymBasis) -> Result<Vec<QSymElem>> {
        match (self.parity, basis) {
            (Parity::Odd, QSymBasis::P | QSymBasis::Eta) => {}
            (Parity::Even, QSymBasis::M) => {}
            _ => {
                return Err(Error::precondition(
                    "odd subalgebra bases are P or eta; even subalgebra basis is M",
                ))
            }
        }
        Ok(self
            .basis_indices(n)?
            .into_iter()
            .map(|i| QSymElem::basis_elem(basis, i))
            .collect())
    }

    /// Degreewise generators of the orthogonal ideal, one per excluded degree
    /// of weight ≤ `max_weight`.
    pub fn ideal_generators(
        &self,
        kind: GeneratorKind,
        max_weight: u32,
    ) -> Result<Vec<(LPartite, NSymElem)>> {
        match (self.parity, kind) {
            (Parity::Odd, GeneratorKind::Phi | GeneratorKind::Upsilon | GeneratorKind::Chi) => {}
            (Parity::Even, GeneratorKind::Complete) => {}
            _ => {
                return Err(Error::precondition(
                    "odd ideals are generated by Phi/Upsilon/Chi, even ideals by S",
                ))
            }
        }
        let mut out = Vec::new();
        for n in self.excluded_degrees(max_weight) {
            let single = VectorComposition::new(self.level, vec![n.clone()])?;
            let g = match kind {
                GeneratorKind::Phi => NSymElem::basis_elem(NSymBasis::Phi, single),
                GeneratorKind::Upsilon => NSymElem::basis_elem(NSymBasis::Upsilon, single),
                GeneratorKind::Chi => euler_chi(&n)?,
                GeneratorKind::Complete => NSymElem::complete(single),
            };
            out.push((n, g));
        }
        Ok(out)
    }

    /// A spanning set for the degree-d piece of the two-sided ideal generated
    /// by the given family: all products S^A · g · S^B with deg A + deg g +
    /// deg B = d.
    pub fn ideal_degree_span(
        &self,
        gens: &[(LPartite, NSymElem)],
        d: &LPartite,
    ) -> Result<Vec<NSymElem>> {
        let mut out = Vec::new();
        for (gdeg, g) in gens {
            let Ok(rest) = d.checked_sub(gdeg) else {
                continue;
            };
            for a in rest.sub_vectors() {
                let b = rest.checked_sub(&a)?;
                for ia in VectorComposition::compositions_of(&a) {
                    let left = NSymElem::complete(ia);
                    for ib in VectorComposition::compositions_of(&b) {
                        let right = NSymElem::complete(ib);
                        out.push(left.mul(g)?.mul(&right)?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Dimension of the degree-d piece of the ideal generated by the family.
    pub fn ideal_degree_dim(
        &self,
        gens: &[(LPartite, NSymElem)],
        d: &LPartite,
    ) -> Result<usize> {
        let span = self.ideal_degree_span(gens, d)?;
        Ok(rank_of_elements(&span))
    }

    /// Membership in the subalgebra via the middle-functional test: a lies in
    /// the subalgebra iff applying (φ_n − ψ_n) to the middle leg of the
    /// double deconcatenation kills a, for every excluded degree n, where
    /// (φ, ψ) = (signed counit, inverse counit) in the odd case and (signed
    /// counit, counit) in the even case.
    pub fn membership(&self, a: &QSymElem) -> Result<bool> {
        if a.level() != self.level {
            return Err(Error::LevelMismatch(self.level, a.level()));
        }
        let zeta_bar = GradedFunctional::zeta(self.level).bar();
        let other = match self.parity {
            Parity::Odd => GradedFunctional::zeta(self.level).inverse(),
            Parity::Even => GradedFunctional::zeta(self.level),
        };
        // Collect the degrees n ≤ k that can occur as a middle segment.
        let max_w = a.degrees().iter().map(|d| d.weight()).max().unwrap_or(0);
        for n in self.excluded_degrees(max_w) {
            let f = zeta_bar.component(&n)?.sub(&other.component(&n)?)?;
            if f.is_zero() {
                continue;
            }
            if !middle_slot_kills(a, &n, &f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership decided by expanding in the indexing basis (P for odd, M
    /// for even) and checking the support against `basis_indices`. Serves as
    /// an independent cross-check of `membership`.
    pub fn membership_by_span(&self, a: &QSymElem) -> Result<bool> {
        if a.level() != self.level {
            return Err(Error::LevelMismatch(self.level, a.level()));
        }
        let basis = match self.parity {
            Parity::Odd => QSymBasis::P,
            Parity::Even => QSymBasis::M,
        };
        Ok(a.to_basis(basis)
            .keys()
            .all(|i| i.cols().iter().all(|c| self.column_allowed(c))))
    }

    /// Hilbert series of the odd subalgebra from the closed rational form,
    /// as coefficients indexed by multidegree up to total weight `max_weight`.
    pub fn hilbert_closed(&self, max_weight: u32) -> Result<BTreeMap<LPartite, BigInt>> {
        if self.parity != Parity::Odd {
            return Err(Error::precondition(
                "the closed-form Hilbert series is available for the odd subalgebra only",
            ));
        }
        let l = self.level;
        // Numerator ∏ (1 - t_i^2).
        let mut numer = TruncPoly::one(l, max_weight);
        for i in 0..l {
            numer = numer.mul(&TruncPoly::binomial(l, max_weight, i, 2, -1));
        }
        // Denominator ∏(1-t_i^2) - ∏(1+t_i) + Σ_{|b| even} ∏ t_i^{b_i} (1 - t_i^{e_i}).
        let mut plus = TruncPoly::one(l, max_weight);
        for i in 0..l {
            plus = plus.mul(&TruncPoly::binomial(l, max_weight, i, 1, 1));
        }
        let mut denom = numer.sub(&plus);
        for mask in 0u32..(1 << l) {
            if (mask.count_ones() % 2) != 0 {
                continue;
            }
            let mut term = TruncPoly::one(l, max_weight);
            for i in 0..l {
                let b = ((mask >> i) & 1) as i64;
                let factor = match self.k.0[i] {
                    crate::comb::ExtNat::Inf => {
                        // t_i^{e} vanishes in the limit: factor is t_i^{b_i}.
                        TruncPoly::monomial_var(l, max_weight, i, b as u32)
                    }
                    crate::comb::ExtNat::Finite(ki) => {
                        let e = 2 * (ki as i64 - b).div_euclid(2) + 2;
                        if e <= 0 {
                            TruncPoly::zero(l, max_weight)
                        } else {
                            TruncPoly::monomial_var(l, max_weight, i, b as u32)
                                .mul(&TruncPoly::binomial(l, max_weight, i, e as u32, -1))
                        }
                    }
                };
                term = term.mul(&factor);
            }
            denom = denom.add(&term);
        }
        let series = numer.mul(&denom.invert()?);
        Ok(series
            .terms
            .into_iter()
            .map(|(e, c)| (LPartite::new(e), c))
            .collect())
    }

    /// Hilbert series by directly counting basis indices degree by degree.
    pub fn hilbert_enumerate(&self, max_weight: u32) -> Result<BTreeMap<LPartite, BigInt>> {
        let mut out = BTreeMap::new();
        out.insert(LPartite::zero(self.level), BigInt::one());
        for w in 1..=max_weight {
            for n in VectorComposition::lpartites_of_weight(self.level, w) {
                let count = self.basis_indices(&n)?.len();
                out.insert(n, BigInt::from(count));
            }
        }
        Ok(out)
    }
}

/// Collapse a multidegree-indexed series to weight grading: coefficient of
/// t^w is the sum over all multidegrees of weight w.
pub fn weight_graded(series: &BTreeMap<LPartite, BigInt>, max_weight: u32) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); (max_weight + 1) as usize];
    for (n, c) in series {
        let w = n.weight();
        if w <= max_weight {
            out[w as usize] += c;
        }
    }
    out
}

/// Apply the noncommutative element `f` (of homogeneous degree `n`) to the
/// middle leg of the double deconcatenation of `a`; returns true iff the
/// resulting two-leg tensor vanishes.
fn middle_slot_kills(a: &QSymElem, n: &LPartite, f: &NSymElem) -> Result<bool> {
    let mut acc: BTreeMap<(VectorComposition, VectorComposition), Coef> = BTreeMap::new();
    for (i, c) in a.terms() {
        let cols = i.cols();
        let m = cols.len();
        for start in 0..=m {
            for end in start..=m {
                let mid = VectorComposition::new(a.level(), cols[start..end].to_vec())?;
                if &mid.total() != n {
                    continue;
                }
                let val = f.pair(&QSymElem::monomial(mid))?;
                if val.is_zero() {
                    continue;
                }
                let left = VectorComposition::new(a.level(), cols[..start].to_vec())?;
                let right = VectorComposition::new(a.level(), cols[end..].to_vec())?;
                let entry = acc.entry((left, right)).or_insert_with(Coef::zero);
                *entry += c.clone() * val;
                // Normalize away exact zeros as we go.
            }
        }
    }
    Ok(acc.values().all(|v| v.is_zero()))
}

/// Rank over ℚ of a family of noncommutative elements, in S-coordinates.
pub fn rank_of_elements(elems: &[NSymElem]) -> usize {
    let mut columns: BTreeMap<VectorComposition, usize> = BTreeMap::new();
    for e in elems {
        for i in e.terms().keys() {
            let next = columns.len();
            columns.entry(i.clone()).or_insert(next);
        }
    }
    let ncols = columns.len();
    let rows: Vec<Vec<Coef>> = elems
        .iter()
        .filter(|e| !e.is_zero())
        .map(|e| {
            let mut row = vec![Coef::zero(); ncols];
            for (i, c) in e.terms() {
                row[columns[i]] = c.clone();
            }
            row
        })
        .collect();
    rank_of_matrix(rows)
}

/// Row rank of an exact rational matrix by Gaussian elimination with
/// canonical (leftmost-column) pivoting.
pub fn rank_of_matrix(mut rows: Vec<Vec<Coef>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone() / inv.clone();
            for c in col..ncols {
                let delta = factor.clone() * rows[rank][c].clone();
                rows[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Do two spanning families span the same subspace (in S-coordinates)?
pub fn same_span(a: &[NSymElem], b: &[NSymElem]) -> bool {
    let ra = rank_of_elements(a);
    let rb = rank_of_elements(b);
    if ra != rb {
        return false;
    }
    let mut both: Vec<NSymElem> = a.to_vec();
    both.extend_from_slice(b);
    rank_of_elements(&both) == ra
}

/// Integer-coefficient multivariate polynomial truncated beyond a total
/// degree bound; enough power-series arithmetic for the Hilbert series.
#[derive(Debug, Clone)]
struct TruncPoly {
    level: usize,
    max_weight: u32,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl TruncPoly {
    fn zero(level: usize, max_weight: u32) -> Self {
        TruncPoly {
            level,
            max_weight,
            terms: BTreeMap::new(),
        }
    }

    fn one(level: usize, max_weight: u32) -> Self {
        let mut p = Self::zero(level, max_weight);
        p.terms.insert(vec![0; level], BigInt::one());
        p
    }

    /// t_i^e (zero if e exceeds the truncation).
    fn monomial_var(level: usize, max_weight: u32, var: usize, e: u32) -> Self {
        let mut p = Self::zero(level, max_weight);
        if e <= max_weight {
            let mut exps = vec![0; level];
            exps[var] = e;
            p.terms.insert(exps, BigInt::one());
        }
        p
    }

    /// 1 + sign · t_i^e.
    fn binomial(level: usize, max_weight: u32, var: usize, e: u32, sign: i32) -> Self {
        let mut p = Self::one(level, max_weight);
        if e <= max_weight {
            let mut exps = vec![0; level];
            exps[var] = e;
            p.terms.insert(exps, BigInt::from(sign));
        }
        p
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        if exps.iter().sum::<u32>() > self.max_weight || c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    fn add(&self, other: &TruncPoly) -> TruncPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    fn sub(&self, other: &TruncPoly) -> TruncPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    fn mul(&self, other: &TruncPoly) -> TruncPoly {
        let mut out = TruncPoly::zero(self.level, self.max_weight);
        for (e1, c1) in &self.terms {
            let w1: u32 = e1.iter().sum();
            for (e2, c2) in &other.terms {
                let w2: u32 = e2.iter().sum();
                if w1 + w2 > self.max_weight {
                    continue;
                }
                let exps: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exps, c1 * c2);
            }
        }
        out
    }

    /// Multiplicative inverse as a truncated power series; requires constant
    /// term ±1 (which the Hilbert denominator always has).
    fn invert(&self) -> Result<TruncPoly> {
        let c0 = self
            .terms
            .get(&vec![0; self.level])
            .cloned()
            .unwrap_or_else(BigInt::zero);
        if c0 != BigInt::one() && c0 != -BigInt::one() {
            return Err(Error::precondition(
                "series inversion requires unit constant term",
            ));
        }
        // With D = c0(1 - E), E having no constant term:
        // D^{-1} = c0^{-1} (1 + E + E^2 + ...), truncated.
        let mut e = TruncPoly::one(self.level, self.max_weight).sub(&self.scale_by(&c0));
        let mut acc = TruncPoly::one(self.level, self.max_weight);
        let mut pow = TruncPoly::one(self.level, self.max_weight);
        for _ in 0..self.max_weight {
            pow = pow.mul(&e);
            if pow.terms.is_empty() {
                break;
            }
            acc = acc.add(&pow);
        }
        e = acc.scale_by(&c0);
        Ok(e)
    }

    fn scale_by(&self, c: &BigInt) -> TruncPoly {
        let mut out = TruncPoly::zero(self.level, self.max_weight);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }
}

/// The symmetric power sums with all parts allowed by the odd spec span a
/// subspace of the subalgebra; this helper exposes the allowed part test.
pub fn part_allowed(spec: &OddEvenSpec, part: &LPartite) -> bool {
    spec.column_allowed(part)
}
