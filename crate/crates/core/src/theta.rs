//! Coalgebra morphisms induced by linear functionals, the descents-to-peaks
//! maps (the infinite-threshold map and its k-analogues at level 1), peak
//! quasisymmetric functions, and the dictionary between the eta basis and
//! peak functions.

use std::collections::BTreeSet;

use num::Zero;

use crate::coef::{self, Coef};
use crate::comb::{
    comp_from_peaks, is_admissible, is_peak_set, odd_part, pof, tilde, LPartite,
    VectorComposition,
};
use crate::error::Error;
use crate::functionals::GradedFunctional;
use crate::qsym::{QSymBasis, QSymElem};
use crate::Result;

/// A peak set together with a color word, indexing a peak function.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PeakPair {
    pub s: BTreeSet<usize>,
    pub u: Vec<u8>,
}

impl PeakPair {
    pub fn new(s: BTreeSet<usize>, u: Vec<u8>) -> Result<Self> {
        if !is_peak_set(&s, u.len()) {
            return Err(Error::precondition(
                "peak set must lie in {2,..,n-1} with no adjacent elements",
            ));
        }
        Ok(PeakPair { s, u })
    }

    /// Admissible pairs are those recovered from an odd vector composition;
    /// they index a basis of the peak algebra.
    pub fn is_admissible(&self, level: usize) -> Result<bool> {
        is_admissible(level, &self.s, &self.u)
    }
}

/// The unique coalgebra morphism Ψ with counit-composition equal to `f`,
/// applied to `a`: on a monomial term indexed by I, sum over factorizations
/// of I into nonempty consecutive blocks, each block contributing the scalar
/// f(M_block), and record the composition of block sums.
pub fn induced_map(f: &GradedFunctional, a: &QSymElem) -> Result<QSymElem> {
    if f.level() != a.level() {
        return Err(Error::LevelMismatch(f.level(), a.level()));
    }
    let level = a.level();
    let mut out = QSymElem::zero(level);
    for (i, c) in a.terms() {
        if i.is_empty() {
            out.add_assign_term(i.clone(), c.clone());
            continue;
        }
        for blocks in i.splits_nonempty() {
            let mut scalar = c.clone();
            let mut sums: Vec<LPartite> = Vec::with_capacity(blocks.len());
            for &(s, e) in &blocks {
                let block = VectorComposition::new(level, i.cols()[s..e].to_vec())?;
                let v = f.evaluate(&QSymElem::monomial(block.clone()))?;
                if v.is_zero() {
                    scalar = Coef::zero();
                    break;
                }
                scalar *= v;
                sums.push(block.total());
            }
            if !scalar.is_zero() {
                out.add_assign_term(VectorComposition::new(level, sums)?, scalar);
            }
        }
    }
    Ok(out)
}

/// All coarsenings of `fine` (sums of consecutive blocks), with coefficients
/// 2^{length}, filtered by a predicate on the coarsening.
fn coarsening_sum(
    fine: &VectorComposition,
    mut keep: impl FnMut(&VectorComposition) -> bool,
) -> QSymElem {
    let mut out = QSymElem::zero(fine.level());
    for blocks in fine.splits_nonempty() {
        let j = fine.coarsen(&blocks);
        if keep(&j) {
            let c = coef::pow2(j.len() as i64);
            out.add_assign_term(j, c);
        }
    }
    out
}

/// The peak function indexed by (S, u): the sum of 2^{len(J)} M_J over all
/// coarsenings J of the all-coordinate-column composition of u such that
/// every element of S lies in dof(J) or dof(J)+1.
pub fn peak_function(level: usize, p: &PeakPair) -> Result<QSymElem> {
    if !is_peak_set(&p.s, p.u.len()) {
        return Err(Error::precondition("invalid peak set for the color word"));
    }
    if p.u.iter().any(|&c| (c as usize) >= level) {
        return Err(Error::precondition("color word entry exceeds level"));
    }
    let cols: Vec<LPartite> = p
        .u
        .iter()
        .map(|&c| LPartite::coordinate(level, c as usize))
        .collect();
    let e_u = VectorComposition::new(level, cols)?;
    Ok(coarsening_sum(&e_u, |j| {
        let dof = j.dof();
        p.s.iter().all(|&s| dof.contains(&s) || (s >= 1 && dof.contains(&(s - 1))))
    }))
}

/// The descents-to-peaks map applied to a single monomial basis element:
/// zero unless the last column has odd weight, in which case the image is a
/// signed eta basis element at the odd coarsening.
pub fn theta_inf_on_monomial(i: &VectorComposition) -> Result<QSymElem> {
    if i.is_empty() {
        return Ok(QSymElem::unit(i.level()));
    }
    if i.cols().last().unwrap().weight() % 2 == 0 {
        return Ok(QSymElem::zero(i.level()));
    }
    let o = odd_part(i)?;
    let sign = coef::sign((i.len() + i.weight() as usize) % 2);
    Ok(QSymElem::basis_elem(QSymBasis::Eta, o).scale(&sign))
}

/// The descents-to-peaks map applied to a single fundamental basis element:
/// the peak function indexed by the peak set and coloring word of the index.
pub fn theta_inf_on_fundamental(i: &VectorComposition) -> Result<QSymElem> {
    let p = PeakPair::new(pof(i), i.cof())?;
    peak_function(i.level(), &p)
}

/// The descents-to-peaks map extended linearly; `input_basis` states how the
/// element should be read (monomial or fundamental coordinates).
pub fn theta_inf(a: &QSymElem, input_basis: QSymBasis) -> Result<QSymElem> {
    let mut out = QSymElem::zero(a.level());
    match input_basis {
        QSymBasis::M => {
            for (i, c) in a.terms() {
                out = out.add(&theta_inf_on_monomial(i)?.scale(c))?;
            }
        }
        QSymBasis::F => {
            for (i, c) in a.to_basis(QSymBasis::F) {
                out = out.add(&theta_inf_on_fundamental(&i)?.scale(&c))?;
            }
        }
        _ => {
            return Err(Error::precondition(
                "descents-to-peaks closed forms exist for the M and F bases",
            ))
        }
    }
    Ok(out)
}

/// The level-1 k-analogue of the descents-to-peaks map on a fundamental
/// basis element. For even k the map coincides with the one for k−1.
pub fn theta_k_level1_on_fundamental(i: &VectorComposition, k: u32) -> Result<QSymElem> {
    if i.level() != 1 {
        return Err(Error::precondition(
            "the k-analogue closed form is for level 1",
        ));
    }
    if k == 0 {
        return Err(Error::precondition("threshold must be positive"));
    }
    let k = if k % 2 == 0 { k - 1 } else { k };
    let n = i.total();
    let full = VectorComposition::new(
        1,
        std::iter::repeat(LPartite::new(vec![1]))
            .take(n.weight() as usize)
            .collect(),
    )?;
    let peaks = pof(i);
    let dof_i = i.dof();
    Ok(coarsening_sum(&full, |j| {
        let dof = j.dof();
        let peak_ok = peaks
            .iter()
            .all(|&s| dof.contains(&s) || (s >= 1 && dof.contains(&(s - 1))));
        if !peak_ok {
            return false;
        }
        // A block may open with up to k descents; the allowed positions are
        // dof(J) together with up to k successors of each block start
        // (including the start of the first block at position 0).
        dof_i.iter().all(|&d| {
            if dof.contains(&d) {
                return true;
            }
            (1..=k as usize).any(|step| {
                d >= step && {
                    let base = d - step;
                    base == 0 || dof.contains(&base)
                }
            })
        })
    }))
}

/// The level-1 k-analogue extended linearly over fundamental coordinates.
pub fn theta_k_level1(a: &QSymElem, k: u32) -> Result<QSymElem> {
    let mut out = QSymElem::zero(a.level());
    for (i, c) in a.to_basis(QSymBasis::F) {
        out = out.add(&theta_k_level1_on_fundamental(&i, k)?.scale(&c))?;
    }
    Ok(out)
}

/// Expansion of an eta basis element (odd index) as a signed sum of peak
/// functions: sum over subsets S of the peak set of the doubled index.
pub fn eta_as_peak_functions(i: &VectorComposition) -> Result<Vec<(Coef, PeakPair)>> {
    if i.cols().iter().any(|c| c.weight() % 2 == 0) {
        return Err(Error::precondition(
            "the eta-to-peak expansion requires every column to have odd weight",
        ));
    }
    let u = i.cof();
    let t = tilde(i)?;
    let full: Vec<usize> = pof(&t).into_iter().collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << full.len()) {
        let s: BTreeSet<usize> = full
            .iter()
            .enumerate()
            .filter(|(b, _)| (mask >> b) & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        let sign = coef::sign(s.len() % 2);
        out.push((sign, PeakPair::new(s, u.clone())?));
    }
    Ok(out)
}

/// The eta element reconstructed through its peak-function expansion.
pub fn eta_via_peaks(i: &VectorComposition) -> Result<QSymElem> {
    let mut out = QSymElem::zero(i.level());
    for (c, p) in eta_as_peak_functions(i)? {
        out = out.add(&peak_function(i.level(), &p)?.scale(&c))?;
    }
    Ok(out)
}

/// Expansion of a peak function at an admissible pair as a signed sum of eta
/// basis elements: sum over subsets T of the peak set.
pub fn peak_as_etas(level: usize, p: &PeakPair) -> Result<Vec<(Coef, VectorComposition)>> {
    if !p.is_admissible(level)? {
        return Err(Error::precondition(
            "the peak-to-eta expansion requires an admissible pair",
        ));
    }
    let full: Vec<usize> = p.s.iter().copied().collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << full.len()) {
        let t: BTreeSet<usize> = full
            .iter()
            .enumerate()
            .filter(|(b, _)| (mask >> b) & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        let sign = coef::sign(t.len() % 2);
        let idx = odd_part(&comp_from_peaks(level, &t, &p.u)?)?;
        out.push((sign, idx));
    }
    Ok(out)
}

/// The peak function reconstructed through its eta expansion.
pub fn peak_via_etas(level: usize, p: &PeakPair) -> Result<QSymElem> {
    let mut out = QSymElem::zero(level);
    for (c, idx) in peak_as_etas(level, p)? {
        out = out.add(&QSymElem::basis_elem(QSymBasis::Eta, idx).scale(&c))?;
    }
    Ok(out)
}
