//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! 1. worked-example goldens across all modules;
//! 2. Hilbert series closed form vs enumeration plus fixed reference rows;
//! 3. Hopf axiom suite on the three algebras (randomized);
//! 4. duality pairings and Sweedler adjointness;
//! 5. ideal/subalgebra suite;
//! 6. functional suite (nu^k closed forms, parity, bar/inverse laws);
//! 7. poset suite;
//! 8. eta/theta dictionary round trips.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, One, Zero};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use multiqsym::coef::{self, Coef};
use multiqsym::comb::{
    is_peak_set, ColoredPermutation, ExtNat, ExtVec, LPartite, VectorComposition,
};
use multiqsym::fqsym::{self, FQSymElem, FQSymTensor};
use multiqsym::functionals::{nu_k_on_fundamental, nu_k_on_monomial, Rule};
use multiqsym::posets::{ColoredPoset, MultigradedPoset};
use multiqsym::qsym::{sym_h, sym_m, QSymTensor};
use multiqsym::subalg::{self, GeneratorKind, OddEvenSpec, Parity};
use multiqsym::theta::{self, PeakPair};
use multiqsym::{
    GradedFunctional, NSymBasis, NSymElem, QSymBasis, QSymElem, VectorPartition,
};

fn vc(level: usize, cols: &[&[u32]]) -> VectorComposition {
    VectorComposition::from_rows(level, cols.iter().map(|c| c.to_vec()).collect()).unwrap()
}

fn pass(number: usize, name: &str) {
    println!("acceptance criterion {number} ({name}): pass");
}

// ===========================================================================
// 1. Worked-example goldens
// ===========================================================================

#[test]
fn criterion_1_worked_example_goldens() {
    // Quasi-shuffle product of two monomial terms: 12 terms, one coefficient 2.
    let a = QSymElem::monomial(vc(2, &[&[1, 0], &[3, 2]]));
    let b = QSymElem::monomial(vc(2, &[&[2, 5], &[1, 0]]));
    let prod = a.mul(&b).unwrap();
    assert_eq!(prod.terms().len(), 12);
    assert_eq!(
        prod.terms()[&vc(2, &[&[2, 5], &[1, 0], &[1, 0], &[3, 2]])],
        coef::from_i64(2)
    );
    assert_eq!(
        prod.terms()
            .values()
            .filter(|c| **c == coef::from_i64(2))
            .count(),
        1
    );

    // Fundamental expansion of one monomial-coarsened index: 4 terms.
    let f = QSymElem::basis_elem(QSymBasis::F, vc(3, &[&[2, 0, 1], &[0, 1, 0]]));
    assert_eq!(f.terms().len(), 4);
    for i in [
        vc(3, &[&[2, 0, 1], &[0, 1, 0]]),
        vc(3, &[&[2, 0, 0], &[0, 0, 1], &[0, 1, 0]]),
        vc(3, &[&[1, 0, 0], &[1, 0, 1], &[0, 1, 0]]),
        vc(3, &[&[1, 0, 0], &[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]),
    ] {
        assert_eq!(f.terms()[&i], Coef::one());
    }

    // Signed fundamental product: 5 terms, exactly one -1.
    let fa = QSymElem::basis_elem(QSymBasis::F, vc(3, &[&[1, 0, 0], &[0, 0, 1]]));
    let fb = QSymElem::basis_elem(QSymBasis::F, vc(3, &[&[0, 1, 0]]));
    let fp = fa.mul(&fb).unwrap().to_basis(QSymBasis::F);
    assert_eq!(fp.len(), 5);
    assert_eq!(
        fp[&vc(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])],
        -Coef::one()
    );
    assert_eq!(fp.values().filter(|c| **c == -Coef::one()).count(), 1);

    // Deconcatenation coproduct of a three-column monomial term: 4 terms.
    let dm = QSymElem::monomial(vc(2, &[&[1, 4], &[0, 3], &[2, 0]])).coproduct();
    assert_eq!(dm.terms().len(), 4);
    assert_eq!(
        dm.terms()[&(vc(2, &[&[1, 4]]), vc(2, &[&[0, 3], &[2, 0]]))],
        Coef::one()
    );

    // Coproduct of the complete generator of multidegree (2,1): 6 terms.
    let s21 = NSymElem::s_of(&LPartite::new(vec![2, 1]));
    let ds = s21.coproduct();
    assert_eq!(ds.terms().len(), 6);
    for i in LPartite::new(vec![2, 1]).sub_vectors() {
        let j = LPartite::new(vec![2, 1]).checked_sub(&i).unwrap();
        let left = if i.is_zero() {
            VectorComposition::empty(2)
        } else {
            vc(2, &[&[i.0[0], i.0[1]]])
        };
        let right = if j.is_zero() {
            VectorComposition::empty(2)
        } else {
            vc(2, &[&[j.0[0], j.0[1]]])
        };
        assert_eq!(ds.terms()[&(left, right)], Coef::one());
    }

    // Free quasisymmetric shifted-shuffle product: 6 terms.
    let pa = FQSymElem::basis_elem(
        3,
        ColoredPermutation::new(vec![2, 1], vec![0, 2]).unwrap(),
    )
    .unwrap();
    let pb = FQSymElem::basis_elem(
        3,
        ColoredPermutation::new(vec![1, 2], vec![1, 0]).unwrap(),
    )
    .unwrap();
    let pp = pa.mul(&pb).unwrap();
    assert_eq!(pp.terms().len(), 6);
    for (sigma, colors) in [
        (vec![2, 1, 3, 4], vec![0, 2, 1, 0]),
        (vec![2, 3, 1, 4], vec![0, 1, 2, 0]),
        (vec![2, 3, 4, 1], vec![0, 1, 0, 2]),
        (vec![3, 2, 4, 1], vec![1, 0, 0, 2]),
        (vec![3, 2, 1, 4], vec![1, 0, 2, 0]),
        (vec![3, 4, 2, 1], vec![1, 0, 0, 2]),
    ] {
        let key = ColoredPermutation::new(sigma, colors).unwrap();
        assert_eq!(pp.terms()[&key], Coef::one());
    }

    // Free quasisymmetric coproduct by splitting and standardizing: 5 terms.
    let pc = FQSymElem::basis_elem(
        3,
        ColoredPermutation::new(vec![1, 4, 2, 3], vec![0, 0, 2, 1]).unwrap(),
    )
    .unwrap();
    let cop = pc.coproduct().unwrap();
    assert_eq!(cop.terms().len(), 5);
    let key = (
        ColoredPermutation::new(vec![1], vec![0]).unwrap(),
        ColoredPermutation::new(vec![3, 1, 2], vec![0, 2, 1]).unwrap(),
    );
    assert_eq!(cop.terms()[&key], Coef::one());

    // Complete homogeneous identity: h_(1,1) = 2 m_(1,1) + m_{(1,0),(0,1)}.
    let n11 = LPartite::new(vec![1, 1]);
    let h = sym_h(&n11);
    let m11 = sym_m(2, &VectorPartition::new(vec![n11.clone()]));
    let msplit = sym_m(
        2,
        &VectorPartition::new(vec![LPartite::new(vec![1, 0]), LPartite::new(vec![0, 1])]),
    );
    assert_eq!(h, m11.scale(&coef::from_i64(2)).add(&msplit).unwrap());

    // Flag quasisymmetric function of the seven-element graded poset:
    // 8 terms, two coefficients equal to 2.
    let poset = seven_element();
    let fp = poset.f_homomorphism().unwrap();
    assert_eq!(fp.terms().len(), 8);
    for (c, cols) in [
        (1, vec![[1u32, 2u32]]),
        (1, vec![[1, 0], [0, 2]]),
        (2, vec![[0, 1], [1, 1]]),
        (1, vec![[1, 1], [0, 1]]),
        (1, vec![[0, 2], [1, 0]]),
        (1, vec![[1, 0], [0, 1], [0, 1]]),
        (1, vec![[0, 1], [1, 0], [0, 1]]),
        (2, vec![[0, 1], [0, 1], [1, 0]]),
    ] {
        let refs: Vec<&[u32]> = cols.iter().map(|c| c.as_slice()).collect();
        assert_eq!(fp.terms()[&vc(2, &refs)], coef::from_i64(c));
    }

    // Lyndon vector compositions of weight 3 at level 2: these ten
    // items are all Lyndon (the complete list has 12, the count forced by
    // free generation of the shuffle algebra).
    let lyndon: Vec<VectorComposition> = VectorComposition::compositions_of_weight(2, 3)
        .into_iter()
        .filter(|i| i.is_lyndon())
        .collect();
    for i in [
        vc(2, &[&[0, 3]]),
        vc(2, &[&[1, 2]]),
        vc(2, &[&[2, 1]]),
        vc(2, &[&[3, 0]]),
        vc(2, &[&[0, 1], &[0, 2]]),
        vc(2, &[&[0, 1], &[1, 1]]),
        vc(2, &[&[0, 1], &[2, 0]]),
        vc(2, &[&[0, 2], &[1, 0]]),
        vc(2, &[&[0, 1], &[0, 1], &[1, 0]]),
        vc(2, &[&[0, 1], &[1, 0], &[1, 0]]),
    ] {
        assert!(lyndon.contains(&i), "{i} should be Lyndon");
    }
    assert_eq!(lyndon.len(), 12);

    // Ideal generator degrees for k = (4,0,3): seven reference degrees
    // all occur (the full excluded list has 9: every nonzero even-weight
    // degree below the threshold).
    let spec = OddEvenSpec::new(
        3,
        ExtVec(vec![ExtNat::Finite(4), ExtNat::Finite(0), ExtNat::Finite(3)]),
        Parity::Odd,
    )
    .unwrap();
    let degrees = spec.excluded_degrees(7);
    for d in [
        [2, 0, 0],
        [1, 0, 1],
        [0, 0, 2],
        [4, 0, 0],
        [3, 0, 1],
        [2, 0, 2],
        [1, 0, 3],
    ] {
        assert!(
            degrees.contains(&LPartite::new(d.to_vec())),
            "degree {d:?} must be excluded"
        );
    }
    assert_eq!(degrees.len(), 9);

    // nu^(4) separates a product its factors do not: value 2 on M_2 M_3 but
    // 0 on M_2.
    let k4 = ExtVec::finite(vec![4]);
    let nu4 = GradedFunctional::new(1, Rule::NuK(k4)).unwrap();
    let m2 = QSymElem::monomial(vc(1, &[&[2]]));
    let m3 = QSymElem::monomial(vc(1, &[&[3]]));
    let product = m2.mul(&m3).unwrap();
    assert_eq!(nu4.evaluate(&product).unwrap(), coef::from_i64(2));
    assert_eq!(nu4.evaluate(&m2).unwrap(), Coef::zero());
    assert_eq!(
        nu4.evaluate(&m2).unwrap() * nu4.evaluate(&m3).unwrap(),
        Coef::zero()
    );

    // Peak-function linear relation at level 2.
    let s2: BTreeSet<usize> = [2].into_iter().collect();
    let lhs = theta::peak_function(2, &PeakPair::new(s2.clone(), vec![0, 1, 0]).unwrap()).unwrap();
    let t1 =
        theta::peak_function(2, &PeakPair::new(BTreeSet::new(), vec![0, 1, 0]).unwrap()).unwrap();
    let t2 =
        theta::peak_function(2, &PeakPair::new(BTreeSet::new(), vec![0, 0, 1]).unwrap()).unwrap();
    let t3 = theta::peak_function(2, &PeakPair::new(s2, vec![0, 0, 1]).unwrap()).unwrap();
    assert_eq!(lhs, t1.sub(&t2).unwrap().add(&t3).unwrap());

    // Fundamental expansion of the empty-peak function for color word 010:
    // five reference terms (one more term, coefficient 4, is forced by
    // the monomial expansion).
    let th =
        theta::peak_function(2, &PeakPair::new(BTreeSet::new(), vec![0, 1, 0]).unwrap()).unwrap();
    let fexp = th.to_basis(QSymBasis::F);
    assert_eq!(fexp.len(), 6);
    assert_eq!(fexp[&vc(2, &[&[2, 1]])], coef::from_i64(2));
    assert_eq!(fexp[&vc(2, &[&[2, 0], &[0, 1]])], coef::from_i64(-2));
    assert_eq!(fexp[&vc(2, &[&[1, 0], &[1, 1]])], coef::from_i64(2));
    assert_eq!(fexp[&vc(2, &[&[1, 1], &[1, 0]])], coef::from_i64(4));
    assert_eq!(
        fexp[&vc(2, &[&[1, 0], &[1, 0], &[0, 1]])],
        coef::from_i64(-2)
    );
    assert_eq!(
        fexp[&vc(2, &[&[1, 0], &[0, 1], &[1, 0]])],
        coef::from_i64(4)
    );

    pass(1, "worked-example goldens");
}

fn seven_element() -> MultigradedPoset {
    MultigradedPoset::new(
        2,
        ["bot", "a", "b", "c", "e", "f", "top"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 4),
            (2, 4),
            (2, 5),
            (3, 5),
            (4, 6),
            (5, 6),
        ],
        vec![
            LPartite::new(vec![0, 0]),
            LPartite::new(vec![1, 0]),
            LPartite::new(vec![0, 1]),
            LPartite::new(vec![0, 1]),
            LPartite::new(vec![1, 1]),
            LPartite::new(vec![0, 2]),
            LPartite::new(vec![1, 2]),
        ],
    )
    .unwrap()
}

fn six_element() -> MultigradedPoset {
    MultigradedPoset::new(
        2,
        ["bot", "a", "b", "c", "d", "top"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        &[(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 5), (4, 5)],
        vec![
            LPartite::new(vec![0, 0]),
            LPartite::new(vec![1, 0]),
            LPartite::new(vec![0, 1]),
            LPartite::new(vec![1, 1]),
            LPartite::new(vec![0, 2]),
            LPartite::new(vec![1, 2]),
        ],
    )
    .unwrap()
}

// ===========================================================================
// 2. Hilbert series
// ===========================================================================

#[test]
fn criterion_2_hilbert_series() {
    // Closed form vs direct enumeration, total weight <= 8, levels <= 3.
    let mut specs: Vec<OddEvenSpec> = Vec::new();
    for level in 1..=3usize {
        specs.push(
            OddEvenSpec::new(level, ExtVec::finite(vec![0; level]), Parity::Odd).unwrap(),
        );
        specs.push(OddEvenSpec::new(level, ExtVec::inf(level), Parity::Odd).unwrap());
    }
    specs.push(
        OddEvenSpec::new(2, ExtVec(vec![ExtNat::Inf, ExtNat::Finite(0)]), Parity::Odd).unwrap(),
    );
    specs.push(
        OddEvenSpec::new(
            3,
            ExtVec(vec![ExtNat::Finite(4), ExtNat::Finite(0), ExtNat::Finite(3)]),
            Parity::Odd,
        )
        .unwrap(),
    );
    for spec in &specs {
        let max_w = if spec.level() == 3 { 8 } else { 8 };
        let closed = spec.hilbert_closed(max_w).unwrap();
        let enumerated = spec.hilbert_enumerate(max_w).unwrap();
        assert_eq!(closed, enumerated, "k = {:?}", spec.k());
    }

    // Four reference weight-graded rows.
    let row = |level: usize, k: ExtVec, max_w: u32| -> Vec<BigInt> {
        let spec = OddEvenSpec::new(level, k, Parity::Odd).unwrap();
        subalg::weight_graded(&spec.hilbert_closed(max_w).unwrap(), max_w)
    };
    let big = |xs: &[i64]| -> Vec<BigInt> { xs.iter().map(|&x| BigInt::from(x)).collect() };
    assert_eq!(
        row(1, ExtVec::inf(1), 9),
        big(&[1, 1, 1, 2, 3, 5, 8, 13, 21, 34])
    );
    assert_eq!(
        row(2, ExtVec(vec![ExtNat::Inf, ExtNat::Finite(0)]), 7),
        big(&[1, 2, 6, 20, 64, 206, 662, 2128])
    );
    assert_eq!(
        row(2, ExtVec::inf(2), 7),
        big(&[1, 2, 4, 12, 32, 86, 232, 624])
    );
    assert_eq!(
        row(3, ExtVec::inf(3), 7),
        big(&[1, 3, 9, 37, 141, 534, 2035, 7740])
    );

    pass(2, "hilbert series");
}

// ===========================================================================
// 3. Hopf axiom suite
// ===========================================================================

fn random_composition(rng: &mut ChaCha8Rng, level: usize, max_w: u32) -> VectorComposition {
    let w = rng.gen_range(0..=max_w);
    let all = VectorComposition::compositions_of_weight(level, w);
    all[rng.gen_range(0..all.len())].clone()
}

fn random_coef(rng: &mut ChaCha8Rng) -> Coef {
    let mut c = 0i64;
    while c == 0 {
        c = rng.gen_range(-3..=3);
    }
    coef::from_i64(c)
}

fn random_qsym(rng: &mut ChaCha8Rng, level: usize, max_w: u32) -> QSymElem {
    let mut out = QSymElem::zero(level);
    for _ in 0..rng.gen_range(1..=3) {
        out.add_assign_term(random_composition(rng, level, max_w), random_coef(rng));
    }
    out
}

fn random_nsym(rng: &mut ChaCha8Rng, level: usize, max_w: u32) -> NSymElem {
    let mut out = NSymElem::zero(level);
    for _ in 0..rng.gen_range(1..=3) {
        out.add_assign_term(random_composition(rng, level, max_w), random_coef(rng));
    }
    out
}

fn random_colored_perm(rng: &mut ChaCha8Rng, level: usize, max_n: usize) -> ColoredPermutation {
    let n = rng.gen_range(0..=max_n);
    let mut sigma: Vec<usize> = (1..=n).collect();
    sigma.shuffle(rng);
    let colors: Vec<u8> = (0..n).map(|_| rng.gen_range(0..level) as u8).collect();
    ColoredPermutation::new(sigma, colors).unwrap()
}

fn random_fqsym(rng: &mut ChaCha8Rng, level: usize, max_n: usize) -> FQSymElem {
    let mut out = FQSymElem::zero(level);
    for _ in 0..rng.gen_range(1..=2) {
        out.add_assign_term(random_colored_perm(rng, level, max_n), random_coef(rng));
    }
    out
}

type ThreeLeg<K> = BTreeMap<(K, K, K), Coef>;

fn add3<K: Ord>(map: &mut ThreeLeg<K>, key: (K, K, K), c: Coef) {
    let e = map.entry(key).or_insert_with(Coef::zero);
    *e += c;
}

fn prune<K: Ord>(mut map: ThreeLeg<K>) -> ThreeLeg<K> {
    map.retain(|_, v| !v.is_zero());
    map
}

fn qsym_coassoc(x: &QSymElem) {
    let d = x.coproduct();
    let mut lhs: ThreeLeg<VectorComposition> = BTreeMap::new();
    for ((l, r), c) in d.terms() {
        for ((a, b), c2) in QSymElem::monomial(l.clone()).coproduct().terms() {
            add3(&mut lhs, (a.clone(), b.clone(), r.clone()), c.clone() * c2.clone());
        }
    }
    let mut rhs: ThreeLeg<VectorComposition> = BTreeMap::new();
    for ((l, r), c) in d.terms() {
        for ((a, b), c2) in QSymElem::monomial(r.clone()).coproduct().terms() {
            add3(&mut rhs, (l.clone(), a.clone(), b.clone()), c.clone() * c2.clone());
        }
    }
    assert_eq!(prune(lhs), prune(rhs), "coassociativity failed on {x:?}");
}

fn nsym_coassoc(x: &NSymElem) {
    let d = x.coproduct();
    let mut lhs: ThreeLeg<VectorComposition> = BTreeMap::new();
    for ((l, r), c) in d.terms() {
        for ((a, b), c2) in NSymElem::complete(l.clone()).coproduct().terms() {
            add3(&mut lhs, (a.clone(), b.clone(), r.clone()), c.clone() * c2.clone());
        }
    }
    let mut rhs: ThreeLeg<VectorComposition> = BTreeMap::new();
    for ((l, r), c) in d.terms() {
        for ((a, b), c2) in NSymElem::complete(r.clone()).coproduct().terms() {
            add3(&mut rhs, (l.clone(), a.clone(), b.clone()), c.clone() * c2.clone());
        }
    }
    assert_eq!(prune(lhs), prune(rhs), "coassociativity failed on {x:?}");
}

fn fqsym_coassoc(x: &FQSymElem) {
    let level = x.level();
    let d = x.coproduct().unwrap();
    let mut lhs: ThreeLeg<ColoredPermutation> = BTreeMap::new();
    for ((l, r), c) in d.terms() {
        let le = FQSymElem::basis_elem(level, l.clone()).unwrap();
        for ((a, b), c2) in le.coproduct().unwrap().terms() {
            add3(&mut lhs, (a.clone(), b.clone(), r.clone()), c.clone() * c2.clone());
        }
    }
    let mut rhs: ThreeLeg<ColoredPermutation> = BTreeMap::new();
    for ((l, r), c) in d.terms() {
        let re = FQSymElem::basis_elem(level, r.clone()).unwrap();
        for ((a, b), c2) in re.coproduct().unwrap().terms() {
            add3(&mut rhs, (l.clone(), a.clone(), b.clone()), c.clone() * c2.clone());
        }
    }
    assert_eq!(prune(lhs), prune(rhs), "coassociativity failed on {x:?}");
}

fn nsym_tensor_mul(
    s: &BTreeMap<(VectorComposition, VectorComposition), Coef>,
    t: &BTreeMap<(VectorComposition, VectorComposition), Coef>,
    level: usize,
) -> BTreeMap<(VectorComposition, VectorComposition), Coef> {
    // In the complete basis the product concatenates indices, so tensor
    // multiplication concatenates legwise.
    let _ = level;
    let mut out = BTreeMap::new();
    for ((l1, r1), c1) in s {
        for ((l2, r2), c2) in t {
            let key = (l1.concat(l2).unwrap(), r1.concat(r2).unwrap());
            let e = out.entry(key).or_insert_with(Coef::zero);
            *e += c1.clone() * c2.clone();
        }
    }
    out.retain(|_, v: &mut Coef| !v.is_zero());
    out
}

fn fqsym_tensor_mul(s: &FQSymTensor, t: &FQSymTensor, level: usize) -> FQSymTensor {
    let mut out = FQSymTensor::zero(level);
    for ((l1, r1), c1) in s.terms() {
        for ((l2, r2), c2) in t.terms() {
            let left = FQSymElem::basis_elem(level, l1.clone())
                .unwrap()
                .mul(&FQSymElem::basis_elem(level, l2.clone()).unwrap())
                .unwrap();
            let right = FQSymElem::basis_elem(level, r1.clone())
                .unwrap()
                .mul(&FQSymElem::basis_elem(level, r2.clone()).unwrap())
                .unwrap();
            for (lp, lc) in left.terms() {
                for (rp, rc) in right.terms() {
                    out.add_assign_term(
                        lp.clone(),
                        rp.clone(),
                        c1.clone() * c2.clone() * lc.clone() * rc.clone(),
                    );
                }
            }
        }
    }
    out
}

#[test]
fn criterion_3_hopf_axiom_suite() {
    for level in 1..=2usize {
        let mut rng = ChaCha8Rng::seed_from_u64(31 + level as u64);
        let rounds = 100; // two levels x 100 = 200 instances per algebra
        for _ in 0..rounds {
            // QSym.
            let x = random_qsym(&mut rng, level, 5);
            let y = random_qsym(&mut rng, level, 3);
            qsym_coassoc(&x);
            // Counit laws.
            let mut left_fold = QSymElem::zero(level);
            let mut right_fold = QSymElem::zero(level);
            for ((l, r), c) in x.coproduct().terms() {
                let eps_l = QSymElem::monomial(l.clone()).counit();
                let eps_r = QSymElem::monomial(r.clone()).counit();
                right_fold.add_assign_term(l.clone(), c.clone() * eps_r);
                left_fold.add_assign_term(r.clone(), c.clone() * eps_l);
            }
            assert_eq!(left_fold, x);
            assert_eq!(right_fold, x);
            // Bialgebra compatibility.
            let lhs = x.mul(&y).unwrap().coproduct();
            let rhs = x.coproduct().mul(&y.coproduct()).unwrap();
            assert_eq!(lhs, rhs);
            // Antipode convolution identity.
            let folded = x.coproduct().fold_mul(Some(0)).unwrap();
            assert_eq!(folded, QSymElem::unit(level).scale(&x.counit()));

            // NSym.
            let f = random_nsym(&mut rng, level, 5);
            let g = random_nsym(&mut rng, level, 3);
            nsym_coassoc(&f);
            let mut left_fold = NSymElem::zero(level);
            let mut right_fold = NSymElem::zero(level);
            for ((l, r), c) in f.coproduct().terms() {
                let eps_l = NSymElem::complete(l.clone()).counit();
                let eps_r = NSymElem::complete(r.clone()).counit();
                right_fold.add_assign_term(l.clone(), c.clone() * eps_r);
                left_fold.add_assign_term(r.clone(), c.clone() * eps_l);
            }
            assert_eq!(left_fold, f);
            assert_eq!(right_fold, f);
            let lhs = f.mul(&g).unwrap().coproduct();
            let rhs = nsym_tensor_mul(f.coproduct().terms(), g.coproduct().terms(), level);
            assert_eq!(lhs.terms(), &rhs);
            let folded = f.coproduct().fold_mul(Some(0)).unwrap();
            assert_eq!(folded, NSymElem::unit(level).scale(&f.counit()));

            // FQSym.
            let u = random_fqsym(&mut rng, level, 4);
            let v = random_fqsym(&mut rng, level, 2);
            fqsym_coassoc(&u);
            let mut left_fold = FQSymElem::zero(level);
            let mut right_fold = FQSymElem::zero(level);
            for ((l, r), c) in u.coproduct().unwrap().terms() {
                if r.n() == 0 {
                    right_fold.add_assign_term(l.clone(), c.clone());
                }
                if l.n() == 0 {
                    left_fold.add_assign_term(r.clone(), c.clone());
                }
            }
            assert_eq!(left_fold, u);
            assert_eq!(right_fold, u);
            let lhs = u.mul(&v).unwrap().coproduct().unwrap();
            let rhs = fqsym_tensor_mul(
                &u.coproduct().unwrap(),
                &v.coproduct().unwrap(),
                level,
            );
            assert_eq!(lhs, rhs);
            let folded = u.coproduct().unwrap().fold_mul(Some(0)).unwrap();
            assert_eq!(folded, FQSymElem::unit(level).scale(&u.counit()));
        }
    }
    pass(3, "hopf axiom suite");
}

// ===========================================================================
// 4. Duality suite
// ===========================================================================

#[test]
fn criterion_4_duality_suite() {
    // Pairing deltas on all index pairs of weight <= 4, levels <= 2.
    let pairs = [
        (NSymBasis::S, QSymBasis::M),
        (NSymBasis::Phi, QSymBasis::P),
        (NSymBasis::Upsilon, QSymBasis::Eta),
    ];
    for level in 1..=2usize {
        let mut all: Vec<VectorComposition> = Vec::new();
        for w in 0..=4u32 {
            all.extend(VectorComposition::compositions_of_weight(level, w));
        }
        for (nb, qb) in pairs {
            for i in &all {
                let f = NSymElem::basis_elem(nb, i.clone());
                for j in &all {
                    let g = QSymElem::basis_elem(qb, j.clone());
                    let expect = if i == j { Coef::one() } else { Coef::zero() };
                    assert_eq!(
                        f.pair(&g).unwrap(),
                        expect,
                        "pairing ({nb:?},{qb:?}) at {i}, {j}"
                    );
                }
            }
        }
    }

    // Sweedler adjointness: <f, x y> = <Delta f, x (x) y>.
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..100 {
        let level = rng.gen_range(1..=2);
        let f = random_nsym(&mut rng, level, 4);
        let x = random_qsym(&mut rng, level, 2);
        let y = random_qsym(&mut rng, level, 2);
        let lhs = f.pair(&x.mul(&y).unwrap()).unwrap();
        let mut rhs = Coef::zero();
        for ((l, r), c) in f.coproduct().terms() {
            rhs += c.clone()
                * NSymElem::complete(l.clone()).pair(&x).unwrap()
                * NSymElem::complete(r.clone()).pair(&y).unwrap();
        }
        assert_eq!(lhs, rhs);
    }
    pass(4, "duality suite");
}

// ===========================================================================
// 5. Ideal / subalgebra suite
// ===========================================================================

#[test]
fn criterion_5_ideal_subalgebra_suite() {
    // Degreewise span equality of the three odd generating families.
    let ks: Vec<(usize, ExtVec)> = vec![
        (1, ExtVec::finite(vec![2])),
        (1, ExtVec::finite(vec![4])),
        (2, ExtVec::finite(vec![2, 1])),
    ];
    for (level, k) in &ks {
        let spec = OddEvenSpec::new(*level, k.clone(), Parity::Odd).unwrap();
        let phi = spec.ideal_generators(GeneratorKind::Phi, 5).unwrap();
        let chi = spec.ideal_generators(GeneratorKind::Chi, 5).unwrap();
        let ups = spec.ideal_generators(GeneratorKind::Upsilon, 5).unwrap();
        for w in 1..=5u32 {
            for d in VectorComposition::lpartites_of_weight(*level, w) {
                let span_phi = spec.ideal_degree_span(&phi, &d).unwrap();
                let span_chi = spec.ideal_degree_span(&chi, &d).unwrap();
                let span_ups = spec.ideal_degree_span(&ups, &d).unwrap();
                assert!(subalg::same_span(&span_phi, &span_chi), "deg {d:?}");
                assert!(subalg::same_span(&span_phi, &span_ups), "deg {d:?}");

                // Orthogonality: the ideal annihilates the odd basis.
                let basis = spec.basis_elements(&d, QSymBasis::P).unwrap();
                for g in &span_phi {
                    for b in &basis {
                        assert_eq!(g.pair(b).unwrap(), Coef::zero());
                    }
                }

                // Dimension complementarity.
                let total = VectorComposition::compositions_of(&d).len();
                let dim_ideal = subalg::rank_of_elements(&span_phi);
                let dim_sub = spec.basis_indices(&d).unwrap().len();
                assert_eq!(dim_ideal + dim_sub, total, "deg {d:?}");
            }
        }
    }

    // The peak transform lands in the all-infinity odd subalgebra.
    for level in 1..=2usize {
        let spec = OddEvenSpec::new(level, ExtVec::inf(level), Parity::Odd).unwrap();
        for w in 0..=5u32 {
            for i in VectorComposition::compositions_of_weight(level, w) {
                let th = theta::theta_inf_on_fundamental(&i).unwrap();
                assert!(spec.membership(&th).unwrap(), "index {i}");
                assert!(spec.membership_by_span(&th).unwrap(), "index {i}");
            }
        }
    }

    // The k-analogues land in the finite odd subalgebras (single color).
    for k in [1u32, 3] {
        let spec = OddEvenSpec::new(1, ExtVec::finite(vec![k]), Parity::Odd).unwrap();
        for w in 0..=5u32 {
            for i in VectorComposition::compositions_of_weight(1, w) {
                let th = theta::theta_k_level1_on_fundamental(&i, k).unwrap();
                assert!(spec.membership(&th).unwrap(), "index {i}, k = {k}");
            }
        }
    }
    pass(5, "ideal and subalgebra suite");
}

// ===========================================================================
// 6. Functional suite
// ===========================================================================

#[test]
fn criterion_6_functional_suite() {
    // Closed forms for nu^k vs the convolution definition on all basis
    // elements of weight <= 5, levels <= 2, four k values.
    let ks: Vec<(usize, ExtVec)> = vec![
        (1, ExtVec::finite(vec![2])),
        (1, ExtVec::inf(1)),
        (2, ExtVec::finite(vec![1, 1])),
        (2, ExtVec(vec![ExtNat::Inf, ExtNat::Finite(0)])),
    ];
    for (level, k) in &ks {
        let nu = GradedFunctional::new(*level, Rule::NuK(k.clone())).unwrap();
        for w in 0..=5u32 {
            for i in VectorComposition::compositions_of_weight(*level, w) {
                let m = QSymElem::monomial(i.clone());
                assert_eq!(
                    nu.evaluate(&m).unwrap(),
                    nu_k_on_monomial(k, &i).unwrap(),
                    "monomial {i}, k = {k:?}"
                );
                let f = QSymElem::basis_elem(QSymBasis::F, i.clone());
                assert_eq!(
                    nu.evaluate(&f).unwrap(),
                    nu_k_on_fundamental(k, &i).unwrap(),
                    "fundamental {i}, k = {k:?}"
                );
            }
        }
    }

    // nu^k is k-odd.
    for (level, k) in &ks {
        let nu = GradedFunctional::new(*level, Rule::NuK(k.clone())).unwrap();
        let bound = LPartite::new(vec![6 / *level as u32; *level]);
        assert!(nu.is_k_odd(k, &bound).unwrap(), "k = {k:?}");
    }

    // Bar and inverse laws on random invertible functionals.
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    for _ in 0..10 {
        let level = rng.gen_range(1..=2);
        let mut components: BTreeMap<LPartite, NSymElem> = BTreeMap::new();
        components.insert(LPartite::zero(level), NSymElem::unit(level));
        for w in 1..=3u32 {
            for n in VectorComposition::lpartites_of_weight(level, w) {
                components.insert(n.clone(), random_nsym(&mut rng, level, 0).scale(&random_coef(&mut rng)).add(&{
                    let mut e = NSymElem::zero(level);
                    e.add_assign_term(
                        VectorComposition::new(level, vec![n.clone()]).unwrap(),
                        random_coef(&mut rng),
                    );
                    e
                }).unwrap());
            }
        }
        let f = GradedFunctional::new(level, Rule::Explicit(components)).unwrap();
        let degrees: Vec<LPartite> = (0..=4u32)
            .flat_map(|w| VectorComposition::lpartites_of_weight(level, w))
            .collect();
        // Involution: bar(bar(f)) = f.
        let bb = f.clone().bar().bar();
        for n in &degrees {
            assert_eq!(bb.component(n).unwrap(), f.component(n).unwrap());
        }
        // Convolution inverse: f^{-1} * f = epsilon.
        let conv = f.clone().inverse().convolve(f.clone()).unwrap();
        let eps = GradedFunctional::epsilon(level);
        for n in &degrees {
            assert_eq!(conv.component(n).unwrap(), eps.component(n).unwrap());
        }
        // Bar is an algebra map: bar(f * f) = bar(f) * bar(f).
        let lhs = f.clone().convolve(f.clone()).unwrap().bar();
        let rhs = f.clone().bar().convolve(f.clone().bar()).unwrap();
        for n in &degrees {
            assert_eq!(lhs.component(n).unwrap(), rhs.component(n).unwrap());
        }
        // Bar commutes with inversion.
        let lhs = f.clone().bar().inverse();
        let rhs = f.clone().inverse().bar();
        for n in &degrees {
            assert_eq!(lhs.component(n).unwrap(), rhs.component(n).unwrap());
        }
    }
    pass(6, "functional suite");
}

// ===========================================================================
// 7. Poset suite
// ===========================================================================

fn random_building_block(rng: &mut ChaCha8Rng, level: usize) -> MultigradedPoset {
    if rng.gen_bool(0.5) {
        let atoms = rng.gen_range(1..=3);
        let coloring: Vec<u8> = (0..atoms)
            .map(|_| rng.gen_range(0..level) as u8)
            .collect();
        MultigradedPoset::boolean(level, &coloring).unwrap()
    } else {
        let len = rng.gen_range(1..=3);
        let steps: Vec<u8> = (0..len).map(|_| rng.gen_range(0..level) as u8).collect();
        MultigradedPoset::chain(level, &steps).unwrap()
    }
}

fn random_colored_poset(rng: &mut ChaCha8Rng, level: usize, max_n: usize) -> ColoredPoset {
    let n = rng.gen_range(1..=max_n);
    let colors: Vec<u8> = (0..n).map(|_| rng.gen_range(0..level) as u8).collect();
    // Random partial order: embed a random linear order and keep a random
    // subset of its relations (transitively closed by the constructor).
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut relations = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(0.4) {
                relations.push((order[i], order[j]));
            }
        }
    }
    ColoredPoset::new(level, colors, &relations).unwrap()
}

#[test]
fn criterion_7_poset_suite() {
    // The six-element example is (1,1)-Eulerian but not (0,2)-Eulerian.
    let p = six_element();
    assert!(p.is_k_eulerian(&ExtVec::finite(vec![1, 1])).unwrap());
    assert!(!p.is_k_eulerian(&ExtVec::finite(vec![0, 2])).unwrap());

    // Colored Boolean lattices: Eulerian, odd flag image, no violations of
    // the generalized Dehn-Sommerville relations.
    for n in 1..=4usize {
        let constant = vec![0u8; n];
        let alternating: Vec<u8> = (0..n).map(|i| (i % 2) as u8).collect();
        for coloring in [constant, alternating] {
            let b = MultigradedPoset::boolean(2, &coloring).unwrap();
            assert!(b.is_k_eulerian(&ExtVec::inf(2)).unwrap());
            let f = b.f_homomorphism().unwrap();
            let spec = OddEvenSpec::new(2, ExtVec::inf(2), Parity::Odd).unwrap();
            assert!(spec.membership(&f).unwrap(), "B_{n} coloring {coloring:?}");
            let violations = b.dehn_sommerville_check(&ExtVec::inf(2)).unwrap();
            assert!(violations.is_empty(), "B_{n} coloring {coloring:?}");
        }
    }

    // Diamond identity: 2 f_(2) = f_(1,1).
    let diamond = MultigradedPoset::new(
        1,
        ["bot", "a", "b", "top"].iter().map(|s| s.to_string()).collect(),
        &[(0, 1), (0, 2), (1, 3), (2, 3)],
        vec![
            LPartite::new(vec![0]),
            LPartite::new(vec![1]),
            LPartite::new(vec![1]),
            LPartite::new(vec![2]),
        ],
    )
    .unwrap();
    let f2 = diamond.flag_f(&vc(1, &[&[2]])).unwrap();
    let f11 = diamond.flag_f(&vc(1, &[&[1], &[1]])).unwrap();
    assert_eq!(2 * f2 as i64 - f11 as i64, 0);

    // Flag image is multiplicative and a coalgebra morphism on random
    // products and intervals.
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    for _ in 0..50 {
        let level = rng.gen_range(1..=2);
        let p = random_building_block(&mut rng, level);
        let q = random_building_block(&mut rng, level);
        let prod = p.product(&q).unwrap();
        assert_eq!(
            prod.f_homomorphism().unwrap(),
            p.f_homomorphism()
                .unwrap()
                .mul(&q.f_homomorphism().unwrap())
                .unwrap()
        );

        // Coalgebra morphism on a random interval of the product.
        let x = rng.gen_range(0..prod.len());
        let y = rng.gen_range(0..prod.len());
        if !prod.le(x, y) {
            continue;
        }
        let interval = prod.interval(x, y).unwrap();
        let mut expected = QSymTensor::zero(level);
        for z in 0..interval.len() {
            let lower = interval.interval(0, z).unwrap().f_homomorphism().unwrap();
            let upper = interval
                .interval(z, interval.len() - 1)
                .unwrap()
                .f_homomorphism()
                .unwrap();
            for (li, lc) in lower.terms() {
                for (ri, rc) in upper.terms() {
                    expected.add_assign_term(li.clone(), ri.clone(), lc.clone() * rc.clone());
                }
            }
        }
        assert_eq!(interval.f_homomorphism().unwrap().coproduct(), expected);
    }

    // The colored generating function factors through the free algebra.
    let mut rng = ChaCha8Rng::seed_from_u64(72);
    for _ in 0..50 {
        let level = rng.gen_range(1..=2);
        let p = random_colored_poset(&mut rng, level, 5);
        let direct = p.gamma().unwrap();
        let through_free = fqsym::gamma_hat(&p).unwrap().d_map().unwrap();
        assert_eq!(direct, through_free);
    }
    pass(7, "poset suite");
}

// ===========================================================================
// 8. eta / theta dictionary
// ===========================================================================

#[test]
fn criterion_8_eta_theta_dictionary() {
    // Round trips between the eta basis and peak functions, all admissible
    // data with n <= 5, levels <= 2.
    for level in 1..=2usize {
        for w in 1..=5u32 {
            for i in VectorComposition::compositions_of_weight(level, w) {
                // eta -> peak functions -> element.
                if i.cols().iter().all(|c| c.weight() % 2 == 1) {
                    let eta = QSymElem::basis_elem(QSymBasis::Eta, i.clone());
                    assert_eq!(theta::eta_via_peaks(&i).unwrap(), eta, "index {i}");
                }
                // The peak transform is the peak function of the peak data.
                let th = theta::theta_inf_on_fundamental(&i).unwrap();
                let pair = PeakPair::new(multiqsym::comb::pof(&i), i.cof()).unwrap();
                assert_eq!(
                    th,
                    theta::peak_function(level, &pair).unwrap(),
                    "index {i}"
                );
            }

            // peak function -> eta combination -> element, over all
            // admissible peak-set / color-word pairs.
            let words: Vec<Vec<u8>> = color_words(level, w as usize);
            for u in words {
                for s in peak_subsets(w as usize) {
                    let pair = PeakPair::new(s.clone(), u.clone()).unwrap();
                    if !pair.is_admissible(level).unwrap() {
                        continue;
                    }
                    let direct = theta::peak_function(level, &pair).unwrap();
                    let through_eta = theta::peak_via_etas(level, &pair).unwrap();
                    assert_eq!(direct, through_eta, "S = {s:?}, u = {u:?}");
                }
            }
        }
    }

    // Shifted invariance of the k = 2 peak transform: prepending 1 to a
    // decremented first part does not change the image (single color).
    for n in 1..=6u32 {
        for i in VectorComposition::compositions_of_weight(1, n) {
            let first = i.cols()[0].0[0];
            if first <= 1 {
                continue;
            }
            let mut cols: Vec<Vec<u32>> = vec![vec![1], vec![first - 1]];
            cols.extend(i.cols()[1..].iter().map(|c| c.0.clone()));
            let shifted = VectorComposition::from_rows(1, cols).unwrap();
            assert_eq!(
                theta::theta_k_level1_on_fundamental(&i, 2).unwrap(),
                theta::theta_k_level1_on_fundamental(&shifted, 2).unwrap(),
                "index {i}"
            );
        }
    }
    pass(8, "eta/theta dictionary");
}

fn color_words(level: usize, n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &out {
            for c in 0..level as u8 {
                let mut w2 = w.clone();
                w2.push(c);
                next.push(w2);
            }
        }
        out = next;
    }
    out
}

fn peak_subsets(n: usize) -> Vec<BTreeSet<usize>> {
    let positions: Vec<usize> = (2..n).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << positions.len()) {
        let s: BTreeSet<usize> = positions
            .iter()
            .enumerate()
            .filter(|(b, _)| (mask >> b) & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        if is_peak_set(&s, n) {
            out.push(s);
        }
    }
    out
}
