use std::collections::BTreeSet;
use std::sync::Arc;

use burnside::burnside::*;
use burnside::group::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn marks(name: &str) -> MarksTable {
    MarksTable::new(Arc::new(SubgroupLattice::new(Arc::new(builtin(name).unwrap()))))
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Left cosets gH as explicit sets.
fn cosets(g: &Group, h: &Subgroup) -> Vec<BTreeSet<usize>> {
    let mut out: Vec<BTreeSet<usize>> = Vec::new();
    for x in 0..g.order() {
        let c: BTreeSet<usize> = h.elements().iter().map(|&y| g.mul(x, y)).collect();
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// |(G/H)^K| by acting on explicit coset sets with left multiplication.
fn marks_oracle(g: &Group, h: &Subgroup, k: &Subgroup) -> usize {
    cosets(g, h)
        .iter()
        .filter(|c| {
            k.elements().iter().all(|&x| {
                let moved: BTreeSet<usize> = c.iter().map(|&y| g.mul(x, y)).collect();
                &moved == *c
            })
        })
        .count()
}

#[test]
fn s3_marks_table() {
    let t = marks("S3");
    let expected = [[6, 0, 0, 0], [3, 1, 0, 0], [2, 0, 2, 0], [1, 1, 1, 1]];
    for (i, row) in expected.iter().enumerate() {
        assert_eq!(t.matrix().row(i), &ints(row)[..], "row {i}");
    }
    let trivial = marks("trivial");
    assert_eq!(trivial.len(), 1);
    assert_eq!(trivial.mark(0, 0), &BigInt::from(1));
}

#[test]
fn marks_match_coset_oracle() {
    for name in ["C2", "C4", "C2xC2", "S3", "D4", "Q8", "A4"] {
        let t = marks(name);
        let l = t.lattice();
        let g = l.group();
        for h in l.classes() {
            for k in l.classes() {
                assert_eq!(
                    t.mark(h.index, k.index),
                    &BigInt::from(marks_oracle(g, &h.representative, &k.representative)),
                    "{name} {} {}",
                    h.label,
                    k.label
                );
            }
        }
    }
}

#[test]
fn marks_invariants_on_every_fixture() {
    for name in BUILTIN_NAMES {
        let t = marks(name);
        let l = t.lattice();
        let order = l.group().order();
        for h in l.classes() {
            assert_eq!(t.mark(h.index, h.index), &BigInt::from(h.weyl_order));
            assert_eq!(t.mark(h.index, 0), &BigInt::from(order / h.order));
            assert_eq!(t.mark(l.whole_class(), h.index), &BigInt::from(1));
            for k in l.classes() {
                let m = t.mark(h.index, k.index);
                if m != &BigInt::from(0) {
                    assert!(l.is_subconjugate(k.index, h.index));
                }
                assert_eq!(m % BigInt::from(h.weyl_order), BigInt::from(0));
            }
        }
    }
}

#[test]
fn phi_examples() {
    let t = marks("S3");
    assert_eq!(t.phi(&BurnsideElement::basis(4, 1)).values, ints(&[3, 1, 0, 0]));
    assert_eq!(t.phi(&BurnsideElement::zero(4)).values, ints(&[0, 0, 0, 0]));
    assert_eq!(t.phi(&t.unit()).values, ints(&[1, 1, 1, 1]));
}

#[test]
fn solve_ghost_examples() {
    let t = marks("S3");
    // by hand: x_S3 = 0, x_C3 = 6/2, x_C2 = 6/1, x_1 = (6 - 18 - 6)/6
    let x = t.solve_ghost(&GhostElement::from_ints(&[6, 6, 6, 0])).unwrap();
    assert_eq!(x.coefficients, ints(&[-3, 6, 3, 0]));
    assert_eq!(t.phi(&x).values, ints(&[6, 6, 6, 0]));
    match t.solve_ghost(&GhostElement::from_ints(&[1, 0, 0, 0])) {
        Err(BurnsideError::NotInImage { class, remainder, .. }) => {
            assert_eq!(class, 0);
            assert_eq!(remainder, BigInt::from(1));
        }
        other => panic!("expected NotInImage, got {other:?}"),
    }
    assert!(matches!(
        t.solve_ghost(&GhostElement::from_ints(&[1, 2])),
        Err(BurnsideError::Dimension { expected: 4, actual: 2 })
    ));
}

/// Decomposes the product of two transitive G-sets into orbits, classifying
/// each orbit by the conjugacy class of a point stabilizer.
fn product_oracle(l: &SubgroupLattice, a: usize, b: usize) -> Vec<i64> {
    let g = l.group();
    let ca = cosets(g, &l.class(a).representative);
    let cb = cosets(g, &l.class(b).representative);
    let act = |x: usize, c: &BTreeSet<usize>| -> BTreeSet<usize> { c.iter().map(|&y| g.mul(x, y)).collect() };
    let mut points: Vec<(usize, usize)> = Vec::new();
    for i in 0..ca.len() {
        for j in 0..cb.len() {
            points.push((i, j));
        }
    }
    let mut seen = vec![false; points.len()];
    let mut counts = vec![0i64; l.len()];
    for start in 0..points.len() {
        if seen[start] {
            continue;
        }
        let (i, j) = points[start];
        let mut stab = Vec::new();
        for x in 0..g.order() {
            let ni = ca.iter().position(|c| *c == act(x, &ca[i])).unwrap();
            let nj = cb.iter().position(|c| *c == act(x, &cb[j])).unwrap();
            seen[ni * cb.len() + nj] = true;
            if ni == i && nj == j {
                stab.push(x);
            }
        }
        counts[l.class_of(&g.closure(&stab))] += 1;
    }
    counts
}

#[test]
fn multiply_examples() {
    let t = marks("S3");
    let c2 = BurnsideElement::basis(4, 1);
    assert_eq!(t.multiply(&c2, &c2).unwrap().coefficients, ints(&[1, 1, 0, 0]));
    assert_eq!(product_oracle(t.lattice(), 1, 1), vec![1, 1, 0, 0]);
    let free = BurnsideElement::basis(4, 0);
    assert_eq!(t.multiply(&free, &free).unwrap().coefficients, ints(&[6, 0, 0, 0]));
    assert_eq!(t.multiply(&t.unit(), &c2).unwrap(), c2);
}

#[test]
fn products_of_transitive_sets_match_orbit_counting() {
    for name in ["S3", "D4", "A4"] {
        let t = marks(name);
        let l = t.lattice();
        for a in 0..l.len() {
            for b in 0..l.len() {
                let prod = t.multiply(&BurnsideElement::basis(l.len(), a), &BurnsideElement::basis(l.len(), b)).unwrap();
                assert_eq!(prod.coefficients, ints(&product_oracle(l, a, b)), "{name} {a} {b}");
            }
        }
    }
}

#[test]
fn tom_dieck_containment() {
    for name in BUILTIN_NAMES {
        let t = marks(name);
        let order = BigInt::from(t.group().order());
        for h in 0..t.len() {
            let e = t.indicator(h).unwrap().scale(&order);
            let x = t.solve_ghost(&e).unwrap_or_else(|e| panic!("{name} class {h}: {e}"));
            assert_eq!(t.phi(&x), e);
        }
    }
}

#[test]
fn indicators_and_ideal() {
    let t = marks("S3");
    assert_eq!(t.indicator(3).unwrap().values, ints(&[0, 0, 0, 1]));
    let sum = (0..4).fold(GhostElement::zero(4), |acc, h| acc.add(&t.indicator(h).unwrap()));
    assert_eq!(sum, GhostElement::constant(4, 1));
    assert_eq!(t.indicator(9), Err(BurnsideError::UnknownClass(9)));

    // 6·[pt] − α_1 with α_1 = −3[G/1] + 6[G/C2] + 3[G/C3]
    let x = BurnsideElement::from_ints(&[3, -6, -3, 6]);
    assert_eq!(t.phi(&x).values, ints(&[0, 0, 0, 6]));
    assert!(t.in_ideal_jn(&x, GenBound::Finite(1)));
    for n in [GenBound::Finite(0), GenBound::Finite(1), GenBound::Finite(2), GenBound::Infinite] {
        assert!(!t.in_ideal_jn(&t.unit(), n));
        assert!(t.in_ideal_jn(&BurnsideElement::zero(4), n));
    }
}

fn element(len: usize) -> impl Strategy<Value = BurnsideElement> {
    proptest::collection::vec(-4i64..=4, len).prop_map(|v| BurnsideElement::from_ints(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws_d4(a in element(8), b in element(8), c in element(8)) {
        let t = marks("D4");
        prop_assert_eq!(t.len(), 8);
        let ab = t.multiply(&a, &b).unwrap();
        prop_assert_eq!(t.phi(&ab), t.phi(&a).pointwise_mul(&t.phi(&b)));
        prop_assert_eq!(&ab, &t.multiply(&b, &a).unwrap());
        prop_assert_eq!(t.multiply(&ab, &c).unwrap(), t.multiply(&a, &t.multiply(&b, &c).unwrap()).unwrap());
        prop_assert_eq!(t.multiply(&t.unit(), &a).unwrap(), a.clone());
        prop_assert_eq!(t.solve_ghost(&t.phi(&a)).unwrap(), a);
    }

    #[test]
    fn solve_inverts_phi_s4(a in element(11)) {
        let t = marks("S4");
        prop_assert_eq!(t.solve_ghost(&t.phi(&a)).unwrap(), a);
    }
}
