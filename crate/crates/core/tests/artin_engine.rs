use std::sync::Arc;

use burnside::artin::*;
use burnside::burnside::*;
use burnside::group::*;
use num_bigint::BigInt;

fn marks(name: &str) -> MarksTable {
    MarksTable::new(Arc::new(SubgroupLattice::new(Arc::new(builtin(name).unwrap()))))
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

const BOUNDS: [GenBound; 4] = [GenBound::Finite(0), GenBound::Finite(1), GenBound::Finite(2), GenBound::Infinite];

/// Fixed points of g on G/H, counted directly: cosets xH with x⁻¹gx ∈ H.
fn fixed_points_oracle(g: &Group, h: &Subgroup, x: usize) -> i64 {
    let count = (0..g.order()).filter(|&y| h.contains(g.conj(g.inv(y), x))).count();
    (count / h.order()) as i64
}

#[test]
fn families() {
    let s3 = marks("S3");
    assert_eq!(abelian_family(s3.lattice(), GenBound::Finite(1)).classes, vec![0, 1, 2]);
    assert_eq!(abelian_family(s3.lattice(), GenBound::Finite(0)).classes, vec![0]);
    let v4 = marks("C2xC2");
    assert_eq!(abelian_family(v4.lattice(), GenBound::Finite(1)).classes, vec![0, 1, 2, 3]);
    assert_eq!(abelian_family(v4.lattice(), GenBound::Finite(2)).classes, vec![0, 1, 2, 3, 4]);
}

#[test]
fn orders() {
    let s3 = marks("S3");
    let fam = abelian_family(s3.lattice(), GenBound::Finite(1));
    assert_eq!(order_n(s3.lattice(), &fam), Ok(BigInt::from(6)));
    let empty = AbelianClassFamily { n: GenBound::Finite(1), classes: vec![] };
    assert_eq!(order_n(s3.lattice(), &empty), Err(ArtinError::EmptyFamily));
    let t = marks("trivial");
    assert_eq!(order_n(t.lattice(), &abelian_family(t.lattice(), GenBound::Infinite)), Ok(BigInt::from(1)));
    // for finite groups every |G|_n is |G|
    for name in BUILTIN_NAMES {
        let m = marks(name);
        for n in BOUNDS {
            let fam = abelian_family(m.lattice(), n);
            assert_eq!(order_n(m.lattice(), &fam).unwrap(), BigInt::from(m.group().order()), "{name} {n}");
        }
    }
}

#[test]
fn idempotent_multiples_s3() {
    let t = marks("S3");
    let fam = abelian_family(t.lattice(), GenBound::Finite(1));
    assert_eq!(idempotent_multiple(2, &fam, &t).unwrap().coefficients, ints(&[-1, 0, 3, 0]));
    assert_eq!(idempotent_multiple(0, &fam, &t).unwrap().coefficients, ints(&[1, 0, 0, 0]));
    assert_eq!(idempotent_multiple(1, &fam, &t).unwrap().coefficients, ints(&[-3, 6, 0, 0]));
    assert_eq!(idempotent_multiple(3, &fam, &t), Err(ArtinError::NotInFamily(3)));
}

#[test]
fn idempotent_support_stays_in_family_below_k() {
    for name in BUILTIN_NAMES {
        let t = marks(name);
        for n in BOUNDS {
            let fam = abelian_family(t.lattice(), n);
            for &k in &fam.classes {
                let x = idempotent_multiple(k, &fam, &t).unwrap();
                for a in x.support() {
                    assert!(fam.contains(a) && t.lattice().is_subconjugate(a, k));
                }
                assert_eq!(t.phi(&x), t.indicator(k).unwrap().scale(&BigInt::from(t.group().order())));
            }
        }
    }
}

#[test]
fn s3_certificate() {
    let t = marks("S3");
    let cert = artin_certificate(&t, GenBound::Finite(1)).unwrap();
    assert!(cert.passed());
    let coeffs: Vec<(usize, BigInt)> = cert.coefficients.clone();
    assert_eq!(coeffs, vec![(0, BigInt::from(-3)), (1, BigInt::from(6)), (2, BigInt::from(3))]);
    let lhs: Vec<BigInt> = cert.checks.iter().map(|c| c.lhs.clone()).collect();
    assert_eq!(lhs, ints(&[6, 6, 6]));
    let json = cert.to_json();
    assert_eq!(json["order_n"], 6);
    assert_eq!(json["coefficients"][1]["c"], 6);
    assert_eq!(json["checks"].as_array().unwrap().len(), 3);
}

#[test]
fn trivial_and_klein_certificates() {
    let t = marks("trivial");
    let cert = artin_certificate(&t, GenBound::Finite(1)).unwrap();
    assert_eq!(cert.alpha.coefficients, ints(&[1]));
    assert!(cert.passed());

    // back-substitution of the constant ghost 4 over all five classes
    let v4 = marks("C2xC2");
    let cert = artin_certificate(&v4, GenBound::Finite(2)).unwrap();
    assert_eq!(cert.alpha.coefficients, ints(&[0, 0, 0, 0, 4]));
    assert!(cert.checks.iter().all(|c| c.lhs == BigInt::from(4)));
    assert!(cert.passed());
}

#[test]
fn n_zero_is_ghost_level() {
    let t = marks("S3");
    let cert = artin_certificate(&t, GenBound::Finite(0)).unwrap();
    assert_eq!(cert.alpha.coefficients, ints(&[1, 0, 0, 0]));
    assert!(cert.ghost_check && cert.jn_check);
    // regular character: |G| at the identity, 0 elsewhere
    let lhs: Vec<BigInt> = cert.checks.iter().map(|c| c.lhs.clone()).collect();
    assert_eq!(lhs, ints(&[6, 0, 0]));
    assert!(cert.passed());
}

#[test]
fn permutation_character_identity_on_all_fixtures() {
    for name in BUILTIN_NAMES {
        let t = marks(name);
        let l = t.lattice();
        let g = l.group();
        for n in [GenBound::Finite(1), GenBound::Finite(2), GenBound::Infinite] {
            let cert = artin_certificate(&t, n).unwrap();
            assert!(cert.passed(), "{name} n={n}");
            for x in 0..g.order() {
                let total: i64 = cert
                    .alpha
                    .support()
                    .into_iter()
                    .map(|a| {
                        let c: i64 = (&cert.alpha.coefficients[a]).try_into().unwrap();
                        c * fixed_points_oracle(g, &l.class(a).representative, x)
                    })
                    .sum();
                assert_eq!(total, g.order() as i64, "{name} n={n} element {x}");
            }
            let diff = t.unit().scale(&cert.order_n).add(&cert.alpha.scale(&BigInt::from(-1)));
            assert!(t.in_ideal_jn(&diff, n));
        }
    }
}

#[test]
fn order_n_is_monotone() {
    for name in BUILTIN_NAMES {
        let t = marks(name);
        let orders: Vec<BigInt> =
            BOUNDS.iter().map(|&n| order_n(t.lattice(), &abelian_family(t.lattice(), n)).unwrap()).collect();
        for w in orders.windows(2) {
            assert_eq!(&w[1] % &w[0], BigInt::from(0));
        }
    }
}
