use std::sync::Arc;

use burnside::burnside::MarksTable;
use burnside::character::*;
use burnside::exact::{rational_rank, BigInt, Cyclotomic, Rational};
use burnside::group::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn lattice(name: &str) -> Arc<SubgroupLattice> {
    Arc::new(SubgroupLattice::new(Arc::new(builtin(name).unwrap())))
}

fn domain_of(l: &SubgroupLattice, class: usize) -> Arc<ClassDomain> {
    ClassDomain::new(l.group().clone(), l.class(class).representative.clone())
}

fn ints_at(f: &ClassFunction, labels: &[&str]) -> Vec<i64> {
    let own = f.domain().labels();
    labels
        .iter()
        .map(|lab| {
            let c = own.iter().position(|x| x == lab).unwrap();
            i64::try_from(f.values()[c].to_integer().unwrap()).unwrap()
        })
        .collect()
}

fn find_class(l: &SubgroupLattice, order: usize) -> usize {
    l.classes().iter().position(|c| c.order == order).unwrap()
}

// fixed cosets xH with g x H = x H, counted over explicit coset sets
fn coset_oracle(g: &Group, h: &Subgroup, x: usize) -> usize {
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for a in 0..g.order() {
        let mut c: Vec<usize> = h.elements().iter().map(|&b| g.mul(a, b)).collect();
        c.sort_unstable();
        if !cosets.contains(&c) {
            cosets.push(c);
        }
    }
    cosets
        .iter()
        .filter(|c| {
            let mut moved: Vec<usize> = c.iter().map(|&y| g.mul(x, y)).collect();
            moved.sort_unstable();
            &&moved == c
        })
        .count()
}

// ind ξ (g) = |H|⁻¹ Σ_{x ∈ G, x⁻¹gx ∈ H} ξ(x⁻¹gx)
fn induce_oracle(xi: &ClassFunction, g: &Group, target: usize) -> Cyclotomic {
    let h = xi.domain().subgroup();
    let mut acc = Cyclotomic::zero(xi.domain().conductor());
    for x in 0..g.order() {
        let y = g.conj(g.inv(x), target);
        if h.contains(y) {
            acc = &acc + xi.at(y);
        }
    }
    acc.scale(&Rational::new(1.into(), h.order().into()))
}

#[test]
fn permutation_characters_match_coset_oracle() {
    for name in BUILTIN_NAMES {
        let l = lattice(name);
        let g = l.group();
        let whole = ClassDomain::whole(g.clone());
        for (c, class) in l.classes().iter().enumerate() {
            let chi = perm_character(&l, c, &whole);
            for k in 0..whole.class_count() {
                let x = whole.representative(k);
                let expect = coset_oracle(g, &class.representative, x) as i64;
                assert_eq!(chi.values()[k], Cyclotomic::from_int(whole.conductor(), expect), "{name} {}", class.label);
            }
            // second code path
            let triv = ClassFunction::trivial(domain_of(&l, c));
            assert_eq!(induce(&triv, &whole).unwrap(), chi, "{name} {}", class.label);
        }
    }
}

#[test]
fn s3_examples() {
    let l = lattice("S3");
    let g = l.group();
    let whole = ClassDomain::whole(g.clone());
    let c2 = find_class(&l, 2);
    let c3 = find_class(&l, 3);
    let labels = ["1a", "2a", "3a"];
    assert_eq!(ints_at(&perm_character(&l, c2, &whole), &labels), vec![3, 1, 0]);
    assert_eq!(ints_at(&perm_character(&l, l.whole_class(), &whole), &labels), vec![1, 1, 1]);
    assert_eq!(ints_at(&perm_character(&l, l.trivial_class(), &whole), &labels), vec![6, 0, 0]);
    assert_eq!(ints_at(&induce(&ClassFunction::trivial(domain_of(&l, c3)), &whole).unwrap(), &labels), vec![2, 0, 2]);

    // λ(c^k) = ζ_3^k on C3
    let d3 = domain_of(&l, c3);
    let c = *d3.subgroup().elements().iter().find(|&&x| x != 0).unwrap();
    let power = |k: usize| (0..k).fold(0, |acc, _| g.mul(acc, c));
    let values = (0..d3.class_count())
        .map(|cl| {
            let k = (0..3).find(|&k| power(k) == d3.representative(cl)).unwrap();
            Cyclotomic::zeta_power(d3.conductor(), 2 * k as i64)
        })
        .collect();
    let lambda = ClassFunction::new(d3.clone(), values).unwrap();
    let induced = induce(&lambda, &whole).unwrap();
    assert_eq!(ints_at(&induced, &labels), vec![2, 0, -1]);
    for k in 0..whole.class_count() {
        assert_eq!(induced.values()[k], induce_oracle(&lambda, g, whole.representative(k)));
    }

    // restriction
    let d2 = domain_of(&l, c2);
    let res = restrict(&perm_character(&l, c2, &whole), &d2).unwrap();
    assert_eq!(ints_at(&res, &["1a", "2a"]), vec![3, 1]);
    assert_eq!(restrict(&ClassFunction::trivial(whole.clone()), &d2).unwrap(), ClassFunction::trivial(d2.clone()));
    let d1 = domain_of(&l, l.trivial_class());
    assert_eq!(ints_at(&restrict(&perm_character(&l, c2, &whole), &d1).unwrap(), &["1a"]), vec![3]);

    // induce from G is the identity
    let chi = perm_character(&l, c2, &whole);
    assert_eq!(induce(&chi, &whole).unwrap(), chi);

    // Frobenius
    let m = perm_character(&l, c3, &whole);
    assert!(frobenius_check(&ClassFunction::trivial(d2.clone()), &m).unwrap());
    assert!(frobenius_check(&ClassFunction::constant(d2.clone(), 0), &m).unwrap());

    // Mackey, K = H = C2: (1,1) + (2,0) = (3,1)
    let triv2 = ClassFunction::trivial(d2.clone());
    assert!(mackey_check(&d2, &triv2).unwrap());
    let dc = double_cosets(g, d2.subgroup(), d2.subgroup());
    assert_eq!(dc.cosets.len(), 2);
    assert!(mackey_check(&whole, &triv2).unwrap());
    assert!(mackey_check(&d2, &ClassFunction::trivial(whole.clone())).unwrap());
}

fn random_function(rng: &mut StdRng, domain: &Arc<ClassDomain>) -> ClassFunction {
    let n = domain.conductor();
    let values = (0..domain.class_count())
        .map(|_| {
            let a = Cyclotomic::from_int(n, rng.gen_range(-3..=3));
            let b = Cyclotomic::zeta_power(n, rng.gen_range(0..n as i64))
                .scale(&Rational::from_integer(rng.gen_range(-2..=2).into()));
            &a + &b
        })
        .collect();
    ClassFunction::new(domain.clone(), values).unwrap()
}

#[test]
fn reciprocity_and_mackey_on_random_functions() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for name in BUILTIN_NAMES {
        let l = lattice(name);
        let whole = ClassDomain::whole(l.group().clone());
        let domains: Vec<_> = (0..l.len()).map(|c| domain_of(&l, c)).collect();
        for _ in 0..100 {
            let h = &domains[rng.gen_range(0..l.len())];
            let k = &domains[rng.gen_range(0..l.len())];
            let xi = random_function(&mut rng, h);
            let m = random_function(&mut rng, &whole);
            assert!(frobenius_check(&xi, &m).unwrap(), "{name}");
            assert!(mackey_check(k, &xi).unwrap(), "{name}");
            let lhs = induce(&xi, &whole).unwrap().inner(&m);
            let rhs = xi.inner(&restrict(&m, h).unwrap());
            assert_eq!(lhs, rhs, "{name}");
        }
    }
}

const S3_TABLE: &str = "name: S3\nconductor: 3\nclasses: 1a:1 2a:3 3a:2\n1, 1, 1\n1, -1, 1\n2, 0, -1\n";

#[test]
fn load_tables() {
    let g = Arc::new(builtin("S3").unwrap());
    let t = load_character_table(S3_TABLE, g.clone()).unwrap();
    assert_eq!(t.len(), 3);
    let l = lattice("S3");
    let regular = perm_character(&l, l.trivial_class(), t.domain());
    assert_eq!(t.coordinates(&regular).unwrap(), vec![BigInt::from(1), BigInt::from(1), BigInt::from(2)]);

    let a4 = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/tables/A4.tbl")).unwrap();
    assert_eq!(load_character_table(&a4, Arc::new(builtin("A4").unwrap())).unwrap().len(), 4);

    let dup = "name: bad\nconductor: 3\nclasses: 1a:1 2a:3 3a:2\n1, 1, 1\n1, 1, 1\n2, 0, -1\n";
    let err = load_character_table(dup, g.clone()).unwrap_err();
    assert!(matches!(err, CharacterError::OrthogonalityFailure { i: 0, j: 1 }), "{err}");
    assert_eq!(err.to_json()["error"], "OrthogonalityFailure");

    let bad_deg = "name: bad\nconductor: 2\nclasses: 1a:1 2a:1\n1, 1\n2, -2\n";
    assert!(matches!(TableFile::parse(bad_deg), Err(CharacterError::DegreeSumMismatch { .. })));

    let malformed = "name: bad\nconductor: 3\nclasses: 1a:1 2a:3 3a:2\n1, 1, 1\n1, -1, q\n2, 0, -1\n";
    assert!(matches!(TableFile::parse(malformed), Err(CharacterError::MalformedEntry { line: 5, .. })));

    let not_first = "name: bad\nconductor: 2\nclasses: 1a:1 2a:1\n1, -1\n1, 1\n";
    assert_eq!(TableFile::parse(not_first).unwrap_err(), CharacterError::FirstRowNotTrivial);

    // right shape, wrong group
    assert!(matches!(
        load_character_table(S3_TABLE, Arc::new(builtin("C6").unwrap())),
        Err(CharacterError::TableMismatch { .. })
    ));
}

#[test]
fn bound_s4_table_decomposes_natural_character() {
    let g = Arc::new(builtin("S4").unwrap());
    let lib = TableLibrary::builtin();
    let t = lib.table_for(&ClassDomain::whole(g.clone())).unwrap();
    let dom = t.domain().clone();
    let values = (0..dom.class_count())
        .map(|c| {
            let p = g.element(dom.representative(c));
            let fixed = (0..4u32).filter(|&i| p.apply(i) == i).count();
            Cyclotomic::from_int(dom.conductor(), fixed as i64)
        })
        .collect();
    let natural = ClassFunction::new(dom, values).unwrap();
    let coords = t.coordinates(&natural).unwrap();
    // trivial plus the 3-dimensional character with value 1 on transpositions
    let idx_std = t
        .rows()
        .iter()
        .position(|r| ints_at(r, &["1a", "2a"]) == vec![3, 1])
        .unwrap();
    let mut expect = vec![BigInt::from(0); 5];
    expect[0] = 1.into();
    expect[idx_std] = 1.into();
    assert_eq!(coords, expect);
}

#[test]
fn every_fixture_subgroup_has_a_table() {
    let lib = TableLibrary::builtin();
    for name in BUILTIN_NAMES {
        let l = lattice(name);
        for c in 0..l.len() {
            let t = lib.table_for(&domain_of(&l, c)).unwrap_or_else(|e| panic!("{name} {}: {e}", l.class(c).label));
            let sq: i64 = t.rows().iter().map(|r| i64::try_from(r.values()[0].to_integer().unwrap()).unwrap().pow(2)).sum();
            assert_eq!(sq as usize, l.class(c).order);
        }
    }
    let empty = TableLibrary::empty();
    let l = lattice("S3");
    assert!(matches!(empty.table_for(&domain_of(&l, 0)), Err(CharacterError::MissingTable { order: 1, .. })));
}

fn rational_kernel_dim(eq: &EqualizerLattice) -> usize {
    let rows: Vec<Vec<Rational>> =
        eq.difference.to_rows().iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect();
    eq.ambient_dim() - rational_rank(&rows)
}

#[test]
fn equalizer_examples() {
    let lib = TableLibrary::builtin();
    let l = lattice("S3");
    let family = vec![l.trivial_class(), find_class(&l, 2), find_class(&l, 3)];
    let eq = equalizer_lattice(&l, &family, &lib).unwrap();
    assert_eq!(eq.rank(), 3);
    assert_eq!(rational_kernel_dim(&eq), 3);
    for j in 0..eq.rank() {
        assert!(eq.contains(&eq.basis.column(j)));
    }
    let whole = equalizer_lattice(&l, &[l.whole_class()], &lib).unwrap();
    assert_eq!(whole.rank(), 3);
    assert_eq!(whole.basis, burnside::exact::IntMatrix::identity(3));
    assert_eq!(equalizer_lattice(&l, &[], &lib).unwrap_err(), CharacterError::EmptyFamily);

    for name in BUILTIN_NAMES {
        let l = lattice(name);
        let all: Vec<usize> = (0..l.len()).collect();
        let eq = equalizer_lattice(&l, &all, &lib).unwrap();
        assert_eq!(eq.rank(), rational_kernel_dim(&eq), "{name}");
    }
}

fn marks(name: &str) -> MarksTable {
    MarksTable::new(lattice(name))
}

#[test]
fn artin_restriction() {
    let lib = TableLibrary::builtin();
    let s3 = verify_artin_restriction(&marks("S3"), GenBound::Finite(1), &lib).unwrap();
    assert_eq!(s3.order_n, BigInt::from(6));
    assert_eq!(s3.psi_res, burnside::exact::IntMatrix::identity(3).scale(&BigInt::from(6)));
    assert_eq!(s3.res_psi, burnside::exact::IntMatrix::identity(3).scale(&BigInt::from(6)));
    let s4 = verify_artin_restriction(&marks("S4"), GenBound::Finite(1), &lib).unwrap();
    assert_eq!(s4.family_labels.len(), 5);
    assert_eq!(s4.psi_res, burnside::exact::IntMatrix::identity(5).scale(&BigInt::from(24)));
    let triv = verify_artin_restriction(&marks("trivial"), GenBound::Finite(0), &lib).unwrap();
    assert_eq!(triv.psi_res, burnside::exact::IntMatrix::identity(1));

    for name in BUILTIN_NAMES {
        for n in [GenBound::Finite(1), GenBound::Finite(2), GenBound::Infinite] {
            let r = verify_artin_restriction(&marks(name), n, &lib).unwrap_or_else(|e| panic!("{name} n={n}: {e}"));
            assert_eq!(r.equalizer_rank, r.irreducibles);
        }
    }
    // with only the trivial subgroup, ψ∘res is d dᵀ for the degree vector d
    assert!(matches!(
        verify_artin_restriction(&marks("S3"), GenBound::Finite(0), &lib),
        Err(CharacterError::CompositeMismatch { .. })
    ));
}

#[test]
fn brauer_restriction() {
    let lib = TableLibrary::builtin();
    let s3 = verify_brauer_restriction(&marks("S3"), GenBound::Finite(1), &lib).unwrap();
    assert_eq!(s3.family_labels.len(), 4);
    assert_eq!(s3.elementary_divisors, vec![BigInt::from(1); 3]);
    for name in BUILTIN_NAMES {
        let r = verify_brauer_restriction(&marks(name), GenBound::Finite(1), &lib)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(r.equalizer_rank, r.irreducibles);
    }
    // a p-group is its own hyper subgroup
    let q8 = marks("Q8");
    let r = verify_brauer_restriction(&q8, GenBound::Finite(1), &lib).unwrap();
    assert!(r.family.contains(&q8.lattice().whole_class()));
    assert!(r.elementary_divisors.iter().all(|d| *d == BigInt::from(1)));
}
