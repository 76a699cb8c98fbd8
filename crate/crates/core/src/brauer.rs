//! Brauer induction through p-local idempotents of the Burnside ring.
//!
//! For a prime `p`, sending a subgroup `K` to the class of its p-perfect
//! core `O^p(K)` partitions the subgroup classes; the indicator functions of
//! the blocks are idempotent ghosts, integral after scaling by the part of
//! `|G|_n` prime to `p`. A Bezout combination over the primes of `|G|_n`
//! yields a ghost equal to 1 on the abelian family, and solving it back gives
//! integer coefficients on n-hyper subgroups whose permutation characters sum
//! to the trivial character.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::artin::{abelian_family, order_n, ArtinError, ElementCheck};
use crate::burnside::{BurnsideElement, BurnsideError, GhostElement, MarksTable};
use crate::exact::{extended_euclid_set, p_free_part, prime_divisors};
use crate::group::{is_n_hyper, p_perfect_core, GenBound, SubgroupLattice};
use crate::json::big;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BrauerError {
    #[error("class {label} is not {p}-perfect")]
    NotPPerfect { class: usize, label: String, p: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error(transparent)]
    Artin(#[from] ArtinError),
    #[error(transparent)]
    Burnside(#[from] BurnsideError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalIdempotent {
    /// The p-perfect class `(H)` labelling the block.
    pub class: usize,
    pub p: u64,
    /// 1 at `(K)` iff `(O^p(K)) = (H)`.
    pub ghost: GhostElement,
    /// The part of `|G|_n` prime to `p`.
    pub scale: BigInt,
    /// Burnside element with ghost `scale · ghost`.
    pub scaled_element: BurnsideElement,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && prime_divisors(p) == vec![p]
}

/// For every class `K`, the class of `O^p(K)`.
pub fn p_perfect_classification(lattice: &SubgroupLattice, p: u64) -> Vec<usize> {
    let g = lattice.group();
    lattice
        .classes()
        .iter()
        .map(|c| lattice.class_of(&p_perfect_core(g, &c.representative, p)))
        .collect()
}

/// Classes that are n-hyper for at least one prime dividing `|G|_n`.
pub fn hyper_family(marks: &MarksTable, n: GenBound) -> Result<Vec<usize>, BrauerError> {
    let lattice = marks.lattice();
    let primes = hyper_primes(lattice, n)?;
    let g = lattice.group();
    Ok(lattice
        .classes()
        .iter()
        .filter(|c| primes.iter().any(|&p| is_n_hyper(g, &c.representative, n, p)))
        .map(|c| c.index)
        .collect())
}

// Primes of |G|_n; the trivial group gets 2 so that its one class still
// has a prime to be hyper for.
fn hyper_primes(lattice: &SubgroupLattice, n: GenBound) -> Result<Vec<u64>, BrauerError> {
    let order = order_n(lattice, &abelian_family(lattice, n))?;
    let primes = prime_divisors(u64::try_from(&order).expect("group orders fit in u64"));
    Ok(if primes.is_empty() { vec![2] } else { primes })
}

pub fn local_idempotent(h: usize, p: u64, marks: &MarksTable, n: GenBound) -> Result<LocalIdempotent, BrauerError> {
    if !is_prime(p) {
        return Err(BrauerError::NotPrime(p));
    }
    let lattice = marks.lattice();
    if h >= lattice.len() {
        return Err(BurnsideError::UnknownClass(h).into());
    }
    let classification = p_perfect_classification(lattice, p);
    local_idempotent_with(h, p, marks, n, &classification)
}

fn local_idempotent_with(
    h: usize,
    p: u64,
    marks: &MarksTable,
    n: GenBound,
    classification: &[usize],
) -> Result<LocalIdempotent, BrauerError> {
    let lattice = marks.lattice();
    if classification[h] != h {
        return Err(BrauerError::NotPPerfect { class: h, label: lattice.class(h).label.clone(), p });
    }
    let ghost = GhostElement {
        values: classification.iter().map(|&c| if c == h { BigInt::one() } else { BigInt::zero() }).collect(),
    };
    let scale = p_free_part(&order_n(lattice, &abelian_family(lattice, n))?, p);
    let scaled_element = marks
        .solve_ghost(&ghost.scale(&scale))
        .map_err(|e| BurnsideError::Internal(format!("scaled idempotent not integral: {e}")))?;
    Ok(LocalIdempotent { class: h, p, ghost, scale, scaled_element })
}

/// `I_(p,n)` together with the local idempotents it sums.
fn i_pn_parts(p: u64, marks: &MarksTable, n: GenBound) -> Result<(GhostElement, Vec<LocalIdempotent>), BrauerError> {
    if !is_prime(p) {
        return Err(BrauerError::NotPrime(p));
    }
    let lattice = marks.lattice();
    let family = abelian_family(lattice, n);
    let scale = p_free_part(&order_n(lattice, &family)?, p);
    let classification = p_perfect_classification(lattice, p);
    let mut sum = GhostElement::zero(lattice.len());
    let mut parts = Vec::new();
    for &a in &family.classes {
        if (lattice.class(a).order as u64).is_multiple_of(p) {
            continue;
        }
        let idem = local_idempotent_with(a, p, marks, n, &classification)?;
        sum = sum.add(&idem.ghost);
        parts.push(idem);
    }
    Ok((sum.scale(&scale), parts))
}

/// `(|G|_n)_(p) · Σ I_{A,p}` over family classes `A` of order prime to `p`.
pub fn i_pn(p: u64, marks: &MarksTable, n: GenBound) -> Result<GhostElement, BrauerError> {
    Ok(i_pn_parts(p, marks, n)?.0)
}

#[derive(Debug, Clone)]
pub struct BrauerCertificate {
    pub group: String,
    pub n: GenBound,
    pub order_n: BigInt,
    /// `(p, z_p)` in ascending prime order; `Σ z_p (|G|_n)_(p) = 1`.
    pub bezout: Vec<(u64, BigInt)>,
    pub i_n_ghost: GhostElement,
    /// Coefficients `k_H` with `Σ k_H [G/H]` having ghost `I_n`.
    pub decomposition: BurnsideElement,
    pub idempotents: Vec<LocalIdempotent>,
    /// For `n ≥ 1` the right side is 1; for `n = 0` it is `I_0` at `(⟨g⟩)`.
    pub checks: Vec<ElementCheck>,
    /// `I_n` is 1 on every class of the abelian family.
    pub unit_on_family: bool,
    /// Every support class is n-hyper for some prime of `|G|_n`.
    pub hyper_check: bool,
    labels: Vec<String>,
}

impl BrauerCertificate {
    pub fn passed(&self) -> bool {
        self.unit_on_family && self.hyper_check && self.checks.iter().all(ElementCheck::holds)
    }

    pub fn to_json(&self) -> Value {
        let label = |c: usize| self.labels[c].clone();
        json!({
            "group": self.group,
            "n": self.n,
            "order_n": big(&self.order_n),
            "bezout": self.bezout.iter().map(|(p, z)| json!({"p": p, "z_p": big(z)})).collect::<Vec<_>>(),
            "i_n_ghost": self.i_n_ghost.values.iter().map(big).collect::<Vec<_>>(),
            "coefficients": self.decomposition.support().into_iter()
                .map(|c| json!({"class": label(c), "c": big(&self.decomposition.coefficients[c])}))
                .collect::<Vec<_>>(),
            "idempotents": self.idempotents.iter().map(|i| json!({
                "class": label(i.class),
                "p": i.p,
                "scale": big(&i.scale),
                "ghost": i.ghost.values.iter().map(big).collect::<Vec<_>>(),
                "scaled_element": i.scaled_element.coefficients.iter().map(big).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "checks": self.checks.iter().map(|c| json!({"element_class": c.label, "lhs": big(&c.lhs), "rhs": big(&c.rhs)})).collect::<Vec<_>>(),
            "unit_on_family": self.unit_on_family,
            "hyper_check": self.hyper_check,
            "passed": self.passed(),
        })
    }
}

pub fn brauer_certificate(marks: &MarksTable, n: GenBound) -> Result<BrauerCertificate, BrauerError> {
    let lattice = marks.lattice();
    let g = lattice.group();
    let family = abelian_family(lattice, n);
    let order = order_n(lattice, &family)?;
    let primes = prime_divisors(u64::try_from(&order).expect("group orders fit in u64"));

    let mut bezout = Vec::new();
    let mut idempotents = Vec::new();
    let i_n_ghost = if primes.is_empty() {
        GhostElement::constant(lattice.len(), 1)
    } else {
        let locals: Vec<BigInt> = primes.iter().map(|&p| p_free_part(&order, p)).collect();
        let z = extended_euclid_set(&locals).map_err(|e| BurnsideError::Internal(e.to_string()))?;
        let mut acc = GhostElement::zero(lattice.len());
        for (&p, zp) in primes.iter().zip(&z) {
            let (ghost, parts) = i_pn_parts(p, marks, n)?;
            acc = acc.add(&ghost.scale(zp));
            idempotents.extend(parts);
            bezout.push((p, zp.clone()));
        }
        acc
    };
    let unit_on_family = family.classes.iter().all(|&a| i_n_ghost.values[a].is_one());
    let decomposition = marks
        .solve_ghost(&i_n_ghost)
        .map_err(|e| BurnsideError::Internal(format!("I_n not integral: {e}")))?;

    let hyper = hyper_family(marks, n)?;
    let hyper_check = decomposition.support().iter().all(|c| hyper.contains(c));

    let labels = g.conjugacy_class_labels();
    let checks = g
        .conjugacy_classes()
        .iter()
        .enumerate()
        .map(|(i, class)| {
            let x = class[0];
            let lhs: BigInt = decomposition
                .support()
                .into_iter()
                .map(|h| &decomposition.coefficients[h] * marks.fixed_points(h, x))
                .sum();
            let rhs = match n {
                GenBound::Finite(0) => i_n_ghost.values[lattice.cyclic_class(x)].clone(),
                _ => BigInt::one(),
            };
            ElementCheck { element_class: i, label: labels[i].clone(), lhs, rhs }
        })
        .collect();

    Ok(BrauerCertificate {
        group: g.label(),
        n,
        order_n: order,
        bezout,
        i_n_ghost,
        decomposition,
        idempotents,
        checks,
        unit_on_family,
        hyper_check,
        labels: lattice.classes().iter().map(|c| c.label.clone()).collect(),
    })
}
