//! Artin induction: the orders `|G|_n`, the elements `|G|_n · e_K` of the
//! Burnside ring, and certificates exhibiting `|G|_n` times the unit as a
//! combination of sets induced from abelian subgroups with at most `n`
//! generators.

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use crate::burnside::{BurnsideElement, BurnsideError, GhostElement, MarksTable};
use crate::exact::lcm;
use crate::group::{GenBound, SubgroupLattice};
use crate::json::big;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArtinError {
    #[error("the abelian class family is empty")]
    EmptyFamily,
    #[error("class {0} is not in the abelian family")]
    NotInFamily(usize),
    #[error(transparent)]
    Burnside(#[from] BurnsideError),
}

/// Abelian subgroup classes with at most `n` generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianClassFamily {
    pub n: GenBound,
    pub classes: Vec<usize>,
}

impl AbelianClassFamily {
    pub fn contains(&self, class: usize) -> bool {
        self.classes.contains(&class)
    }
}

/// For `n = 0` only the trivial class qualifies.
pub fn abelian_family(lattice: &SubgroupLattice, n: GenBound) -> AbelianClassFamily {
    let classes = lattice
        .classes()
        .iter()
        .filter(|c| c.is_abelian && n.admits(c.min_generators))
        .map(|c| c.index)
        .collect();
    AbelianClassFamily { n, classes }
}

/// `|G|_n`: lcm of the Weyl group orders over the family.
pub fn order_n(lattice: &SubgroupLattice, family: &AbelianClassFamily) -> Result<BigInt, ArtinError> {
    if family.classes.is_empty() {
        return Err(ArtinError::EmptyFamily);
    }
    let weyl: Vec<BigInt> = family.classes.iter().map(|&c| BigInt::from(lattice.class(c).weyl_order)).collect();
    Ok(lcm(&weyl))
}

/// The Burnside element with ghost `|G|_n · e_K`, for `K` in the family.
///
/// Its support lies in the family, below `(K)`.
pub fn idempotent_multiple(
    k: usize,
    family: &AbelianClassFamily,
    marks: &MarksTable,
) -> Result<BurnsideElement, ArtinError> {
    if !family.contains(k) {
        return Err(ArtinError::NotInFamily(k));
    }
    let lattice = marks.lattice();
    let scale = order_n(lattice, family)?;
    let ghost = marks.indicator(k)?.scale(&scale);
    let x = marks.solve_ghost(&ghost).map_err(|e| internal(format!("|G|_n e_K not integral: {e}")))?;
    for a in x.support() {
        if !family.contains(a) || !lattice.is_subconjugate(a, k) {
            return Err(internal(format!("support class {} escapes the family below {}", a, k)).into());
        }
    }
    Ok(x)
}

fn internal(msg: String) -> BurnsideError {
    BurnsideError::Internal(msg)
}

/// Per-element identity `Σ_A c_A |(G/A)^g| = expected`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementCheck {
    pub element_class: usize,
    pub label: String,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl ElementCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    fn to_json(&self) -> Value {
        json!({"element_class": self.label, "lhs": big(&self.lhs), "rhs": big(&self.rhs)})
    }
}

#[derive(Debug, Clone)]
pub struct ArtinCertificate {
    pub group: String,
    pub n: GenBound,
    pub order_n: BigInt,
    pub family: AbelianClassFamily,
    /// `α_n`, supported on the family.
    pub alpha: BurnsideElement,
    /// `(class, c_A)` for every family class, in lattice order.
    pub coefficients: Vec<(usize, BigInt)>,
    /// One check per element conjugacy class. For `n ≥ 1` the right side is
    /// `|G|_n` throughout; in general it is the ghost of `α_n` at `(⟨g⟩)`.
    pub checks: Vec<ElementCheck>,
    /// `φ(α_n) = |G|_n` on the family and 0 elsewhere.
    pub ghost_check: bool,
    /// `|G|_n · [G/G] − α_n ∈ J_n`.
    pub jn_check: bool,
    labels: Vec<String>,
}

impl ArtinCertificate {
    pub fn passed(&self) -> bool {
        self.ghost_check
            && self.jn_check
            && self.checks.iter().all(ElementCheck::holds)
            && self.alpha.support().iter().all(|&c| self.family.contains(c))
    }

    pub fn coefficient_of(&self, class: usize) -> BigInt {
        self.alpha.coefficients[class].clone()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group,
            "n": self.n,
            "order_n": big(&self.order_n),
            "coefficients": self.coefficients.iter()
                .map(|(c, v)| json!({"class": self.labels[*c], "c": big(v)}))
                .collect::<Vec<_>>(),
            "checks": self.checks.iter().map(ElementCheck::to_json).collect::<Vec<_>>(),
            "ghost_check": self.ghost_check,
            "jn_check": self.jn_check,
            "passed": self.passed(),
        })
    }
}

/// Builds `α_n = Σ_K |G|_n e_K` over the family and verifies it.
pub fn artin_certificate(marks: &MarksTable, n: GenBound) -> Result<ArtinCertificate, ArtinError> {
    let lattice = marks.lattice();
    let g = lattice.group();
    let family = abelian_family(lattice, n);
    let scale = order_n(lattice, &family)?;
    let mut alpha = BurnsideElement::zero(lattice.len());
    for &k in &family.classes {
        alpha = alpha.add(&idempotent_multiple(k, &family, marks)?);
    }
    let coefficients = family.classes.iter().map(|&c| (c, alpha.coefficients[c].clone())).collect();

    let ghost = marks.phi(&alpha);
    let mut expected = GhostElement::zero(lattice.len());
    for &c in &family.classes {
        expected.values[c] = scale.clone();
    }
    let ghost_check = ghost == expected;
    let difference = marks.unit().scale(&scale).add(&alpha.scale(&BigInt::from(-1)));
    let jn_check = marks.in_ideal_jn(&difference, n);

    let labels = g.conjugacy_class_labels();
    let checks = g
        .conjugacy_classes()
        .iter()
        .enumerate()
        .map(|(i, class)| {
            let x = class[0];
            let lhs: BigInt = alpha
                .coefficients
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(a, c)| c * marks.fixed_points(a, x))
                .sum();
            let cyclic = lattice.cyclic_class(x);
            let rhs = if family.contains(cyclic) { scale.clone() } else { BigInt::zero() };
            ElementCheck { element_class: i, label: labels[i].clone(), lhs, rhs }
        })
        .collect();

    Ok(ArtinCertificate {
        group: g.label(),
        n,
        order_n: scale,
        family,
        alpha,
        coefficients,
        checks,
        ghost_check,
        jn_check,
        labels: lattice.classes().iter().map(|c| c.label.clone()).collect(),
    })
}
