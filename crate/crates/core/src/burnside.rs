//! The Burnside ring through its table of marks.
//!
//! A finite G-set is recorded by its coefficients on the transitive sets
//! `[G/H]`; the marks homomorphism sends it to the integer function
//! `(K) ↦ |X^K|` on subgroup classes (the ghost ring). The homomorphism is
//! injective and its matrix is triangular, so ghost vectors can be solved
//! back exactly when they lie in the image.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::artin::abelian_family;
use crate::exact::{solve_triangular_integer, ExactError, IntMatrix};
use crate::group::{GenBound, Group, SubgroupLattice};
use crate::json::big;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BurnsideError {
    #[error("ghost vector is not in the image of the marks map: class {label} leaves remainder {remainder}")]
    NotInImage { class: usize, label: String, remainder: BigInt },
    #[error("unknown subgroup class {0}")]
    UnknownClass(usize),
    #[error("expected a vector of length {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Integer combination of transitive G-sets `[G/H]`, indexed like the lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BurnsideElement {
    pub coefficients: Vec<BigInt>,
}

/// Integer function on subgroup classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GhostElement {
    pub values: Vec<BigInt>,
}

impl BurnsideElement {
    pub fn zero(len: usize) -> Self {
        BurnsideElement { coefficients: vec![BigInt::zero(); len] }
    }

    /// The transitive set `[G/H]` for class `h`.
    pub fn basis(len: usize, h: usize) -> Self {
        let mut x = Self::zero(len);
        x.coefficients[h] = BigInt::one();
        x
    }

    pub fn from_ints(values: &[i64]) -> Self {
        BurnsideElement { coefficients: values.iter().map(|&v| BigInt::from(v)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        BurnsideElement { coefficients: self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        BurnsideElement { coefficients: self.coefficients.iter().map(|a| a * k).collect() }
    }

    /// Classes with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coefficients.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect()
    }
}

impl GhostElement {
    pub fn zero(len: usize) -> Self {
        GhostElement { values: vec![BigInt::zero(); len] }
    }

    pub fn constant(len: usize, value: impl Into<BigInt>) -> Self {
        GhostElement { values: vec![value.into(); len] }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        GhostElement { values: values.iter().map(|&v| BigInt::from(v)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        GhostElement { values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }

    pub fn pointwise_mul(&self, other: &Self) -> Self {
        GhostElement { values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        GhostElement { values: self.values.iter().map(|a| a * k).collect() }
    }
}

/// `m[H][K] = |(G/H)^K|`, rows and columns in lattice order.
#[derive(Debug, Clone)]
pub struct MarksTable {
    lattice: Arc<SubgroupLattice>,
    m: IntMatrix,
}

impl MarksTable {
    /// Counts, for each pair of classes, the cosets `gH` with `g⁻¹Kg ⊆ H`.
    pub fn new(lattice: Arc<SubgroupLattice>) -> Self {
        let g: &Group = lattice.group();
        let n = lattice.len();
        let mut m = IntMatrix::zeros(n, n);
        for h in lattice.classes() {
            let transversal = left_transversal(g, &h.representative);
            for k in lattice.classes() {
                if !lattice.is_subconjugate(k.index, h.index) {
                    continue;
                }
                let gens = g.generating_set(&k.representative);
                let fixed = transversal
                    .iter()
                    .filter(|&&t| {
                        let t_inv = g.inv(t);
                        gens.iter().all(|&x| h.representative.contains(g.conj(t_inv, x)))
                    })
                    .count();
                m[(h.index, k.index)] = BigInt::from(fixed);
            }
        }
        MarksTable { lattice, m }
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn group(&self) -> &Arc<Group> {
        self.lattice.group()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.m
    }

    pub fn len(&self) -> usize {
        self.m.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.m.rows() == 0
    }

    /// `|(G/H)^K|`
    pub fn mark(&self, h: usize, k: usize) -> &BigInt {
        &self.m[(h, k)]
    }

    /// Fixed points of an element `g` on `G/H`: the mark at `(⟨g⟩)`.
    pub fn fixed_points(&self, h: usize, element: usize) -> &BigInt {
        self.mark(h, self.lattice.cyclic_class(element))
    }

    pub fn phi(&self, x: &BurnsideElement) -> GhostElement {
        GhostElement { values: self.m.transpose().mul_vec(&x.coefficients) }
    }

    /// Inverse of [`phi`](Self::phi) on its image.
    ///
    /// Solves from the whole group downwards; the diagonal entries are the
    /// Weyl group orders. The first class (in that descent) whose division
    /// leaves a remainder is reported.
    pub fn solve_ghost(&self, ghost: &GhostElement) -> Result<BurnsideElement, BurnsideError> {
        let n = self.len();
        if ghost.values.len() != n {
            return Err(BurnsideError::Dimension { expected: n, actual: ghost.values.len() });
        }
        let order: Vec<usize> = (0..n).rev().collect();
        match solve_triangular_integer(&self.m.transpose(), &ghost.values, &order) {
            Ok(coefficients) => Ok(BurnsideElement { coefficients }),
            Err(ExactError::NotIntegral { pivot, remainder }) => Err(BurnsideError::NotInImage {
                class: pivot,
                label: self.lattice.class(pivot).label.clone(),
                remainder,
            }),
            Err(e) => Err(BurnsideError::Internal(e.to_string())),
        }
    }

    /// Product of G-sets, computed through ghosts.
    pub fn multiply(&self, a: &BurnsideElement, b: &BurnsideElement) -> Result<BurnsideElement, BurnsideError> {
        let ghost = self.phi(a).pointwise_mul(&self.phi(b));
        self.solve_ghost(&ghost).map_err(|e| BurnsideError::Internal(format!("product left the Burnside ring: {e}")))
    }

    /// The ghost `e_H`: 1 at `(H)`, 0 elsewhere.
    pub fn indicator(&self, h: usize) -> Result<GhostElement, BurnsideError> {
        if h >= self.len() {
            return Err(BurnsideError::UnknownClass(h));
        }
        let mut e = GhostElement::zero(self.len());
        e.values[h] = BigInt::one();
        Ok(e)
    }

    /// The unit `[G/G]`.
    pub fn unit(&self) -> BurnsideElement {
        BurnsideElement::basis(self.len(), self.lattice.whole_class())
    }

    /// Whether the ghost of `x` vanishes on every abelian class with at most
    /// `n` generators.
    pub fn in_ideal_jn(&self, x: &BurnsideElement, n: GenBound) -> bool {
        let ghost = self.phi(x);
        abelian_family(&self.lattice, n).classes.iter().all(|&a| ghost.values[a].is_zero())
    }

    pub fn to_json(&self) -> Value {
        let g = self.group();
        let classes: Vec<Value> = self
            .lattice
            .classes()
            .iter()
            .map(|c| json!({"label": c.label, "order": c.order, "weyl_order": c.weyl_order, "abelian": c.is_abelian}))
            .collect();
        let rows: Vec<Value> =
            (0..self.len()).map(|i| Value::Array(self.m.row(i).iter().map(big).collect())).collect();
        json!({"group": g.label(), "order": g.order(), "classes": classes, "marks": rows})
    }
}

fn left_transversal(g: &Group, h: &crate::group::Subgroup) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::with_capacity(g.order() / h.order());
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        out.push(x);
        for &y in h.elements() {
            seen[g.mul(x, y)] = true;
        }
    }
    out
}
