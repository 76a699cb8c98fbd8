//! Declared abelian-class data for compact Lie groups and the orders `|G|_n`
//! computed from it.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{lcm, prime_divisors};
use crate::group::GenBound;

pub const SO3_JSON: &str = include_str!("../data/lie/so3.json");

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "error")]
pub enum LieError {
    #[error("schema: {detail}")]
    Schema { detail: String },
    #[error("duplicate class label {label:?}")]
    DuplicateLabel { label: String },
    #[error("class {class:?}: {detail}")]
    InvalidClass { class: String, detail: String },
    #[error("class {class:?} names unknown class {label:?} in its omega closure")]
    UnknownLabel { class: String, label: String },
    #[error("omega closure of {class:?} does not contain itself")]
    NotReflexive { class: String },
    #[error("omega closure of {class:?} misses {missing:?}, reached through {via:?}")]
    NotTransitive { class: String, via: String, missing: String },
    #[error("no class qualifies for n = {n}")]
    NoQualifyingClass { n: String },
}

impl LieError {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("error serializes");
        if let Some(obj) = v.as_object_mut() {
            obj.insert("message".into(), self.to_string().into());
        }
        v
    }
}

/// One conjugacy class of closed abelian subgroups `A ≅ A° × π0(A)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieClass {
    pub label: String,
    pub weyl_order: u64,
    pub torus_rank: u32,
    /// Invariant factors of the component group.
    #[serde(default)]
    pub component_invariants: Vec<u64>,
    #[serde(default)]
    pub omega_closure: Vec<String>,
    #[serde(default)]
    pub maximal_torus: bool,
}

impl LieClass {
    /// Topological generators needed: the largest p-rank of the component
    /// group, at least 1 when a torus is present.
    pub fn generator_count(&self) -> u32 {
        let primes: BTreeSet<u64> = self.component_invariants.iter().flat_map(|&d| prime_divisors(d)).collect();
        let rank = primes
            .iter()
            .map(|&p| self.component_invariants.iter().filter(|&&d| d % p == 0).count() as u32)
            .max()
            .unwrap_or(0);
        if rank == 0 && self.torus_rank >= 1 {
            1
        } else {
            rank
        }
    }

    fn is_trivial(&self) -> bool {
        self.torus_rank == 0 && self.component_invariants.iter().all(|&d| d == 1)
    }
}

/// Finite set of abelian classes with finite Weyl group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhiData {
    pub name: String,
    pub classes: Vec<LieClass>,
}

impl PhiData {
    pub fn from_json(text: &str) -> Result<Self, LieError> {
        let data: PhiData = serde_json::from_str(text).map_err(|e| LieError::Schema { detail: e.to_string() })?;
        data.validate()?;
        Ok(data)
    }

    /// The shipped SO(3) data: the maximal torus and the Klein four-group.
    pub fn so3() -> Self {
        Self::from_json(SO3_JSON).expect("shipped SO(3) data is valid")
    }

    /// The one-class data of the trivial group.
    pub fn trivial() -> Self {
        PhiData {
            name: "1".into(),
            classes: vec![LieClass {
                label: "1".into(),
                weyl_order: 1,
                torus_rank: 0,
                component_invariants: vec![],
                omega_closure: vec!["1".into()],
                maximal_torus: true,
            }],
        }
    }

    pub fn validate(&self) -> Result<(), LieError> {
        let mut index = HashMap::new();
        for (i, c) in self.classes.iter().enumerate() {
            if index.insert(c.label.as_str(), i).is_some() {
                return Err(LieError::DuplicateLabel { label: c.label.clone() });
            }
            let invalid = |detail: &str| LieError::InvalidClass { class: c.label.clone(), detail: detail.into() };
            if c.weyl_order == 0 {
                return Err(invalid("Weyl order must be positive"));
            }
            if c.component_invariants.contains(&0) {
                return Err(invalid("invariant factors must be positive"));
            }
            if !c.is_trivial() && c.generator_count() == 0 {
                return Err(invalid("nontrivial class needs at least one generator"));
            }
        }
        for c in &self.classes {
            for l in &c.omega_closure {
                if !index.contains_key(l.as_str()) {
                    return Err(LieError::UnknownLabel { class: c.label.clone(), label: l.clone() });
                }
            }
            if !c.omega_closure.contains(&c.label) {
                return Err(LieError::NotReflexive { class: c.label.clone() });
            }
            for via in &c.omega_closure {
                let next = &self.classes[index[via.as_str()]];
                if let Some(missing) = next.omega_closure.iter().find(|l| !c.omega_closure.contains(l)) {
                    return Err(LieError::NotTransitive {
                        class: c.label.clone(),
                        via: via.clone(),
                        missing: missing.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Classes counted in `|G|_n`: generator count at most `n`, or the
    /// declared maximal torus when `n = 0`.
    pub fn qualifying(&self, n: GenBound) -> Vec<&LieClass> {
        match n {
            GenBound::Finite(0) => self.classes.iter().filter(|c| c.maximal_torus).collect(),
            _ => self.classes.iter().filter(|c| n.admits(c.generator_count() as usize)).collect(),
        }
    }

    /// Full product classes, labelled `(a,b)`.
    pub fn product(&self, other: &PhiData) -> PhiData {
        product_all(&[self, other])
    }

    /// `N`-fold product, labelled `(a1,…,aN)`. The zeroth power is trivial.
    pub fn power(&self, n: usize) -> PhiData {
        if n == 0 {
            return PhiData::trivial();
        }
        if n == 1 {
            return self.clone();
        }
        product_all(&vec![self; n])
    }
}

/// `|G|_n`: lcm of the Weyl orders of the qualifying classes.
pub fn order_n_lie(data: &PhiData, n: GenBound) -> Result<BigInt, LieError> {
    let classes = data.qualifying(n);
    if classes.is_empty() {
        return Err(LieError::NoQualifyingClass { n: n.to_string() });
    }
    let weyl: Vec<BigInt> = classes.iter().map(|c| BigInt::from(c.weyl_order)).collect();
    Ok(lcm(&weyl))
}

fn product_all(factors: &[&PhiData]) -> PhiData {
    let label = |parts: &[&str]| format!("({})", parts.join(","));
    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
    for f in factors {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..f.classes.len()).map(move |i| {
                    let mut next = t.clone();
                    next.push(i);
                    next
                })
            })
            .collect();
    }
    let classes = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&LieClass> = t.iter().zip(factors).map(|(&i, f)| &f.classes[i]).collect();
            let mut closure: Vec<Vec<&str>> = vec![vec![]];
            for p in &parts {
                closure = closure
                    .into_iter()
                    .flat_map(|prefix| {
                        p.omega_closure.iter().map(move |l| {
                            let mut next = prefix.clone();
                            next.push(l.as_str());
                            next
                        })
                    })
                    .collect();
            }
            LieClass {
                label: label(&parts.iter().map(|p| p.label.as_str()).collect::<Vec<_>>()),
                weyl_order: parts.iter().map(|p| p.weyl_order).product(),
                torus_rank: parts.iter().map(|p| p.torus_rank).sum(),
                component_invariants: parts.iter().flat_map(|p| p.component_invariants.iter().copied()).collect(),
                omega_closure: closure.iter().map(|c| label(c)).collect(),
                maximal_torus: parts.iter().all(|p| p.maximal_torus),
            }
        })
        .collect();
    PhiData { name: factors.iter().map(|f| f.name.as_str()).collect::<Vec<_>>().join(" x "), classes }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(torus: u32, inv: &[u64]) -> LieClass {
        LieClass {
            label: "A".into(),
            weyl_order: 1,
            torus_rank: torus,
            component_invariants: inv.to_vec(),
            omega_closure: vec!["A".into()],
            maximal_torus: false,
        }
    }

    #[test]
    fn generator_counts() {
        assert_eq!(class(1, &[]).generator_count(), 1);
        assert_eq!(class(0, &[2, 2]).generator_count(), 2);
        assert_eq!(class(1, &[2, 2]).generator_count(), 2);
        assert_eq!(class(0, &[]).generator_count(), 0);
        assert_eq!(class(0, &[6, 2]).generator_count(), 2);
        assert_eq!(class(3, &[3]).generator_count(), 1);
    }
}
