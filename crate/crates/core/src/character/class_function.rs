use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exact::Cyclotomic;
use crate::group::{double_cosets, element_class_labels, Group, Subgroup, SubgroupLattice};

use super::CharacterError;

/// Conjugacy classes of a subgroup `H ≤ G`, under conjugation by `H`.
///
/// Every class function on `H` is stored over these classes with values in
/// `Q(ζ_N)`, `N` the exponent of the ambient group.
#[derive(Debug)]
pub struct ClassDomain {
    group: Arc<Group>,
    subgroup: Subgroup,
    classes: Vec<Vec<usize>>,
    // indexed by group element; usize::MAX outside the subgroup
    class_of: Vec<usize>,
    labels: Vec<String>,
    conductor: u32,
}

impl ClassDomain {
    pub fn new(group: Arc<Group>, subgroup: Subgroup) -> Arc<Self> {
        let gens = group.generating_set(&subgroup);
        let (classes, class_of) = group.conjugacy_classes_under(subgroup.elements(), &gens);
        let labels = element_class_labels(&group, &classes);
        let conductor = group.exponent() as u32;
        Arc::new(ClassDomain { group, subgroup, classes, class_of, labels, conductor })
    }

    pub fn whole(group: Arc<Group>) -> Arc<Self> {
        let whole = group.whole();
        Self::new(group, whole)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn order(&self) -> usize {
        self.subgroup.order()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Class of a subgroup element.
    pub fn class_of(&self, x: usize) -> Option<usize> {
        match self.class_of[x] {
            usize::MAX => None,
            c => Some(c),
        }
    }

    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }
}

/// A function on the classes of a subgroup, valued in a cyclotomic field.
#[derive(Debug, Clone)]
pub struct ClassFunction {
    domain: Arc<ClassDomain>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.domain.subgroup == other.domain.subgroup && self.values == other.values
    }
}

impl Eq for ClassFunction {}

impl ClassFunction {
    pub fn new(domain: Arc<ClassDomain>, values: Vec<Cyclotomic>) -> Result<Self, CharacterError> {
        if values.len() != domain.class_count() {
            return Err(CharacterError::Dimension { expected: domain.class_count(), actual: values.len() });
        }
        if let Some(v) = values.iter().find(|v| v.conductor() != domain.conductor()) {
            return Err(CharacterError::Conductor { expected: domain.conductor(), actual: v.conductor() });
        }
        Ok(ClassFunction { domain, values })
    }

    pub fn from_ints(domain: Arc<ClassDomain>, values: &[i64]) -> Result<Self, CharacterError> {
        let n = domain.conductor();
        Self::new(domain, values.iter().map(|&v| Cyclotomic::from_int(n, v)).collect())
    }

    pub fn constant(domain: Arc<ClassDomain>, value: i64) -> Self {
        let v = Cyclotomic::from_int(domain.conductor(), value);
        let values = vec![v; domain.class_count()];
        ClassFunction { domain, values }
    }

    pub fn trivial(domain: Arc<ClassDomain>) -> Self {
        Self::constant(domain, 1)
    }

    pub fn domain(&self) -> &Arc<ClassDomain> {
        &self.domain
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// Value at a subgroup element.
    pub fn at(&self, x: usize) -> &Cyclotomic {
        let c = self.domain.class_of(x).expect("element outside the class function's domain");
        &self.values[c]
    }

    /// Values as integers, when they all are.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.values.iter().map(Cyclotomic::to_integer).collect()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Self {
        assert_eq!(self.domain.subgroup, other.domain.subgroup, "class functions on different subgroups");
        ClassFunction {
            domain: self.domain.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        ClassFunction { domain: self.domain.clone(), values: self.values.iter().map(|v| v.scale(k)).collect() }
    }

    pub fn conj(&self) -> Self {
        ClassFunction { domain: self.domain.clone(), values: self.values.iter().map(Cyclotomic::conj).collect() }
    }

    /// `⟨a, b⟩ = |H|⁻¹ Σ_h a(h) · conj(b(h))`
    pub fn inner(&self, other: &Self) -> Cyclotomic {
        assert_eq!(self.domain.subgroup, other.domain.subgroup, "class functions on different subgroups");
        let n = self.domain.conductor();
        let mut acc = Cyclotomic::zero(n);
        for (c, members) in self.domain.classes.iter().enumerate() {
            let term = &self.values[c] * &other.values[c].conj();
            acc = &acc + &term.scale(&BigRational::from_integer(members.len().into()));
        }
        acc.scale(&BigRational::new(1.into(), self.domain.order().into()))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }
}

/// The permutation character `g ↦ |(G/H)^g|` of a subgroup class, by
/// counting fixed cosets.
pub fn perm_character(lattice: &SubgroupLattice, class: usize, domain: &Arc<ClassDomain>) -> ClassFunction {
    let g = lattice.group();
    let h = &lattice.class(class).representative;
    let values = (0..domain.class_count())
        .map(|c| {
            let x = domain.representative(c);
            let fixing = (0..g.order()).filter(|&k| h.contains(g.conj(g.inv(k), x))).count();
            Cyclotomic::from_int(domain.conductor(), (fixing / h.order()) as i64)
        })
        .collect();
    ClassFunction { domain: domain.clone(), values }
}

/// `ind_H^T ξ (t) = Σ_{kH ⊆ T, k⁻¹tk ∈ H} ξ(k⁻¹ t k)`
pub fn induce(xi: &ClassFunction, target: &Arc<ClassDomain>) -> Result<ClassFunction, CharacterError> {
    let g = target.group();
    let h = xi.domain.subgroup();
    if !h.is_subset_of(target.subgroup()) {
        return Err(CharacterError::NotSubgroup);
    }
    let transversal = left_transversal(g, h, target.subgroup());
    let n = target.conductor();
    let values = (0..target.class_count())
        .map(|c| {
            let t = target.representative(c);
            let mut acc = Cyclotomic::zero(n);
            for &k in &transversal {
                let y = g.conj(g.inv(k), t);
                if h.contains(y) {
                    acc = &acc + xi.at(y);
                }
            }
            acc
        })
        .collect();
    Ok(ClassFunction { domain: target.clone(), values })
}

/// Restriction to a subgroup domain.
pub fn restrict(chi: &ClassFunction, target: &Arc<ClassDomain>) -> Result<ClassFunction, CharacterError> {
    if !target.subgroup().is_subset_of(chi.domain.subgroup()) {
        return Err(CharacterError::NotSubgroup);
    }
    let values = (0..target.class_count()).map(|c| chi.at(target.representative(c)).clone()).collect();
    Ok(ClassFunction { domain: target.clone(), values })
}

/// `x ↦ ξ(g⁻¹ x g)` on a domain inside `g H g⁻¹`.
pub fn conjugate(xi: &ClassFunction, g: usize, target: &Arc<ClassDomain>) -> Result<ClassFunction, CharacterError> {
    let grp = target.group();
    let g_inv = grp.inv(g);
    let mut values = Vec::with_capacity(target.class_count());
    for c in 0..target.class_count() {
        let y = grp.conj(g_inv, target.representative(c));
        if !xi.domain.subgroup().contains(y) {
            return Err(CharacterError::NotSubgroup);
        }
        values.push(xi.at(y).clone());
    }
    Ok(ClassFunction { domain: target.clone(), values })
}

/// `ind(e) · m = ind(e · res m)` for `e` on `H`, `m` on `G`.
pub fn frobenius_check(e: &ClassFunction, m: &ClassFunction) -> Result<bool, CharacterError> {
    let whole = m.domain();
    let lhs = induce(e, whole)?.mul(m);
    let rhs = induce(&e.mul(&restrict(m, e.domain())?), whole)?;
    Ok(lhs == rhs)
}

/// `res_K ind_H^G ξ = Σ_{KgH} ind_{K ∩ gHg⁻¹}^K (conjugated ξ)`.
pub fn mackey_check(k: &Arc<ClassDomain>, xi: &ClassFunction) -> Result<bool, CharacterError> {
    let g = k.group();
    let whole = ClassDomain::whole(g.clone());
    let lhs = restrict(&induce(xi, &whole)?, k)?;
    let decomposition = double_cosets(g, k.subgroup(), xi.domain().subgroup());
    let mut rhs = ClassFunction::constant(k.clone(), 0);
    for coset in &decomposition.cosets {
        let inter = ClassDomain::new(g.clone(), coset.intersection.clone());
        let piece = conjugate(xi, coset.representative, &inter)?;
        rhs = rhs.add(&induce(&piece, k)?);
    }
    Ok(lhs == rhs)
}

/// Left coset representatives of `H` in `T`.
pub(crate) fn left_transversal(g: &Group, h: &Subgroup, t: &Subgroup) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::with_capacity(t.order() / h.order());
    for &x in t.elements() {
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
