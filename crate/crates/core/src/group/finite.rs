use std::collections::{HashMap, VecDeque};

use super::{GroupError, Perm};

/// Default ceiling on the number of enumerated elements.
pub const DEFAULT_ORDER_CAP: usize = 5000;

// Cayley tables are kept below this order; larger groups multiply permutations.
const TABLE_LIMIT: usize = 2048;

/// A finite permutation group with every element enumerated.
///
/// Elements are sorted by image list, so the identity is always index 0.
/// All other APIs refer to elements by that index.
#[derive(Debug, Clone)]
pub struct Group {
    name: Option<String>,
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    inverse: Vec<usize>,
    table: Option<Vec<u16>>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

/// A subgroup, as the sorted list of its element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup(Vec<usize>);

impl Subgroup {
    pub(crate) fn from_sorted(elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup(elements)
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().all(|&x| other.contains(x))
    }

    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }
}

impl Group {
    /// Enumerates the group generated by `generators` on `0..degree`.
    pub fn from_generators(
        name: Option<String>,
        degree: usize,
        generators: Vec<Perm>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let identity = Perm::identity(degree);
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        seen.insert(identity.clone(), ());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.then(g);
                if !seen.contains_key(&y) {
                    if seen.len() >= cap {
                        return Err(GroupError::OrderCapExceeded { cap });
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_keys().collect();
        elements.sort();
        let index: HashMap<Perm, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let n = elements.len();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.then(b)] as u16);
                }
            }
            t
        });
        let mut group = Group {
            name,
            degree,
            generators,
            elements,
            index,
            inverse,
            table,
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        let gens: Vec<usize> = group.generators.iter().map(|g| group.index[g]).collect();
        let all: Vec<usize> = (0..n).collect();
        let (classes, class_of) = group.conjugacy_classes_under(&all, &gens);
        group.classes = classes;
        group.class_of = class_of;
        Ok(group)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("group of order {}", self.order()))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub const IDENTITY: usize = 0;

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].then(&self.elements[b])],
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g x g⁻¹`
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse[g])
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != Self::IDENTITY {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|x| self.element_order(x)).fold(1, num_integer::lcm)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup((0..self.order()).collect())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup(vec![Self::IDENTITY])
    }

    /// Subgroup generated by the given elements.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        let mut member = vec![false; self.order()];
        member[Self::IDENTITY] = true;
        let mut out = vec![Self::IDENTITY];
        let mut frontier = vec![Self::IDENTITY];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    out.push(y);
                    frontier.push(y);
                }
            }
        }
        out.sort_unstable();
        Subgroup(out)
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generating_set(&self, h: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.trivial();
        for &x in h.elements() {
            if !span.contains(x) {
                gens.push(x);
                span = self.closure(&gens);
                if span.order() == h.order() {
                    break;
                }
            }
        }
        gens
    }

    /// `⟨H, g⟩`
    pub fn join(&self, h: &Subgroup, g: usize) -> Subgroup {
        let mut gens = self.generating_set(h);
        gens.push(g);
        self.closure(&gens)
    }

    /// `g H g⁻¹`
    pub fn conjugate(&self, h: &Subgroup, g: usize) -> Subgroup {
        let mut v: Vec<usize> = h.elements().iter().map(|&x| self.conj(g, x)).collect();
        v.sort_unstable();
        Subgroup(v)
    }

    pub fn normalizes(&self, g: usize, h: &Subgroup) -> bool {
        h.elements().iter().all(|&x| h.contains(self.conj(g, x)))
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let gens = self.generating_set(h);
        let v = (0..self.order())
            .filter(|&g| gens.iter().all(|&x| h.contains(self.conj(g, x))))
            .collect();
        Subgroup(v)
    }

    pub fn is_abelian(&self, h: &Subgroup) -> bool {
        let gens = self.generating_set(h);
        gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whether `g K g⁻¹ ⊆ H` for some `g`.
    pub fn is_subconjugate(&self, k: &Subgroup, h: &Subgroup) -> bool {
        if !h.order().is_multiple_of(k.order()) {
            return false;
        }
        let gens = self.generating_set(k);
        (0..self.order()).any(|g| gens.iter().all(|&x| h.contains(self.conj(g, x))))
    }

    /// Conjugacy classes of G, ordered by smallest member (identity first).
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of_element(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// Classes of the subgroup with elements `members` under conjugation by
    /// the group generated by `conjugators`. Returned classes are sorted and
    /// ordered by their smallest element; the map is indexed by group element
    /// (`usize::MAX` outside `members`).
    pub fn conjugacy_classes_under(
        &self,
        members: &[usize],
        conjugators: &[usize],
    ) -> (Vec<Vec<usize>>, Vec<usize>) {
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &x in members {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[x] = id;
            let mut orbit = vec![x];
            let mut i = 0;
            while i < orbit.len() {
                let y = orbit[i];
                for &c in conjugators {
                    let z = self.conj(c, y);
                    if class_of[z] == usize::MAX {
                        class_of[z] = id;
                        orbit.push(z);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        (classes, class_of)
    }
}

/// ATLAS-style labels (`1a`, `2a`, `2b`, `3a`, …) for element classes given
/// in a fixed order.
pub fn element_class_labels(g: &Group, classes: &[Vec<usize>]) -> Vec<String> {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    classes
        .iter()
        .map(|c| {
            let order = g.element_order(c[0]);
            let k = counts.entry(order).or_insert(0);
            let label = format!("{order}{}", (b'a' + (*k % 26) as u8) as char);
            *k += 1;
            label
        })
        .collect()
}

impl Group {
    pub fn conjugacy_class_labels(&self) -> Vec<String> {
        element_class_labels(self, &self.classes)
    }
}
