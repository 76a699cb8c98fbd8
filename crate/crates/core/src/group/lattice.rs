use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use super::{min_generators, Group, Subgroup};

/// One conjugacy class of subgroups.
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    pub index: usize,
    /// Order followed by a letter, e.g. `2a`, `2b`, `4a`.
    pub label: String,
    /// Lexicographically least member of the class.
    pub representative: Subgroup,
    pub order: usize,
    /// `|N_G(H)| / |H|`
    pub weyl_order: usize,
    pub is_abelian: bool,
    pub min_generators: usize,
}

/// Conjugacy classes of subgroups with the subconjugacy order.
///
/// Classes are indexed by ascending order, then by representative; this
/// total order refines subconjugacy, so the trivial class is first and the
/// whole group last.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    group: Arc<Group>,
    classes: Vec<SubgroupClass>,
    // below[k][h] <=> (K) <= (H)
    below: Vec<Vec<bool>>,
    lookup: HashMap<Subgroup, usize>,
}

impl SubgroupLattice {
    /// Enumerates every subgroup class.
    ///
    /// Breadth-first over class representatives: each new subgroup is
    /// `⟨H, g⟩` for a known representative `H` and `g` outside it. Every
    /// subgroup arises this way from one of its maximal subgroups, and
    /// conjugating that pair moves `H` onto its representative, so the
    /// search is complete (perfect subgroups included).
    pub fn new(group: Arc<Group>) -> Self {
        let g = &*group;
        let trivial = g.trivial();
        let mut found: HashMap<Subgroup, ()> = HashMap::new();
        found.insert(canonical(g, &trivial), ());
        let mut queue = VecDeque::from([trivial]);
        while let Some(h) = queue.pop_front() {
            let mut covered = vec![false; g.order()];
            for &x in h.elements() {
                covered[x] = true;
            }
            for x in 0..g.order() {
                if covered[x] {
                    continue;
                }
                // <H, x> only depends on the coset Hx
                for &y in h.elements() {
                    covered[g.mul(y, x)] = true;
                }
                let k = g.join(&h, x);
                let c = canonical(g, &k);
                if !found.contains_key(&c) {
                    found.insert(c.clone(), ());
                    queue.push_back(c);
                }
            }
        }
        let mut reps: Vec<Subgroup> = found.into_keys().collect();
        reps.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));

        let mut classes = Vec::with_capacity(reps.len());
        let mut letter_counts: HashMap<usize, usize> = HashMap::new();
        for (index, rep) in reps.into_iter().enumerate() {
            let order = rep.order();
            let seq = letter_counts.entry(order).or_insert(0);
            let label = format!("{order}{}", letters(*seq));
            *seq += 1;
            let weyl_order = g.normalizer(&rep).order() / order;
            let is_abelian = g.is_abelian(&rep);
            let min_generators = min_generators(g, &rep);
            classes.push(SubgroupClass {
                index,
                label,
                representative: rep,
                order,
                weyl_order,
                is_abelian,
                min_generators,
            });
        }
        let below = classes
            .iter()
            .map(|k| {
                classes
                    .iter()
                    .map(|h| k.index == h.index || (k.index < h.index && g.is_subconjugate(&k.representative, &h.representative)))
                    .collect()
            })
            .collect();
        let lookup = classes.iter().map(|c| (c.representative.clone(), c.index)).collect();
        SubgroupLattice { group, classes, below, lookup }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &SubgroupClass {
        &self.classes[i]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn trivial_class(&self) -> usize {
        0
    }

    pub fn whole_class(&self) -> usize {
        self.classes.len() - 1
    }

    /// `(K) ≤ (H)`
    pub fn is_subconjugate(&self, k: usize, h: usize) -> bool {
        self.below[k][h]
    }

    /// Class containing an arbitrary subgroup of the group.
    pub fn class_of(&self, h: &Subgroup) -> usize {
        self.lookup[&canonical(&self.group, h)]
    }

    /// Class of the cyclic subgroup generated by an element.
    pub fn cyclic_class(&self, x: usize) -> usize {
        self.class_of(&self.group.closure(&[x]))
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }
}

/// Least conjugate in the lexicographic order on sorted element lists.
fn canonical(g: &Group, h: &Subgroup) -> Subgroup {
    let mut best = h.clone();
    for x in 0..g.order() {
        let c = g.conjugate(h, x);
        if c < best {
            best = c;
        }
    }
    best
}

fn letters(mut k: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push(b'a' + (k % 26) as u8);
        if k < 26 {
            break;
        }
        k = k / 26 - 1;
    }
    s.reverse();
    String::from_utf8(s).expect("ascii")
}
