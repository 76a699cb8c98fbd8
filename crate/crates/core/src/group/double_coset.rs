use super::{Group, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCoset {
    /// Smallest element of the double coset `K g H`.
    pub representative: usize,
    /// `K ∩ g H g⁻¹`
    pub intersection: Subgroup,
    pub size: usize,
}

#[derive(Debug, Clone)]
pub struct DoubleCosetDecomposition {
    pub k: Subgroup,
    pub h: Subgroup,
    pub cosets: Vec<DoubleCoset>,
}

/// Partition of G into double cosets `K g H`, in order of representative.
pub fn double_cosets(g: &Group, k: &Subgroup, h: &Subgroup) -> DoubleCosetDecomposition {
    let mut seen = vec![false; g.order()];
    let mut cosets = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        let mut size = 0;
        for &a in k.elements() {
            let ax = g.mul(a, x);
            for &b in h.elements() {
                let y = g.mul(ax, b);
                if !seen[y] {
                    seen[y] = true;
                    size += 1;
                }
            }
        }
        let conj = g.conjugate(h, x);
        let inter: Vec<usize> = k.elements().iter().copied().filter(|&e| conj.contains(e)).collect();
        cosets.push(DoubleCoset { representative: x, intersection: Subgroup::from_sorted(inter), size });
    }
    DoubleCosetDecomposition { k: k.clone(), h: h.clone(), cosets }
}
