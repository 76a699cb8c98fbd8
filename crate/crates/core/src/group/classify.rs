use std::collections::HashSet;

use crate::exact::prime_divisors;

use super::{GenBound, Group, GroupError, Subgroup};

/// Minimal number of generators of an abelian subgroup: the largest p-rank
/// `dim H/H^p` over primes dividing `|H|` (0 for the trivial group).
pub fn min_generators_abelian(g: &Group, h: &Subgroup) -> Result<usize, GroupError> {
    if !g.is_abelian(h) {
        return Err(GroupError::NotAbelian);
    }
    let mut best = 0;
    for p in prime_divisors(h.order() as u64) {
        let powers: HashSet<usize> = h.elements().iter().map(|&x| power(g, x, p as usize)).collect();
        // H^p is a subgroup since H is abelian; |H / H^p| = p^rank
        let mut quotient = h.order() / powers.len();
        let mut rank = 0;
        while quotient > 1 {
            quotient /= p as usize;
            rank += 1;
        }
        best = best.max(rank);
    }
    Ok(best)
}

/// Minimal generator count of any subgroup, by search for non-abelian ones.
pub fn min_generators(g: &Group, h: &Subgroup) -> usize {
    if let Ok(k) = min_generators_abelian(g, h) {
        return k;
    }
    let upper = g.generating_set(h).len();
    let gens = g.generating_set(h);
    let (classes, _) = g.conjugacy_classes_under(h.elements(), &gens);
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    for k in 2..upper {
        if generates_with(g, h, &reps, k) {
            return k;
        }
    }
    upper
}

// Is there a k-element generating set? The first element may be taken up to
// conjugacy in H.
fn generates_with(g: &Group, h: &Subgroup, reps: &[usize], k: usize) -> bool {
    fn extend(g: &Group, h: &Subgroup, chosen: &mut Vec<usize>, start: usize, k: usize) -> bool {
        if chosen.len() == k {
            return g.closure(chosen).order() == h.order();
        }
        for i in start..h.order() {
            let x = h.elements()[i];
            if chosen.contains(&x) {
                continue;
            }
            chosen.push(x);
            if extend(g, h, chosen, i + 1, k) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    reps.iter().any(|&r| extend(g, h, &mut vec![r], 0, k))
}

fn power(g: &Group, x: usize, e: usize) -> usize {
    (0..e).fold(Group::IDENTITY, |acc, _| g.mul(acc, x))
}

/// `O^p(H)`: the subgroup generated by the elements of order prime to `p`.
pub fn p_perfect_core(g: &Group, h: &Subgroup, p: u64) -> Subgroup {
    let gens: Vec<usize> = h
        .elements()
        .iter()
        .copied()
        .filter(|&x| !(g.element_order(x) as u64).is_multiple_of(p))
        .collect();
    g.closure(&gens)
}

/// Whether `H` is an extension of an abelian group of order prime to `p`,
/// generated by at most `n` elements, by a `p`-group.
///
/// Any such normal abelian subgroup must contain `O^p(H)`, and `H/O^p(H)` is
/// always a `p`-group, so it suffices to test `O^p(H)` itself.
pub fn is_n_hyper(g: &Group, h: &Subgroup, n: GenBound, p: u64) -> bool {
    let core = p_perfect_core(g, h, p);
    if (core.order() as u64).is_multiple_of(p) {
        return false;
    }
    match min_generators_abelian(g, &core) {
        Ok(k) => n.admits(k),
        Err(_) => false,
    }
}
