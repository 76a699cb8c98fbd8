use std::collections::HashMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::artin::artin_certificate;
use crate::brauer::{brauer_certificate, hyper_family};
use crate::burnside::MarksTable;
use crate::exact::{smith_normal_form, solve_rational, IntMatrix};
use crate::group::{double_cosets, GenBound, Subgroup, SubgroupLattice};
use crate::json::big;

use super::{conjugate, induce, restrict, CharacterError, CharacterTable, ClassDomain, TableLibrary};

/// Character tables of subgroups, bound once per subgroup.
struct TableCache<'a> {
    library: &'a TableLibrary,
    lattice: &'a SubgroupLattice,
    bound: HashMap<Subgroup, CharacterTable>,
}

impl<'a> TableCache<'a> {
    fn new(lattice: &'a SubgroupLattice, library: &'a TableLibrary) -> Self {
        TableCache { library, lattice, bound: HashMap::new() }
    }

    fn get(&mut self, h: &Subgroup) -> Result<&CharacterTable, CharacterError> {
        if !self.bound.contains_key(h) {
            let domain = ClassDomain::new(self.lattice.group().clone(), h.clone());
            let table = self.library.table_for(&domain)?;
            self.bound.insert(h.clone(), table);
        }
        Ok(&self.bound[h])
    }
}

/// Integral basis of the equalizer of
/// `Π_i R(H_i) ⇉ Π_{i,j,g} R(H_i ∩ g H_j g⁻¹)`, one `g` per double coset
/// `H_i g H_j`, in irreducible-character coordinates.
#[derive(Debug, Clone)]
pub struct EqualizerLattice {
    pub family: Vec<usize>,
    /// Table of each family representative.
    pub tables: Vec<CharacterTable>,
    /// Start of each family member's coordinate block, plus the total.
    pub offsets: Vec<usize>,
    /// Difference of the two maps.
    pub difference: IntMatrix,
    /// Columns span the kernel of `difference`.
    pub basis: IntMatrix,
}

impl EqualizerLattice {
    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Dimension of `Π_i R(H_i)`.
    pub fn ambient_dim(&self) -> usize {
        *self.offsets.last().unwrap_or(&0)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.difference.mul_vec(v).iter().all(Zero::is_zero)
    }

    /// Coordinates of an ambient vector in the basis, if it lies in the
    /// lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        if self.rank() == 0 {
            return v.iter().all(Zero::is_zero).then(Vec::new);
        }
        let a: Vec<Vec<BigRational>> = (0..self.basis.rows())
            .map(|r| self.basis.row(r).iter().map(|x| BigRational::from_integer(x.clone())).collect())
            .collect();
        let b: Vec<BigRational> = v.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        let x = solve_rational(&a, &b)?;
        let ints: Vec<BigInt> = x.iter().filter(|q| q.is_integer()).map(|q| q.to_integer()).collect();
        (ints.len() == x.len()).then_some(ints)
    }

    pub fn to_json(&self, lattice: &SubgroupLattice) -> Value {
        json!({
            "family": self.family.iter().map(|&c| lattice.class(c).label.clone()).collect::<Vec<_>>(),
            "blocks": self.tables.iter().map(|t| t.len()).collect::<Vec<_>>(),
            "rank": self.rank(),
            "basis": columns_json(&self.basis),
        })
    }
}

fn columns_json(m: &IntMatrix) -> Value {
    Value::Array((0..m.cols()).map(|j| Value::Array(m.column(j).iter().map(big).collect())).collect())
}

fn rows_json(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(big).collect())).collect())
}

pub fn equalizer_lattice(
    lattice: &SubgroupLattice,
    family: &[usize],
    library: &TableLibrary,
) -> Result<EqualizerLattice, CharacterError> {
    if family.is_empty() {
        return Err(CharacterError::EmptyFamily);
    }
    let g = lattice.group();
    let mut cache = TableCache::new(lattice, library);
    let mut tables = Vec::with_capacity(family.len());
    let mut offsets = vec![0];
    for &c in family {
        let t = cache.get(&lattice.class(c).representative)?.clone();
        offsets.push(offsets.last().unwrap() + t.len());
        tables.push(t);
    }
    let dim = *offsets.last().unwrap();
    let mut blocks = Vec::new();
    for (i, ti) in tables.iter().enumerate() {
        for (j, tj) in tables.iter().enumerate() {
            let hi = ti.domain().subgroup();
            let hj = tj.domain().subgroup();
            for coset in double_cosets(g, hi, hj).cosets {
                let target = cache.get(&coset.intersection)?;
                let dom = target.domain();
                let mut block = IntMatrix::zeros(target.len(), dim);
                let mut put = |col: usize, coords: Vec<BigInt>, sign: i32| {
                    for (row, v) in coords.into_iter().enumerate() {
                        if sign > 0 {
                            block[(row, col)] += v;
                        } else {
                            block[(row, col)] -= v;
                        }
                    }
                };
                for (a, psi) in ti.rows().iter().enumerate() {
                    put(offsets[i] + a, target.coordinates(&restrict(psi, dom)?)?, 1);
                }
                for (b, phi) in tj.rows().iter().enumerate() {
                    put(offsets[j] + b, target.coordinates(&conjugate(phi, coset.representative, dom)?)?, -1);
                }
                blocks.push(block);
            }
        }
    }
    let difference = IntMatrix::vstack(&blocks, dim);
    let basis = smith_normal_form(&difference).kernel_basis();
    Ok(EqualizerLattice { family: family.to_vec(), tables, offsets, difference, basis })
}

/// `res` in ambient coordinates: one column per irreducible of `G`.
fn restriction_matrix(chars: &CharacterTable, eq: &EqualizerLattice) -> Result<IntMatrix, CharacterError> {
    let mut m = IntMatrix::zeros(eq.ambient_dim(), chars.len());
    for (col, chi) in chars.rows().iter().enumerate() {
        for (i, t) in eq.tables.iter().enumerate() {
            let coords = t.coordinates(&restrict(chi, t.domain())?)?;
            for (a, v) in coords.into_iter().enumerate() {
                m[(eq.offsets[i] + a, col)] = v;
            }
        }
    }
    Ok(m)
}

fn restriction_in_basis(res: &IntMatrix, eq: &EqualizerLattice) -> Result<IntMatrix, CharacterError> {
    let mut m = IntMatrix::zeros(eq.rank(), res.cols());
    for col in 0..res.cols() {
        let coords = eq.coordinates(&res.column(col)).ok_or_else(|| CharacterError::Upstream(format!(
            "restriction of irreducible {col} does not lie in the equalizer"
        )))?;
        for (r, v) in coords.into_iter().enumerate() {
            m[(r, col)] = v;
        }
    }
    Ok(m)
}

fn check_scalar(m: &IntMatrix, k: &BigInt, map: &str) -> Result<(), CharacterError> {
    for col in 0..m.cols() {
        let column = m.column(col);
        let bad = column.iter().enumerate().any(|(r, v)| if r == col { v != k } else { !v.is_zero() });
        if bad || m.rows() != m.cols() {
            return Err(CharacterError::CompositeMismatch {
                map: map.into(),
                scale: k.to_string(),
                column: col,
                witness: column.iter().map(ToString::to_string).collect(),
            });
        }
    }
    Ok(())
}

/// Result of checking that `res` and `ψ` compose to `|G|_n` times the
/// identity on both sides.
#[derive(Debug, Clone)]
pub struct ArtinRestrictionReport {
    pub group: String,
    pub n: GenBound,
    pub order_n: BigInt,
    pub family: Vec<usize>,
    pub family_labels: Vec<String>,
    pub irreducibles: usize,
    pub equalizer_rank: usize,
    /// `ψ ∘ res` on `R(G)`.
    pub psi_res: IntMatrix,
    /// `res ∘ ψ` on the equalizer.
    pub res_psi: IntMatrix,
}

impl ArtinRestrictionReport {
    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group,
            "n": self.n,
            "order_n": big(&self.order_n),
            "family": self.family_labels,
            "irreducibles": self.irreducibles,
            "equalizer_rank": self.equalizer_rank,
            "psi_res": rows_json(&self.psi_res),
            "res_psi": rows_json(&self.res_psi),
        })
    }
}

/// Checks the `|G|_n`-isomorphism pair between `R(G)` and the equalizer over
/// the abelian classes with at most `n` generators. `ψ` uses `r_i = c_i · 1`
/// with `c_i` the Artin certificate coefficients.
pub fn verify_artin_restriction(
    marks: &MarksTable,
    n: GenBound,
    library: &TableLibrary,
) -> Result<ArtinRestrictionReport, CharacterError> {
    let lattice = marks.lattice();
    let g = lattice.group();
    let cert = artin_certificate(marks, n)?;
    let family = cert.family.classes.clone();
    let chars = library.table_for(&ClassDomain::whole(g.clone()))?;
    let eq = equalizer_lattice(lattice, &family, library)?;

    let mut psi = IntMatrix::zeros(chars.len(), eq.ambient_dim());
    for (i, t) in eq.tables.iter().enumerate() {
        let c = BigRational::from_integer(cert.coefficient_of(family[i]));
        for (a, xi) in t.rows().iter().enumerate() {
            let induced = induce(&xi.scale(&c), chars.domain())?;
            for (r, v) in chars.coordinates(&induced)?.into_iter().enumerate() {
                psi[(r, eq.offsets[i] + a)] = v;
            }
        }
    }
    let res = restriction_matrix(&chars, &eq)?;
    let psi_res = &psi * &res;
    check_scalar(&psi_res, &cert.order_n, "psi∘res")?;

    let psi_eq = &psi * &eq.basis;
    let res_psi = restriction_in_basis(&(&res * &psi_eq), &eq)?;
    check_scalar(&res_psi, &cert.order_n, "res∘psi")?;

    Ok(ArtinRestrictionReport {
        group: cert.group.clone(),
        n,
        order_n: cert.order_n.clone(),
        family_labels: family.iter().map(|&c| lattice.class(c).label.clone()).collect(),
        family,
        irreducibles: chars.len(),
        equalizer_rank: eq.rank(),
        psi_res,
        res_psi,
    })
}

/// Result of checking that restriction to the `n`-hyper classes is an
/// isomorphism onto the equalizer.
#[derive(Debug, Clone)]
pub struct BrauerRestrictionReport {
    pub group: String,
    pub n: GenBound,
    pub family: Vec<usize>,
    pub family_labels: Vec<String>,
    pub irreducibles: usize,
    pub equalizer_rank: usize,
    /// `res` from irreducible coordinates into equalizer coordinates.
    pub restriction: IntMatrix,
    pub elementary_divisors: Vec<BigInt>,
}

impl BrauerRestrictionReport {
    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group,
            "n": self.n,
            "family": self.family_labels,
            "irreducibles": self.irreducibles,
            "equalizer_rank": self.equalizer_rank,
            "restriction": rows_json(&self.restriction),
            "elementary_divisors": self.elementary_divisors.iter().map(big).collect::<Vec<_>>(),
        })
    }
}

pub fn verify_brauer_restriction(
    marks: &MarksTable,
    n: GenBound,
    library: &TableLibrary,
) -> Result<BrauerRestrictionReport, CharacterError> {
    let lattice = marks.lattice();
    let g = lattice.group();
    let cert = brauer_certificate(marks, n)?;
    if !cert.passed() {
        return Err(CharacterError::Upstream("Brauer certificate failed its checks".into()));
    }
    let family = hyper_family(marks, n)?;
    let chars = library.table_for(&ClassDomain::whole(g.clone()))?;
    let eq = equalizer_lattice(lattice, &family, library)?;
    let res = restriction_in_basis(&restriction_matrix(&chars, &eq)?, &eq)?;
    let divisors = smith_normal_form(&res).elementary_divisors();
    let unimodular = divisors.len() == chars.len() && divisors.iter().all(|d| d.is_one() || (-d).is_one());
    if eq.rank() != chars.len() || !unimodular {
        return Err(CharacterError::NotIsomorphism {
            divisors: divisors.iter().map(ToString::to_string).collect(),
            source_rank: chars.len(),
            target_rank: eq.rank(),
        });
    }
    Ok(BrauerRestrictionReport {
        group: cert.group.clone(),
        n,
        family_labels: family.iter().map(|&c| lattice.class(c).label.clone()).collect(),
        family,
        irreducibles: chars.len(),
        equalizer_rank: eq.rank(),
        restriction: res,
        elementary_divisors: divisors,
    })
}
