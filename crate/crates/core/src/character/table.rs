use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::exact::Cyclotomic;
use crate::group::Group;

use super::{ClassDomain, ClassFunction, CharacterError};

/// A character table as read from a file, before it is attached to a group.
///
/// Format:
///
/// ```text
/// # comment
/// name: S3
/// conductor: 3
/// classes: 1a:1 2a:3 3a:2
/// 1, 1, 1
/// 1, -1, 1
/// 2, 0, -1
/// ```
///
/// Each class is `label:size`; the leading digits of a label give the element
/// order. Entries are cyclotomic expressions in `z = exp(2πi/conductor)`.
#[derive(Debug, Clone)]
pub struct TableFile {
    pub name: String,
    pub conductor: u32,
    pub labels: Vec<String>,
    pub sizes: Vec<usize>,
    pub element_orders: Vec<usize>,
    pub rows: Vec<Vec<Cyclotomic>>,
}

impl TableFile {
    pub fn order(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Parses and validates.
    pub fn parse(text: &str) -> Result<Self, CharacterError> {
        let malformed = |line: usize, detail: String| CharacterError::MalformedEntry { line, detail };
        let mut name = None;
        let mut conductor = None;
        let mut classes: Option<(usize, Vec<(String, usize, usize)>)> = None;
        let mut raw_rows: Vec<(usize, &str)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("name:") {
                name = Some(rest.trim().to_string());
            } else if let Some(rest) = line.strip_prefix("conductor:") {
                let n: u32 = rest.trim().parse().map_err(|_| malformed(lineno, format!("bad conductor {rest:?}")))?;
                if n == 0 {
                    return Err(malformed(lineno, "conductor must be positive".into()));
                }
                conductor = Some(n);
            } else if let Some(rest) = line.strip_prefix("classes:") {
                let mut out = Vec::new();
                for tok in rest.split_whitespace() {
                    let (label, size) =
                        tok.split_once(':').ok_or_else(|| malformed(lineno, format!("class {tok:?} lacks a size")))?;
                    let size: usize =
                        size.parse().map_err(|_| malformed(lineno, format!("bad class size in {tok:?}")))?;
                    let digits: String = label.chars().take_while(char::is_ascii_digit).collect();
                    let order: usize =
                        digits.parse().map_err(|_| malformed(lineno, format!("label {label:?} has no element order")))?;
                    if size == 0 || order == 0 {
                        return Err(malformed(lineno, format!("class {tok:?} is empty")));
                    }
                    out.push((label.to_string(), size, order));
                }
                classes = Some((lineno, out));
            } else {
                raw_rows.push((lineno, line));
            }
        }
        let conductor = conductor.ok_or_else(|| malformed(0, "missing conductor".into()))?;
        let (class_line, classes) = classes.ok_or_else(|| malformed(0, "missing classes".into()))?;
        if classes.is_empty() {
            return Err(malformed(class_line, "no classes".into()));
        }
        if raw_rows.len() != classes.len() {
            return Err(malformed(
                class_line,
                format!("{} classes but {} rows", classes.len(), raw_rows.len()),
            ));
        }
        let mut rows = Vec::with_capacity(raw_rows.len());
        for (lineno, line) in raw_rows {
            let row = line
                .split(',')
                .map(|e| Cyclotomic::parse(e, conductor).map_err(|err| malformed(lineno, err.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            if row.len() != classes.len() {
                return Err(malformed(lineno, format!("expected {} entries, got {}", classes.len(), row.len())));
            }
            rows.push(row);
        }
        let table = TableFile {
            name: name.unwrap_or_else(|| "unnamed".into()),
            conductor,
            labels: classes.iter().map(|c| c.0.clone()).collect(),
            sizes: classes.iter().map(|c| c.1).collect(),
            element_orders: classes.iter().map(|c| c.2).collect(),
            rows,
        };
        table.validate()?;
        Ok(table)
    }

    /// Degree sum, row and column orthogonality, trivial first row.
    pub fn validate(&self) -> Result<(), CharacterError> {
        let n = self.conductor;
        let order = self.order();
        let r = self.rows.len();
        let mut deg_sum = Cyclotomic::zero(n);
        for row in &self.rows {
            deg_sum = &deg_sum + &(&row[0] * &row[0]);
        }
        if deg_sum != Cyclotomic::from_int(n, order as i64) {
            return Err(CharacterError::DegreeSumMismatch {
                expected: order.to_string(),
                actual: deg_sum.to_string(),
            });
        }
        for i in 0..r {
            for j in i..r {
                let mut acc = Cyclotomic::zero(n);
                for c in 0..r {
                    let t = &self.rows[i][c] * &self.rows[j][c].conj();
                    acc = &acc + &t.scale(&BigRational::from_integer(self.sizes[c].into()));
                }
                let expected = if i == j { order as i64 } else { 0 };
                if acc != Cyclotomic::from_int(n, expected) {
                    return Err(CharacterError::OrthogonalityFailure { i, j });
                }
            }
        }
        for a in 0..r {
            for b in a..r {
                let mut acc = Cyclotomic::zero(n);
                for row in &self.rows {
                    acc = &acc + &(&row[a] * &row[b].conj());
                }
                let expected = if a == b { (order / self.sizes[a]) as i64 } else { 0 };
                if !order.is_multiple_of(self.sizes[a]) || acc != Cyclotomic::from_int(n, expected) {
                    return Err(CharacterError::ColumnOrthogonalityFailure { i: a, j: b });
                }
            }
        }
        if self.rows[0].iter().any(|v| *v != Cyclotomic::one(n)) {
            return Err(CharacterError::FirstRowNotTrivial);
        }
        Ok(())
    }

    fn signature(&self) -> Vec<(usize, usize)> {
        let mut s: Vec<(usize, usize)> = self.element_orders.iter().copied().zip(self.sizes.iter().copied()).collect();
        s.sort_unstable();
        s
    }

    /// Attaches the table to a concrete subgroup.
    ///
    /// Classes are matched by size and element order; among the matchings,
    /// one is accepted when every row's central character
    /// `ω(C) = |C| χ(C) / χ(1)` respects the class multiplication constants
    /// of the subgroup. Such a row is an irreducible character of the
    /// subgroup, so the accepted matching gives its true table.
    pub fn bind(&self, domain: &Arc<ClassDomain>) -> Result<CharacterTable, CharacterError> {
        let mismatch = |detail: String| CharacterError::TableMismatch { table: self.name.clone(), detail };
        let g = domain.group();
        let r = domain.class_count();
        if r != self.labels.len() || domain.order() != self.order() {
            return Err(mismatch(format!(
                "{} classes of total size {} against {} classes of order {}",
                self.labels.len(),
                self.order(),
                r,
                domain.order()
            )));
        }
        let sizes = domain.class_sizes();
        let orders: Vec<usize> = (0..r).map(|c| g.element_order(domain.representative(c))).collect();
        let constants = structure_constants(g, domain);
        let mut assignment = vec![usize::MAX; r];
        let mut used = vec![false; r];
        let found = self.search(0, &sizes, &orders, &constants, &mut assignment, &mut used);
        if !found {
            return Err(mismatch("no class matching respects the class multiplication".into()));
        }
        // assignment[file class] = domain class
        let big = domain.conductor();
        let lift = lcm_u32(self.conductor, big);
        let mut rows = Vec::with_capacity(r);
        for row in &self.rows {
            let mut values = vec![Cyclotomic::zero(big); r];
            for (f, v) in row.iter().enumerate() {
                let moved = v
                    .embed(lift)
                    .restrict_conductor(big)
                    .ok_or_else(|| mismatch(format!("entry {v} is not in Q(z_{big})")))?;
                values[assignment[f]] = moved;
            }
            rows.push(ClassFunction::new(domain.clone(), values)?);
        }
        let mut labels = vec![String::new(); r];
        for (f, &d) in assignment.iter().enumerate() {
            labels[d] = self.labels[f].clone();
        }
        Ok(CharacterTable { name: self.name.clone(), domain: domain.clone(), labels, rows })
    }

    fn search(
        &self,
        f: usize,
        sizes: &[usize],
        orders: &[usize],
        constants: &[Vec<Vec<u64>>],
        assignment: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let r = sizes.len();
        if f == r {
            return self.respects_constants(assignment, constants);
        }
        for d in 0..r {
            if used[d] || sizes[d] != self.sizes[f] || orders[d] != self.element_orders[f] {
                continue;
            }
            assignment[f] = d;
            used[d] = true;
            if self.search(f + 1, sizes, orders, constants, assignment, used) {
                return true;
            }
            used[d] = false;
        }
        assignment[f] = usize::MAX;
        false
    }

    fn respects_constants(&self, assignment: &[usize], constants: &[Vec<Vec<u64>>]) -> bool {
        let r = assignment.len();
        let n = self.conductor;
        for row in &self.rows {
            let deg_inv = match row[0].inv() {
                Ok(x) => x,
                Err(_) => return false,
            };
            let mut omega = vec![Cyclotomic::zero(n); r];
            for f in 0..r {
                let sized = row[f].scale(&BigRational::from_integer(self.sizes[f].into()));
                omega[assignment[f]] = &sized * &deg_inv;
            }
            for a in 0..r {
                for b in a..r {
                    let lhs = &omega[a] * &omega[b];
                    let mut rhs = Cyclotomic::zero(n);
                    for (c, w) in omega.iter().enumerate() {
                        let k = constants[a][b][c];
                        if k != 0 {
                            rhs = &rhs + &w.scale(&BigRational::from_integer(k.into()));
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// `a[i][j][k] = #{(x, y) ∈ C_i × C_j : x y = z}` for a fixed `z ∈ C_k`.
fn structure_constants(g: &Group, domain: &ClassDomain) -> Vec<Vec<Vec<u64>>> {
    let r = domain.class_count();
    let mut a = vec![vec![vec![0u64; r]; r]; r];
    for k in 0..r {
        let z = domain.representative(k);
        for &x in domain.subgroup().elements() {
            let i = domain.class_of(x).expect("member");
            let y = g.mul(g.inv(x), z);
            let j = domain.class_of(y).expect("member");
            a[i][j][k] += 1;
        }
    }
    a
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// Irreducible characters of a concrete subgroup.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    name: String,
    domain: Arc<ClassDomain>,
    labels: Vec<String>,
    rows: Vec<ClassFunction>,
}

impl CharacterTable {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> &Arc<ClassDomain> {
        &self.domain
    }

    /// Class labels from the table file, in domain class order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> &[ClassFunction] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.domain.class_sizes()
    }

    /// Multiplicities `⟨f, χ_i⟩`; fails unless all are integers.
    pub fn coordinates(&self, f: &ClassFunction) -> Result<Vec<BigInt>, CharacterError> {
        self.rows
            .iter()
            .map(|chi| f.inner(chi).to_integer().ok_or(CharacterError::NotVirtual))
            .collect()
    }

    /// `Σ_i c_i χ_i`
    pub fn combination(&self, coords: &[BigInt]) -> ClassFunction {
        let mut acc = ClassFunction::constant(self.domain.clone(), 0);
        for (c, chi) in coords.iter().zip(&self.rows) {
            acc = acc.add(&chi.scale(&BigRational::from_integer(c.clone())));
        }
        acc
    }
}

/// Parses, validates and binds a table to the whole group.
pub fn load_character_table(text: &str, group: Arc<Group>) -> Result<CharacterTable, CharacterError> {
    let file = TableFile::parse(text)?;
    file.bind(&ClassDomain::whole(group))
}

const BUILTIN_TABLES: &[(&str, &str)] = &[
    ("trivial", include_str!("../../data/tables/trivial.tbl")),
    ("C2", include_str!("../../data/tables/C2.tbl")),
    ("C3", include_str!("../../data/tables/C3.tbl")),
    ("C4", include_str!("../../data/tables/C4.tbl")),
    ("C2xC2", include_str!("../../data/tables/C2xC2.tbl")),
    ("C6", include_str!("../../data/tables/C6.tbl")),
    ("S3", include_str!("../../data/tables/S3.tbl")),
    ("D4", include_str!("../../data/tables/D4.tbl")),
    ("Q8", include_str!("../../data/tables/Q8.tbl")),
    ("A4", include_str!("../../data/tables/A4.tbl")),
    ("S4", include_str!("../../data/tables/S4.tbl")),
];

/// A set of validated table files, looked up by the class signature of a
/// subgroup (element orders and class sizes).
#[derive(Debug, Clone, Default)]
pub struct TableLibrary {
    tables: Vec<TableFile>,
}

impl TableLibrary {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Tables shipped with the crate.
    pub fn builtin() -> Self {
        let tables = BUILTIN_TABLES
            .iter()
            .map(|(name, text)| TableFile::parse(text).unwrap_or_else(|e| panic!("builtin table {name}: {e}")))
            .collect();
        TableLibrary { tables }
    }

    /// Every `*.tbl` file in a directory, in file-name order.
    pub fn from_dir(dir: &Path) -> Result<Self, CharacterError> {
        let io = |e: std::io::Error| CharacterError::Io(format!("{}: {e}", dir.display()));
        let mut paths: Vec<_> = std::fs::read_dir(dir)
            .map_err(io)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "tbl"))
            .collect();
        paths.sort();
        let mut tables = Vec::new();
        for p in paths {
            let text = std::fs::read_to_string(&p).map_err(io)?;
            let t = TableFile::parse(&text).map_err(|e| match e {
                CharacterError::MalformedEntry { line, detail } => {
                    CharacterError::MalformedEntry { line, detail: format!("{}: {detail}", p.display()) }
                }
                other => other,
            })?;
            tables.push(t);
        }
        Ok(TableLibrary { tables })
    }

    pub fn push(&mut self, table: TableFile) {
        self.tables.push(table);
    }

    /// Tables of `other` are consulted before those of `self`.
    pub fn extended_by(mut self, other: TableLibrary) -> Self {
        let mut tables = other.tables;
        tables.append(&mut self.tables);
        self.tables = tables;
        self
    }

    pub fn tables(&self) -> &[TableFile] {
        &self.tables
    }

    /// The first table whose signature matches and which binds.
    pub fn table_for(&self, domain: &Arc<ClassDomain>) -> Result<CharacterTable, CharacterError> {
        let g = domain.group();
        let mut sig: Vec<(usize, usize)> = domain
            .classes()
            .iter()
            .map(|c| (g.element_order(c[0]), c.len()))
            .collect();
        sig.sort_unstable();
        for t in &self.tables {
            if t.order() == domain.order() && t.signature() == sig {
                if let Ok(bound) = t.bind(domain) {
                    return Ok(bound);
                }
            }
        }
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for (o, s) in &sig {
            *counts.entry(*o).or_default() += s;
        }
        let signature = counts.iter().map(|(o, k)| format!("{k}x order {o}")).collect::<Vec<_>>().join(", ");
        Err(CharacterError::MissingTable { order: domain.order(), signature })
    }
}
