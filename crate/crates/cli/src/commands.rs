use std::path::{Path, PathBuf};
use std::sync::Arc;

use burnside::artin::artin_certificate;
use burnside::brauer::brauer_certificate;
use burnside::burnside::{GhostElement, MarksTable};
use burnside::character::{
    frobenius_check, mackey_check, perm_character, verify_artin_restriction, verify_brauer_restriction,
    CharacterError, ClassDomain, ClassFunction, TableLibrary,
};
use burnside::exact::BigInt;
use burnside::group::{builtin, parse_group, GenBound, GroupError, SubgroupLattice};
use burnside::lie::{order_n_lie, PhiData};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::report::{table, InputError, Report};

pub struct GroupInput {
    pub marks: MarksTable,
    pub inputs: Value,
}

fn group_error_kind(e: &GroupError) -> &'static str {
    match e {
        GroupError::MalformedCycle { .. } => "MalformedCycle",
        GroupError::OrderCapExceeded { .. } => "OrderCapExceeded",
        GroupError::UnknownBuiltin(_) => "UnknownBuiltin",
        GroupError::NotAbelian => "NotAbelian",
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

pub fn load_group(
    command: &'static str,
    name: Option<&str>,
    file: Option<&Path>,
    cap: usize,
) -> Result<GroupInput, InputError> {
    let (group, inputs) = match (name, file) {
        (Some(name), _) => {
            let g = builtin(name).map_err(|e| InputError::new(command, group_error_kind(&e), e.to_string()))?;
            let inputs = json!({"group": g.label(), "source": "builtin"});
            (g, inputs)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| InputError::new(command, "Io", format!("{}: {e}", path.display())))?;
            let g = parse_group(&text, cap).map_err(|e| {
                InputError::new(command, group_error_kind(&e), format!("{}: {e}", path.display()))
            })?;
            let inputs = json!({
                "group": g.label(),
                "source": "file",
                "file": path.display().to_string(),
                "sha256": sha256_hex(text.as_bytes()),
            });
            (g, inputs)
        }
        (None, None) => return Err(InputError::new(command, "MissingGroup", "pass --group or --file")),
    };
    let lattice = Arc::new(SubgroupLattice::new(Arc::new(group)));
    Ok(GroupInput { marks: MarksTable::new(lattice), inputs })
}

fn with_n(inputs: &Value, n: GenBound) -> Value {
    let mut v = inputs.clone();
    v["n"] = json!(n);
    v
}

fn labels(marks: &MarksTable) -> Vec<String> {
    marks.lattice().classes().iter().map(|c| c.label.clone()).collect()
}

pub fn marks(input: GroupInput) -> Report {
    let t = &input.marks;
    let lattice = t.lattice();
    let mut text = format!("group {} of order {}, {} subgroup classes\n\n", t.group().label(), t.group().order(), t.len());
    let rows: Vec<Vec<String>> = lattice
        .classes()
        .iter()
        .map(|c| {
            vec![
                c.label.clone(),
                c.order.to_string(),
                c.weyl_order.to_string(),
                if c.is_abelian { format!("abelian, {} gen", c.min_generators) } else { "non-abelian".into() },
            ]
        })
        .collect();
    text.push_str(&table(&["class", "order", "weyl", "type"], &rows));
    text.push('\n');
    let names = labels(t);
    let mut header = vec!["m[H][K]"];
    header.extend(names.iter().map(String::as_str));
    let rows: Vec<Vec<String>> = (0..t.len())
        .map(|h| {
            let mut r = vec![names[h].clone()];
            r.extend((0..t.len()).map(|k| t.mark(h, k).to_string()));
            r
        })
        .collect();
    text.push_str(&table(&header, &rows));
    Report { command: "marks", inputs: input.inputs, results: t.to_json(), passed: true, text }
}

pub fn artin(input: GroupInput, n: GenBound) -> Result<Report, InputError> {
    let t = &input.marks;
    let cert = artin_certificate(t, n).map_err(|e| InputError::new("artin", "Artin", e.to_string()))?;
    let names = labels(t);
    let mut text = format!("Artin certificate for {}, n = {}, |G|_n = {}\n\n", cert.group, n, cert.order_n);
    let rows: Vec<Vec<String>> =
        cert.coefficients.iter().map(|(c, v)| vec![names[*c].clone(), v.to_string()]).collect();
    text.push_str(&table(&["class", "coefficient"], &rows));
    text.push('\n');
    text.push_str(&check_table(cert.checks.iter().map(|c| (c.label.clone(), &c.lhs, &c.rhs))));
    text.push_str(&format!("ghost check: {}\nJ_n check: {}\n", cert.ghost_check, cert.jn_check));
    Ok(Report {
        command: "artin",
        inputs: with_n(&input.inputs, n),
        results: cert.to_json(),
        passed: cert.passed(),
        text,
    })
}

fn check_table<'a>(checks: impl Iterator<Item = (String, &'a BigInt, &'a BigInt)>) -> String {
    let rows: Vec<Vec<String>> = checks
        .map(|(l, lhs, rhs)| vec![l, lhs.to_string(), rhs.to_string(), if lhs == rhs { "ok" } else { "FAIL" }.into()])
        .collect();
    table(&["element", "sum", "expected", ""], &rows)
}

pub fn brauer(input: GroupInput, n: GenBound) -> Result<Report, InputError> {
    let t = &input.marks;
    let cert = brauer_certificate(t, n).map_err(|e| InputError::new("brauer", "Brauer", e.to_string()))?;
    let names = labels(t);
    let mut text = format!("Brauer certificate for {}, n = {}, |G|_n = {}\n", cert.group, n, cert.order_n);
    let bezout: Vec<String> = cert.bezout.iter().map(|(p, z)| format!("z_{p} = {z}")).collect();
    if !bezout.is_empty() {
        text.push_str(&format!("Bezout: {}\n", bezout.join(", ")));
    }
    text.push('\n');
    let rows: Vec<Vec<String>> = cert
        .decomposition
        .support()
        .into_iter()
        .map(|c| vec![names[c].clone(), cert.decomposition.coefficients[c].to_string()])
        .collect();
    text.push_str(&table(&["class", "coefficient"], &rows));
    text.push('\n');
    text.push_str(&check_table(cert.checks.iter().map(|c| (c.label.clone(), &c.lhs, &c.rhs))));
    text.push_str(&format!(
        "unit on family: {}\nsupport is hyper: {}\n",
        cert.unit_on_family, cert.hyper_check
    ));
    Ok(Report {
        command: "brauer",
        inputs: with_n(&input.inputs, n),
        results: cert.to_json(),
        passed: cert.passed(),
        text,
    })
}

pub fn library(command: &'static str, dir: Option<&PathBuf>) -> Result<TableLibrary, InputError> {
    match dir {
        None => Ok(TableLibrary::builtin()),
        Some(d) => TableLibrary::from_dir(d).map_err(|e| InputError::with_json(command, e.to_json())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Artin,
    Brauer,
}

fn is_check_failure(e: &CharacterError) -> bool {
    matches!(e, CharacterError::CompositeMismatch { .. } | CharacterError::NotIsomorphism { .. })
}

pub fn equalizer(input: GroupInput, n: GenBound, mode: Mode, lib: &TableLibrary) -> Result<Report, InputError> {
    let t = &input.marks;
    let mut inputs = with_n(&input.inputs, n);
    inputs["mode"] = json!(if mode == Mode::Artin { "artin" } else { "brauer" });
    let outcome = match mode {
        Mode::Artin => verify_artin_restriction(t, n, lib).map(|r| {
            let text = format!(
                "Artin restriction for {}, n = {}: family {}\nequalizer rank {}, {} irreducibles\npsi∘res = {} · id, res∘psi = {} · id\n",
                r.group,
                n,
                r.family_labels.join(" "),
                r.equalizer_rank,
                r.irreducibles,
                r.order_n,
                r.order_n
            );
            (r.to_json(), text)
        }),
        Mode::Brauer => verify_brauer_restriction(t, n, lib).map(|r| {
            let divisors: Vec<String> = r.elementary_divisors.iter().map(ToString::to_string).collect();
            let text = format!(
                "Brauer restriction for {}, n = {}: family {}\nequalizer rank {}, {} irreducibles\nelementary divisors: {}\n",
                r.group,
                n,
                r.family_labels.join(" "),
                r.equalizer_rank,
                r.irreducibles,
                divisors.join(" ")
            );
            (r.to_json(), text)
        }),
    };
    match outcome {
        Ok((results, text)) => Ok(Report { command: "equalizer", inputs, results, passed: true, text }),
        Err(e) if is_check_failure(&e) => Ok(Report {
            command: "equalizer",
            inputs,
            results: e.to_json(),
            passed: false,
            text: format!("{e}\n"),
        }),
        Err(e) => Err(InputError::with_json("equalizer", e.to_json())),
    }
}

pub fn lie(file: Option<&Path>, power: usize, n: GenBound) -> Result<Report, InputError> {
    let (base, mut inputs) = match file {
        None => (PhiData::so3(), json!({"data": "SO(3)", "source": "builtin"})),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| InputError::new("lie", "Io", format!("{}: {e}", path.display())))?;
            let data = PhiData::from_json(&text).map_err(|e| InputError::with_json("lie", e.to_json()))?;
            let inputs = json!({
                "data": data.name,
                "source": "file",
                "file": path.display().to_string(),
                "sha256": sha256_hex(text.as_bytes()),
            });
            (data, inputs)
        }
    };
    inputs["power"] = json!(power);
    inputs["n"] = json!(n);
    let data = base.power(power);
    let order = order_n_lie(&data, n).map_err(|e| InputError::with_json("lie", e.to_json()))?;
    let qualifying: Vec<&str> = data.qualifying(n).iter().map(|c| c.label.as_str()).collect();
    let rows: Vec<Vec<String>> = data
        .classes
        .iter()
        .map(|c| {
            vec![
                c.label.clone(),
                c.weyl_order.to_string(),
                c.generator_count().to_string(),
                if qualifying.contains(&c.label.as_str()) { "yes" } else { "" }.into(),
            ]
        })
        .collect();
    let mut text = format!("{}, n = {}: |G|_n = {}\n\n", data.name, n, order);
    text.push_str(&table(&["class", "weyl", "generators", "counted"], &rows));
    let results = json!({
        "name": data.name,
        "order_n": order.to_string().parse::<u64>().map(Value::from).unwrap_or_else(|_| Value::from(order.to_string())),
        "classes": data.classes.iter().map(|c| json!({
            "label": c.label,
            "weyl_order": c.weyl_order,
            "generator_count": c.generator_count(),
            "counted": qualifying.contains(&c.label.as_str()),
        })).collect::<Vec<_>>(),
    });
    Ok(Report { command: "lie", inputs, results, passed: true, text })
}

struct Check {
    name: String,
    outcome: Outcome,
    detail: String,
}

#[derive(PartialEq, Eq)]
enum Outcome {
    Pass,
    Fail,
    Skipped,
}

impl Check {
    fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), outcome: if ok { Outcome::Pass } else { Outcome::Fail }, detail: detail.into() }
    }
}

/// Runs every check the library offers on one group.
pub fn verify(input: GroupInput, lib: &TableLibrary) -> Report {
    let t = &input.marks;
    let lattice = t.lattice();
    let g = t.group();
    let order = BigInt::from(g.order());
    let mut checks = Vec::new();

    let mut tri = true;
    let mut diag = true;
    let mut divides = true;
    for h in 0..t.len() {
        let w = BigInt::from(lattice.class(h).weyl_order);
        for k in 0..t.len() {
            let m = t.mark(h, k);
            if !lattice.is_subconjugate(k, h) && m != &BigInt::from(0) {
                tri = false;
            }
            if m % &w != BigInt::from(0) {
                divides = false;
            }
        }
        diag &= t.mark(h, h) == &w;
    }
    checks.push(Check::new("marks triangular", tri, ""));
    checks.push(Check::new("marks diagonal is Weyl order", diag, ""));
    checks.push(Check::new("Weyl order divides marks", divides, ""));

    let tom_dieck = (0..t.len()).all(|h| {
        let mut e = GhostElement::zero(t.len());
        e.values[h] = order.clone();
        t.solve_ghost(&e).is_ok()
    });
    checks.push(Check::new("|G| C(G) in A(G)", tom_dieck, ""));

    for n in [GenBound::Finite(1), GenBound::Finite(2), GenBound::Infinite] {
        match artin_certificate(t, n) {
            Ok(c) => checks.push(Check::new(format!("Artin certificate n={n}"), c.passed(), format!("|G|_n = {}", c.order_n))),
            Err(e) => checks.push(Check::new(format!("Artin certificate n={n}"), false, e.to_string())),
        }
        match brauer_certificate(t, n) {
            Ok(c) => checks.push(Check::new(format!("Brauer certificate n={n}"), c.passed(), "")),
            Err(e) => checks.push(Check::new(format!("Brauer certificate n={n}"), false, e.to_string())),
        }
    }

    let whole = ClassDomain::whole(g.clone());
    let domains: Vec<_> =
        lattice.classes().iter().map(|c| ClassDomain::new(g.clone(), c.representative.clone())).collect();
    let mut frob = true;
    let mut mackey = true;
    let mut perm = true;
    for (h, dh) in domains.iter().enumerate() {
        let triv = ClassFunction::trivial(dh.clone());
        perm &= burnside::character::induce(&triv, &whole).ok() == Some(perm_character(lattice, h, &whole));
        for (k, dk) in domains.iter().enumerate() {
            frob &= frobenius_check(&triv, &perm_character(lattice, k, &whole)).unwrap_or(false);
            mackey &= mackey_check(dk, &triv).unwrap_or(false);
        }
    }
    checks.push(Check::new("induced trivial = permutation character", perm, ""));
    checks.push(Check::new("Frobenius reciprocity", frob, ""));
    checks.push(Check::new("Mackey formula", mackey, ""));

    let one = GenBound::Finite(1);
    let restriction = [
        ("Artin restriction n=1", verify_artin_restriction(t, one, lib).map(|r| format!("rank {}", r.equalizer_rank))),
        ("Brauer restriction n=1", verify_brauer_restriction(t, one, lib).map(|r| format!("rank {}", r.equalizer_rank))),
    ];
    for (name, r) in restriction {
        checks.push(match r {
            Ok(detail) => Check::new(name, true, detail),
            Err(e @ CharacterError::MissingTable { .. }) => {
                Check { name: name.into(), outcome: Outcome::Skipped, detail: e.to_string() }
            }
            Err(e) => Check::new(name, false, e.to_string()),
        });
    }

    let passed = checks.iter().all(|c| c.outcome != Outcome::Fail);
    let word = |o: &Outcome| match o {
        Outcome::Pass => "pass",
        Outcome::Fail => "fail",
        Outcome::Skipped => "skipped",
    };
    let rows: Vec<Vec<String>> =
        checks.iter().map(|c| vec![c.name.clone(), word(&c.outcome).into(), c.detail.clone()]).collect();
    let text = format!("verify {} (order {})\n\n{}", g.label(), g.order(), table(&["check", "result", "detail"], &rows));
    let results = json!({
        "checks": checks.iter().map(|c| json!({"name": c.name, "result": word(&c.outcome), "detail": c.detail})).collect::<Vec<_>>(),
    });
    Report { command: "verify", inputs: input.inputs, results, passed, text }
}
