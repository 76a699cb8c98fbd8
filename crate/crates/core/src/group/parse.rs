use super::{Group, GroupError, Perm, DEFAULT_ORDER_CAP};

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: &[&str] = &["trivial", "C2", "C3", "C4", "C6", "C2xC2", "S3", "D4", "Q8", "A4", "S4"];

/// Parses a group definition: one generator per line in disjoint-cycle
/// notation, with an optional `name:` header and `#` comments.
///
/// ```text
/// name: S3
/// (0 1)
/// (0 1 2)
/// ```
pub fn parse_group(text: &str, cap: usize) -> Result<Group, GroupError> {
    let mut name = None;
    let mut cycle_lists: Vec<(usize, Vec<Vec<u32>>)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("name:") {
            name = Some(rest.trim().to_string());
            continue;
        }
        let cycles = parse_cycles(line).map_err(|detail| GroupError::MalformedCycle { line: lineno + 1, detail })?;
        cycle_lists.push((lineno + 1, cycles));
    }
    let degree = cycle_lists
        .iter()
        .flat_map(|(_, cycles)| cycles.iter().flatten())
        .map(|&p| p as usize + 1)
        .max()
        .unwrap_or(1);
    let mut gens = Vec::with_capacity(cycle_lists.len());
    for (line, cycles) in &cycle_lists {
        let perm = Perm::from_cycles(degree, cycles).ok_or_else(|| GroupError::MalformedCycle {
            line: *line,
            detail: "cycles are not disjoint".to_string(),
        })?;
        gens.push(perm);
    }
    Group::from_generators(name, degree, gens, cap)
}

/// Parses `"(0 1)(2 3)"`; `"()"` is the identity.
pub fn parse_cycles(line: &str) -> Result<Vec<Vec<u32>>, String> {
    let mut cycles = Vec::new();
    let mut rest = line.trim();
    while !rest.is_empty() {
        let inner_start = rest.strip_prefix('(').ok_or_else(|| format!("expected '(' at {rest:?}"))?;
        let close = inner_start.find(')').ok_or_else(|| format!("unclosed cycle in {line:?}"))?;
        let body = &inner_start[..close];
        if body.contains('(') {
            return Err(format!("nested '(' in {line:?}"));
        }
        let points = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<u32>().map_err(|_| format!("bad point {s:?}")))
            .collect::<Result<Vec<u32>, String>>()?;
        let mut sorted = points.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(format!("repeated point in ({body})"));
        }
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = inner_start[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// One of the shipped fixture groups, by name (case-insensitive).
pub fn builtin(name: &str) -> Result<Group, GroupError> {
    let canonical = BUILTIN_NAMES
        .iter()
        .find(|n| n.eq_ignore_ascii_case(name) || (name == "1" && **n == "trivial"))
        .ok_or_else(|| GroupError::UnknownBuiltin(name.to_string()))?;
    let gens: &[&str] = match *canonical {
        "trivial" => &[],
        "C2" => &["(0 1)"],
        "C3" => &["(0 1 2)"],
        "C4" => &["(0 1 2 3)"],
        "C6" => &["(0 1 2 3 4 5)"],
        "C2xC2" => &["(0 1)", "(2 3)"],
        "S3" => &["(0 1)", "(0 1 2)"],
        "D4" => &["(0 1 2 3)", "(0 2)"],
        // right-regular action on 1, i, -1, -i, j, k, -j, -k
        "Q8" => &["(0 1 2 3)(4 7 6 5)", "(0 4 2 6)(1 5 3 7)"],
        "A4" => &["(0 1 2)", "(0 1)(2 3)"],
        "S4" => &["(0 1 2 3)", "(0 1)"],
        _ => unreachable!(),
    };
    let mut text = format!("name: {canonical}\n");
    for g in gens {
        text.push_str(g);
        text.push('\n');
    }
    parse_group(&text, DEFAULT_ORDER_CAP)
}
