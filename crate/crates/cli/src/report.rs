use std::fmt::Write as _;
use std::time::Duration;

use serde_json::{json, Value};

/// Exit codes: 0 pass, 1 a check failed, 2 bad input.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub passed: bool,
    pub text: String,
}

/// Input that could not be turned into a run: parse errors, missing files,
/// missing tables.
pub struct InputError {
    pub command: &'static str,
    pub error: Value,
    pub message: String,
}

impl InputError {
    pub fn new(command: &'static str, kind: &str, message: impl Into<String>) -> Self {
        let message = message.into();
        InputError { command, error: json!({"error": kind, "message": message}), message }
    }

    pub fn with_json(command: &'static str, error: Value) -> Self {
        let message = error["message"].as_str().unwrap_or("input error").to_string();
        InputError { command, error, message }
    }
}

pub struct Printer {
    pub json: bool,
    pub timing: bool,
}

impl Printer {
    pub fn report(&self, r: &Report, elapsed: Duration) -> i32 {
        let status = if r.passed { "pass" } else { "fail" };
        if self.json {
            let mut v = json!({
                "command": r.command,
                "inputs": r.inputs,
                "results": r.results,
                "status": status,
            });
            if self.timing {
                v["timing_ms"] = json!(elapsed.as_millis() as u64);
            }
            println!("{}", serde_json::to_string_pretty(&v).expect("report serializes"));
        } else {
            print!("{}", r.text);
            let mut tail = format!("status: {status}");
            if self.timing {
                let _ = write!(tail, " ({} ms)", elapsed.as_millis());
            }
            println!("{tail}");
        }
        if r.passed {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }

    pub fn input_error(&self, e: &InputError) -> i32 {
        if self.json {
            let v = json!({"command": e.command, "status": "error", "error": e.error});
            println!("{}", serde_json::to_string_pretty(&v).expect("error serializes"));
        }
        eprintln!("error: {}", e.message);
        EXIT_INPUT
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let mut s = String::new();
        for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            let _ = write!(s, "{c:<w$}");
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    for r in rows {
        out.push_str(&line(r.clone()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_align() {
        let t = table(&["a", "bb"], &[vec!["xyz".into(), "1".into()], vec!["q".into(), "".into()]]);
        assert_eq!(t, "a    bb\nxyz  1\nq\n");
    }
}
