//! The command implementations behind the `sunsys` binary.
//!
//! Each command returns its exit code and output instead of printing, so the
//! commands can be tested directly. Exit codes: 0 success, 1 verification
//! failure, 2 inadmissible or invalid input, 3 order below the embedding
//! bound.

use crate::certificate::{Certificate, Kind};
use crate::error::Error;
use crate::lemmas::{self, LemmaArgs, LemmaKind};
use crate::oracle::base_system;
use crate::planner::{self, Admissibility};
use crate::verify::Decomposition;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(stdout: String) -> CommandOutput {
        CommandOutput {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> CommandOutput {
        CommandOutput {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundViolated { .. } => EXIT_BOUND,
        Error::VerificationFailed(_) => EXIT_VERIFY,
        _ => EXIT_INVALID,
    }
}

fn from_error(e: Error) -> CommandOutput {
    CommandOutput::fail(exit_code(&e), format!("error: {e}\n"))
}

/// A certificate for a 3-sun system of order `m`.
pub fn generate(m: u32) -> CommandOutput {
    match planner::construct_3ss(m) {
        Ok(d) => CommandOutput::ok(Certificate::from_decomposition(&d).to_json()),
        Err(e) => from_error(e),
    }
}

fn base_for(n: u32) -> Result<Decomposition, Error> {
    match n {
        9 | 12 | 13 => base_system(n),
        _ => planner::construct_3ss(n),
    }
}

/// Embeds a system of order `n` into one of order `m`. The base is read from
/// `base` (certificate text) when given, otherwise built.
pub fn embed(n: u32, m: u32, base: Option<&str>) -> CommandOutput {
    let base = match base {
        Some(text) => match Certificate::from_json(text) {
            Ok(c) if c.kind == Kind::Complete && c.m == n => c.decomposition(),
            Ok(c) => {
                return CommandOutput::fail(
                    EXIT_INVALID,
                    format!("error: base certificate is not a complete system of order {n} (m = {}, n = {})\n", c.m, c.n),
                )
            }
            Err(e) => return from_error(e),
        },
        None => match base_for(n) {
            Ok(d) => d,
            Err(e) => return from_error(e),
        },
    };
    match planner::embed(&base, m) {
        Ok(d) => CommandOutput::ok(Certificate::from_decomposition(&d).to_json()),
        Err(e) => from_error(e),
    }
}

/// Verifies certificate text and reports the defects.
pub fn verify(text: &str) -> CommandOutput {
    let cert = match Certificate::from_json(text) {
        Ok(c) => c,
        Err(e) => return CommandOutput::fail(EXIT_VERIFY, format!("error: {e}\n")),
    };
    let report = match cert.verify() {
        Ok(r) => r,
        Err(e) => return CommandOutput::fail(EXIT_VERIFY, format!("error: {e}\n")),
    };
    if report.ok {
        return CommandOutput::ok(format!("ok: {}\n", report.summary()));
    }
    let mut out = format!("FAILED: {}\n", report.summary());
    let list = |label: &str, items: Vec<String>| -> String {
        if items.is_empty() {
            String::new()
        } else {
            format!("{label}: {}\n", items.join(" "))
        }
    };
    let show = |es: &[crate::design::Edge]| es.iter().map(|e| e.to_string()).collect();
    out += &list("missing", show(&report.missing_edges));
    out += &list("duplicated", show(&report.duplicated_edges));
    out += &list("foreign", show(&report.foreign_edges));
    out += &list(
        "malformed",
        report
            .malformed_blocks
            .iter()
            .map(|b| format!("{b:?}"))
            .collect(),
    );
    CommandOutput {
        code: EXIT_VERIFY,
        stdout: out,
        stderr: String::new(),
    }
}

/// One row per admissible `n` in `9..=n_max`: `n`, the least embedding
/// order, and the residues of `m - n` mod 12.
pub fn table(n_max: u32) -> CommandOutput {
    let mut out = String::from("# n  m_min  (m - n) mod 12\n");
    for n in 9..=n_max {
        if planner::is_admissible_order(n) != Admissibility::Admissible {
            continue;
        }
        let (Ok(min), Ok(rs)) = (planner::min_embedding_order(n), planner::hole_residues(n)) else {
            continue;
        };
        let rs: Vec<String> = rs.iter().map(u32::to_string).collect();
        out += &format!("{n}  {min}  {{{}}}\n", rs.join(","));
    }
    CommandOutput::ok(out)
}

/// Runs one generator and prints its certificate.
pub fn lemma(name: &str, u: u32, args: &LemmaArgs) -> CommandOutput {
    let kind: LemmaKind = match name.parse() {
        Ok(k) => k,
        Err(e) => return CommandOutput::fail(EXIT_INVALID, format!("error: {e}\n")),
    };
    let out = match lemmas::construct(kind, u, args) {
        Ok(o) => o,
        Err(e) => return from_error(e),
    };
    let report = out.verify();
    if !report.ok {
        return CommandOutput::fail(EXIT_VERIFY, format!("error: {}\n", report.summary()));
    }
    CommandOutput::ok(Certificate::from_lemma(&out).to_json())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        let out = table(25);
        assert!(out.stdout.lines().any(|l| l == "9  14  {0,3,4,7}"));
        assert!(out.stdout.lines().any(|l| l == "12  18  {0,1,4,9}"));
        assert!(out.stdout.lines().any(|l| l == "25  36  {0,3,8,11}"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(generate(14).code, EXIT_INVALID);
        assert_eq!(generate(4).code, EXIT_INVALID);
        let out = embed(9, 12, None);
        assert_eq!(out.code, EXIT_BOUND);
        assert!(out.stderr.contains("m >= 14"), "{}", out.stderr);
        assert_eq!(verify("not json").code, EXIT_VERIFY);
        assert_eq!(lemma("nope", 8, &LemmaArgs::default()).code, EXIT_INVALID);
    }

    #[test]
    fn verify_reports_defects() {
        let good = generate(9).stdout;
        assert_eq!(verify(&good).code, EXIT_OK);
        let mut c = Certificate::from_json(&good).unwrap();
        c.blocks.pop();
        let out = verify(&c.to_json());
        assert_eq!(out.code, EXIT_VERIFY);
        assert!(out.stdout.contains("6 missing"));
    }
}
