//! Text and JSON renderings of check results.

use std::fmt::Write;

use bihomega_core::linalg::format_rational;
use bihomega_core::report::{CheckReport, Verdict, Witness, REPORT_FORMAT_VERSION};
use bihomega_core::semigroup::SemigroupTable;
use serde_json::{json, Value};

/// One checked object: a semigroup, an algebra, or an algebra paired with a
/// Rota-Baxter family.
pub struct Subject<'a> {
    pub title: String,
    pub omega: &'a SemigroupTable,
    /// Witness sides are element indices rather than vectors.
    pub elementwise: bool,
    pub outcome: Result<Verdict, String>,
}

impl Subject<'_> {
    pub fn passed(&self) -> bool {
        matches!(&self.outcome, Ok(v) if v.passed())
    }
}

fn side(s: &Subject, v: &[bihomega_core::linalg::Rational]) -> String {
    if s.elementwise {
        let ix: usize = v[0].to_integer().try_into().unwrap_or(0);
        return s.omega.label(ix).to_string();
    }
    let parts: Vec<_> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

fn omega_labels(s: &Subject, w: &Witness) -> Vec<String> {
    w.omega.iter().map(|&e| s.omega.label(e).to_string()).collect()
}

fn basis_labels(w: &Witness) -> Vec<String> {
    w.basis.iter().map(|i| format!("e{}", i + 1)).collect()
}

fn report_line(out: &mut String, s: &Subject, r: &CheckReport) {
    if r.passed {
        let _ = writeln!(out, "  ok    {}", r.axiom);
        return;
    }
    let plural = if r.violations == 1 { "" } else { "s" };
    let _ = writeln!(out, "  FAIL  {} ({} violation{plural})", r.axiom, r.violations);
    for w in &r.witnesses {
        let mut at = format!("omega=({})", omega_labels(s, w).join(","));
        if !w.basis.is_empty() {
            let _ = write!(at, " basis=({})", basis_labels(w).join(","));
        }
        let _ = writeln!(out, "          at {at}: lhs = {}, rhs = {}", side(s, &w.lhs), side(s, &w.rhs));
    }
}

pub fn subject_text(out: &mut String, s: &Subject) {
    match &s.outcome {
        Ok(v) => {
            let _ = writeln!(out, "{}: {}", s.title, if v.passed() { "pass" } else { "FAIL" });
            for r in &v.reports {
                report_line(out, s, r);
            }
        }
        Err(e) => {
            let _ = writeln!(out, "{}: ERROR {e}", s.title);
        }
    }
}

pub fn text(subjects: &[Subject]) -> String {
    let mut out = String::new();
    for s in subjects {
        subject_text(&mut out, s);
    }
    let failed = subjects.iter().filter(|s| !s.passed()).count();
    if failed == 0 {
        let _ = writeln!(out, "result: all {} subjects passed", subjects.len());
    } else {
        let _ = writeln!(out, "result: {failed} of {} subjects failed", subjects.len());
    }
    out
}

fn witness_json(s: &Subject, w: &Witness) -> Value {
    let sides = |v: &[bihomega_core::linalg::Rational]| -> Value {
        if s.elementwise {
            json!(side(s, v))
        } else {
            json!(v.iter().map(format_rational).collect::<Vec<_>>())
        }
    };
    json!({
        "omega": omega_labels(s, w),
        "basis": basis_labels(w),
        "lhs": sides(&w.lhs),
        "rhs": sides(&w.rhs),
    })
}

pub fn json(subjects: &[Subject]) -> String {
    let records: Vec<Value> = subjects
        .iter()
        .map(|s| {
            let (reports, error) = match &s.outcome {
                Ok(v) => (
                    v.reports
                        .iter()
                        .map(|r| {
                            json!({
                                "axiom": r.axiom,
                                "passed": r.passed,
                                "violations": r.violations,
                                "witnesses": r.witnesses.iter().map(|w| witness_json(s, w)).collect::<Vec<_>>(),
                            })
                        })
                        .collect(),
                    Value::Null,
                ),
                Err(e) => (Vec::new(), json!(e)),
            };
            json!({
                "subject": s.title,
                "passed": s.passed(),
                "error": error,
                "reports": reports,
            })
        })
        .collect();
    let doc = json!({
        "format": REPORT_FORMAT_VERSION,
        "passed": subjects.iter().all(Subject::passed),
        "subjects": records,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
    s.push('\n');
    s
}
