//! Rendering of computation results as text or JSON.
//!
//! The JSON layer is schema-stable: every extended natural number is an
//! object with a `kind` tag, brackets are `{lo, hi}`, and verification
//! reports always carry the same six fields.

use serde_json::{json, Value};

use findim_core::context::{Hypothesis, VerificationReport};
use findim_core::dimension::{Bracket, ExtNat, FindimReport, VerificationStatus};
use findim_core::module::{PdCertificate, PdResult};

pub fn ext_nat_json(x: &ExtNat) -> Value {
    match x {
        ExtNat::Finite(n) => json!({"kind": "finite", "value": n}),
        ExtNat::Infinite => json!({"kind": "infinity"}),
        ExtNat::Unknown { at_least } => json!({"kind": "unknown", "at_least": at_least}),
    }
}

pub fn bracket_json(b: &Bracket) -> Value {
    json!({"lo": ext_nat_json(&b.lo), "hi": ext_nat_json(&b.hi)})
}

fn hypothesis_json(h: &Hypothesis) -> Value {
    json!({"name": h.name, "status": h.status.to_string(), "detail": h.detail})
}

pub fn verification_json(r: &VerificationReport) -> Value {
    json!({
        "bound_id": r.bound_id,
        "instance": r.instance,
        "hypotheses": r.hypotheses.iter().map(hypothesis_json).collect::<Vec<_>>(),
        "lhs": bracket_json(&r.lhs),
        "rhs": bracket_json(&r.rhs),
        "verdict": r.verdict.to_string(),
        "witnesses": r.witnesses,
    })
}

pub fn verification_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("bound:    {}\n", r.bound_id));
    out.push_str(&format!("instance: {}\n", r.instance));
    for h in &r.hypotheses {
        out.push_str(&format!("hypothesis [{}] {}: {}\n", h.status, h.name, h.detail));
    }
    out.push_str(&format!("lhs:      {}\n", r.lhs));
    out.push_str(&format!("rhs:      {}\n", r.rhs));
    for w in &r.witnesses {
        out.push_str(&format!("  - {w}\n"));
    }
    out.push_str(&format!("verdict:  {}\n", r.verdict));
    out
}

pub fn certificate_name(c: &PdCertificate) -> String {
    match c {
        PdCertificate::FiniteResolution => "finite-resolution".to_string(),
        PdCertificate::SyzygyPeriodic { lower, upper } => {
            format!("syzygy-periodic({lower},{upper})")
        }
        PdCertificate::CapReached => "cap-reached".to_string(),
    }
}

pub fn resolution_witnesses(r: &PdResult) -> Vec<String> {
    r.steps
        .iter()
        .enumerate()
        .map(|(t, s)| {
            let summands: Vec<String> =
                s.projective.summands.iter().map(|i| format!("P{}", i + 1)).collect();
            let desc = if summands.is_empty() { "0".to_string() } else { summands.join(" + ") };
            format!("step {t}: {desc} covering a module of dim {}", s.cover.target.dim())
        })
        .collect()
}

pub fn pd_json(command: &str, r: &PdResult) -> Value {
    json!({
        "command": command,
        "value": ext_nat_json(&r.value),
        "certificate": certificate_name(&r.certificate),
        "witnesses": resolution_witnesses(r),
    })
}

pub fn pd_text(command: &str, r: &PdResult) -> String {
    let mut out = format!("{command}: {} ({})\n", r.value, certificate_name(&r.certificate));
    for w in resolution_witnesses(r) {
        out.push_str(&format!("  - {w}\n"));
    }
    out
}

pub fn findim_json(r: &FindimReport) -> Value {
    json!({
        "command": "findim",
        "lo": ext_nat_json(&r.bracket.lo),
        "hi": ext_nat_json(&r.bracket.hi),
        "method": r.method.to_string(),
        "notes": r.notes,
    })
}

pub fn findim_text(r: &FindimReport) -> String {
    let mut out = format!("findim: {} (method: {})\n", r.bracket, r.method);
    for n in &r.notes {
        out.push_str(&format!("  - {n}\n"));
    }
    out
}

pub struct SuiteSummary {
    pub verified: usize,
    pub violated: usize,
    pub undetermined: usize,
}

pub fn summarize(rows: &[VerificationReport]) -> SuiteSummary {
    let mut s = SuiteSummary { verified: 0, violated: 0, undetermined: 0 };
    for r in rows {
        match r.verdict {
            VerificationStatus::Verified => s.verified += 1,
            VerificationStatus::Violated => s.violated += 1,
            VerificationStatus::Undetermined => s.undetermined += 1,
        }
    }
    s
}

pub fn suite_json(rows: &[VerificationReport]) -> Value {
    let s = summarize(rows);
    json!({
        "command": "report-suite",
        "rows": rows.iter().map(verification_json).collect::<Vec<_>>(),
        "verified": s.verified,
        "violated": s.violated,
        "undetermined": s.undetermined,
    })
}

pub fn suite_text(rows: &[VerificationReport]) -> String {
    let headers = ["bound_id", "instance", "lhs", "rhs", "verdict"];
    let mut table: Vec<[String; 5]> = Vec::new();
    for r in rows {
        table.push([
            r.bound_id.clone(),
            r.instance.clone(),
            r.lhs.to_string(),
            r.rhs.to_string(),
            r.verdict.to_string(),
        ]);
    }
    let mut widths = [0usize; 5];
    for c in 0..5 {
        widths[c] = headers[c].len();
        for row in &table {
            widths[c] = widths[c].max(row[c].len());
        }
    }
    let mut out = String::new();
    let fmt_row = |cells: [&str; 5], widths: &[usize; 5]| -> String {
        let mut line = String::new();
        for c in 0..5 {
            line.push_str(&format!("{:<w$}", cells[c], w = widths[c]));
            if c < 4 {
                line.push_str("  ");
            }
        }
        line.push('\n');
        line
    };
    out.push_str(&fmt_row(headers, &widths));
    for row in &table {
        out.push_str(&fmt_row(
            [&row[0], &row[1], &row[2], &row[3], &row[4]].map(|s| s.as_str()),
            &widths,
        ));
    }
    let s = summarize(rows);
    out.push_str(&format!(
        "verified: {}  violated: {}  undetermined: {}\n",
        s.verified, s.violated, s.undetermined
    ));
    out
}
