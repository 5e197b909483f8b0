use std::fmt::Write;
use std::str::FromStr;

use super::{AnalysisReport, Target};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

fn tau_str(values: &[i8]) -> String {
    let parts: Vec<String> = values.iter().map(|v| format!("{v:+}")).collect();
    format!("[{}]", parts.join(", "))
}

/// Renders a report as pretty JSON or as plain text.
pub fn report_render(report: &AnalysisReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes"),
        Format::Text => render_text(report),
    }
}

fn render_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "verdict: {}", r.verdict);
    let _ = writeln!(w, "Δ = {}", r.delta);
    match &r.target {
        Target::Signature(s) => {
            let _ = writeln!(w, "m = {}, s = {s}", r.m);
        }
        Target::Tau(t) => {
            let t: Vec<i8> = t.iter().map(|v| *v as i8).collect();
            let _ = writeln!(w, "m = {}, τ = {}", r.m, tau_str(&t));
        }
    }
    let _ = writeln!(w, "regime: {}", r.witnesses.regime);

    let c = &r.conditions;
    let mark = |b: bool| if b { "ok" } else { "FAILS" };
    let _ = writeln!(w, "conditions:");
    let _ = writeln!(w, "  (1) reciprocal of even degree: {}", mark(c.cond_reciprocal));
    let _ = writeln!(w, "  (2) Δ(1) = {}: {}", c.delta_one, mark(c.cond_at_one));
    let _ = writeln!(w, "  (3) Δ(-1) = {} square: {}", c.delta_minus_one, mark(c.cond_at_minus_one));

    if let Some(p) = &r.p {
        let _ = writeln!(w, "P = {p}");
    }
    if let Some(set) = &r.factors {
        let _ = writeln!(w, "factors of P:");
        for (i, (f, sym)) in set.factors.iter().zip(&set.symmetric_flags).enumerate() {
            let tag = if *sym { "symmetric" } else { "NOT symmetric" };
            let _ = writeln!(w, "  f{i} = {f}  [{tag}]");
        }
        let _ = writeln!(
            w,
            "  square-free: {}, monic: {}",
            if set.squarefree { "yes" } else { "no" },
            if set.monic { "yes" } else { "no" }
        );
    }
    if let Some(rho) = r.rho {
        let _ = writeln!(w, "ρ = {rho}");
    }
    if !r.pi_table.is_empty() {
        let _ = writeln!(w, "Π table:");
        for e in &r.pi_table {
            let primes: Vec<String> = e.primes.iter().map(u64::to_string).collect();
            let _ = writeln!(
                w,
                "  Π(f{}, f{}) = {{{}}}  Res = {}",
                e.pair.0,
                e.pair.1,
                primes.join(", "),
                e.resultant
            );
            for wit in &e.witnesses {
                let _ = writeln!(w, "    p = {}: {} ({})", wit.prime, wit.factor, wit.kind);
            }
        }
    }
    if let Some(g) = &r.group {
        let comps: Vec<String> = g
            .components
            .iter()
            .map(|c| {
                let names: Vec<String> = c.iter().map(|i| format!("f{i}")).collect();
                format!("{{{}}}", names.join(", "))
            })
            .collect();
        let _ = writeln!(w, "G_P: rank {} (order {})", g.rank, g.order());
        let _ = writeln!(w, "components: {}", comps.join(" "));
    }
    if let Some(m) = &r.mil {
        let _ = writeln!(w, "Mil_s: s = {}, ρ = {}, {} assignment(s)", m.s, m.rho, m.count);
        for a in &m.assignments {
            let _ = writeln!(w, "  {}", tau_str(&a.values));
        }
        if m.truncated {
            let _ = writeln!(w, "  ... (list truncated)");
        }
    }
    if let Some(t) = &r.witnesses.tau {
        let _ = writeln!(w, "witness τ = {}", tau_str(&t.values));
    }
    let _ = writeln!(w, "ε_τ: {}", r.epsilon_status);
    for reason in &r.witnesses.reasons {
        let _ = writeln!(w, "reason: {reason}");
    }
    for note in &r.witnesses.notes {
        let _ = writeln!(w, "note: {note}");
    }
    let _ = writeln!(w, "seed {}, knotsig {}", r.seed, r.tool_version);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::{analyze, AnalysisRequest};
    use crate::IntPoly;

    fn ex81() -> IntPoly {
        "(x^4 - x^2 + 1)*(3*x^4 - 2*x^3 - x^2 - 2*x + 3)".parse().unwrap()
    }

    #[test]
    fn json_round_trip() {
        let r = analyze(&AnalysisRequest::signature(ex81(), 7, 8)).unwrap();
        let s = report_render(&r, Format::Json);
        let back: AnalysisReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        for key in [
            "conditions", "p", "factors", "rho", "pi_table", "group", "mil", "verdict",
            "witnesses", "epsilon_status", "tool_version", "seed",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["verdict"], "REALIZABLE");
    }

    #[test]
    fn text_rendering() {
        let r = analyze(&AnalysisRequest::signature(ex81(), 7, 8)).unwrap();
        let t = report_render(&r, Format::Text);
        assert!(t.contains("REALIZABLE"));
        assert!(t.contains("rank 0"));
        assert!(t.contains("Π(f0, f1) = {2}"));

        let r = analyze(&AnalysisRequest::signature("x^2 + 3".parse().unwrap(), 7, 0)).unwrap();
        let t = report_render(&r, Format::Text);
        assert!(t.contains("OUT_OF_SCOPE"));
        for reason in &r.witnesses.reasons {
            assert!(t.contains(reason.as_str()));
        }
    }

    #[test]
    fn formats() {
        assert_eq!("json".parse::<Format>(), Ok(Format::Json));
        assert_eq!("xml".parse::<Format>(), Err(Error::UnknownFormat("xml".into())));
    }
}
