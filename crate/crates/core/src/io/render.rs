//! Text and structured rendering of models, reports and traces.
//!
//! The structured form is a single JSON document per invocation carrying a
//! `"format": 1` header. Events are rendered as lists of state labels in
//! declaration order.

use serde_json::{json, Value};

use crate::model::Model;
use crate::operators::FixpointTrace;
use crate::properties::{PropertyReport, Quantification, Relation, Witness};
use crate::space::{Event, StateSpace};
use crate::trace::{DerivationTrace, Verdict};

/// Version of the structured output.
pub const FORMAT_VERSION: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

/// Canonical model file: one `states:` line, then one `P` line per state,
/// members space-separated, LF line endings.
pub fn render_model(model: &Model) -> String {
    let space = model.space();
    let mut out = format!("states: {}\n", space.labels().join(" "));
    for (i, &image) in model.images().iter().enumerate() {
        out.push_str(&format!(
            "P({}) = {{{}}}\n",
            space.label(i),
            space.members(image).join(" ")
        ));
    }
    out
}

pub fn event_json(space: &StateSpace, event: Event) -> Value {
    json!(space.members(event))
}

fn relation_str(r: Relation) -> &'static str {
    match r {
        Relation::Subset => "subset",
        Relation::Equal => "equal",
    }
}

fn quantification_json(q: Quantification) -> Value {
    match q {
        Quantification::Exhaustive => json!({ "mode": "exhaustive" }),
        Quantification::Sampled { samples, seed } => {
            json!({ "mode": "sampled", "samples": samples, "seed": seed })
        }
    }
}

fn quantification_text(q: Quantification) -> String {
    match q {
        Quantification::Exhaustive => "exhaustive".into(),
        Quantification::Sampled { samples, seed } => format!("sampled({samples}, seed {seed})"),
    }
}

pub fn witness_json(space: &StateSpace, w: &Witness) -> Value {
    let mut v = json!({
        "event": event_json(space, w.event),
        "lhs": event_json(space, w.lhs),
        "rhs": event_json(space, w.rhs),
        "relation": relation_str(w.relation),
    });
    if let Some(f) = w.second {
        v["second_event"] = event_json(space, f);
    }
    v
}

pub fn witness_text(space: &StateSpace, w: &Witness) -> String {
    let fmt = |e| space.format_event(e);
    let inputs = match w.second {
        Some(f) => format!("E={}, F={}", fmt(w.event), fmt(f)),
        None => format!("E={}", fmt(w.event)),
    };
    format!(
        "{inputs}: {} {} {}",
        fmt(w.lhs),
        w.relation.negated_symbol(),
        fmt(w.rhs)
    )
}

pub fn report_json(space: &StateSpace, r: &PropertyReport) -> Value {
    json!({
        "property": r.property.as_str(),
        "kind": r.kind.as_str(),
        "holds": r.holds,
        "quantification": quantification_json(r.quantification),
        "witness": r.witness.as_ref().map(|w| witness_json(space, w)),
    })
}

fn table(rows: Vec<Vec<String>>) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if c + 1 < row.len() {
                let pad = widths[c] - cell.chars().count();
                line.extend(std::iter::repeat_n(' ', pad));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Renders a list of property reports.
pub fn render_reports(space: &StateSpace, reports: &[PropertyReport], format: Format) -> String {
    match format {
        Format::Structured => {
            let doc = json!({
                "format": FORMAT_VERSION,
                "reports": reports.iter().map(|r| report_json(space, r)).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
        Format::Text => {
            let mut rows = vec![vec![
                "property".to_string(),
                "kind".into(),
                "verdict".into(),
                "quantification".into(),
                "witness".into(),
            ]];
            for r in reports {
                rows.push(vec![
                    r.property.to_string(),
                    r.kind.to_string(),
                    if r.holds { "holds" } else { "FAILS" }.into(),
                    quantification_text(r.quantification),
                    r.witness
                        .as_ref()
                        .map(|w| witness_text(space, w))
                        .unwrap_or_default(),
                ]);
            }
            table(rows)
        }
    }
}

fn verdict_text(v: Verdict) -> String {
    match v {
        Verdict::BrokenAt { step } => format!("broken_at(step {step})"),
        other => other.as_str().to_string(),
    }
}

pub fn trace_json(space: &StateSpace, t: &DerivationTrace) -> Value {
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|s| {
            json!({
                "label": s.label,
                "expression": s.expression,
                "value": event_json(space, s.value),
                "relation": relation_str(s.relation),
                "status": s.status.as_str(),
            })
        })
        .collect();
    let mut doc = json!({
        "format": FORMAT_VERSION,
        "chain": t.chain.as_str(),
        "event": t.event.map(|e| event_json(space, e)),
        "steps": steps,
        "verdict": t.verdict.as_str(),
    });
    if let Verdict::BrokenAt { step } = t.verdict {
        doc["broken_at"] = json!(step);
    }
    doc
}

/// Renders a derivation trace.
pub fn render_trace(space: &StateSpace, t: &DerivationTrace, format: Format) -> String {
    match format {
        Format::Structured => format!(
            "{}\n",
            serde_json::to_string_pretty(&trace_json(space, t)).unwrap()
        ),
        Format::Text => {
            let mut out = format!("chain: {}", t.chain.as_str());
            if let Some(e) = t.event {
                out.push_str(&format!("  E = {}", space.format_event(e)));
            }
            out.push('\n');
            let rows = t
                .steps
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    vec![
                        format!("{}.", i + 1),
                        if i == 0 {
                            " ".into()
                        } else {
                            s.relation.symbol().to_string()
                        },
                        s.expression.to_string(),
                        space.format_event(s.value),
                        format!("({})", s.label),
                        if s.status.holds() { "ok" } else { "VIOLATED" }.into(),
                    ]
                })
                .collect();
            out.push_str(&table(rows));
            out.push_str(&format!("verdict: {}\n", verdict_text(t.verdict)));
            out
        }
    }
}

pub fn fixpoint_json(space: &StateSpace, t: &FixpointTrace) -> Value {
    json!({
        "terms": t.terms.iter().map(|&e| event_json(space, e)).collect::<Vec<_>>(),
        "partials": t.partials.iter().map(|&e| event_json(space, e)).collect::<Vec<_>>(),
        "cycle_start": t.cycle_start,
        "result": event_json(space, t.result),
    })
}

pub fn render_fixpoint(space: &StateSpace, t: &FixpointTrace) -> String {
    let mut rows = vec![vec!["i".to_string(), "term".into(), "partial".into()]];
    for (i, (&term, &partial)) in t.terms.iter().zip(&t.partials).enumerate() {
        rows.push(vec![
            (i + 1).to_string(),
            space.format_event(term),
            space.format_event(partial),
        ]);
    }
    let mut out = table(rows);
    out.push_str(&format!(
        "term {} repeats term {}\n",
        t.cycle_start + 1,
        t.repeats() + 1
    ));
    out
}
