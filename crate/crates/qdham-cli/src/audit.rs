//! Streaming corpus audit: every line of a graph6 file is run through the
//! requested conditions, and every conclusion is cross-checked against the
//! exact oracles. Lines are processed by a bounded worker pool; the summary
//! merge is order-independent and counterexamples keep input order.

use std::time::Instant;

use rayon::prelude::*;

use qdham_core::graph::Graph;
use qdham_core::graph6::parse_graph6;
use qdham_core::hamilton::{
    has_hamilton_cycle, has_hamilton_path, is_hamilton_connected, is_traceable_from_every_vertex,
};
use qdham_core::theorems::{check, Conclusion, Condition, Outcome};
use qdham_core::Error;

use crate::json::Json;
use crate::report::verdict_json;

#[derive(Default, Clone)]
struct OutcomeCounts {
    met: u64,
    exception: u64,
    not_met: u64,
    inapplicable: u64,
}

impl OutcomeCounts {
    fn add(&mut self, outcome: &Outcome) {
        match outcome {
            Outcome::ConditionMet { .. } => self.met += 1,
            Outcome::ExceptionGraph { .. } => self.exception += 1,
            Outcome::ConditionNotMet { .. } => self.not_met += 1,
            Outcome::Inapplicable { .. } => self.inapplicable += 1,
        }
    }

    fn json(&self) -> Json {
        Json::Obj(vec![
            ("met", Json::UInt(self.met)),
            ("exception", Json::UInt(self.exception)),
            ("not_met", Json::UInt(self.not_met)),
            ("inapplicable", Json::UInt(self.inapplicable)),
        ])
    }
}

struct LineAudit {
    outcomes: Vec<(u8, Outcome)>,
    verdict_docs: Vec<(u8, Json)>,
    counterexamples: Vec<Json>,
    oracle_skipped: u64,
}

/// Cross-check one met conclusion against the exact oracle. `None` means the
/// oracle cannot run at this order (counted, never silently trusted).
fn oracle_confirms(g: &Graph, conclusion: Conclusion) -> Result<Option<bool>, Error> {
    let result = match conclusion {
        Conclusion::Hamiltonian => has_hamilton_cycle(g),
        Conclusion::Traceable => has_hamilton_path(g),
        Conclusion::HamiltonConnected => is_hamilton_connected(g),
        Conclusion::TraceableFromEveryVertex => is_traceable_from_every_vertex(g),
    };
    match result {
        Ok(ans) => Ok(Some(ans.holds)),
        Err(Error::SizeLimit { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn audit_line(line: &str, g: &Graph, conditions: &[Condition]) -> Result<LineAudit, Error> {
    let mut out = LineAudit {
        outcomes: Vec::new(),
        verdict_docs: Vec::new(),
        counterexamples: Vec::new(),
        oracle_skipped: 0,
    };
    for &condition in conditions {
        let verdict = check(condition, g)?;
        if let Outcome::ConditionMet { conclusion } = verdict.outcome {
            match oracle_confirms(g, conclusion)? {
                Some(true) => {}
                None => out.oracle_skipped += 1,
                Some(false) => {
                    out.counterexamples.push(Json::Obj(vec![
                        ("g6", Json::Str(line.to_string())),
                        ("theorem", Json::UInt(condition.code() as u64)),
                        ("verdict", verdict_json(&verdict)),
                        ("oracle_holds", Json::Bool(false)),
                    ]));
                }
            }
        }
        out.verdict_docs.push((condition.code(), verdict_json(&verdict)));
        out.outcomes.push((condition.code(), verdict.outcome));
    }
    Ok(out)
}

pub struct AuditResult {
    pub document: Json,
    pub counterexample_count: usize,
    pub partial: bool,
}

pub fn run_audit(
    text: &str,
    conditions: &[Condition],
    limit_n: usize,
) -> AuditResult {
    let start = Instant::now();
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();

    enum LineOutcome {
        Audited(LineAudit),
        SkippedOverLimit,
        Failed(String),
    }

    let results: Vec<LineOutcome> = lines
        .par_iter()
        .map(|line| match parse_graph6(line) {
            Err(e) => LineOutcome::Failed(format!("{line}: {e}")),
            Ok(g) if g.n() > limit_n => LineOutcome::SkippedOverLimit,
            Ok(g) => match audit_line(line, &g, conditions) {
                Ok(a) => LineOutcome::Audited(a),
                Err(e) => LineOutcome::Failed(format!("{line}: {e}")),
            },
        })
        .collect();

    let mut scanned = 0u64;
    let mut skipped_over_limit = 0u64;
    let mut oracle_skipped = 0u64;
    let mut per_condition: Vec<(u8, OutcomeCounts)> = conditions
        .iter()
        .map(|c| (c.code(), OutcomeCounts::default()))
        .collect();
    let mut counterexamples: Vec<Json> = Vec::new();
    let mut failure: Option<String> = None;

    for result in results {
        match result {
            LineOutcome::Audited(audit) => {
                scanned += 1;
                oracle_skipped += audit.oracle_skipped;
                for (code, outcome) in &audit.outcomes {
                    let slot = per_condition
                        .iter_mut()
                        .find(|(c, _)| c == code)
                        .expect("condition registered");
                    slot.1.add(outcome);
                }
                counterexamples.extend(audit.counterexamples);
            }
            LineOutcome::SkippedOverLimit => skipped_over_limit += 1,
            LineOutcome::Failed(msg) => {
                failure = Some(msg);
                break;
            }
        }
    }

    let mut fields = Json::obj();
    fields.push(("lines_read", Json::UInt(lines.len() as u64)));
    fields.push(("graphs_scanned", Json::UInt(scanned)));
    fields.push((
        "skipped",
        Json::Obj(vec![("over_limit_n", Json::UInt(skipped_over_limit))]),
    ));
    fields.push(("limit_n", Json::UInt(limit_n as u64)));
    let theorems = per_condition
        .iter()
        .map(|(code, counts)| {
            Json::Obj(vec![
                ("theorem", Json::UInt(*code as u64)),
                ("outcomes", counts.json()),
            ])
        })
        .collect();
    fields.push(("theorems", Json::Arr(theorems)));
    fields.push(("oracle_skipped", Json::UInt(oracle_skipped)));
    let counterexample_count = counterexamples.len();
    fields.push(("counterexamples", Json::Arr(counterexamples)));
    if let Some(msg) = &failure {
        fields.push(("partial", Json::Bool(true)));
        fields.push(("error", Json::Str(msg.clone())));
    }
    fields.push((
        "wall_time_ms",
        Json::UInt(start.elapsed().as_millis() as u64),
    ));

    AuditResult {
        document: Json::Obj(fields),
        counterexample_count,
        partial: failure.is_some(),
    }
}
