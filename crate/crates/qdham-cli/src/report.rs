//! Report assembly: the per-graph JSON record and the serialization of
//! verdicts and oracle answers. Field order is fixed; identical invocations
//! must produce byte-identical documents.

use qdham_core::graph::{basic_stats, Graph};
use qdham_core::graph6::emit_graph6;
use qdham_core::hamilton::{
    has_hamilton_cycle, has_hamilton_path, has_hamilton_path_between, is_hamilton_connected,
    is_traceable_from_every_vertex, OracleAnswer,
};
use qdham_core::metric::{all_pairs_distances, is_transmission_regular, qd_matrix};
use qdham_core::spectral::{lower_bound_bipartite, lower_bound_sigma, spectral_radius};
use qdham_core::theorems::{check, Condition, Outcome, Verdict, THRESHOLD_TOL};

use crate::json::Json;
use crate::CliError;

pub fn verdict_json(v: &Verdict) -> Json {
    let mut fields = Json::obj();
    fields.push(("theorem", Json::UInt(v.condition.code() as u64)));
    let outcome = match &v.outcome {
        Outcome::ConditionMet { .. } => "condition-met",
        Outcome::ExceptionGraph { .. } => "exception-graph",
        Outcome::ConditionNotMet { .. } => "condition-not-met",
        Outcome::Inapplicable { .. } => "inapplicable",
    };
    fields.push(("outcome", Json::Str(outcome.into())));
    match &v.outcome {
        Outcome::ConditionMet { conclusion } => {
            fields.push(("conclusion", Json::Str(conclusion.as_str().into())));
        }
        Outcome::ExceptionGraph { id } => {
            fields.push(("exception", Json::Str(id.clone())));
        }
        Outcome::Inapplicable { reason } => {
            fields.push(("reason", Json::Str(reason.clone())));
        }
        Outcome::ConditionNotMet { .. } => {}
    }
    if let Some(rho) = v.evidence.rho {
        fields.push(("rho", Json::F6(rho)));
    }
    if let Some(thr) = v.evidence.threshold {
        fields.push(("threshold", Json::F6(thr)));
    }
    if let Some((num, den)) = v.evidence.threshold_exact {
        fields.push(("threshold_exact", Json::Str(format!("{num}/{den}"))));
    }
    if let Some(margin) = v.margin() {
        fields.push(("margin", Json::F6(margin)));
    }
    if v.evidence.boundary {
        fields.push(("boundary", Json::Bool(true)));
    }
    fields.push(("n", Json::UInt(v.evidence.n as u64)));
    fields.push(("m", Json::UInt(v.evidence.m)));
    fields.push(("delta", Json::UInt(v.evidence.delta as u64)));
    if let Some(t) = v.evidence.t {
        fields.push(("t", Json::UInt(t as u64)));
    }
    Json::Obj(fields)
}

pub fn run_oracle(g: &Graph, prop: &str, from: Option<usize>, to: Option<usize>) -> Result<OracleAnswer, CliError> {
    let answer = match prop {
        "ham-cycle" => has_hamilton_cycle(g),
        "ham-path" => has_hamilton_path(g),
        "ham-path-between" => {
            let (Some(u), Some(v)) = (from, to) else {
                return Err(CliError::input("ham-path-between needs --from and --to"));
            };
            has_hamilton_path_between(g, u, v)
        }
        "ham-connected" => is_hamilton_connected(g),
        "traceable-all" => is_traceable_from_every_vertex(g),
        other => {
            return Err(CliError::input(&format!(
                "unknown property '{other}' (expected ham-cycle, ham-path, \
                 ham-path-between, ham-connected, traceable-all)"
            )))
        }
    };
    answer.map_err(CliError::from_core)
}

pub fn oracle_json(prop: &str, answer: &OracleAnswer) -> Json {
    let mut fields = Json::obj();
    fields.push(("prop", Json::Str(prop.into())));
    fields.push(("holds", Json::Bool(answer.holds)));
    if let Some(w) = &answer.witness {
        fields.push((
            "witness",
            Json::Arr(w.iter().map(|&v| Json::UInt(v as u64)).collect()),
        ));
    }
    Json::Obj(fields)
}

/// The full per-graph record. `tol` is the spectral residual tolerance.
pub fn build_report(
    g: &Graph,
    tol: f64,
    theorems: &[u8],
    props: &[(String, Option<usize>, Option<usize>)],
) -> Result<Json, CliError> {
    let stats = basic_stats(g);
    if !stats.connected {
        return Err(CliError::input(
            "graph is disconnected; spectral fields need a connected graph",
        ));
    }
    let d = all_pairs_distances(g).map_err(CliError::from_core)?;
    let est = spectral_radius(&qd_matrix(&d), tol).map_err(CliError::from_core)?;

    let mut fields = Json::obj();
    fields.push(("input", Json::Str(emit_graph6(g))));
    fields.push(("n", Json::UInt(g.n() as u64)));
    fields.push(("m", Json::UInt(stats.m)));
    fields.push(("delta", Json::UInt(stats.min_degree as u64)));
    fields.push(("connected", Json::Bool(true)));
    fields.push(("bipartite", Json::Bool(stats.bipartition.is_some())));
    fields.push(("sigma", Json::UInt(d.sigma)));
    fields.push(("transmission_regular", Json::Bool(is_transmission_regular(&d))));
    fields.push(("rho", Json::F6(est.rho)));
    fields.push(("rho_residual", Json::Exp(est.residual)));
    fields.push(("iterations", Json::UInt(est.iterations as u64)));

    let mut bounds = Json::obj();
    bounds.push(("four_sigma_over_n", Json::F6(lower_bound_sigma(&d))));
    if stats.bipartition.is_some() && g.n() >= 2 {
        bounds.push((
            "bipartite",
            Json::F6(lower_bound_bipartite(g.n()).map_err(CliError::from_core)?),
        ));
    }
    fields.push(("bounds", Json::Obj(bounds)));

    let mut tolerances = Json::obj();
    tolerances.push(("spectral_residual", Json::Exp(tol)));
    tolerances.push(("threshold", Json::Exp(THRESHOLD_TOL)));
    fields.push(("tolerances", Json::Obj(tolerances)));

    if !theorems.is_empty() {
        let mut verdicts = Vec::new();
        for &code in theorems {
            let condition = Condition::from_code(code)
                .ok_or_else(|| CliError::input(&format!("unknown theorem {code}")))?;
            let v = check(condition, g).map_err(CliError::from_core)?;
            verdicts.push(verdict_json(&v));
        }
        fields.push(("verdicts", Json::Arr(verdicts)));
    }
    if !props.is_empty() {
        let mut answers = Vec::new();
        for (prop, from, to) in props {
            let answer = run_oracle(g, prop, *from, *to)?;
            answers.push(oracle_json(prop, &answer));
        }
        fields.push(("oracles", Json::Arr(answers)));
    }
    Ok(Json::Obj(fields))
}
