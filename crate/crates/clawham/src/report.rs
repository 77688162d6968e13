//! Batch runners: classify, search, verify, audit, and generate over graph
//! streams, one self-contained JSON record per input graph plus an
//! aggregate. Records are merged in input order regardless of the parallel
//! schedule, so logs diff cleanly.

use crate::audit::audit_items;
use crate::classes::{class_profile, is_almost_distance_hereditary, is_distance_hereditary};
use crate::connectivity::is_k_connected;
use crate::engine::{find_hamilton_cycle, EngineOutcome, Mode};
use crate::error::{Error, Result};
use crate::fan::off_cycle_components;
use crate::g6::{emit_graph6, parse_graph6};
use crate::gen;
use crate::graph::{parse_edge_list, Graph};
use crate::oracle::{adh_oracle_with_bound, hamiltonian_oracle, longest_cycle_oracle};
use rayon::prelude::*;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: &str = "1";

/// Exit status contract: 0 clean, 1 usage, 2 parse-only failures, 3 fatal
/// invariant or counterexample.
pub const EXIT_CLEAN: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_FATAL: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Graph6,
    EdgeList,
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub format: InputFormat,
    /// Worker threads; 0 keeps the global default.
    pub jobs: usize,
    pub limit: Option<usize>,
    /// Cross-check engine outcomes against the brute-force oracle.
    pub oracle: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            format: InputFormat::Graph6,
            jobs: 0,
            limit: None,
            oracle: true,
        }
    }
}

/// Per-command report: ordered per-graph records, one aggregate record, and
/// the process exit code.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub records: Vec<Value>,
    pub aggregate: Value,
    pub exit_code: i32,
}

impl RunReport {
    pub fn write_to(&self, mut w: impl std::io::Write) -> std::io::Result<()> {
        for r in &self.records {
            writeln!(w, "{r}")?;
        }
        writeln!(w, "{}", self.aggregate)
    }
}

/// Splits raw input into records: one graph6 record per non-empty line, or
/// the whole text as a single edge-list record.
pub fn split_records(text: &str, format: InputFormat, limit: Option<usize>) -> Vec<String> {
    let mut records: Vec<String> = match format {
        InputFormat::Graph6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(str::to_owned)
            .collect(),
        InputFormat::EdgeList => vec![text.to_owned()],
    };
    if let Some(limit) = limit {
        records.truncate(limit);
    }
    records
}

fn parse_record(record: &str, format: InputFormat) -> Result<Graph> {
    match format {
        InputFormat::Graph6 => parse_graph6(record),
        InputFormat::EdgeList => parse_edge_list(record),
    }
}

/// Maps records to JSON in parallel, preserving input order.
fn map_records<F>(records: &[String], opts: &RunOptions, per_graph: F) -> Vec<Value>
where
    F: Fn(usize, &str, Result<Graph>) -> Value + Sync,
{
    let work = |records: &[String]| -> Vec<Value> {
        records
            .par_iter()
            .enumerate()
            .map(|(i, rec)| per_graph(i, rec, parse_record(rec, opts.format)))
            .collect()
    };
    if opts.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool")
            .install(|| work(records))
    } else {
        work(records)
    }
}

fn error_record(i: usize, rec: &str, e: &Error) -> Value {
    let fatal = matches!(e, Error::TheoremContradiction(_) | Error::Invariant(_));
    json!({
        "schema": SCHEMA_VERSION,
        "i": i,
        "input": rec,
        "error": e.to_string(),
        "fatal": fatal,
        "theorem_contradiction": matches!(e, Error::TheoremContradiction(_)),
    })
}

fn count_errors(records: &[Value]) -> usize {
    records.iter().filter(|r| r.get("error").is_some()).count()
}

fn any_fatal(records: &[Value]) -> bool {
    records
        .iter()
        .any(|r| r.get("fatal").and_then(Value::as_bool) == Some(true))
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// Class profile, distance-hereditary verdicts, and connectivity per graph.
pub fn run_check(records: &[String], opts: &RunOptions) -> RunReport {
    let out = map_records(records, opts, |i, rec, parsed| {
        let start = std::time::Instant::now();
        let g = match parsed {
            Ok(g) => g,
            Err(e) => return error_record(i, rec, &e),
        };
        let profile = class_profile(&g);
        let connected = g.is_connected();
        let (dh, adh) = if connected {
            (
                Some(is_distance_hereditary(&g).expect("connected")),
                Some(is_almost_distance_hereditary(&g).expect("connected")),
            )
        } else {
            (None, None)
        };
        json!({
            "schema": SCHEMA_VERSION,
            "i": i,
            "g6": emit_graph6(&g),
            "n": g.vertex_count(),
            "m": g.edge_count(),
            "profile": to_value(&profile),
            "connectivity": {
                "connected": connected,
                "two_connected": is_k_connected(&g, 2).holds,
                "three_connected": is_k_connected(&g, 3).holds,
            },
            "dh": dh.as_ref().map(to_value),
            "adh": adh.as_ref().map(to_value),
            "ms": start.elapsed().as_millis() as u64,
        })
    });
    let errors = count_errors(&out);
    let aggregate = json!({
        "schema": SCHEMA_VERSION,
        "aggregate": {"graphs": out.len(), "parse_errors": errors},
    });
    RunReport {
        exit_code: if any_fatal(&out) {
            EXIT_FATAL
        } else if errors > 0 {
            EXIT_PARSE
        } else {
            EXIT_CLEAN
        },
        records: out,
        aggregate,
    }
}

/// Engine outcome per graph; Hamilton cycles are re-validated before they
/// are emitted.
pub fn run_ham(records: &[String], mode: Mode, opts: &RunOptions) -> RunReport {
    let out = map_records(records, opts, |i, rec, parsed| {
        let start = std::time::Instant::now();
        let g = match parsed {
            Ok(g) => g,
            Err(e) => return error_record(i, rec, &e),
        };
        match find_hamilton_cycle(&g, mode) {
            Ok(outcome) => {
                if let EngineOutcome::HamiltonCycle { cycle } = &outcome {
                    assert!(
                        crate::cycle::OrientedCycle::real(&g, cycle.seq().to_vec()).is_ok(),
                        "emitted Hamilton cycle must re-validate"
                    );
                }
                json!({
                    "schema": SCHEMA_VERSION,
                    "i": i,
                    "g6": emit_graph6(&g),
                    "mode": to_value(&mode),
                    "outcome": to_value(&outcome),
                    "ms": start.elapsed().as_millis() as u64,
                })
            }
            Err(e) => error_record(i, rec, &e),
        }
    });
    let errors = count_errors(&out);
    let fatal = any_fatal(&out);
    let aggregate = json!({
        "schema": SCHEMA_VERSION,
        "aggregate": {"graphs": out.len(), "errors": errors},
    });
    RunReport {
        exit_code: if fatal {
            EXIT_FATAL
        } else if errors > 0 {
            EXIT_PARSE
        } else {
            EXIT_CLEAN
        },
        records: out,
        aggregate,
    }
}

/// Machine check of the sufficiency statements over a stream: every graph
/// satisfying the selected hypotheses must be Hamiltonian per the oracle
/// and per the engine. A counterexample is fatal.
pub fn run_verify(records: &[String], mode: Mode, opts: &RunOptions) -> RunReport {
    let out = map_records(records, opts, |i, rec, parsed| {
        let start = std::time::Instant::now();
        let g = match parsed {
            Ok(g) => g,
            Err(e) => return error_record(i, rec, &e),
        };
        if g.vertex_count() < 3 {
            return json!({
                "schema": SCHEMA_VERSION, "i": i, "g6": emit_graph6(&g),
                "applicable": false, "ms": start.elapsed().as_millis() as u64,
            });
        }
        match find_hamilton_cycle(&g, mode) {
            Ok(EngineOutcome::HypothesisViolation { hypothesis, .. }) => json!({
                "schema": SCHEMA_VERSION, "i": i, "g6": emit_graph6(&g),
                "applicable": false, "failed_hypothesis": hypothesis,
                "ms": start.elapsed().as_millis() as u64,
            }),
            Ok(outcome) => {
                let engine_ham = matches!(outcome, EngineOutcome::HamiltonCycle { .. });
                let miss = matches!(outcome, EngineOutcome::ProofCaseMiss(_));
                let oracle = opts.oracle.then(|| hamiltonian_oracle(&g).found);
                let counterexample = oracle == Some(false);
                json!({
                    "schema": SCHEMA_VERSION, "i": i, "g6": emit_graph6(&g),
                    "applicable": true,
                    "engine_hamilton": engine_ham,
                    "proof_case_miss": miss,
                    "oracle_hamilton": oracle,
                    "counterexample": counterexample,
                    "ms": start.elapsed().as_millis() as u64,
                })
            }
            Err(e) => error_record(i, rec, &e),
        }
    });
    let errors = count_errors(&out);
    let flag = |key: &str| {
        out.iter()
            .filter(|r| r.get(key).and_then(Value::as_bool) == Some(true))
            .count()
    };
    let applicable = flag("applicable");
    let hamilton = flag("engine_hamilton");
    let misses = flag("proof_case_miss");
    let counterexamples = flag("counterexample");
    let contradictions = out
        .iter()
        .filter(|r| r.get("theorem_contradiction").and_then(Value::as_bool) == Some(true))
        .count();
    let fatal = counterexamples > 0 || contradictions > 0 || any_fatal(&out);
    let aggregate = json!({
        "schema": SCHEMA_VERSION,
        "aggregate": {
            "graphs": out.len(),
            "parse_errors": errors - contradictions,
            "applicable": applicable,
            "engine_hamilton": hamilton,
            "proof_case_miss": misses,
            "counterexamples": counterexamples,
            "theorem_contradictions": contradictions,
        },
    });
    RunReport {
        exit_code: if fatal {
            EXIT_FATAL
        } else if errors > 0 {
            EXIT_PARSE
        } else {
            EXIT_CLEAN
        },
        records: out,
        aggregate,
    }
}

/// Audits longest cycles of non-Hamiltonian graphs, one report per
/// off-cycle component.
pub fn run_audit(records: &[String], opts: &RunOptions) -> RunReport {
    let out = map_records(records, opts, |i, rec, parsed| {
        let start = std::time::Instant::now();
        let g = match parsed {
            Ok(g) => g,
            Err(e) => return error_record(i, rec, &e),
        };
        let na = |reason: &str, start: std::time::Instant| {
            json!({
                "schema": SCHEMA_VERSION, "i": i, "g6": emit_graph6(&g),
                "applicable": false, "reason": reason,
                "ms": start.elapsed().as_millis() as u64,
            })
        };
        if g.vertex_count() < 3 {
            return na("fewer than 3 vertices", start);
        }
        if hamiltonian_oracle(&g).found {
            return na("hamiltonian", start);
        }
        let cycle = match longest_cycle_oracle(&g) {
            Ok(c) => c,
            Err(_) => return na("acyclic", start),
        };
        let mut reports = Vec::new();
        let mut clean = true;
        for comp in off_cycle_components(&g, &cycle) {
            match audit_items(&g, &cycle, &comp) {
                Ok(report) => {
                    clean &= report.all_hold();
                    reports.push(to_value(&report));
                }
                Err(e) => return error_record(i, rec, &e),
            }
        }
        json!({
            "schema": SCHEMA_VERSION, "i": i, "g6": emit_graph6(&g),
            "applicable": true,
            "longest_cycle": to_value(&cycle),
            "clean": clean,
            "components": reports,
            "ms": start.elapsed().as_millis() as u64,
        })
    });
    let errors = count_errors(&out);
    let audited = out
        .iter()
        .filter(|r| r.get("applicable").and_then(Value::as_bool) == Some(true))
        .count();
    let violations = out
        .iter()
        .filter(|r| r.get("clean").and_then(Value::as_bool) == Some(false))
        .count();
    let aggregate = json!({
        "schema": SCHEMA_VERSION,
        "aggregate": {
            "graphs": out.len(),
            "parse_errors": errors,
            "audited": audited,
            "graphs_with_violations": violations,
        },
    });
    RunReport {
        exit_code: if any_fatal(&out) {
            EXIT_FATAL
        } else if errors > 0 {
            EXIT_PARSE
        } else {
            EXIT_CLEAN
        },
        records: out,
        aggregate,
    }
}

/// Generator families exposed by the command line.
#[derive(Clone, Debug)]
pub enum GenFamily {
    /// Clique-join gadget on `n` vertices (even, at least 10).
    CliqueJoin {
        n: usize,
    },
    /// Seeded random graphs; seeds run from `seed` upward.
    Random {
        n: usize,
        p: f64,
        seed: u64,
        count: usize,
    },
    /// All labeled graphs on `n <= 7` vertices.
    Labeled {
        n: usize,
    },
    /// One representative per isomorphism class on `n <= 10` vertices.
    Iso {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Petersen,
}

/// Emits the requested family as graph6 records.
pub fn run_gen(family: &GenFamily) -> Result<Vec<String>> {
    Ok(match family {
        GenFamily::CliqueJoin { n } => vec![emit_graph6(&gen::clique_join_gadget(*n)?)],
        GenFamily::Random { n, p, seed, count } => {
            if !(0.0..=1.0).contains(p) {
                return Err(Error::InvalidParam(format!("probability {p} out of range")));
            }
            (0..*count)
                .map(|k| emit_graph6(&gen::gen_random(*n, *p, seed + k as u64)))
                .collect()
        }
        GenFamily::Labeled { n } => gen::enumerate_labeled(*n)?
            .map(|g| emit_graph6(&g))
            .collect(),
        GenFamily::Iso { n } => gen::enumerate_nonisomorphic(*n)?
            .iter()
            .map(emit_graph6)
            .collect(),
        GenFamily::Complete { n } => vec![emit_graph6(&gen::complete(*n))],
        GenFamily::Petersen => vec![emit_graph6(&gen::petersen())],
    })
}

/// Fast-vs-reference ADH comparison for connected graphs within the subset
/// enumeration bound; `None` when the reference cannot run.
pub fn adh_cross_check(g: &Graph, bound: usize) -> Option<bool> {
    if !g.is_connected() || g.vertex_count() > bound {
        return None;
    }
    Some(
        adh_oracle_with_bound(g, bound)
            .expect("connected and within bound")
            .holds,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{complete, cycle_graph, petersen};

    fn g6_lines(graphs: &[Graph]) -> Vec<String> {
        graphs.iter().map(emit_graph6).collect()
    }

    #[test]
    fn check_records_and_error_recovery() {
        let mut records = g6_lines(&[complete(5), cycle_graph(6)]);
        records.insert(1, "not-a-graph6-###".into());
        let report = run_check(&records, &RunOptions::default());
        assert_eq!(report.records.len(), 3);
        assert_eq!(report.exit_code, EXIT_PARSE);

        let k5 = &report.records[0];
        assert_eq!(k5["profile"]["claw_free"], true);
        assert_eq!(k5["dh"]["holds"], true);

        assert!(report.records[1]["error"].is_string());

        // The run continued past the malformed record.
        let c6 = &report.records[2];
        assert_eq!(c6["adh"]["holds"], false);
        assert_eq!(c6["i"], 2);
        assert_eq!(report.aggregate["aggregate"]["parse_errors"], 1);
    }

    #[test]
    fn ham_records() {
        let records = g6_lines(&[complete(5), petersen()]);
        let report = run_ham(&records, Mode::OneHeavy, &RunOptions::default());
        assert_eq!(report.exit_code, EXIT_CLEAN);
        assert_eq!(report.records[0]["outcome"]["kind"], "hamilton_cycle");
        assert_eq!(report.records[1]["outcome"]["kind"], "hypothesis_violation");
        assert_eq!(report.records[1]["outcome"]["hypothesis"], "1-heavy");
    }

    #[test]
    fn verify_aggregate_consistency() {
        let graphs: Vec<Graph> = crate::gen::enumerate_labeled(5).unwrap().collect();
        let records = g6_lines(&graphs);
        let report = run_verify(&records, Mode::ClawHeavy, &RunOptions::default());
        assert_eq!(report.exit_code, EXIT_CLEAN);
        let agg = &report.aggregate["aggregate"];
        assert_eq!(agg["graphs"], records.len() as u64);
        assert_eq!(agg["counterexamples"], 0);
        assert_eq!(agg["theorem_contradictions"], 0);
        assert_eq!(agg["proof_case_miss"], 0);
        // Aggregate counters equal the sums over records.
        let applicable = report
            .records
            .iter()
            .filter(|r| r["applicable"] == true)
            .count();
        assert_eq!(agg["applicable"], applicable as u64);
        let ham = report
            .records
            .iter()
            .filter(|r| r["engine_hamilton"] == true)
            .count();
        assert_eq!(agg["engine_hamilton"], ham as u64);
        assert_eq!(agg["engine_hamilton"], agg["applicable"]);
    }

    #[test]
    fn audit_records() {
        let records = g6_lines(&[petersen(), complete(4)]);
        let report = run_audit(&records, &RunOptions::default());
        assert_eq!(report.exit_code, EXIT_CLEAN);
        assert_eq!(report.records[0]["applicable"], true);
        assert_eq!(report.records[0]["clean"], true);
        assert_eq!(report.records[1]["applicable"], false);
        assert_eq!(report.records[1]["reason"], "hamiltonian");
    }

    #[test]
    fn parallel_matches_serial() {
        let graphs: Vec<Graph> = (0..40).map(|s| crate::gen::gen_random(7, 0.5, s)).collect();
        let records = g6_lines(&graphs);
        let serial = run_check(
            &records,
            &RunOptions {
                jobs: 1,
                ..Default::default()
            },
        );
        let parallel = run_check(
            &records,
            &RunOptions {
                jobs: 2,
                ..Default::default()
            },
        );
        let strip = |vals: &[Value]| -> Vec<Value> {
            vals.iter()
                .map(|v| {
                    let mut v = v.clone();
                    v.as_object_mut().unwrap().remove("ms");
                    v
                })
                .collect()
        };
        assert_eq!(strip(&serial.records), strip(&parallel.records));
    }

    #[test]
    fn gen_families() {
        let recs = run_gen(&GenFamily::CliqueJoin { n: 12 }).unwrap();
        assert_eq!(recs.len(), 1);
        let g = parse_graph6(&recs[0]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (12, 45));

        let a = run_gen(&GenFamily::Random {
            n: 10,
            p: 0.5,
            seed: 7,
            count: 2,
        })
        .unwrap();
        let b = run_gen(&GenFamily::Random {
            n: 10,
            p: 0.5,
            seed: 7,
            count: 2,
        })
        .unwrap();
        assert_eq!(a, b);

        assert_eq!(run_gen(&GenFamily::Labeled { n: 4 }).unwrap().len(), 64);
        assert_eq!(run_gen(&GenFamily::Iso { n: 5 }).unwrap().len(), 34);
        assert!(run_gen(&GenFamily::CliqueJoin { n: 9 }).is_err());
        assert!(run_gen(&GenFamily::Random {
            n: 5,
            p: 1.5,
            seed: 0,
            count: 1
        })
        .is_err());
    }

    #[test]
    fn edge_list_input() {
        let opts = RunOptions {
            format: InputFormat::EdgeList,
            ..Default::default()
        };
        let records = split_records("3\n0 1\n1 2\n2 0", InputFormat::EdgeList, None);
        let report = run_check(&records, &opts);
        assert_eq!(report.records.len(), 1);
        assert_eq!(report.records[0]["n"], 3);
        assert_eq!(report.records[0]["m"], 3);
    }
}
