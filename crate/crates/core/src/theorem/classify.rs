//! Per-graph verdicts and corpus runs.

use super::{min_order, recognize_extremal, rho_star, ExtremalSpec, RADIUS_TOL};
use crate::error::{Error, Result};
use crate::factor::{decide_even_factor, Existence, FactorVerdict, DEFAULT_DIM_BUDGET, DEFAULT_SUBSET_BUDGET};
use crate::graph::{CorpusLine, Graph};
use crate::spectral::{perron_pair, Alpha};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::cell::OnceCell;
use std::io::Write;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifyOptions {
    /// `meets_bound ⇔ ρ_α(G) ≥ ρ* − eps`.
    pub eps: f64,
    pub dim_budget: usize,
    pub subset_budget: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            eps: 1e-9,
            dim_budget: DEFAULT_DIM_BUDGET,
            subset_budget: DEFAULT_SUBSET_BUDGET,
        }
    }
}

/// Outcome for one `(graph, α)` pair. Inapplicable pairs carry a
/// `skip_reason` and no spectral or factor data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub id: String,
    pub n: usize,
    pub delta: usize,
    pub alpha: f64,
    pub applicable: bool,
    pub skip_reason: Option<String>,
    pub rho_g: Option<f64>,
    pub rho_star: Option<f64>,
    pub meets_bound: bool,
    pub is_extremal: bool,
    pub factor: Option<FactorVerdict>,
    pub counterexample: bool,
}

/// `Ok(spec)` when the condition applies to `g` at `α`, otherwise the reason
/// it does not.
pub fn applicability(g: &Graph, a: Alpha) -> std::result::Result<ExtremalSpec, String> {
    let (n, delta) = (g.order(), g.min_degree());
    if a.value() >= 1.0 {
        return Err("alpha must be below 1".into());
    }
    if n == 0 || !g.is_connected() {
        return Err("graph is not connected".into());
    }
    if delta < 2 {
        return Err(format!("minimum degree {delta} < 2"));
    }
    if n % 2 == 1 {
        return Err(format!("order {n} is odd"));
    }
    let threshold = min_order(a, delta).map_err(|e| e.to_string())?;
    if (n as f64) < threshold {
        return Err(format!("order {n} below threshold {threshold}"));
    }
    ExtremalSpec::new(n, delta).map_err(|e| e.to_string())
}

pub fn classify(g: &Graph, id: &str, a: Alpha, opts: &ClassifyOptions) -> Result<VerdictRecord> {
    classify_cached(g, id, a, opts, &OnceCell::new())
}

/// `factor` memoises the α-independent even-factor verdict across calls.
fn classify_cached(
    g: &Graph,
    id: &str,
    a: Alpha,
    opts: &ClassifyOptions,
    factor: &OnceCell<FactorVerdict>,
) -> Result<VerdictRecord> {
    let mut rec = VerdictRecord {
        id: id.to_string(),
        n: g.order(),
        delta: g.min_degree(),
        alpha: a.value(),
        applicable: false,
        skip_reason: None,
        rho_g: None,
        rho_star: None,
        meets_bound: false,
        is_extremal: false,
        factor: None,
        counterexample: false,
    };
    let spec = match applicability(g, a) {
        Ok(spec) => spec,
        Err(reason) => {
            rec.skip_reason = Some(reason);
            return Ok(rec);
        }
    };
    let rho_g = perron_pair(g, a, RADIUS_TOL)?.radius;
    let rho_s = rho_star(spec, a)?;
    let verdict = factor
        .get_or_init(|| decide_even_factor(g, opts.dim_budget, opts.subset_budget))
        .clone();
    rec.applicable = true;
    rec.rho_g = Some(rho_g);
    rec.rho_star = Some(rho_s);
    rec.meets_bound = rho_g >= rho_s - opts.eps;
    rec.is_extremal = recognize_extremal(g).is_some();
    rec.counterexample = rec.meets_bound && !rec.is_extremal && verdict.exists == Existence::No;
    rec.factor = Some(verdict);
    Ok(rec)
}

/// Per-α counts over applicable records.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct AlphaSummary {
    pub alpha: f64,
    pub applicable: usize,
    pub meets_bound: usize,
    pub extremal: usize,
    pub no_factor: usize,
    pub counterexamples: usize,
    pub unknown: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusError {
    pub line: usize,
    pub id: String,
    pub message: String,
}

#[derive(Debug, Clone, Default)]
pub struct CorpusReport {
    /// Graph-major, α-minor, in input order.
    pub records: Vec<VerdictRecord>,
    pub summaries: Vec<AlphaSummary>,
    pub errors: Vec<CorpusError>,
}

impl CorpusReport {
    pub fn counterexamples(&self) -> usize {
        self.summaries.iter().map(|s| s.counterexamples).sum()
    }
}

/// Classifies every readable corpus entry at every α. Unreadable entries and
/// failed computations are reported with their line numbers and skipped.
/// Output order follows the input regardless of `jobs`.
pub fn verify_corpus(
    lines: &[CorpusLine],
    alphas: &[Alpha],
    opts: &ClassifyOptions,
    jobs: Option<usize>,
) -> Result<CorpusReport> {
    let work = || -> Vec<std::result::Result<Vec<VerdictRecord>, CorpusError>> {
        lines
            .par_iter()
            .map(|entry| {
                let fail = |message: String| CorpusError {
                    line: entry.line,
                    id: entry.text.clone(),
                    message,
                };
                let g = entry.graph.as_ref().map_err(|e| fail(e.to_string()))?;
                let cache = OnceCell::new();
                alphas
                    .iter()
                    .map(|&a| classify_cached(g, &entry.text, a, opts, &cache).map_err(|e| fail(e.to_string())))
                    .collect()
            })
            .collect()
    };
    let results = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    };

    let mut report = CorpusReport {
        summaries: alphas
            .iter()
            .map(|a| AlphaSummary {
                alpha: a.value(),
                ..Default::default()
            })
            .collect(),
        ..Default::default()
    };
    for result in results {
        match result {
            Ok(recs) => {
                for (rec, sum) in recs.iter().zip(&mut report.summaries) {
                    tally(sum, rec);
                }
                report.records.extend(recs);
            }
            Err(e) => report.errors.push(e),
        }
    }
    Ok(report)
}

fn tally(sum: &mut AlphaSummary, rec: &VerdictRecord) {
    if !rec.applicable {
        return;
    }
    let exists = rec.factor.as_ref().map(|f| f.exists);
    sum.applicable += 1;
    sum.meets_bound += rec.meets_bound as usize;
    sum.extremal += rec.is_extremal as usize;
    sum.no_factor += (exists == Some(Existence::No)) as usize;
    sum.counterexamples += rec.counterexample as usize;
    sum.unknown += (exists == Some(Existence::Unknown)) as usize;
}

/// One JSON object per line.
pub fn write_jsonl<W: Write>(records: &[VerdictRecord], mut out: W) -> std::io::Result<()> {
    for rec in records {
        serde_json::to_writer(&mut out, rec)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

/// Columns `alpha, applicable, meets_bound, extremal, no_factor,
/// counterexamples, unknown`.
pub fn write_summary_csv<W: Write>(summaries: &[AlphaSummary], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for s in summaries {
        w.serialize(s)?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{read_graph6_lines, write_graph6};
    use crate::theorem::build_extremal;

    fn alpha(v: f64) -> Alpha {
        Alpha::new(v).unwrap()
    }

    fn k8_minus_matching() -> Graph {
        let mut g = Graph::complete(8);
        for i in 0..4 {
            g.remove_edge(2 * i, 2 * i + 1);
        }
        g
    }

    #[test]
    fn extremal_graph_meets_its_own_bound() {
        let g = build_extremal(ExtremalSpec::new(8, 2).unwrap());
        let r = classify(&g, "g*", alpha(0.0), &ClassifyOptions::default()).unwrap();
        assert!(r.applicable && r.meets_bound && r.is_extremal && !r.counterexample);
        assert!((r.rho_g.unwrap() - r.rho_star.unwrap()).abs() < 1e-9);
    }

    #[test]
    fn cycle_falls_short() {
        let r = classify(&Graph::cycle(8), "c8", alpha(0.0), &ClassifyOptions::default()).unwrap();
        assert!(r.applicable);
        assert!((r.rho_g.unwrap() - 2.0).abs() < 1e-10);
        assert!(r.rho_star.unwrap() > 6.0);
        assert!(!r.meets_bound && !r.counterexample);
        assert_eq!(r.factor.unwrap().exists, Existence::Yes);
    }

    #[test]
    fn dense_graph_is_below_its_own_threshold() {
        // δ = 6 puts the threshold at 35
        let g = k8_minus_matching();
        let r = classify(&g, "k8-m", alpha(0.5), &ClassifyOptions::default()).unwrap();
        assert!(!r.applicable && !r.counterexample);
        assert_eq!(r.skip_reason.as_deref(), Some("order 8 below threshold 35"));
        let f = decide_even_factor(&g, DEFAULT_DIM_BUDGET, DEFAULT_SUBSET_BUDGET);
        assert_eq!(f.exists, Existence::Yes);
    }

    #[test]
    fn skip_reasons() {
        let opts = ClassifyOptions::default();
        let cases = [
            (Graph::cycle(6), 0.0, "order 6 below threshold 7"),
            (Graph::path(8), 0.0, "minimum degree 1 < 2"),
            (Graph::cycle(9), 0.0, "order 9 is odd"),
            (Graph::empty(8), 0.0, "graph is not connected"),
            (Graph::cycle(8), 1.0, "alpha must be below 1"),
        ];
        for (g, a, reason) in cases {
            let r = classify(&g, "x", alpha(a), &opts).unwrap();
            assert!(!r.applicable);
            assert_eq!(r.skip_reason.as_deref(), Some(reason));
            assert!(r.factor.is_none() && r.rho_g.is_none());
        }
    }

    #[test]
    fn corpus_run_is_ordered_and_counts() {
        let graphs = [Graph::cycle(8), k8_minus_matching(), build_extremal(ExtremalSpec::new(8, 2).unwrap())];
        let mut text = Vec::new();
        for g in &graphs {
            text.extend(write_graph6(g).unwrap());
            text.push(b'\n');
        }
        text.extend(b"G?\n\nC~\n");
        let lines = read_graph6_lines(&text);
        let alphas = [alpha(0.0), alpha(0.5), alpha(0.9)];
        let opts = ClassifyOptions::default();
        let serial = verify_corpus(&lines, &alphas, &opts, Some(1)).unwrap();
        let parallel = verify_corpus(&lines, &alphas, &opts, Some(4)).unwrap();
        assert_eq!(serial.records, parallel.records);
        assert_eq!(serial.records.len(), 4 * 3);
        assert_eq!(serial.errors.len(), 1);
        assert_eq!(serial.errors[0].line, 4);
        assert_eq!(serial.counterexamples(), 0);
        // at α = 0.9 the threshold is 30
        assert_eq!(serial.summaries[2].applicable, 0);
        assert_eq!(serial.summaries[0].applicable, 2);
        assert_eq!(serial.summaries[0].meets_bound, 1);
        assert_eq!(serial.summaries[0].extremal, 1);

        let mut jsonl = Vec::new();
        write_jsonl(&serial.records, &mut jsonl).unwrap();
        let first: VerdictRecord = serde_json::from_slice(jsonl.split(|&b| b == b'\n').next().unwrap()).unwrap();
        assert_eq!(first, serial.records[0]);
        let mut csv_out = Vec::new();
        write_summary_csv(&serial.summaries, &mut csv_out).unwrap();
        let csv_text = String::from_utf8(csv_out).unwrap();
        assert_eq!(
            csv_text.lines().next().unwrap(),
            "alpha,applicable,meets_bound,extremal,no_factor,counterexamples,unknown"
        );
        assert_eq!(csv_text.lines().count(), 4);
    }
}
