//! Reproducible checks of the known tessellation numbers and family sweeps
//! comparing `T(G)` with `χ(K(G))`.

use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::cliques::{clique_graph, maximal_cliques};
use crate::coloring::chromatic_number;
use crate::cover::{
    decide_k_tessellable, decide_k_tessellable_with, greedy_cover, tessellation_number,
    tessellation_number_with, SolveOptions,
};
use crate::error::{GraphError, SolveError};
use crate::families::{self, Family, FamilySpec};
use crate::graph::Graph;
use crate::par::{self, Execution};
use crate::tessellation::{
    edge_set, is_valid_cover, validate_tessellation, Tessellation, TessellationCover,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

/// Outcome of one check. `expected` and `observed` list the same facts in
/// the same order, and the check passes exactly when they are equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub instance: String,
    pub expected: String,
    pub observed: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
}

#[derive(Default)]
struct Facts {
    expected: Vec<String>,
    observed: Vec<String>,
    details: Vec<String>,
}

impl Facts {
    fn add(&mut self, name: &str, expected: impl ToString, observed: impl ToString) {
        self.expected
            .push(format!("{name}={}", expected.to_string()));
        self.observed
            .push(format!("{name}={}", observed.to_string()));
    }

    fn report(self, check_id: String, instance: String) -> VerificationReport {
        let expected = self.expected.join("; ");
        let observed = self.observed.join("; ");
        let status = if expected == observed {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            check_id,
            instance,
            expected,
            observed,
            status,
            details: self.details,
        }
    }
}

fn show_edges(edges: &[(usize, usize)]) -> String {
    if edges.is_empty() {
        return "none".into();
    }
    edges
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn answer(c: &Option<TessellationCover>) -> String {
    match c {
        None => "none".into(),
        Some(c) => format!("cover of size {}", c.len()),
    }
}

/// The three-tessellation cover of the wheel `W_6` used as a fixture.
pub fn w6_fixture() -> TessellationCover {
    TessellationCover::new(vec![
        Tessellation::new(vec![vec![0], vec![3], vec![1, 2], vec![4, 5, 6]]),
        Tessellation::new(vec![vec![1], vec![4], vec![0, 5], vec![2, 3, 6]]),
        Tessellation::new(vec![vec![2], vec![5], vec![3, 4], vec![0, 1, 6]]),
    ])
}

pub fn verify_w6() -> VerificationReport {
    verify_w6_with(&w6_fixture())
}

/// Checks `fixture` as a cover of `W_6`, together with the exact value
/// `T(W_6) = 3`, the failed 2-decision and the local bound at the hub.
pub fn verify_w6_with(fixture: &TessellationCover) -> VerificationReport {
    let g = families::wheel(6).expect("W6 is a valid wheel");
    let mut facts = Facts::default();

    let invalid: Vec<usize> = fixture
        .tessellations
        .iter()
        .enumerate()
        .filter(|(_, t)| validate_tessellation(&g, t).is_err())
        .map(|(i, _)| i)
        .collect();
    facts.add(
        "invalid_tessellations",
        "none",
        if invalid.is_empty() {
            "none".into()
        } else {
            format!("{invalid:?}")
        },
    );
    let uncovered = match is_valid_cover(&g, fixture) {
        Ok(()) => Vec::new(),
        Err(d) => d.uncovered,
    };
    facts.add("uncovered_edges", "none", show_edges(&uncovered));
    facts.add("fixture_size", 3, fixture.len());
    facts.add("decide_k2", "none", answer(&decide_k_tessellable(&g, 2)));
    let t = tessellation_number(&g).map(|r| r.t_number.to_string());
    facts.add("T", 3, t.unwrap_or_else(|e| e.to_string()));
    let hub = 6;
    let omega = g.local_clique_numbers()[hub];
    facts.add("hub_local_bound", 3, g.degree(hub).div_ceil(omega - 1));
    facts.report("w6".into(), "wheel(6)".into())
}

/// `T_r` for `r = 0, 1, 2`: the clique of rim vertices `≡ r (mod 3)` with the
/// hub, plus the rim edges `{3i+1+r, 3i+2+r}` taken mod `3n`.
pub fn e3n_fixture(n: usize) -> TessellationCover {
    let m = 3 * n;
    TessellationCover::new(
        (0..3)
            .map(|r| {
                let class: Vec<usize> = (r..m).step_by(3).chain([m]).collect();
                let pairs = (0..n).map(|i| vec![(3 * i + 1 + r) % m, (3 * i + 2 + r) % m]);
                Tessellation::new(std::iter::once(class).chain(pairs))
            })
            .collect(),
    )
}

pub fn verify_e3n(n: usize) -> Result<VerificationReport, GraphError> {
    let g = families::extended_wheel(n)?;
    let fixture = e3n_fixture(n);
    Ok(verify_e3n_with(n, &g, &fixture))
}

fn verify_e3n_with(n: usize, g: &Graph, fixture: &TessellationCover) -> VerificationReport {
    let hub = 3 * n;
    let mut facts = Facts::default();
    let cliques = maximal_cliques(g);
    facts.add("maximal_cliques", 3 * n + 3, cliques.len());
    facts.add(
        "cliques_through_hub",
        3 * n + 3,
        cliques.iter().filter(|c| c.contains(hub)).count(),
    );
    let mut sizes: Vec<usize> = cliques.iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    let mut expected_sizes = vec![3; 3 * n];
    expected_sizes.extend([n + 1; 3]);
    expected_sizes.sort_unstable();
    facts.add(
        "clique_sizes",
        format!("{expected_sizes:?}"),
        format!("{sizes:?}"),
    );
    facts.add("edges", 3 * n * (n + 3) / 2, g.edge_count());

    let sets: Vec<_> = fixture
        .tessellations
        .iter()
        .map(|t| edge_set(g, t))
        .collect();
    let invalid: Vec<usize> = (0..sets.len()).filter(|&i| sets[i].is_err()).collect();
    facts.add("invalid_tessellations", "[]", format!("{invalid:?}"));
    let sets: Vec<_> = sets.into_iter().map(Result::unwrap_or_default).collect();
    let counts: Vec<usize> = sets.iter().map(|s| s.len()).collect();
    facts.add(
        "edges_per_tessellation",
        format!("{:?}", [n * (n + 3) / 2; 3]),
        format!("{counts:?}"),
    );
    let mut shared = Vec::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            shared.extend(sets[i].intersection(&sets[j]).copied());
        }
    }
    shared.sort_unstable();
    facts.add("shared_edges", "none", show_edges(&shared));
    let uncovered = match is_valid_cover(g, fixture) {
        Ok(()) => Vec::new(),
        Err(d) => d.uncovered,
    };
    facts.add("uncovered_edges", "none", show_edges(&uncovered));

    let chi = clique_graph(g).map(|k| chromatic_number(&k.base).0);
    facts.add(
        "chi_K",
        3 * n + 3,
        chi.map(|c| c.to_string()).unwrap_or_else(|e| e.to_string()),
    );
    let t = tessellation_number(g).map(|r| r.t_number.to_string());
    facts.add("T", 3, t.unwrap_or_else(|e| e.to_string()));
    facts.report(format!("e3n-{n}"), format!("extended_wheel({n})"))
}

pub fn verify_windmill(blades: usize, blade: usize) -> Result<VerificationReport, GraphError> {
    if blades < 2 || blade < 2 {
        return Err(GraphError::InvalidParameters {
            family: "windmill",
            reason: format!("the check needs at least 2 blades of size 2, got ({blades},{blade})"),
        });
    }
    let g = families::windmill(blades, blade)?;
    let mut facts = Facts::default();
    let k = clique_graph(&g)?.base;
    let complete = k.edge_count() == k.n() * k.n().saturating_sub(1) / 2;
    facts.add(
        "K",
        format!("complete({blades})"),
        if complete {
            format!("complete({})", k.n())
        } else {
            format!("{} vertices, {} edges", k.n(), k.edge_count())
        },
    );
    facts.add("chi_K", blades, chromatic_number(&k).0);
    let show = |r: Result<crate::cover::CoverResult, SolveError>| match r {
        Ok(r) => r.t_number.to_string(),
        Err(e) => e.to_string(),
    };
    facts.add("T", blades, show(tessellation_number(&g)));
    facts.add("greedy", blades, show(greedy_cover(&g)));
    Ok(facts.report(
        format!("windmill-{blades}-{blade}"),
        format!("windmill({blades},{blade})"),
    ))
}

/// Identifiers accepted by [`run_check`], in report order.
pub fn check_ids() -> Vec<String> {
    let mut ids: Vec<String> = ["w6".to_string()]
        .into_iter()
        .chain((2..=4).map(|n| format!("e3n-{n}")))
        .chain((2..=6).map(|l| format!("windmill-{l}-3")))
        .chain(["windmill-2-2".into(), "windmill-3-4".into()])
        .collect();
    ids.sort();
    ids
}

/// Runs a check by id: `w6`, `e3n-<n>` or `windmill-<l>-<s>`. Parameterised
/// ids accept any parameters, not only those listed by [`check_ids`].
pub fn run_check(id: &str) -> Option<Result<VerificationReport, GraphError>> {
    if id == "w6" {
        return Some(Ok(verify_w6()));
    }
    let parts: Vec<&str> = id.split('-').collect();
    let num = |s: &str| s.parse::<usize>().ok();
    match parts.as_slice() {
        ["e3n", n] => Some(verify_e3n(num(n)?)),
        ["windmill", l, s] => Some(verify_windmill(num(l)?, num(s)?)),
        _ => None,
    }
}

/// Every listed check, run concurrently and reported in `check_id` order.
pub fn run_all_checks(exec: Execution) -> Vec<VerificationReport> {
    let ids = check_ids();
    let mut reports: Vec<_> = par::map(exec, &ids, |id| {
        run_check(id)
            .expect("listed ids are valid")
            .expect("listed parameters are valid")
    });
    reports.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    reports
}

/// Instances the exact solver is expected to handle quickly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Envelope {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for Envelope {
    fn default() -> Self {
        Envelope {
            max_vertices: 25,
            max_edges: 60,
        }
    }
}

impl Envelope {
    pub fn contains(&self, g: &Graph) -> bool {
        g.n() <= self.max_vertices && g.edge_count() <= self.max_edges
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Ok,
    Fail,
    Skipped,
    OutOfScope,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub graph: String,
    pub n: Option<usize>,
    pub edges: Option<usize>,
    pub t_number: Option<usize>,
    pub chi_k: Option<usize>,
    pub ratio: Option<String>,
    pub status: RowStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl SweepRow {
    fn blank(graph: String, status: RowStatus, note: String) -> Self {
        SweepRow {
            graph,
            n: None,
            edges: None,
            t_number: None,
            chi_k: None,
            ratio: None,
            status,
            note: Some(note),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub execution: Execution,
    pub envelope: Envelope,
    pub row_timeout: Option<Duration>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            execution: Execution::Parallel,
            envelope: Envelope::default(),
            row_timeout: Some(Duration::from_secs(60)),
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `t / chi` in lowest terms.
pub fn ratio(t: usize, chi: usize) -> String {
    match gcd(t, chi) {
        0 => "0/0".into(),
        d => format!("{}/{}", t / d, chi / d),
    }
}

pub fn sweep(specs: &[FamilySpec]) -> Vec<SweepRow> {
    sweep_with(specs, &SweepOptions::default())
}

/// One row per spec, in input order. Each `T` comes from the exact solver
/// and is re-checked: the witness must be a valid cover and the decision at
/// `T - 1` must fail.
pub fn sweep_with(specs: &[FamilySpec], opts: &SweepOptions) -> Vec<SweepRow> {
    par::map(opts.execution, specs, |spec| sweep_row(spec, opts))
}

fn sweep_row(spec: &FamilySpec, opts: &SweepOptions) -> SweepRow {
    let label = spec.label();
    let g = match spec.generate() {
        Ok(g) => g,
        Err(e) => return SweepRow::blank(label, RowStatus::Skipped, e.to_string()),
    };
    let mut row = SweepRow {
        graph: label,
        n: Some(g.n()),
        edges: Some(g.edge_count()),
        t_number: None,
        chi_k: None,
        ratio: None,
        status: RowStatus::Skipped,
        note: None,
    };
    if !opts.envelope.contains(&g) {
        row.note = Some(format!(
            "outside the exact-solver envelope (n <= {}, m <= {})",
            opts.envelope.max_vertices, opts.envelope.max_edges
        ));
        return row;
    }
    let chi = match clique_graph(&g) {
        Ok(k) => chromatic_number(&k.base).0,
        Err(e) => {
            row.note = Some(format!("clique graph: {e}"));
            return row;
        }
    };
    row.chi_k = Some(chi);
    let mut solve = SolveOptions::default().with_execution(opts.execution);
    if let Some(limit) = opts.row_timeout {
        solve = solve.with_timeout(limit);
    }
    let result = match tessellation_number_with(&g, &solve) {
        Ok(r) => r,
        Err(e) => {
            row.note = Some(e.to_string());
            return row;
        }
    };
    let t = result.t_number;
    row.t_number = Some(t);
    row.ratio = Some(ratio(t, chi));
    let below = if t == 0 {
        Ok(None)
    } else {
        decide_k_tessellable_with(&g, t - 1, &solve)
    };
    row.status = match (is_valid_cover(&g, &result.witness), below) {
        (Ok(()), Ok(None)) => RowStatus::Ok,
        (Err(d), _) => {
            row.note = Some(format!("invalid witness: {d}"));
            RowStatus::Fail
        }
        (_, Ok(Some(_))) => {
            row.note = Some(format!("a cover with {} tessellations exists", t - 1));
            RowStatus::Fail
        }
        (_, Err(e)) => {
            row.note = Some(format!("re-check at T - 1: {e}"));
            RowStatus::Skipped
        }
    };
    row
}

/// Classes known only from drawings, listed so the report shows what is not
/// reproduced.
pub fn out_of_scope_rows() -> Vec<SweepRow> {
    [
        ("class with T/chi(K) = 1/3", "example contains W6 as a spanning subgraph, K = K9, T = 3; the class is defined only by a drawing"),
        ("class with T/chi(K) = 1/4", "examples contain W12 and W16 as spanning subgraphs, K = K24 and K32, T = 6 and 8; defined only by a drawing"),
        ("class with T = sqrt(chi(K))", "example contains W10 as a spanning subgraph, K = K25, T = 5; defined only by a drawing"),
        ("graph with T = 4 and chi(K) = 30", "defined only by a drawing"),
    ]
    .into_iter()
    .map(|(g, note)| SweepRow::blank(g.into(), RowStatus::OutOfScope, note.into()))
    .collect()
}

/// Parses `family:range` where range is `a`, `a..b` or `a..=b` (both
/// inclusive). Windmills take an optional blade size, `windmill/4:2..5`;
/// the default is 3. `petersen` needs no range.
pub fn parse_sweep_spec(s: &str) -> Result<Vec<FamilySpec>, String> {
    let (head, range) = match s.split_once(':') {
        Some((h, r)) => (h, Some(r)),
        None => (s, None),
    };
    let (name, blade) = match head.split_once('/') {
        Some((n, b)) => (
            n,
            Some(
                b.parse::<usize>()
                    .map_err(|_| format!("bad blade size `{b}`"))?,
            ),
        ),
        None => (head, None),
    };
    let family: Family = name.parse()?;
    if blade.is_some() && family != Family::Windmill {
        return Err(format!("only windmills take a blade size, not {family}"));
    }
    if family == Family::Petersen {
        return Ok(vec![FamilySpec::petersen()]);
    }
    let range = range.ok_or_else(|| format!("`{s}` needs a size range, e.g. {name}:3..8"))?;
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad size `{t}`"))
    };
    let (lo, hi) = match range.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(range)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo..=hi)
        .map(|n| FamilySpec {
            blade: blade.unwrap_or(3),
            ..FamilySpec::sized(family, n)
        })
        .collect())
}

pub fn render_reports(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Unknown => "UNKNOWN",
        };
        let _ = writeln!(out, "{status:<8}{:<16}{}", r.check_id, r.instance);
        if r.status != Status::Pass {
            let _ = writeln!(out, "        expected: {}", r.expected);
            let _ = writeln!(out, "        observed: {}", r.observed);
        }
        for d in &r.details {
            let _ = writeln!(out, "        {d}");
        }
    }
    out
}

pub fn render_sweep(rows: &[SweepRow]) -> String {
    let cell = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
    let mut out = format!(
        "{:<34}{:>5}{:>6}{:>5}{:>7}{:>8}  {}\n",
        "graph", "n", "m", "T", "chi(K)", "ratio", "status"
    );
    for r in rows {
        let status = match r.status {
            RowStatus::Ok => "ok",
            RowStatus::Fail => "FAIL",
            RowStatus::Skipped => "skipped",
            RowStatus::OutOfScope => "out of scope",
        };
        let _ = write!(
            out,
            "{:<34}{:>5}{:>6}{:>5}{:>7}{:>8}  {status}",
            r.graph,
            cell(r.n),
            cell(r.edges),
            cell(r.t_number),
            cell(r.chi_k),
            r.ratio.as_deref().unwrap_or("-")
        );
        if let Some(note) = &r.note {
            let _ = write!(out, " ({note})");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w6_passes_and_mutation_fails() {
        let r = verify_w6();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert!(r.observed.contains("T=3"));
        assert!(r.observed.contains("hub_local_bound=3"));

        let mut broken = w6_fixture();
        broken.tessellations[0] = Tessellation::new(vec![
            vec![0],
            vec![3],
            vec![1, 2],
            vec![4],
            vec![5],
            vec![6],
        ]);
        let r = verify_w6_with(&broken);
        assert_eq!(r.status, Status::Fail);
        assert!(
            r.observed.contains("uncovered_edges=4-5,4-6,5-6"),
            "{}",
            r.observed
        );
    }

    #[test]
    fn e3n_checks() {
        for n in 2..=4 {
            let r = verify_e3n(n).unwrap();
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
        let r = verify_e3n(4).unwrap();
        assert!(r.observed.contains("maximal_cliques=15"));
        assert!(r
            .observed
            .contains("clique_sizes=[3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 5, 5, 5]"));
        assert!(verify_e3n(3)
            .unwrap()
            .observed
            .contains("edges_per_tessellation=[9, 9, 9]"));
        assert!(verify_e3n(1).is_err());
    }

    #[test]
    fn e3n_fixture_mutation_is_caught() {
        let g = families::extended_wheel(3).unwrap();
        let mut f = e3n_fixture(3);
        f.tessellations.pop();
        assert_eq!(verify_e3n_with(3, &g, &f).status, Status::Fail);
    }

    #[test]
    fn windmills() {
        for (l, s) in [(5, 3), (2, 2), (3, 4)] {
            let r = verify_windmill(l, s).unwrap();
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
        assert!(verify_windmill(1, 3).is_err());
    }

    #[test]
    fn check_registry() {
        let ids = check_ids();
        assert!(ids.windows(2).all(|w| w[0] < w[1]));
        assert!(run_check("nope").is_none());
        assert!(run_check("e3n-x").is_none());
        assert_eq!(run_check("e3n-2").unwrap().unwrap().check_id, "e3n-2");
    }

    #[test]
    fn sweep_rows() {
        let rows = sweep(&[
            FamilySpec::wheel(6),
            FamilySpec::extended_wheel(4),
            FamilySpec::complete(5),
        ]);
        let got: Vec<_> = rows
            .iter()
            .map(|r| (r.t_number, r.chi_k, r.ratio.clone(), r.status))
            .collect();
        assert_eq!(
            got,
            vec![
                (Some(3), Some(6), Some("1/2".into()), RowStatus::Ok),
                (Some(3), Some(15), Some("1/5".into()), RowStatus::Ok),
                (Some(1), Some(1), Some("1/1".into()), RowStatus::Ok),
            ]
        );
        let skipped = sweep(&[FamilySpec::complete(30)]);
        assert_eq!(skipped[0].status, RowStatus::Skipped);
        let bad = sweep(&[FamilySpec::wheel(2)]);
        assert_eq!(bad[0].status, RowStatus::Skipped);
        assert!(out_of_scope_rows()
            .iter()
            .all(|r| r.status == RowStatus::OutOfScope));
        assert!(render_sweep(&rows).contains("1/2"));
    }

    #[test]
    fn sweep_specs() {
        assert_eq!(parse_sweep_spec("wheel:3..5").unwrap().len(), 3);
        assert_eq!(parse_sweep_spec("wheel:3..=5").unwrap().len(), 3);
        assert_eq!(
            parse_sweep_spec("e3n:2").unwrap(),
            vec![FamilySpec::extended_wheel(2)]
        );
        assert_eq!(
            parse_sweep_spec("windmill/4:2..3").unwrap()[1],
            FamilySpec::windmill(3, 4)
        );
        assert_eq!(
            parse_sweep_spec("petersen").unwrap(),
            vec![FamilySpec::petersen()]
        );
        assert!(parse_sweep_spec("wheel").is_err());
        assert!(parse_sweep_spec("wheel:5..3").is_err());
        assert!(parse_sweep_spec("wheel/4:3").is_err());
        assert!(parse_sweep_spec("blob:3").is_err());
    }

    #[test]
    fn ratios() {
        assert_eq!(ratio(3, 6), "1/2");
        assert_eq!(ratio(4, 30), "2/15");
        assert_eq!(ratio(0, 0), "0/0");
    }
}
