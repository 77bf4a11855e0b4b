//! The bundled corpus: named presentations, homomorphisms between them and
//! the invariants each is expected to have.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::citations;
use crate::homcheck::{check_abelianized, check_rational_two_connected, consequence_report};
use crate::laurent::{abelianization, alexander_data};
use crate::presentations::{parse_hom_file, parse_presentation, GroupHom, Presentation};
use crate::series::{level_rank, stabilization};

/// Presentation files by name, sorted.
pub const PRESENTATIONS: &[(&str, &str)] = &[
    ("cyclic3", include_str!("../../corpus/cyclic3.pres")),
    ("figure8", include_str!("../../corpus/figure8.pres")),
    ("free-tz", include_str!("../../corpus/free-tz.pres")),
    ("free2", include_str!("../../corpus/free2.pres")),
    ("free3", include_str!("../../corpus/free3.pres")),
    ("heisenberg", include_str!("../../corpus/heisenberg.pres")),
    ("nonfg-trunc-3", include_str!("../../corpus/nonfg-trunc-3.pres")),
    ("noniso-E", include_str!("../../corpus/noniso-E.pres")),
    ("trefoil", include_str!("../../corpus/trefoil.pres")),
    ("unknot", include_str!("../../corpus/unknot.pres")),
    ("z", include_str!("../../corpus/z.pres")),
];

/// Homomorphism files by name, sorted.
pub const MAPS: &[(&str, &str)] = &[
    ("broken", include_str!("../../corpus/broken.map")),
    ("doubling", include_str!("../../corpus/doubling.map")),
    ("noniso", include_str!("../../corpus/noniso.map")),
    ("trefoil-ab", include_str!("../../corpus/trefoil-ab.map")),
];

pub fn presentation_text(name: &str) -> Option<&'static str> {
    PRESENTATIONS.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn presentation(name: &str) -> Option<Presentation> {
    presentation_text(name).map(|t| parse_presentation(t).expect("corpus presentation parses"))
}

/// A corpus map with its endpoints resolved, plus the `assert onto` flag.
pub fn map(name: &str) -> Option<(GroupHom, bool)> {
    let text = MAPS.iter().find(|(n, _)| *n == name)?.1;
    let file = parse_hom_file(text).expect("corpus map parses");
    let source = presentation(&file.from)?;
    let target = presentation(&file.to)?;
    let h = file.resolve(&source, &target).expect("corpus map resolves");
    Some((h, file.assert_onto))
}

/// Where an expected value comes from: a value worked out from the
/// mathematics independently of this crate, or one computed by an
/// independent routine and frozen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Reference,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub invariant: &'static str,
    pub value: &'static str,
    pub source: Source,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub expected: Vec<Expected>,
    pub citations: Vec<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

const fn r(invariant: &'static str, value: &'static str) -> Expected {
    Expected { invariant, value, source: Source::Reference }
}

const fn o(invariant: &'static str, value: &'static str) -> Expected {
    Expected { invariant, value, source: Source::Oracle }
}

pub const ENTRY_NAMES: &[&str] =
    &["cyclic3", "figure8", "free2", "free3", "heisenberg", "nonfg-trunc-3", "noniso-E", "trefoil", "unknot"];

pub fn entries() -> Vec<CorpusEntry> {
    use citations::*;
    let entry = |name, expected, cites: &[&'static str], note| CorpusEntry {
        name,
        expected,
        citations: normalize(cites.iter().copied()),
        note,
    };
    vec![
        entry(
            "cyclic3",
            vec![r("beta1", "0"), o("torsion", "3"), r("r1", "0"), r("r2", "0"), r("stabilized_at", "0")],
            &[FINITE_ABELIANIZATION, STABILIZATION],
            None,
        ),
        entry(
            "figure8",
            vec![
                r("beta1", "1"),
                r("r1", "0"),
                r("r2", "0"),
                r("stabilized_at", "1"),
                o("alexander", "1 - 3*t + t^2"),
            ],
            &[TORSION_ALEXANDER_MODULE, STABILIZATION],
            None,
        ),
        entry(
            "free2",
            vec![r("beta1", "2"), r("r1", "1"), r("r2", "1"), r("stabilized_at", "none")],
            &[FREE_GROUP_RANKS],
            None,
        ),
        entry(
            "free3",
            vec![r("beta1", "3"), r("r1", "2"), r("r2", "2"), r("stabilized_at", "none")],
            &[FREE_GROUP_RANKS],
            None,
        ),
        entry(
            "heisenberg",
            vec![r("beta1", "2"), o("torsion", "none"), r("r1", "0"), r("r2", "0"), r("stabilized_at", "1")],
            &[STABILIZATION],
            None,
        ),
        entry(
            "nonfg-trunc-3",
            vec![r("beta1", "2"), r("r1", "1"), r("r2", "1"), r("stabilized_at", "none")],
            &[TRUNCATION, FREE_GROUP_RANKS],
            Some("finite truncation of an infinitely generated group: it approximates the example but does not realize it, and is free of rank 2 after eliminating w1, w2"),
        ),
        entry(
            "noniso-E",
            vec![r("beta1", "2"), r("r1", "1"), o("r2", "1"), r("stabilized_at", "none")],
            &[INJECTIVITY],
            None,
        ),
        entry(
            "trefoil",
            vec![
                r("beta1", "1"),
                r("r1", "0"),
                r("r2", "0"),
                r("stabilized_at", "1"),
                o("alexander", "1 - t + t^2"),
            ],
            &[TORSION_ALEXANDER_MODULE, STABILIZATION],
            None,
        ),
        entry(
            "unknot",
            vec![r("beta1", "1"), r("r1", "0"), r("r2", "0"), r("stabilized_at", "1"), o("alexander", "1")],
            &[FREE_GROUP_RANKS, STABILIZATION],
            None,
        ),
    ]
}

/// Expected results for the corpus maps.
pub fn map_expectations() -> Vec<(&'static str, Vec<Expected>)> {
    vec![
        ("broken", vec![r("error", "not-homomorphism-on-h1")]),
        (
            "doubling",
            vec![
                r("h1_iso", "true"),
                r("integral_free_part_iso", "false"),
                r("h2_epi", "certified-by-target-vanishing"),
                r("r1", "0 = 0"),
                r("r2", "0 = 0"),
            ],
        ),
        (
            "noniso",
            vec![
                r("h1_iso", "true"),
                r("integral_free_part_iso", "true"),
                r("h2_epi", "certified-by-target-vanishing"),
                r("r1", "1 = 1"),
                o("r2", "1 = 1"),
            ],
        ),
        (
            "trefoil-ab",
            vec![
                r("h1_iso", "true"),
                r("integral_free_part_iso", "true"),
                r("h2_epi", "certified-by-target-vanishing"),
                r("r1", "0 = 0"),
                r("r2", "0 = 0"),
                r("onto_claim", "trefoil/trefoil^(n)_H = Z"),
            ],
        ),
    ]
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

/// The invariants of a presentation that corpus entries can pin down.
pub fn presentation_invariants(p: &Presentation) -> BTreeMap<&'static str, String> {
    let ab = abelianization(p);
    let mut out = BTreeMap::new();
    out.insert("beta1", ab.b.to_string());
    let torsion: Vec<String> = ab.torsion.iter().map(ToString::to_string).collect();
    out.insert("torsion", if torsion.is_empty() { "none".to_string() } else { torsion.join(",") });
    for n in 1..=2 {
        let key = if n == 1 { "r1" } else { "r2" };
        let v = match level_rank(p, n) {
            Ok(l) => l.rank.to_string(),
            Err(u) => format!("unsupported:{}", u.reason.code()),
        };
        out.insert(key, v);
    }
    out.insert("stabilized_at", opt(stabilization(p).stabilized_at));
    if ab.b == 1 {
        if let Ok(a) = alexander_data(p) {
            out.insert("alexander", a.delta.to_string());
        }
    }
    out
}

/// The invariants of a corpus map, or its error code.
pub fn map_invariants(h: &GroupHom, assert_onto: bool) -> BTreeMap<&'static str, String> {
    let mut out = BTreeMap::new();
    if check_abelianized(h).is_err() {
        out.insert("error", "not-homomorphism-on-h1".to_string());
        return out;
    }
    let mut v = check_rational_two_connected(h);
    if assert_onto {
        v = v.with_onto_assertion(h);
    }
    out.insert("h1_iso", v.h1_iso.to_string());
    out.insert("integral_free_part_iso", v.h1.integral_free_part_iso.to_string());
    out.insert("h2_epi", v.h2_epi.code().to_string());
    let report = consequence_report(h, &v);
    for c in &report.ranks {
        let key = if c.level == 1 { "r1" } else { "r2" };
        out.insert(key, format!("{} = {}", opt(c.source), opt(c.target)));
    }
    if let Some(c) = report.claims.iter().find(|c| c.citation == citations::STABILIZATION) {
        out.insert("onto_claim", c.statement.clone());
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub invariant: &'static str,
    pub expected: &'static str,
    pub actual: String,
    pub source: Source,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryResult {
    pub name: &'static str,
    pub kind: &'static str,
    pub pass: bool,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusRun {
    pub results: Vec<EntryResult>,
    pub mismatches: Vec<String>,
}

/// Checks `actual` against each expected value.
pub fn compare(
    name: &'static str,
    kind: &'static str,
    expected: &[Expected],
    actual: &BTreeMap<&str, String>,
) -> EntryResult {
    let checks: Vec<Check> = expected
        .iter()
        .map(|e| {
            let a = actual.get(e.invariant).cloned().unwrap_or_else(|| "missing".to_string());
            Check { invariant: e.invariant, expected: e.value, pass: a == e.value, actual: a, source: e.source }
        })
        .collect();
    EntryResult { name, kind, pass: checks.iter().all(|c| c.pass), checks }
}

/// Recomputes every entry and map in parallel; results are ordered by kind
/// then name regardless of scheduling.
pub fn run_corpus() -> CorpusRun {
    let entries = entries();
    let maps = map_expectations();
    let mut results: Vec<EntryResult> = entries
        .par_iter()
        .map(|e| {
            let p = presentation(e.name).expect("corpus entry exists");
            compare(e.name, "presentation", &e.expected, &presentation_invariants(&p))
        })
        .collect();
    let map_results: Vec<EntryResult> = maps
        .par_iter()
        .map(|(name, expected)| {
            let (h, onto) = map(name).expect("corpus map exists");
            compare(name, "map", expected, &map_invariants(&h, onto))
        })
        .collect();
    results.extend(map_results);
    results.sort_by(|a, b| (a.kind, a.name).cmp(&(b.kind, b.name)));
    let mismatches = results
        .iter()
        .flat_map(|r| {
            r.checks
                .iter()
                .filter(|c| !c.pass)
                .map(move |c| format!("{} {}: expected {}, got {}", r.name, c.invariant, c.expected, c.actual))
        })
        .collect();
    CorpusRun { results, mismatches }
}
