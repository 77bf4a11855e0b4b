use serde::Serialize;

use super::{Surjectivity, Verdict};
use crate::citations::{self, INJECTIVITY, ONTO_ISOMORPHISM, RANK_FORMULA, STABILIZATION};
use crate::laurent::abelianization;
use crate::presentations::{GroupHom, Presentation};
use crate::series::{level_rank, stabilization};

/// A symbolic statement about every level `n` in `levels`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub statement: String,
    pub levels: &'static str,
    pub citation: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankComparison {
    pub level: usize,
    pub source: Option<usize>,
    pub target: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unsupported: Option<&'static str>,
    /// Equality is forced for this map, so a mismatch is a defect.
    pub equality_required: bool,
    pub equal: Option<bool>,
}

impl RankComparison {
    /// False only when equality is required and the computed ranks differ.
    pub fn consistent(&self) -> bool {
        !self.equality_required || self.equal != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsequenceReport {
    pub source: String,
    pub target: String,
    pub hypotheses_certified: bool,
    pub claims: Vec<Claim>,
    pub ranks: Vec<RankComparison>,
    pub notes: Vec<String>,
    pub citations: Vec<&'static str>,
}

fn name(p: &Presentation, fallback: &str) -> String {
    p.name().unwrap_or(fallback).to_string()
}

fn free_abelian(b: usize) -> String {
    match b {
        0 => "1".to_string(),
        1 => "Z".to_string(),
        _ => format!("Z^{b}"),
    }
}

pub fn consequence_report(h: &GroupHom, v: &Verdict) -> ConsequenceReport {
    let (a, b) = (name(h.source(), "A"), name(h.target(), "B"));
    let certified = v.certified();
    let mut claims = Vec::new();
    let mut notes = Vec::new();
    let mut tags = vec![RANK_FORMULA];
    if certified {
        claims.push(Claim {
            statement: format!("{a}/{a}^(n)_H -> {b}/{b}^(n)_H is injective"),
            levels: "n <= omega",
            citation: INJECTIVITY,
        });
        tags.push(INJECTIVITY);
        let onto = v.surjectivity == Surjectivity::Certified;
        if onto {
            claims.push(Claim {
                statement: format!("{a}/{a}^(n)_H -> {b}/{b}^(n)_H is an isomorphism"),
                levels: "n <= omega",
                citation: ONTO_ISOMORPHISM,
            });
            tags.push(ONTO_ISOMORPHISM);
        }
        let st = stabilization(h.target());
        if st.stabilized_at == Some(1) {
            let limit = free_abelian(abelianization(h.target()).b);
            let statement = if onto {
                format!("{a}/{a}^(n)_H = {limit}")
            } else {
                format!("{a}/{a}^(n)_H embeds in {b}/{b}^(n)_H = {limit}")
            };
            claims.push(Claim { statement, levels: "1 <= n <= omega", citation: STABILIZATION });
            tags.push(STABILIZATION);
        }
    }
    if v.h1_iso && !v.h1.integral_free_part_iso {
        notes.push("isomorphism on H_1(-;Q) but not on the free part of H_1(-;Z)".to_string());
    }
    if v.surjectivity == Surjectivity::AssertedUnverified {
        notes.push("surjectivity asserted but not visible from generator images; no isomorphism claim".to_string());
    }
    let ranks = (1..=2)
        .map(|n| {
            let s = level_rank(h.source(), n);
            let t = level_rank(h.target(), n);
            let unsupported = s.as_ref().err().or(t.as_ref().err()).map(|u| u.reason.code());
            let (s, t) = (s.ok().map(|r| r.rank), t.ok().map(|r| r.rank));
            let equal = s.zip(t).map(|(x, y)| x == y);
            RankComparison {
                level: n,
                source: s,
                target: t,
                unsupported,
                equality_required: certified && v.h1_iso,
                equal,
            }
        })
        .collect();
    ConsequenceReport {
        source: a,
        target: b,
        hypotheses_certified: certified,
        claims,
        ranks,
        notes,
        citations: citations::normalize(tags),
    }
}
