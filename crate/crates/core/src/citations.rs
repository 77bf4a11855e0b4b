//! Citation tags attached to reports, with the mathematical statement each
//! tag stands for.

use serde::Serialize;

pub const RANK_FORMULA: &str = "rank-formula";
pub const STABILIZATION: &str = "stabilization";
pub const FINITE_ABELIANIZATION: &str = "finite-abelianization";
pub const TORSION_ALEXANDER_MODULE: &str = "torsion-alexander-module";
pub const FREE_GROUP_RANKS: &str = "free-group-ranks";
pub const AUGMENTATION_BOUND: &str = "augmentation-bound";
pub const RATIONAL_TWO_CONNECTED: &str = "rational-two-connected";
pub const H2_VANISHING: &str = "h2-vanishing";
pub const INJECTIVITY: &str = "injectivity";
pub const ONTO_ISOMORPHISM: &str = "onto-isomorphism";
pub const FREE_SUBGROUP: &str = "free-subgroup";
pub const COMPLETION_TOWER: &str = "completion-tower";
pub const LEVEL_CAP: &str = "level-cap";
pub const TRUNCATION: &str = "finite-truncation";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Citation {
    pub tag: &'static str,
    pub statement: &'static str,
}

pub const TABLE: &[Citation] = &[
    Citation {
        tag: RANK_FORMULA,
        statement: "r_n = g - rank d1 - rank d2 over the Ore field of G/G^(n)_H, for the presentation 2-complex",
    },
    Citation {
        tag: STABILIZATION,
        statement: "if r_n = 0 then G^(n+1)_H = G^(n)_H and the series is constant from n on",
    },
    Citation {
        tag: FINITE_ABELIANIZATION,
        statement: "b_1 = 0 forces G^(1)_H = G, so every term of the series is G",
    },
    Citation {
        tag: TORSION_ALEXANDER_MODULE,
        statement: "when b_1 = 1 the rational Alexander module is torsion, so r_1 = 0",
    },
    Citation {
        tag: FREE_GROUP_RANKS,
        statement: "for a free group of rank m the series is the derived series and r_n = m - 1 for all n",
    },
    Citation {
        tag: AUGMENTATION_BOUND,
        statement: "rank over K(G) of a matrix over ZG is at least the rational rank of its augmentation",
    },
    Citation {
        tag: RATIONAL_TWO_CONNECTED,
        statement: "a map injective on H_1(-;Q) and surjective on H_2(-;Q) is rationally 2-connected",
    },
    Citation {
        tag: H2_VANISHING,
        statement: "an injective relator exponent matrix over Q gives H_2(X;Q) = 0, hence H_2(B;Q) = 0",
    },
    Citation {
        tag: INJECTIVITY,
        statement: "a rationally 2-connected map induces monomorphisms A/A^(n)_H -> B/B^(n)_H for n <= omega and equal ranks r_n",
    },
    Citation {
        tag: ONTO_ISOMORPHISM,
        statement: "if the map is also onto, the induced maps A/A^(n)_H -> B/B^(n)_H are isomorphisms",
    },
    Citation {
        tag: FREE_SUBGROUP,
        statement: "with H_2(G;Q) = 0, elements independent in H_1(G;Q) generate a free subgroup modulo G^(omega)_H",
    },
    Citation {
        tag: COMPLETION_TOWER,
        statement: "level n+1 of the completion is the semidirect product of level n with H_1(G; K of level n)",
    },
    Citation {
        tag: LEVEL_CAP,
        statement: "ranks are computed for n <= 2 only; higher levels are reported unsupported",
    },
    Citation {
        tag: TRUNCATION,
        statement: "finite truncations approximate an infinitely generated group and do not realize it",
    },
];

pub fn lookup(tag: &str) -> Option<&'static Citation> {
    TABLE.iter().find(|c| c.tag == tag)
}

/// Sorted, deduplicated tags.
pub fn normalize(tags: impl IntoIterator<Item = &'static str>) -> Vec<&'static str> {
    let mut v: Vec<&'static str> = tags.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}
