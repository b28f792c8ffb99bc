//! Closed-form identifying-code numbers of corona products.
//!
//! With `m = |V(H)|` and `γ = γ^ID(G)`:
//!
//! * `H = K1`: `γ` if `G` has a minimum code lying in no closed
//!   neighbourhood, else `γ + 1`.
//! * `H` connected, nontrivial, `G = K1`: `m + 1` if `H` is complete, else `m`.
//! * `H` connected, nontrivial, `G` nontrivial: `m·γ` under (a) or (b),
//!   `m·γ + γ(H)` under (c), `m·γ + γ_t(H)` otherwise.
//! * `H` disconnected: the sum over its components.
//!
//! Every value comes with an identifying code of that size built from the
//! matching construction.

pub mod construct;
pub mod formulas;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::{classify_with_cap, Classification};
use crate::corona::{unidentifiable_reason, CoronaLayout, CoronaVertex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{
    min_dominating_set, min_identifying_code, min_total_dominating_set, DEFAULT_ENUM_CAP,
};
use crate::vertex_set::VertexSet;

pub use construct::{
    complete_pendant_code, construct_cons1, construct_cons2, construct_cons3, construct_cons4,
    pendant_code, trivial_base_code,
};
pub use formulas::{gamma_id_binomial_tree, gamma_id_pendant, PendantResult};

/// Which case of the analysis produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    #[serde(rename = "T2.1-unidentifiable")]
    Unidentifiable,
    #[serde(rename = "T4.3-K1-a")]
    TrivialBaseEscaping,
    #[serde(rename = "T4.3-K1-nota")]
    TrivialBaseContained,
    #[serde(rename = "T4.5-Kn-K1")]
    CompleteWithPendants,
    #[serde(rename = "T4.6-H-K1")]
    PendantsOnly,
    #[serde(rename = "T4.1-ab")]
    ConditionAOrB,
    #[serde(rename = "T4.2-c")]
    ConditionC,
    #[serde(rename = "T4.2-nc")]
    NoCondition,
    #[serde(rename = "component-sum")]
    ComponentSum,
}

impl CaseTag {
    pub const ALL: [CaseTag; 9] = [
        CaseTag::Unidentifiable,
        CaseTag::TrivialBaseEscaping,
        CaseTag::TrivialBaseContained,
        CaseTag::CompleteWithPendants,
        CaseTag::PendantsOnly,
        CaseTag::ConditionAOrB,
        CaseTag::ConditionC,
        CaseTag::NoCondition,
        CaseTag::ComponentSum,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Unidentifiable => "T2.1-unidentifiable",
            CaseTag::TrivialBaseEscaping => "T4.3-K1-a",
            CaseTag::TrivialBaseContained => "T4.3-K1-nota",
            CaseTag::CompleteWithPendants => "T4.5-Kn-K1",
            CaseTag::PendantsOnly => "T4.6-H-K1",
            CaseTag::ConditionAOrB => "T4.1-ab",
            CaseTag::ConditionC => "T4.2-c",
            CaseTag::NoCondition => "T4.2-nc",
            CaseTag::ComponentSum => "component-sum",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Invariants of the factors that went into a result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ingredients {
    pub gamma_id_g: usize,
    pub domination_h: usize,
    /// `None` when `H` has an isolated vertex.
    pub total_domination_h: Option<usize>,
    /// Present when the case depended on the conditions on `G`.
    pub classification: Option<Classification>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoronaResult {
    pub value: usize,
    pub case: CaseTag,
    /// Identifying code of the product, in product indices.
    pub witness: VertexSet,
    pub layout: CoronaLayout,
    pub ingredients: Ingredients,
}

pub fn gamma_id_corona(h: &Graph, g: &Graph) -> Result<CoronaResult> {
    gamma_id_corona_with_cap(h, g, DEFAULT_ENUM_CAP)
}

pub fn gamma_id_corona_with_cap(h: &Graph, g: &Graph, cap: usize) -> Result<CoronaResult> {
    if let Some(reason) = unidentifiable_reason(h, g) {
        return Err(Error::NotIdentifiable(reason));
    }
    let layout = CoronaLayout::new(h.n(), g.n())?;
    let gamma = min_identifying_code(g)?;
    let ingredients = Ingredients {
        gamma_id_g: gamma.optimum,
        domination_h: min_dominating_set(h).optimum,
        total_domination_h: min_total_dominating_set(h).ok().map(|r| r.optimum),
        classification: None,
    };
    let m = h.n();

    if h.is_trivial() {
        let class = classify_with_cap(g, cap)?;
        let (value, case, witness) = if let Some(s) = class.a_witness {
            (
                class.gamma_id,
                CaseTag::TrivialBaseEscaping,
                construct_cons1(h, g, s)?,
            )
        } else {
            undecided(&class, cap)?;
            (
                class.gamma_id + 1,
                CaseTag::TrivialBaseContained,
                trivial_base_code(g, class.min_code)?,
            )
        };
        return Ok(CoronaResult {
            value,
            case,
            witness,
            layout,
            ingredients: Ingredients {
                classification: Some(class),
                ..ingredients
            },
        });
    }

    if !h.is_connected() {
        let mut value = 0;
        let mut witness = VertexSet::EMPTY;
        for comp in h.components() {
            let (sub, map) = h.induced(comp)?;
            let part = gamma_id_corona_with_cap(&sub, g, cap)?;
            value += part.value;
            for idx in part.witness {
                witness.insert(match part.layout.decode(idx) {
                    CoronaVertex::Base(v) => layout.h_index(map[v]),
                    CoronaVertex::Copy { base, inner } => layout.copy_index(map[base], inner),
                });
            }
        }
        return Ok(CoronaResult {
            value,
            case: CaseTag::ComponentSum,
            witness,
            layout,
            ingredients,
        });
    }

    if g.is_trivial() {
        let (value, case, witness) = if h.is_complete() {
            (
                m + 1,
                CaseTag::CompleteWithPendants,
                complete_pendant_code(m)?,
            )
        } else {
            (m, CaseTag::PendantsOnly, pendant_code(h)?)
        };
        return Ok(CoronaResult {
            value,
            case,
            witness,
            layout,
            ingredients,
        });
    }

    let class = classify_with_cap(g, cap)?;
    let base = m * class.gamma_id;
    let (value, case, witness) = if let Some(s) = class.a_witness {
        (base, CaseTag::ConditionAOrB, construct_cons1(h, g, s)?)
    } else if let Some(b) = class.b_witness {
        (
            base,
            CaseTag::ConditionAOrB,
            construct_cons2(h, g, b.code.without(b.z))?,
        )
    } else {
        undecided(&class, cap)?;
        if let Some(c) = class.c_witness {
            let d = min_dominating_set(h).witness;
            let code = construct_cons3(h, g, d, c.code.without(c.z), class.min_code)?;
            (base + ingredients.domination_h, CaseTag::ConditionC, code)
        } else {
            let t = min_total_dominating_set(h)?;
            let code = construct_cons4(h, g, t.witness, class.min_code)?;
            (base + t.optimum, CaseTag::NoCondition, code)
        }
    };
    Ok(CoronaResult {
        value,
        case,
        witness,
        layout,
        ingredients: Ingredients {
            classification: Some(class),
            ..ingredients
        },
    })
}

/// A negative answer for (a) or (c) cannot be trusted once a cap was hit.
fn undecided(class: &Classification, cap: usize) -> Result<()> {
    if class.caps_hit {
        return Err(Error::EnumerationOverflow { cap });
    }
    Ok(())
}

/// Lower and upper bounds on `γ^ID(H ⊙ G)` that need no classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoronaBounds {
    pub lower: usize,
    /// Only available for nontrivial connected `H`.
    pub upper: Option<usize>,
}

pub fn corona_bounds(h: &Graph, g: &Graph) -> Result<CoronaBounds> {
    if let Some(reason) = unidentifiable_reason(h, g) {
        return Err(Error::NotIdentifiable(reason));
    }
    let gamma = min_identifying_code(g)?.optimum;
    let lower = h.n() * gamma;
    let upper = if !h.is_trivial() && h.is_connected() {
        Some(lower + min_total_dominating_set(h)?.optimum)
    } else {
        None
    };
    Ok(CoronaBounds { lower, upper })
}
