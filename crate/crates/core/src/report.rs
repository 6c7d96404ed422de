//! Serializable report types for every computation surfaced by the CLI.
//!
//! Weyl elements are serialized as reduced-word arrays of 1-based
//! simple-root indices (e.g. `[2,1]` for `s2s1`); subsets as sorted arrays
//! of 1-based indices.  All maps are ordered, so serialization is
//! byte-stable for fixed inputs.

use crate::character::SmoothCharacter;
use crate::coinv::SummandDescriptor;
use crate::ext::ExtPrediction;
use crate::geom::Filtration;
use crate::lattice::CoefficientComplex;
use crate::subset::Subset;
use crate::verify::SuiteOutcome;
use crate::weyl::{Elt, WeylGroup};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RootReport {
    pub coeffs: Vec<i64>,
    pub d: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WeylElementReport {
    pub word: Vec<usize>,
    pub length: usize,
    pub d_w: u64,
}

pub fn weyl_element_report(w: &WeylGroup, e: Elt) -> WeylElementReport {
    WeylElementReport { word: w.word_external(e), length: w.length(e), d_w: w.d_w(e) }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PieceReport {
    pub w: Vec<usize>,
    pub shift: i64,
    pub delta: SmoothCharacter,
    pub coinv_levi: Subset,
    pub ind_levi: Subset,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HeightGroupReport {
    pub height: u32,
    pub pieces: Vec<PieceReport>,
}

pub fn filtration_report(w: &WeylGroup, filt: &Filtration) -> Vec<HeightGroupReport> {
    filt.groups
        .iter()
        .enumerate()
        .map(|(idx, group)| HeightGroupReport {
            height: idx as u32 + 1,
            pieces: group
                .iter()
                .map(|p| PieceReport {
                    w: w.word_external(p.w),
                    shift: p.shift,
                    delta: p.delta.clone(),
                    coinv_levi: p.coinv_levi,
                    ind_levi: p.ind_levi,
                })
                .collect(),
        })
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConstituentReport {
    pub ambient: Subset,
    pub base: Subset,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SummandReport {
    pub degree: i64,
    pub w: Vec<usize>,
    pub ind_levi: Subset,
    pub character: SmoothCharacter,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constituent: Option<ConstituentReport>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DegreeGroupReport {
    pub degree: i64,
    pub summands: Vec<SummandReport>,
}

pub fn summand_reports(
    w: &WeylGroup,
    by_degree: &BTreeMap<u64, Vec<SummandDescriptor>>,
) -> Vec<DegreeGroupReport> {
    by_degree
        .iter()
        .map(|(&j, summands)| DegreeGroupReport {
            degree: -(j as i64),
            summands: summands
                .iter()
                .map(|s| SummandReport {
                    degree: s.degree,
                    w: w.word_external(s.w),
                    ind_levi: s.ind_levi,
                    character: s.character.clone(),
                    constituent: s.constituent.map(|c| ConstituentReport {
                        ambient: c.ambient,
                        base: c.base,
                    }),
                })
                .collect(),
        })
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexTermReport {
    pub degree: i64,
    pub summands: Vec<ComplexSummandReport>,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexSummandReport {
    pub index_subset: Subset,
    pub parabolic: Subset,
    pub constituents: Vec<Subset>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DifferentialReport {
    pub from_degree: i64,
    /// Integer matrix, rows indexed by the basis of the next degree.
    pub matrix: Vec<Vec<i64>>,
}

/// Audit dump of a coefficient complex with explicit integer matrices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexReport {
    pub terms: Vec<ComplexTermReport>,
    pub differentials: Vec<DifferentialReport>,
}

/// Top-level envelopes for each CLI command.  All carry the schema version
/// and the command name.
#[derive(Serialize, Deserialize)]
pub struct RootsReport {
    pub schema: u32,
    pub command: String,
    pub rank: usize,
    pub f: u64,
    pub z_dim: u64,
    pub dim_g: u64,
    pub positive_roots: Vec<RootReport>,
}

#[derive(Serialize, Deserialize)]
pub struct WeylReport {
    pub schema: u32,
    pub command: String,
    pub order: usize,
    pub longest_length: usize,
    pub elements: Vec<WeylElementReport>,
}

#[derive(Serialize, Deserialize)]
pub struct CosetEntry {
    pub word: Vec<usize>,
    pub length: usize,
    pub d_w: u64,
    pub degree: i64,
}

#[derive(Serialize, Deserialize)]
pub struct CosetsReport {
    pub schema: u32,
    pub command: String,
    #[serde(rename = "I")]
    pub i: Subset,
    #[serde(rename = "K")]
    pub k: Subset,
    pub cosets: Vec<CosetEntry>,
}

#[derive(Serialize, Deserialize)]
pub struct FiltrationCommandReport {
    pub schema: u32,
    pub command: String,
    #[serde(rename = "I")]
    pub i: Subset,
    #[serde(rename = "K")]
    pub k: Subset,
    pub mode: String,
    pub height: usize,
    pub filtration: Vec<HeightGroupReport>,
}

#[derive(Serialize, Deserialize)]
pub struct CoinvariantsReport {
    pub schema: u32,
    pub command: String,
    #[serde(rename = "I")]
    pub i: Subset,
    #[serde(rename = "K")]
    pub k: Subset,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<SmoothCharacter>,
    pub degrees: Vec<DegreeGroupReport>,
}

#[derive(Serialize, Deserialize)]
pub struct ExtReport {
    pub schema: u32,
    pub command: String,
    pub mode: String,
    #[serde(rename = "I")]
    pub i: Subset,
    #[serde(rename = "K")]
    pub k: Subset,
    pub degree: u64,
    pub prediction: ExtPrediction,
}

#[derive(Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub command: String,
    pub passed: bool,
    pub suites: Vec<SuiteOutcome>,
}

pub fn complex_report(cx: &CoefficientComplex) -> ComplexReport {
    let terms = cx
        .terms
        .iter()
        .map(|(&n, summands)| ComplexTermReport {
            degree: n,
            summands: summands
                .iter()
                .map(|s| ComplexSummandReport {
                    index_subset: s.j,
                    parabolic: cx.params.i.union(s.j).intersect(cx.params.k),
                    constituents: s.module.constituents().iter().copied().collect(),
                })
                .collect(),
            dim: cx.dim(n),
        })
        .collect();
    let differentials = cx
        .diffs
        .iter()
        .map(|(&n, m)| DifferentialReport {
            from_degree: n,
            matrix: (0..m.rows())
                .map(|r| m.row(r).iter().map(|v| *v.numer()).collect())
                .collect(),
        })
        .collect();
    ComplexReport { terms, differentials }
}
