//! Deterministic JSON serialization of a space with its operators and Gram blocks.

use serde::Serialize;

use super::pairing::epsilon;
use super::{
    grading_h, lowering_f, pairing_gram, raising_l, BasisVector, CaseTag, DegreeBlockMap,
    GradedSpace,
};

pub const DUMP_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct SpaceDump {
    pub schema_version: u32,
    pub case: CaseTag,
    pub n: usize,
    pub m: usize,
    pub total_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<i64>,
    pub degrees: Vec<DegreeDump>,
    pub operators: OperatorsDump,
    pub pairing: Vec<BlockDump>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeDump {
    pub degree: i64,
    pub dim: usize,
    pub basis: Vec<BasisDump>,
}

/// Exponent vectors for `Poly`; 1-based index lists for the exterior cases.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum BasisDump {
    Poly { alpha: Vec<u32>, beta: Vec<u32> },
    Ext { theta: Vec<usize>, xi: Vec<usize> },
}

#[derive(Clone, Debug, Serialize)]
pub struct OperatorsDump {
    #[serde(rename = "L")]
    pub l: Vec<BlockDump>,
    #[serde(rename = "F")]
    pub f: Vec<BlockDump>,
    pub h: Vec<BlockDump>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockDump {
    pub source_degree: i64,
    pub target_degree: i64,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

fn blocks(map: &DegreeBlockMap) -> Vec<BlockDump> {
    map.blocks
        .iter()
        .map(|(&d, m)| BlockDump {
            source_degree: d,
            target_degree: map.target.apply(d),
            rows: m.rows(),
            cols: m.cols(),
            entries: m.to_strings(),
        })
        .collect()
}

impl SpaceDump {
    pub fn new(space: &GradedSpace) -> Self {
        let degrees = space
            .degrees()
            .iter()
            .map(|&d| DegreeDump {
                degree: d,
                dim: space.dim(d),
                basis: space
                    .basis(d)
                    .iter()
                    .map(|v| match v {
                        BasisVector::Poly { alpha, beta } => BasisDump::Poly {
                            alpha: alpha.0.clone(),
                            beta: beta.0.clone(),
                        },
                        BasisVector::Ext { theta, xi } => BasisDump::Ext {
                            theta: theta.one_based(),
                            xi: xi.one_based(),
                        },
                    })
                    .collect(),
            })
            .collect();
        SpaceDump {
            schema_version: DUMP_SCHEMA_VERSION,
            case: space.case,
            n: space.n,
            m: space.m,
            total_dim: space.total_dim(),
            epsilon: (space.case == CaseTag::Ext).then(|| epsilon(space.n, space.m)),
            degrees,
            operators: OperatorsDump {
                l: blocks(&raising_l(space)),
                f: blocks(&lowering_f(space)),
                h: blocks(&grading_h(space)),
            },
            pairing: blocks(&pairing_gram(space)),
        }
    }
}

/// Pretty-printed JSON with a trailing newline; byte-stable for a given space.
pub fn dump_json(space: &GradedSpace) -> String {
    let mut out = serde_json::to_string_pretty(&SpaceDump::new(space)).expect("dump serializes");
    out.push('\n');
    out
}
