//! JSON form of a reduction trace: an array of
//! `{"neighborhood": [...], "deleted": [...], "degree": d, "n_before": n}`.

use maxbisect_core::{ReductionStep, ReductionTrace, Vertex};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub neighborhood: Vec<Vertex>,
    pub deleted: Vec<Vertex>,
    pub degree: usize,
    pub n_before: usize,
}

impl From<&ReductionStep> for StepRecord {
    fn from(s: &ReductionStep) -> Self {
        StepRecord {
            neighborhood: s.neighborhood.clone(),
            deleted: s.deleted.clone(),
            degree: s.degree,
            n_before: s.n_before,
        }
    }
}

impl From<StepRecord> for ReductionStep {
    fn from(r: StepRecord) -> Self {
        ReductionStep {
            neighborhood: r.neighborhood,
            deleted: r.deleted,
            degree: r.degree,
            n_before: r.n_before,
        }
    }
}

pub fn trace_to_json(trace: &ReductionTrace) -> serde_json::Value {
    let records: Vec<StepRecord> = trace.steps.iter().map(StepRecord::from).collect();
    serde_json::to_value(records).expect("plain data serializes")
}

pub fn trace_from_json(text: &str) -> serde_json::Result<ReductionTrace> {
    let records: Vec<StepRecord> = serde_json::from_str(text)?;
    Ok(ReductionTrace {
        steps: records.into_iter().map(ReductionStep::from).collect(),
    })
}
