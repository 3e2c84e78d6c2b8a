use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// One recorded construction step: a label, its recursion depth and the
/// named scalars chosen there.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub step: String,
    pub depth: usize,
    pub values: BTreeMap<String, f64>,
}

/// Intermediate geometry of a construction, for debugging and plots.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub entries: Vec<TraceEntry>,
}

impl ConstructionTrace {
    pub fn push<'a>(
        &mut self,
        step: &str,
        depth: usize,
        values: impl IntoIterator<Item = (&'a str, f64)>,
    ) {
        self.entries.push(TraceEntry {
            step: step.to_string(),
            depth,
            values: values
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        });
    }

    pub fn extend(&mut self, other: ConstructionTrace) {
        self.entries.extend(other.entries);
    }
}
