use serde::Serialize;

use crate::verify::Verdicts;

/// Summary of one `color` run, written to stderr as a JSON line.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub input: String,
    pub n: usize,
    pub m: usize,
    pub num_colors: usize,
    pub contractions: usize,
    pub ops_interesting: u64,
    pub ops_outer_path: u64,
    pub ops_even_pair: u64,
    pub seconds: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verdicts>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
