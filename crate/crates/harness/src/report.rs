//! JSON reports. Infinite distances serialize as the string `"inf"`.

use std::collections::BTreeMap;

use rpaths_core::Dist;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    #[serde(rename = "M")]
    pub weight_bound: i64,
    pub path: Vec<usize>,
    pub path_length: i64,
    pub algorithms: BTreeMap<String, AlgoReport>,
    /// True iff every reported distance vector is identical.
    pub agree: bool,
    /// Oracle witness paths, one per path edge, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Option<Vec<usize>>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlgoReport {
    #[serde(serialize_with = "serialize_dists")]
    pub replacements: Vec<Dist>,
    pub candidates: usize,
    pub millis: f64,
    pub params: BTreeMap<String, Value>,
}

fn serialize_dists<S: Serializer>(dists: &[Dist], ser: S) -> Result<S::Ok, S::Error> {
    let mut seq = ser.serialize_seq(Some(dists.len()))?;
    for d in dists {
        match d.value() {
            Some(x) => seq.serialize_element(&x)?,
            None => seq.serialize_element("inf")?,
        }
    }
    seq.end()
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// True iff all vectors are identical.
pub fn all_agree<'a>(mut vectors: impl Iterator<Item = &'a [Dist]>) -> bool {
    match vectors.next() {
        None => true,
        Some(first) => vectors.all(|v| v == first),
    }
}

/// `(edge index, expected, got)` for every differing entry.
pub fn diff(expected: &[Dist], got: &[Dist]) -> Vec<(usize, Dist, Dist)> {
    expected
        .iter()
        .zip(got)
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(i, (&a, &b))| (i, a, b))
        .collect()
}
