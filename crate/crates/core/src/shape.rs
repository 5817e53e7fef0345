//! Dips, log-concavity and unimodality of positive sequences, plus the
//! one-row Pascal extension that carries log-concavity from `P(k-1)` to
//! `P(k)`.
//!
//! All indices are logical: the first entry of a sequence sits at `-1`.

use serde::Serialize;

use crate::cyclic::{build_triangle, ExtendedFSequence, PolytopeParams};
use crate::error::{Error, Result};
use crate::exactcomb::Count;
use num_traits::{One, Zero};

/// A nonempty sequence of strictly positive counts, first index `-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveSequence {
    entries: Vec<Count>,
}

impl PositiveSequence {
    pub fn new(entries: Vec<Count>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain("sequence must be nonempty".into()));
        }
        if let Some(i) = entries.iter().position(Zero::is_zero) {
            return Err(Error::Domain(format!(
                "sequence entry at index {} is zero; entries must be positive",
                i as i64 - 1
            )));
        }
        Ok(Self { entries })
    }

    pub fn from_u64s(values: &[u64]) -> Result<Self> {
        Self::new(values.iter().map(|&x| Count::from(x)).collect())
    }

    pub fn entries(&self) -> &[Count] {
        &self.entries
    }

    pub fn get(&self, j: i64) -> Option<&Count> {
        usize::try_from(j + 1)
            .ok()
            .and_then(|i| self.entries.get(i))
    }

    pub fn first(&self) -> &Count {
        &self.entries[0]
    }

    pub fn last(&self) -> &Count {
        &self.entries[self.entries.len() - 1]
    }

    /// Logical index of the last entry.
    pub fn last_index(&self) -> i64 {
        self.entries.len() as i64 - 2
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl From<&ExtendedFSequence> for PositiveSequence {
    fn from(f: &ExtendedFSequence) -> Self {
        Self {
            entries: f.entries().to_vec(),
        }
    }
}

/// Interior indices `j` with `s(j)^2 < s(j-1) * s(j+1)`, ascending.
pub fn find_dips(s: &PositiveSequence) -> Vec<i64> {
    s.entries
        .windows(3)
        .enumerate()
        .filter(|(_, w)| &w[1] * &w[1] < &w[0] * &w[2])
        .map(|(i, _)| i as i64)
        .collect()
}

/// `s(j-1) * s(j+1) <= s(j)^2` at every interior index.
pub fn is_log_concave(s: &PositiveSequence) -> bool {
    s.entries.windows(3).all(|w| &w[0] * &w[2] <= &w[1] * &w[1])
}

/// Outcome of a unimodality test. `peak` is the plateau of maximal entries
/// and is only present when the sequence is unimodal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Unimodality {
    pub unimodal: bool,
    pub peak: Option<(i64, i64)>,
}

pub fn is_unimodal(s: &PositiveSequence) -> Unimodality {
    let e = &s.entries;
    let n = e.len();
    let mut i = 0;
    while i + 1 < n && e[i] <= e[i + 1] {
        i += 1;
    }
    while i + 1 < n && e[i] >= e[i + 1] {
        i += 1;
    }
    if i + 1 != n {
        return Unimodality {
            unimodal: false,
            peak: None,
        };
    }
    let max = e.iter().max().expect("nonempty");
    let start = e.iter().position(|x| x == max).unwrap();
    let end = e.iter().rposition(|x| x == max).unwrap();
    Unimodality {
        unimodal: true,
        peak: Some((start as i64 - 1, end as i64 - 1)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    pub dips: Vec<i64>,
    pub log_concave: bool,
    pub unimodal: bool,
    pub peak_start: Option<i64>,
    pub peak_end: Option<i64>,
}

pub fn analyze_shape(s: &PositiveSequence) -> ShapeReport {
    let dips = find_dips(s);
    let log_concave = is_log_concave(s);
    let uni = is_unimodal(s);
    debug_assert_eq!(dips.is_empty(), log_concave);
    debug_assert!(!log_concave || uni.unimodal);
    ShapeReport {
        dips,
        log_concave,
        unimodal: uni.unimodal,
        peak_start: uni.peak.map(|p| p.0),
        peak_end: uni.peak.map(|p| p.1),
    }
}

/// One step of Pascal's rule: `y(-1) = 1`, `y(j) = s(j-1) + s(j)` for
/// `0 <= j <= m`, and `y(m+1) = seed`.
pub fn pascal_extend(s: &PositiveSequence, seed: &Count) -> Result<PositiveSequence> {
    if !s.first().is_one() {
        return Err(Error::Domain(format!(
            "pascal_extend needs a leading 1, found {}",
            s.first()
        )));
    }
    if seed.is_zero() {
        return Err(Error::Domain("pascal_extend needs a positive seed".into()));
    }
    let mut out = Vec::with_capacity(s.len() + 1);
    out.push(Count::one());
    for w in s.entries.windows(2) {
        out.push(&w[0] + &w[1]);
    }
    out.push(seed.clone());
    Ok(PositiveSequence { entries: out })
}

/// Whether extending a log-concave sequence (leading 1) by Pascal's rule and
/// a seed no larger than its last entry stays log-concave. Refuses inputs
/// outside those hypotheses.
pub fn lemma_check(s: &PositiveSequence, seed: &Count) -> Result<bool> {
    if !is_log_concave(s) {
        return Err(Error::Domain(format!(
            "lemma hypothesis violated: input has dips at {:?}",
            find_dips(s)
        )));
    }
    if seed > s.last() {
        return Err(Error::Domain(format!(
            "lemma hypothesis violated: seed {} exceeds last entry {}",
            seed,
            s.last()
        )));
    }
    Ok(is_log_concave(&pascal_extend(s, seed)?))
}

/// Row-by-row record of the dip-propagation argument on one triangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DipAudit {
    pub v: u32,
    pub d: u32,
    /// Dips of `P(0), …, P(d)`.
    pub row_dips: Vec<Vec<i64>>,
    /// Rows `k < d/2` are dip-free.
    pub prefix_rows_ok: bool,
    /// For `ceil(d/2) <= k <= d`: a dip in `P(k)` forces one in `P(k-1)`.
    pub implications_ok: bool,
    /// For `ceil(d/2) <= k <= d`: the diagonal of `P(k)` is at most that of
    /// `P(k-1)`.
    pub seeds_ok: bool,
    pub final_row_ok: bool,
    pub passed: bool,
}

pub fn audit_dip_propagation(params: PolytopeParams) -> DipAudit {
    let tri = build_triangle(params);
    let d = params.d();
    let row_dips: Vec<Vec<i64>> = tri
        .rows()
        .map(|r| {
            find_dips(&PositiveSequence::new(r.to_vec()).expect("triangle entries are positive"))
        })
        .collect();
    let half_up = d.div_ceil(2);

    let prefix_rows_ok = (0..=d)
        .filter(|&k| 2 * k < d)
        .all(|k| row_dips[k as usize].is_empty());
    let implications_ok = (half_up..=d)
        .all(|k| row_dips[k as usize].is_empty() || !row_dips[k as usize - 1].is_empty());
    let diag = |k: u32| tri.row(k).and_then(|r| r.last()).expect("row exists");
    let seeds_ok = (half_up..=d).all(|k| diag(k) <= diag(k - 1));
    let final_row_ok = row_dips[d as usize].is_empty();

    DipAudit {
        v: params.v(),
        d,
        row_dips,
        prefix_rows_ok,
        implications_ok,
        seeds_ok,
        final_row_ok,
        passed: prefix_rows_ok && implications_ok && seeds_ok && final_row_ok,
    }
}
