//! h-vectors and f-vectors of cyclic polytopes.
//!
//! Sequences whose natural first index is `-1` (the empty face) are stored
//! zero-based with a fixed offset of one. Every public accessor takes the
//! `-1`-based index.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactcomb::{binom, Count};

/// Vertex count and dimension of a cyclic polytope `C(v,d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolytopeParams {
    v: u32,
    d: u32,
}

impl PolytopeParams {
    /// Requires `d >= 2` and `v >= d + 1`.
    pub fn new(v: u32, d: u32) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidParams {
                v,
                d,
                reason: "dimension must satisfy d >= 2".into(),
            });
        }
        if (v as u64) < d as u64 + 1 {
            return Err(Error::InvalidParams {
                v,
                d,
                reason: format!("vertex count must satisfy v >= d + 1 = {}", d as u64 + 1),
            });
        }
        Ok(Self { v, d })
    }

    pub fn v(&self) -> u32 {
        self.v
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn is_simplex(&self) -> bool {
        self.v == self.d + 1
    }
}

impl fmt::Display for PolytopeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({},{})", self.v, self.d)
    }
}

fn join(entries: &[Count], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, x) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// `h_0, …, h_d`, symmetric under `j -> d - j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector {
    entries: Vec<Count>,
}

impl HVector {
    pub fn get(&self, j: usize) -> Option<&Count> {
        self.entries.get(j)
    }

    pub fn entries(&self) -> &[Count] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        join(&self.entries, f)
    }
}

/// `f_{-1}, f_0, …, f_{d-1}` followed by a closing `1`, i.e. row `d` of the
/// [`FanTriangle`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedFSequence {
    params: PolytopeParams,
    entries: Vec<Count>,
}

impl ExtendedFSequence {
    pub(crate) fn from_entries(params: PolytopeParams, entries: Vec<Count>) -> Self {
        debug_assert_eq!(entries.len(), params.d as usize + 2);
        Self { params, entries }
    }

    pub fn params(&self) -> PolytopeParams {
        self.params
    }

    /// Entry at logical index `j` in `-1..=d`.
    pub fn get(&self, j: i64) -> Option<&Count> {
        usize::try_from(j + 1)
            .ok()
            .and_then(|i| self.entries.get(i))
    }

    /// The stored entries, starting with `f_{-1}`.
    pub fn entries(&self) -> &[Count] {
        &self.entries
    }

    /// The f-vector proper, `f_{-1}..f_{d-1}`, without the closing `1`.
    pub fn f_vector(&self) -> &[Count] {
        &self.entries[..self.entries.len() - 1]
    }

    /// Euler–Poincaré: `sum_{j=-1}^{d-1} (-1)^j f_j = (-1)^{d-1}`.
    pub fn satisfies_euler(&self) -> bool {
        let mut even = BigUint::zero();
        let mut odd = BigUint::zero();
        for (i, f) in self.f_vector().iter().enumerate() {
            // stored index i holds f_{i-1}
            if i % 2 == 1 {
                even += f;
            } else {
                odd += f;
            }
        }
        if self.params.d % 2 == 1 {
            even == odd + 1u8
        } else {
            odd == even + 1u8
        }
    }
}

impl fmt::Display for ExtendedFSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        join(&self.entries, f)
    }
}

/// The generalized Pascal triangle: row `k` holds `(k choose j)_h` for
/// `j = -1..=k`, and row `d` is the extended f-sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanTriangle {
    params: PolytopeParams,
    h: HVector,
    rows: Vec<Vec<Count>>,
}

impl FanTriangle {
    pub fn params(&self) -> PolytopeParams {
        self.params
    }

    pub fn h_vector(&self) -> &HVector {
        &self.h
    }

    /// Row `k`, stored from `j = -1`.
    pub fn row(&self, k: u32) -> Option<&[Count]> {
        self.rows.get(k as usize).map(Vec::as_slice)
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[Count]> {
        self.rows.iter().map(Vec::as_slice)
    }

    /// Entry `(k choose j)_h`; `None` outside `0 <= k <= d`, `-1 <= j <= k`.
    pub fn get(&self, k: u32, j: i64) -> Option<&Count> {
        let row = self.rows.get(k as usize)?;
        usize::try_from(j + 1).ok().and_then(|i| row.get(i))
    }

    pub fn f_vector(&self) -> ExtendedFSequence {
        f_vector_from_triangle(self)
    }
}

/// `h_j = C(v-d-1+j, j)` for `j <= floor(d/2)`, mirrored for the upper half.
pub fn h_vector(params: PolytopeParams) -> HVector {
    let d = params.d as usize;
    let excess = (params.v - params.d - 1) as u64;
    let half = d / 2;
    let mut entries: Vec<Count> = (0..=half)
        .map(|j| binom(excess + j as u64, j as i64))
        .collect();
    for j in half + 1..=d {
        let mirrored = entries[d - j].clone();
        entries.push(mirrored);
    }
    HVector { entries }
}

fn check_f_index(params: PolytopeParams, j: i64) -> Result<()> {
    let max = params.d as i64 - 1;
    if j < -1 || j > max {
        return Err(Error::IndexOutOfRange {
            index: j,
            min: -1,
            max,
        });
    }
    Ok(())
}

/// `sum_{i=0}^{k} C(k-i, k-j-1) h_i`.
fn transform_sum(h: &HVector, k: u32, j: i64) -> Count {
    (0..=k as usize)
        .map(|i| binom((k as usize - i) as u64, k as i64 - j - 1) * &h.entries[i])
        .sum()
}

/// `f_j` by the binomial transform of the h-vector, for `-1 <= j <= d-1`.
pub fn f_entry_direct(params: PolytopeParams, j: i64) -> Result<Count> {
    check_f_index(params, j)?;
    Ok(transform_sum(&h_vector(params), params.d, j))
}

/// The extended f-sequence by the binomial transform.
pub fn f_vector_direct(params: PolytopeParams) -> ExtendedFSequence {
    let h = h_vector(params);
    let d = params.d;
    let mut entries: Vec<Count> = (-1..d as i64).map(|j| transform_sum(&h, d, j)).collect();
    entries.push(Count::one());
    ExtendedFSequence::from_entries(params, entries)
}

/// Diagonal seed of row `k`: `h_{k+1}` below the last row, `1` on it.
fn diagonal_seed(h: &HVector, k: u32, d: u32) -> Count {
    if k < d {
        h.entries[k as usize + 1].clone()
    } else {
        Count::one()
    }
}

/// `(k choose j)_h` evaluated from its defining sum, with the diagonal and
/// out-of-range conventions. Requires `k <= d`.
pub fn triangle_entry_direct(params: PolytopeParams, k: u32, j: i64) -> Result<Count> {
    if k > params.d {
        return Err(Error::IndexOutOfRange {
            index: k as i64,
            min: 0,
            max: params.d as i64,
        });
    }
    if j < -1 || j > k as i64 {
        return Ok(Count::zero());
    }
    let h = h_vector(params);
    if j == k as i64 {
        return Ok(diagonal_seed(&h, k, params.d));
    }
    Ok(transform_sum(&h, k, j))
}

fn next_row(prev: &[Count], seed: Count) -> Vec<Count> {
    let mut row = Vec::with_capacity(prev.len() + 1);
    row.push(prev[0].clone());
    for pair in prev.windows(2) {
        row.push(&pair[0] + &pair[1]);
    }
    row.push(seed);
    row
}

/// Builds all rows `P(0), …, P(d)` by Pascal's rule.
pub fn build_triangle(params: PolytopeParams) -> FanTriangle {
    let h = h_vector(params);
    let mut rows = Vec::with_capacity(params.d as usize + 1);
    rows.push(vec![Count::one(), diagonal_seed(&h, 0, params.d)]);
    for k in 1..=params.d {
        let row = next_row(&rows[k as usize - 1], diagonal_seed(&h, k, params.d));
        rows.push(row);
    }
    FanTriangle { params, h, rows }
}

/// Row `d` of the triangle.
pub fn f_vector_from_triangle(tri: &FanTriangle) -> ExtendedFSequence {
    ExtendedFSequence::from_entries(tri.params, tri.rows[tri.params.d as usize].clone())
}

/// Row `d` of the triangle, keeping only one row in memory at a time.
pub fn f_vector_streaming(params: PolytopeParams) -> ExtendedFSequence {
    let h = h_vector(params);
    let mut row = vec![Count::one(), diagonal_seed(&h, 0, params.d)];
    for k in 1..=params.d {
        row = next_row(&row, diagonal_seed(&h, k, params.d));
    }
    ExtendedFSequence::from_entries(params, row)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcomb::pascal_row;
    use proptest::prelude::*;

    fn p(v: u32, d: u32) -> PolytopeParams {
        PolytopeParams::new(v, d).unwrap()
    }

    fn nums(xs: &[u64]) -> Vec<Count> {
        xs.iter().map(|&x| Count::from(x)).collect()
    }

    #[test]
    fn rejects_invalid_params() {
        assert!(matches!(
            PolytopeParams::new(4, 4),
            Err(Error::InvalidParams { v: 4, d: 4, .. })
        ));
        assert!(PolytopeParams::new(10, 1).is_err());
        assert!(PolytopeParams::new(10, 0).is_err());
        assert!(PolytopeParams::new(3, 2).is_ok());
        let msg = PolytopeParams::new(4, 4).unwrap_err().to_string();
        assert!(msg.contains("v >= d + 1"), "{msg}");
    }

    #[test]
    fn h_vector_examples() {
        assert_eq!(h_vector(p(6, 4)).entries(), nums(&[1, 2, 3, 2, 1]));
        assert_eq!(h_vector(p(5, 3)).entries(), nums(&[1, 2, 2, 1]));
        for d in 2..12 {
            assert!(h_vector(p(d + 1, d)).entries().iter().all(|x| x.is_one()));
        }
    }

    #[test]
    fn h_vector_is_symmetric_and_rises_to_the_middle() {
        for d in 2..14u32 {
            for v in d + 1..d + 30 {
                let h = h_vector(p(v, d));
                let e = h.entries();
                assert_eq!(e.len(), d as usize + 1);
                assert!(e[0].is_one());
                for j in 0..e.len() {
                    assert_eq!(e[j], e[e.len() - 1 - j]);
                }
                for j in 1..=(d as usize / 2) {
                    assert!(e[j - 1] <= e[j]);
                }
            }
        }
    }

    #[test]
    fn f_entry_examples() {
        assert_eq!(f_entry_direct(p(6, 4), -1).unwrap(), Count::from(1u8));
        assert_eq!(f_entry_direct(p(6, 4), 2).unwrap(), Count::from(18u8));
        assert_eq!(f_entry_direct(p(5, 3), 1).unwrap(), Count::from(9u8));
        assert!(matches!(
            f_entry_direct(p(6, 4), 4),
            Err(Error::IndexOutOfRange {
                index: 4,
                min: -1,
                max: 3
            })
        ));
        assert!(f_entry_direct(p(6, 4), -2).is_err());
    }

    #[test]
    fn f_vector_examples() {
        assert_eq!(
            f_vector_direct(p(5, 4)).entries(),
            nums(&[1, 5, 10, 10, 5, 1])
        );
        assert_eq!(
            f_vector_direct(p(6, 4)).entries(),
            nums(&[1, 6, 15, 18, 9, 1])
        );
        assert_eq!(f_vector_direct(p(5, 3)).entries(), nums(&[1, 5, 9, 6, 1]));
        assert_eq!(f_vector_direct(p(7, 2)).entries(), nums(&[1, 7, 7, 1]));
        let f = f_vector_direct(p(6, 4));
        assert_eq!(f.get(-1), Some(&Count::from(1u8)));
        assert_eq!(f.get(2), Some(&Count::from(18u8)));
        assert_eq!(f.get(5), None);
        assert_eq!(f.get(-2), None);
        assert_eq!(f.f_vector().len(), 5);
        assert_eq!(f.to_string(), "1 6 15 18 9 1");
    }

    #[test]
    fn triangle_for_c_6_4() {
        let tri = build_triangle(p(6, 4));
        let expected = [
            &[1u64, 2][..],
            &[1, 3, 3],
            &[1, 4, 6, 2],
            &[1, 5, 10, 8, 1],
            &[1, 6, 15, 18, 9, 1],
        ];
        assert_eq!(tri.rows().len(), 5);
        for (k, row) in expected.iter().enumerate() {
            assert_eq!(tri.row(k as u32).unwrap(), nums(row).as_slice());
        }
        assert_eq!(tri.get(2, 2), Some(&Count::from(2u8)));
        assert_eq!(tri.get(5, 0), None);
    }

    #[test]
    fn pentagon_triangle() {
        // h = (1, 3, 1)
        let tri = build_triangle(p(5, 2));
        assert_eq!(tri.row(0).unwrap(), nums(&[1, 3]).as_slice());
        assert_eq!(tri.row(1).unwrap(), nums(&[1, 4, 1]).as_slice());
        assert_eq!(tri.row(2).unwrap(), nums(&[1, 5, 5, 1]).as_slice());
    }

    #[test]
    fn triangle_entry_examples() {
        let q = p(6, 4);
        assert_eq!(triangle_entry_direct(q, 2, 2).unwrap(), Count::from(2u8));
        assert_eq!(triangle_entry_direct(q, 2, 1).unwrap(), Count::from(6u8));
        assert_eq!(triangle_entry_direct(q, 3, -2).unwrap(), Count::zero());
        assert_eq!(triangle_entry_direct(q, 3, 4).unwrap(), Count::zero());
        assert_eq!(triangle_entry_direct(q, 4, 4).unwrap(), Count::one());
        assert!(triangle_entry_direct(q, 5, 0).is_err());
    }

    #[test]
    fn simplex_rows_are_pascal_prefixes() {
        for d in 2..16u32 {
            let tri = build_triangle(p(d + 1, d));
            for k in 0..=d {
                let pascal = pascal_row(k as u64 + 1);
                assert_eq!(tri.row(k).unwrap(), &pascal[..k as usize + 2]);
            }
        }
    }

    // Search every Pascal row for the one each low triangle row is a prefix
    // of; the answer must be unique and equal v - d + k.
    #[test]
    fn prefix_row_index_by_search() {
        for d in 2..=8u32 {
            for v in d + 1..=d + 12 {
                let tri = build_triangle(p(v, d));
                for k in 0..d / 2 {
                    let row = tri.row(k).unwrap();
                    let hits: Vec<u64> = (0..=(v as u64 + 2 * d as u64))
                        .filter(|&n| {
                            let pr = pascal_row(n);
                            pr.len() >= row.len() && &pr[..row.len()] == row
                        })
                        .collect();
                    assert_eq!(hits, vec![(v - d + k) as u64], "v={v} d={d} k={k}");
                }
            }
        }
    }

    #[test]
    fn euler_relation_on_known_vectors() {
        assert!(f_vector_direct(p(6, 4)).satisfies_euler());
        assert!(f_vector_direct(p(5, 3)).satisfies_euler());
        assert!(f_vector_direct(p(7, 2)).satisfies_euler());
        let broken = ExtendedFSequence::from_entries(p(6, 4), nums(&[1, 6, 15, 18, 10, 1]));
        assert!(!broken.satisfies_euler());
    }

    #[test]
    fn neighborly_prefix() {
        for d in 2..12u32 {
            for v in d + 1..d + 20 {
                let f = f_vector_direct(p(v, d));
                for j in -1..(d as i64 / 2) {
                    assert_eq!(f.get(j).unwrap(), &binom(v as u64, j + 1));
                }
            }
        }
    }

    #[test]
    fn closed_forms() {
        for d in 2..=20u32 {
            let f = f_vector_direct(p(d + 1, d));
            for j in -1..=d as i64 {
                assert_eq!(f.get(j).unwrap(), &binom(d as u64 + 1, j + 1));
            }
        }
        for v in 3..200u32 {
            let f = f_vector_direct(p(v, 2));
            assert_eq!(f.entries(), nums(&[1, v as u64, v as u64, 1]));
        }
    }

    proptest! {
        #[test]
        fn routes_agree(d in 2u32..18, extra in 1u32..300) {
            let q = p(d + extra, d);
            let tri = build_triangle(q);
            let direct = f_vector_direct(q);
            prop_assert_eq!(&f_vector_from_triangle(&tri), &direct);
            prop_assert_eq!(&f_vector_streaming(q), &direct);
            prop_assert!(direct.satisfies_euler());
        }

        #[test]
        fn recursion_matches_direct_sum(d in 2u32..10, extra in 1u32..40) {
            let q = p(d + extra, d);
            let tri = build_triangle(q);
            for k in 0..=d {
                for j in -2..=(k as i64 + 1) {
                    let built = tri.get(k, j).cloned().unwrap_or_default();
                    prop_assert_eq!(built, triangle_entry_direct(q, k, j).unwrap());
                }
            }
        }
    }
}
