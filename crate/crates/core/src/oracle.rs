//! Brute-force face counts for small cyclic polytopes.
//!
//! Facets are the `d`-subsets of `{1, …, v}` that satisfy Gale's evenness
//! condition; every face is a subset of some facet. Nothing here uses the
//! h-vector formulas, so the counts serve as an independent check on them.

use std::collections::HashSet;

use crate::cyclic::{ExtendedFSequence, PolytopeParams};
use crate::error::{Error, Result};
use crate::exactcomb::Count;

/// Largest `v` enumerated unless the caller raises the cap.
pub const DEFAULT_ORACLE_CAP: u32 = 16;

/// Hard ceiling imposed by the `u64` bitmask encoding.
pub const MAX_ORACLE_CAP: u32 = 64;

/// Sorted vertex labels drawn from `1..=v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    members: Vec<u32>,
}

impl VertexSet {
    pub fn new(mut members: Vec<u32>) -> Result<Self> {
        members.sort_unstable();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Domain(format!(
                "duplicate vertex label in {members:?}"
            )));
        }
        if members.first() == Some(&0) {
            return Err(Error::Domain("vertex labels start at 1".into()));
        }
        Ok(Self { members })
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    fn mask(&self) -> u64 {
        self.members.iter().fold(0, |m, &x| m | 1 << (x - 1))
    }
}

/// Facets of `C(v,d)` in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetList {
    pub params: PolytopeParams,
    pub facets: Vec<VertexSet>,
}

fn check_cap(params: PolytopeParams, cap: u32) -> Result<()> {
    let cap = cap.min(MAX_ORACLE_CAP);
    if params.v() > cap {
        return Err(Error::ResourceGuard { v: params.v(), cap });
    }
    Ok(())
}

/// Gale's evenness condition: between any two non-members there is an even
/// number of members.
pub fn is_gale_facet(params: PolytopeParams, s: &VertexSet) -> Result<bool> {
    if s.len() != params.d() as usize {
        return Err(Error::Domain(format!(
            "a facet of {params} has {} vertices, got {}",
            params.d(),
            s.len()
        )));
    }
    if let Some(&x) = s.members.last() {
        if x > params.v() {
            return Err(Error::Domain(format!(
                "vertex label {x} exceeds v = {}",
                params.v()
            )));
        }
    }
    let outside: Vec<u32> = (1..=params.v())
        .filter(|x| s.members.binary_search(x).is_err())
        .collect();
    for (a, &u) in outside.iter().enumerate() {
        for &w in &outside[a + 1..] {
            let between = s.members.iter().filter(|&&x| u < x && x < w).count();
            if between % 2 == 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Lexicographic `k`-subsets of `1..=n`.
fn subsets(n: u32, k: usize) -> impl Iterator<Item = Vec<u32>> {
    let mut current: Option<Vec<u32>> = if k as u32 <= n {
        Some((1..=k as u32).collect())
    } else {
        None
    };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let next = current.as_mut().unwrap();
        // rightmost position that can still advance
        match (0..k).rev().find(|&i| next[i] < n - (k - 1 - i) as u32) {
            Some(i) => {
                next[i] += 1;
                for t in i + 1..k {
                    next[t] = next[t - 1] + 1;
                }
            }
            None => current = None,
        }
        Some(out)
    })
}

pub fn enumerate_facets(params: PolytopeParams, cap: u32) -> Result<FacetList> {
    check_cap(params, cap)?;
    let mut facets = Vec::new();
    for members in subsets(params.v(), params.d() as usize) {
        let s = VertexSet { members };
        if is_gale_facet(params, &s)? {
            facets.push(s);
        }
    }
    Ok(FacetList { params, facets })
}

/// f-vector from the downward closure of the Gale facets, with the closing
/// `1` appended.
pub fn oracle_f_vector(params: PolytopeParams, cap: u32) -> Result<ExtendedFSequence> {
    let facets = enumerate_facets(params, cap)?;
    let mut faces: HashSet<u64> = HashSet::new();
    for facet in &facets.facets {
        let full = facet.mask();
        // every submask of the facet, including the empty face and itself
        let mut sub = full;
        loop {
            faces.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & full;
        }
    }
    let d = params.d() as usize;
    let mut counts = vec![0u64; d + 1];
    for m in faces {
        counts[m.count_ones() as usize] += 1;
    }
    let mut entries: Vec<Count> = counts.into_iter().map(Count::from).collect();
    entries.push(Count::from(1u8));
    Ok(ExtendedFSequence::from_entries(params, entries))
}
