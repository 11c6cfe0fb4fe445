//! Isomorphism reduction by exhaustive relabeling.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::algebra::{CayleyTable, Permutation, TotalMap};
use crate::error::{Error, Result};

use super::{enumerate, CiStructure, SearchConfig};

pub const DEFAULT_CANON_MAX_ORDER: usize = 7;

/// Transports a structure along `sigma`: the new table satisfies
/// `σ(x) ·' σ(y) = σ(x · y)` and the new map is `σ ∘ jr ∘ σ⁻¹`.
///
/// Panics if the orders differ.
pub fn relabel(s: &CiStructure, sigma: &Permutation) -> CiStructure {
    let n = s.order();
    assert_eq!(sigma.order(), n, "relabeling of the wrong order");
    let mut entries = vec![0; n * n];
    let mut image = vec![0; n];
    for x in 0..n {
        let sx = sigma.apply(x);
        image[sx] = sigma.apply(s.jr.apply(x));
        for y in 0..n {
            entries[sx * n + sigma.apply(y)] = sigma.apply(s.table.get(x, y));
        }
    }
    CiStructure {
        table: CayleyTable::from_raw(n, entries),
        jr: TotalMap::from_raw(image),
    }
}

/// The lexicographically least relabeling of `s`, comparing the flattened
/// table first and `jr` second.
pub fn canonical_form(s: &CiStructure) -> Result<CiStructure> {
    canonical_form_with_limit(s, DEFAULT_CANON_MAX_ORDER)
}

pub fn canonical_form_with_limit(s: &CiStructure, max_order: usize) -> Result<CiStructure> {
    let n = s.order();
    if n > max_order {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: max_order,
        });
    }
    let best = (0..n)
        .permutations(n)
        .map(|image| relabel(s, &Permutation::new(image).expect("permutation")))
        .min()
        .expect("at least one relabeling");
    Ok(best)
}

/// One isomorphism class: its canonical representative and how many of the
/// enumerated structures fall into it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoClass {
    pub representative: CiStructure,
    pub size: usize,
}

/// Groups structures by canonical form; classes come out sorted by representative.
pub fn group_classes(structures: &[CiStructure]) -> Result<Vec<IsoClass>> {
    let mut classes: BTreeMap<CiStructure, usize> = BTreeMap::new();
    for s in structures {
        *classes.entry(canonical_form(s)?).or_default() += 1;
    }
    Ok(classes
        .into_iter()
        .map(|(representative, size)| IsoClass {
            representative,
            size,
        })
        .collect())
}

pub fn enumerate_classes(config: &SearchConfig) -> Result<Vec<IsoClass>> {
    group_classes(&enumerate(config)?)
}
