//! Finite groupoids on `{0, .., n-1}`: Cayley tables, total maps, permutations
//! and the structural predicates built on translations.
//!
//! Composition is `(f ∘ g)(x) = f(g(x))` everywhere in the crate. The
//! translation identity `R_{J(x)} L_x = ε` is therefore written
//! `compose(&right_translation(t, j(x)), &left_translation(t, x))`, and it
//! applies `L_x` first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of the carrier, identified by its 0-based index.
pub type Element = usize;

/// Default cap on table order accepted by [`CayleyTable::new`].
pub const DEFAULT_MAX_TABLE_ORDER: usize = 16;

/// Dense row-major Cayley table. The entry at `(x, y)` is `x · y`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<Element>,
}

impl CayleyTable {
    /// Validates and builds a table, capping the order at [`DEFAULT_MAX_TABLE_ORDER`].
    pub fn new(order: usize, entries: Vec<Element>) -> Result<Self> {
        Self::with_max_order(order, entries, DEFAULT_MAX_TABLE_ORDER)
    }

    pub fn with_max_order(order: usize, entries: Vec<Element>, max_order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if order > max_order {
            return Err(Error::OrderTooLarge {
                order,
                limit: max_order,
            });
        }
        if entries.len() != order * order {
            return Err(Error::WrongLength {
                expected: order * order,
                actual: entries.len(),
            });
        }
        if let Some((position, &value)) = entries.iter().enumerate().find(|(_, &e)| e >= order) {
            return Err(Error::EntryOutOfRange {
                position,
                value,
                order,
            });
        }
        Ok(CayleyTable { order, entries })
    }

    /// Builds a table from an operation on indices.
    pub fn from_fn(order: usize, op: impl Fn(Element, Element) -> Element) -> Result<Self> {
        let entries = (0..order)
            .flat_map(|x| (0..order).map(move |y| (x, y)))
            .map(|(x, y)| op(x, y))
            .collect();
        Self::new(order, entries)
    }

    pub fn from_rows(rows: &[Vec<Element>]) -> Result<Self> {
        let order = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != order) {
            return Err(Error::WrongLength {
                expected: order,
                actual: bad.len(),
            });
        }
        Self::new(order, rows.concat())
    }

    /// Caller guarantees the invariants; used by the enumerators.
    pub(crate) fn from_raw(order: usize, entries: Vec<Element>) -> Self {
        debug_assert_eq!(entries.len(), order * order);
        debug_assert!(entries.iter().all(|&e| e < order));
        CayleyTable { order, entries }
    }

    /// The cyclic group `Z_n` under addition.
    pub fn cyclic_group(order: usize) -> Result<Self> {
        Self::from_fn(order, |x, y| (x + y) % order.max(1))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: Element, y: Element) -> Element {
        self.entries[x * self.order + y]
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> {
        self.entries.chunks(self.order)
    }

    pub fn transpose(&self) -> CayleyTable {
        let n = self.order;
        let entries = (0..n * n).map(|i| self.get(i % n, i / n)).collect();
        CayleyTable::from_raw(n, entries)
    }

    pub fn contains(&self, a: Element) -> bool {
        a < self.order
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// A map of the carrier into itself; `image[x] = f(x)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TotalMap {
    image: Vec<Element>,
}

impl TotalMap {
    pub fn new(image: Vec<Element>) -> Result<Self> {
        let order = image.len();
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if let Some((position, &value)) = image.iter().enumerate().find(|(_, &e)| e >= order) {
            return Err(Error::EntryOutOfRange {
                position,
                value,
                order,
            });
        }
        Ok(TotalMap { image })
    }

    pub(crate) fn from_raw(image: Vec<Element>) -> Self {
        debug_assert!(image.iter().all(|&e| e < image.len()));
        TotalMap { image }
    }

    pub fn identity(order: usize) -> Self {
        TotalMap {
            image: (0..order).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.image[x]
    }

    pub fn image(&self) -> &[Element] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x == y)
    }
}

impl fmt::Debug for TotalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.image.fmt(f)
    }
}

/// A bijective [`TotalMap`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(TotalMap);

impl Permutation {
    pub fn identity(order: usize) -> Self {
        Permutation(TotalMap::identity(order))
    }

    pub fn new(image: Vec<Element>) -> Result<Self> {
        Permutation::try_from(TotalMap::new(image)?)
    }

    pub fn as_map(&self) -> &TotalMap {
        &self.0
    }

    pub fn into_map(self) -> TotalMap {
        self.0
    }

    pub fn apply(&self, x: Element) -> Element {
        self.0.apply(x)
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }
}

impl TryFrom<TotalMap> for Permutation {
    type Error = Error;

    fn try_from(map: TotalMap) -> Result<Self> {
        if is_bijective(&map) {
            Ok(Permutation(map))
        } else {
            Err(Error::NotBijective)
        }
    }
}

impl AsRef<TotalMap> for Permutation {
    fn as_ref(&self) -> &TotalMap {
        &self.0
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub(crate) fn check_element(t: &CayleyTable, a: Element) -> Result<()> {
    if t.contains(a) {
        Ok(())
    } else {
        Err(Error::ElementOutOfRange {
            element: a,
            order: t.order(),
        })
    }
}

pub(crate) fn check_orders(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::OrderMismatch { left, right })
    }
}

/// `L_a : y ↦ a · y`, i.e. row `a`.
///
/// Panics if `a` is outside the carrier.
pub fn left_translation(t: &CayleyTable, a: Element) -> TotalMap {
    assert!(t.contains(a), "element {a} out of range");
    let n = t.order();
    TotalMap::from_raw(t.entries()[a * n..(a + 1) * n].to_vec())
}

/// `R_a : y ↦ y · a`, i.e. column `a`.
///
/// Panics if `a` is outside the carrier.
pub fn right_translation(t: &CayleyTable, a: Element) -> TotalMap {
    assert!(t.contains(a), "element {a} out of range");
    TotalMap::from_raw((0..t.order()).map(|y| t.get(y, a)).collect())
}

fn all_distinct(values: impl Iterator<Item = Element>, order: usize) -> bool {
    let mut seen = vec![false; order];
    for v in values {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    true
}

pub fn is_bijective(m: &TotalMap) -> bool {
    all_distinct(m.image().iter().copied(), m.order())
}

/// `(f ∘ g)(x) = f(g(x))`.
pub fn compose(f: &TotalMap, g: &TotalMap) -> Result<TotalMap> {
    check_orders(f.order(), g.order())?;
    Ok(TotalMap::from_raw(
        g.image().iter().map(|&x| f.apply(x)).collect(),
    ))
}

pub fn invert(p: &Permutation) -> Permutation {
    let mut image = vec![0; p.order()];
    for (x, &y) in p.as_map().image().iter().enumerate() {
        image[y] = x;
    }
    Permutation(TotalMap::from_raw(image))
}

/// Inverts a map that is only known to be total, failing with [`Error::NotBijective`].
pub fn invert_map(m: &TotalMap) -> Result<Permutation> {
    Permutation::try_from(m.clone()).map(|p| invert(&p))
}

/// Every row of the table is a permutation.
pub fn is_left_quasigroup(t: &CayleyTable) -> bool {
    t.rows()
        .all(|row| all_distinct(row.iter().copied(), t.order()))
}

/// Every column of the table is a permutation.
pub fn is_right_quasigroup(t: &CayleyTable) -> bool {
    let n = t.order();
    (0..n).all(|a| all_distinct((0..n).map(|y| t.get(y, a)), n))
}

/// The table is a Latin square.
pub fn is_quasigroup(t: &CayleyTable) -> bool {
    is_left_quasigroup(t) && is_right_quasigroup(t)
}

/// The two-sided identity, if one exists. It is unique when present.
pub fn identity_element(t: &CayleyTable) -> Option<Element> {
    let n = t.order();
    (0..n).find(|&e| (0..n).all(|x| t.get(e, x) == x && t.get(x, e) == x))
}

/// `m` is bijective and `m(x · y) = m(x) · m(y)` for all `x, y`.
pub fn is_automorphism(t: &CayleyTable, m: &TotalMap) -> bool {
    let n = t.order();
    m.order() == n
        && is_bijective(m)
        && (0..n).all(|x| (0..n).all(|y| m.apply(t.get(x, y)) == t.get(m.apply(x), m.apply(y))))
}
