use crate::algebra::{CayleyTable, Element};

/// A Cayley table under construction; unset cells are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialTable {
    order: usize,
    entries: Vec<Option<Element>>,
}

impl PartialTable {
    pub fn new(order: usize) -> Self {
        PartialTable {
            order,
            entries: vec![None; order * order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: Element, y: Element) -> Option<Element> {
        self.entries[x * self.order + y]
    }

    /// Panics if `value` is out of range.
    #[inline]
    pub fn set(&mut self, x: Element, y: Element, value: Element) {
        assert!(value < self.order, "value {value} out of range");
        self.entries[x * self.order + y] = Some(value);
    }

    pub fn first_unset_in_row(&self, x: Element) -> Option<Element> {
        (0..self.order).find(|&y| self.get(x, y).is_none())
    }

    pub fn is_complete(&self) -> bool {
        self.entries.iter().all(Option::is_some)
    }

    /// The completed table, or `None` while any cell is unset.
    pub fn to_table(&self) -> Option<CayleyTable> {
        let entries = self.entries.iter().copied().collect::<Option<Vec<_>>>()?;
        Some(CayleyTable::from_raw(self.order, entries))
    }
}

impl From<&CayleyTable> for PartialTable {
    fn from(t: &CayleyTable) -> Self {
        PartialTable {
            order: t.order(),
            entries: t.entries().iter().copied().map(Some).collect(),
        }
    }
}
