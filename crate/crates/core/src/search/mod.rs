//! Exhaustive enumeration of left CI-groupoids.
//!
//! Two enumerators produce the same sets: [`enumerate_oracle`] walks every
//! table and every map with no structural assumption, and
//! [`enumerate_propagate`] backtracks with the CI identity as a propagation
//! rule. Both return structures sorted by `(flattened table, jr)`.

mod canon;
mod oracle;
mod partial;
mod propagate;
mod random;
mod theorem;

use std::fmt;
use std::str::FromStr;

use crate::algebra::{CayleyTable, TotalMap};
use crate::ci::left_ci_holds;
use crate::error::{Error, Result};

pub use canon::{
    canonical_form, canonical_form_with_limit, enumerate_classes, group_classes, relabel, IsoClass,
    DEFAULT_CANON_MAX_ORDER,
};
pub use oracle::{enumerate_oracle, ORACLE_MAX_ORDER};
pub use partial::PartialTable;
pub use propagate::{enumerate_propagate, enumerate_propagate_with, DEFAULT_PROPAGATE_MAX_ORDER};
pub use random::{random_quasigroup, random_quasigroup_with_limit, DEFAULT_RANDOM_MAX_ORDER};
pub use theorem::{check_structures, verify_theorem, TheoremReport};

/// A left CI-groupoid: a table together with the map `jr` satisfying
/// `(x · y) · jr(x) = y`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CiStructure {
    pub table: CayleyTable,
    pub jr: TotalMap,
}

impl CiStructure {
    /// Fails with [`Error::PreconditionViolated`] unless the pair is left CI.
    pub fn new(table: CayleyTable, jr: TotalMap) -> Result<Self> {
        if crate::ci::check_left_ci(&table, &jr)? {
            Ok(CiStructure { table, jr })
        } else {
            Err(Error::PreconditionViolated(
                "table is not left CI for the given map",
            ))
        }
    }

    pub(crate) fn from_raw(table: CayleyTable, jr: TotalMap) -> Self {
        debug_assert!(left_ci_holds(&table, &jr));
        CiStructure { table, jr }
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }
}

impl fmt::Debug for CiStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CiStructure {{ table: {:?}, jr: {:?} }}",
            self.table, self.jr
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Oracle,
    Propagate,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Oracle => "oracle",
            Mode::Propagate => "propagate",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "oracle" => Ok(Mode::Oracle),
            "propagate" => Ok(Mode::Propagate),
            other => Err(format!(
                "unknown mode `{other}` (expected oracle or propagate)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub order: usize,
    pub mode: Mode,
    pub up_to_isomorphism: bool,
    pub worker_count: usize,
    pub node_limit: Option<u64>,
    /// Build rows as permutations during propagation. Turning this off is
    /// only useful to confirm that the pruning loses no solutions.
    pub row_pruning: bool,
    /// Cap on the order accepted by the propagating enumerator.
    pub max_order: usize,
}

impl SearchConfig {
    pub fn new(order: usize, mode: Mode) -> Self {
        SearchConfig {
            order,
            mode,
            up_to_isomorphism: false,
            worker_count: 1,
            node_limit: None,
            row_pruning: true,
            max_order: DEFAULT_PROPAGATE_MAX_ORDER,
        }
    }

    pub fn workers(mut self, worker_count: usize) -> Self {
        self.worker_count = worker_count.max(1);
        self
    }

    pub fn classes(mut self, up_to_isomorphism: bool) -> Self {
        self.up_to_isomorphism = up_to_isomorphism;
        self
    }

    pub fn node_limit(mut self, limit: u64) -> Self {
        self.node_limit = Some(limit);
        self
    }

    pub fn row_pruning(mut self, enabled: bool) -> Self {
        self.row_pruning = enabled;
        self
    }
}

/// Runs the enumerator selected by `config.mode`.
pub fn enumerate(config: &SearchConfig) -> Result<Vec<CiStructure>> {
    match config.mode {
        Mode::Oracle => enumerate_oracle(config.order),
        Mode::Propagate => enumerate_propagate_with(config),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mode_parsing() {
        assert_eq!("oracle".parse::<Mode>(), Ok(Mode::Oracle));
        assert_eq!("PROPAGATE".parse::<Mode>(), Ok(Mode::Propagate));
        assert!("dlx".parse::<Mode>().is_err());
    }

    #[test]
    fn structure_requires_left_ci() {
        let z2 = CayleyTable::cyclic_group(2).unwrap();
        assert!(CiStructure::new(z2.clone(), TotalMap::identity(2)).is_ok());
        assert!(CiStructure::new(z2, TotalMap::new(vec![1, 0]).unwrap()).is_err());
    }
}
