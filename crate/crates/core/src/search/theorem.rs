//! Machine check that every enumerated left CI-groupoid is a CI-quasigroup.

use std::time::{Duration, Instant};

use crate::algebra::{invert_map, is_bijective, is_quasigroup};
use crate::ci::{check_right_ci, derive_right_j};
use crate::error::Result;

use super::{enumerate, group_classes, CiStructure, Mode, SearchConfig, DEFAULT_CANON_MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub order: usize,
    pub mode: Mode,
    pub pair_count: usize,
    pub table_count: usize,
    /// Number of isomorphism classes; `None` above the canonicalization cap.
    pub class_count: Option<usize>,
    pub all_are_quasigroups: bool,
    pub all_jr_bijective: bool,
    pub all_right_ci_with_jr_inverse: bool,
    pub all_j_unique: bool,
    pub failures: Vec<CiStructure>,
    pub elapsed: Duration,
}

impl TheoremReport {
    pub fn verified(&self) -> bool {
        self.all_are_quasigroups
            && self.all_jr_bijective
            && self.all_right_ci_with_jr_inverse
            && self.all_j_unique
            && self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Copy)]
struct Verdict {
    quasigroup: bool,
    bijective: bool,
    right_ci_with_inverse: bool,
    unique: bool,
}

impl Verdict {
    fn of(s: &CiStructure) -> Self {
        let right_ci_with_inverse = match invert_map(&s.jr) {
            Ok(inv) => check_right_ci(&s.table, inv.as_map()).unwrap_or(false),
            Err(_) => false,
        };
        Verdict {
            quasigroup: is_quasigroup(&s.table),
            bijective: is_bijective(&s.jr),
            right_ci_with_inverse,
            unique: matches!(derive_right_j(&s.table), Ok(Some(ref j)) if *j == s.jr),
        }
    }

    fn passed(self) -> bool {
        self.quasigroup && self.bijective && self.right_ci_with_inverse && self.unique
    }
}

/// Runs the four per-structure assertions over an already enumerated set.
/// `structures` must be sorted, as every enumerator returns them.
pub fn check_structures(
    order: usize,
    mode: Mode,
    structures: &[CiStructure],
) -> Result<TheoremReport> {
    let started = Instant::now();
    let mut report = TheoremReport {
        order,
        mode,
        pair_count: structures.len(),
        table_count: 0,
        class_count: None,
        all_are_quasigroups: true,
        all_jr_bijective: true,
        all_right_ci_with_jr_inverse: true,
        all_j_unique: true,
        failures: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for s in structures {
        let v = Verdict::of(s);
        report.all_are_quasigroups &= v.quasigroup;
        report.all_jr_bijective &= v.bijective;
        report.all_right_ci_with_jr_inverse &= v.right_ci_with_inverse;
        report.all_j_unique &= v.unique;
        if !v.passed() {
            report.failures.push(s.clone());
        }
    }
    let mut tables: Vec<_> = structures.iter().map(|s| &s.table).collect();
    tables.dedup();
    report.table_count = tables.len();
    if order <= DEFAULT_CANON_MAX_ORDER {
        report.class_count = Some(group_classes(structures)?.len());
    }
    report.elapsed = started.elapsed();
    Ok(report)
}

/// Enumerates order `config.order` with the configured engine and checks
/// every structure found.
pub fn verify_theorem(config: &SearchConfig) -> Result<TheoremReport> {
    let started = Instant::now();
    let structures = enumerate(config)?;
    let mut report = check_structures(config.order, config.mode, &structures)?;
    report.elapsed = started.elapsed();
    Ok(report)
}
