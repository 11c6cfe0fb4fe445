//! Backtracking enumerator driven by the left CI identity.
//!
//! Every instance `(x, y)` of `(x · y) · jr(x) = y` becomes a forced
//! assignment as soon as both `x · y` and `jr(x)` are known: cell
//! `(x · y, jr(x))` must hold `y`. Rows are processed in increasing order;
//! for each row `jr(x)` is chosen first and the remaining cells are guessed
//! left to right. Column bijectivity is never used to prune.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::algebra::{Element, TotalMap};
use crate::error::{Error, Result};

use super::{CiStructure, Mode, PartialTable, SearchConfig};

pub const DEFAULT_PROPAGATE_MAX_ORDER: usize = 6;

#[derive(Clone)]
struct State {
    cells: PartialTable,
    jr: Vec<Option<Element>>,
    /// Bit `v` of `row_used[x]` is set when `v` already occurs in row `x`.
    row_used: Vec<u32>,
}

enum Decision {
    Jr(Element),
    Cell(Element, Element),
}

impl State {
    fn new(n: usize) -> Self {
        State {
            cells: PartialTable::new(n),
            jr: vec![None; n],
            row_used: vec![0; n],
        }
    }

    fn order(&self) -> usize {
        self.jr.len()
    }

    /// The next open choice, or `None` once everything is assigned.
    fn next_decision(&self) -> Option<Decision> {
        (0..self.order()).find_map(|x| match self.jr[x] {
            None => Some(Decision::Jr(x)),
            Some(_) => self
                .cells
                .first_unset_in_row(x)
                .map(|y| Decision::Cell(x, y)),
        })
    }

    /// Assigns `cell(x, y) = v` plus everything it forces. `false` on conflict.
    fn assign(&mut self, x: Element, y: Element, v: Element, pruning: bool) -> bool {
        let mut queue = vec![(x, y, v)];
        while let Some((r, c, v)) = queue.pop() {
            match self.cells.get(r, c) {
                Some(w) if w == v => continue,
                Some(_) => return false,
                None => {}
            }
            if pruning && self.row_used[r] & (1 << v) != 0 {
                return false;
            }
            self.cells.set(r, c, v);
            self.row_used[r] |= 1 << v;
            if let Some(j) = self.jr[r] {
                queue.push((v, j, c));
            }
        }
        true
    }

    fn set_jr(&mut self, x: Element, j: Element, pruning: bool) -> bool {
        self.jr[x] = Some(j);
        let n = self.order();
        (0..n).all(|y| match self.cells.get(x, y) {
            Some(c) => self.assign(c, j, y, pruning),
            None => true,
        })
    }

    fn into_structure(self) -> CiStructure {
        let table = self.cells.to_table().expect("complete state");
        let jr = TotalMap::from_raw(
            self.jr
                .into_iter()
                .map(|j| j.expect("complete state"))
                .collect(),
        );
        CiStructure::from_raw(table, jr)
    }
}

struct Searcher<'a> {
    n: usize,
    pruning: bool,
    nodes: &'a AtomicU64,
    node_limit: Option<u64>,
}

impl Searcher<'_> {
    fn tick(&self) -> Result<()> {
        let visited = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        match self.node_limit {
            Some(limit) if visited > limit => Err(Error::NodeLimitExceeded { limit }),
            _ => Ok(()),
        }
    }

    fn children(&self, state: &State, decision: Decision) -> Vec<State> {
        let mut out = Vec::new();
        match decision {
            Decision::Jr(x) => {
                for j in 0..self.n {
                    let mut child = state.clone();
                    if child.set_jr(x, j, self.pruning) {
                        out.push(child);
                    }
                }
            }
            Decision::Cell(x, y) => {
                for v in 0..self.n {
                    if self.pruning && state.row_used[x] & (1 << v) != 0 {
                        continue;
                    }
                    let mut child = state.clone();
                    if child.assign(x, y, v, self.pruning) {
                        out.push(child);
                    }
                }
            }
        }
        out
    }

    fn complete(&self, state: State, out: &mut Vec<CiStructure>) -> Result<()> {
        self.tick()?;
        match state.next_decision() {
            None => out.push(state.into_structure()),
            Some(decision) => {
                for child in self.children(&state, decision) {
                    self.complete(child, out)?;
                }
            }
        }
        Ok(())
    }

    /// States with `jr(0)` and row 0 fully assigned; the unit of parallel work.
    fn frontier(&self, state: State, out: &mut Vec<State>) -> Result<()> {
        self.tick()?;
        match state.next_decision() {
            Some(Decision::Jr(0)) | Some(Decision::Cell(0, _)) => {
                let decision = state.next_decision().expect("matched above");
                for child in self.children(&state, decision) {
                    self.frontier(child, out)?;
                }
            }
            _ => out.push(state),
        }
        Ok(())
    }
}

/// Propagating enumeration with default settings and one worker.
pub fn enumerate_propagate(n: usize) -> Result<Vec<CiStructure>> {
    enumerate_propagate_with(&SearchConfig::new(n, Mode::Propagate))
}

/// Propagating enumeration; the result is sorted and independent of
/// `config.worker_count`.
pub fn enumerate_propagate_with(config: &SearchConfig) -> Result<Vec<CiStructure>> {
    let n = config.order;
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    // row masks are u32
    let limit = config.max_order.min(32);
    if n > limit {
        return Err(Error::OrderTooLarge { order: n, limit });
    }
    let nodes = AtomicU64::new(0);
    let searcher = Searcher {
        n,
        pruning: config.row_pruning,
        nodes: &nodes,
        node_limit: config.node_limit,
    };
    let mut frontier = Vec::new();
    searcher.frontier(State::new(n), &mut frontier)?;

    let workers = config.worker_count.clamp(1, frontier.len().max(1));
    let mut found = if workers == 1 {
        let mut out = Vec::new();
        for state in frontier {
            searcher.complete(state, &mut out)?;
        }
        out
    } else {
        let mut shares: Vec<Vec<State>> = vec![Vec::new(); workers];
        for (i, state) in frontier.into_iter().enumerate() {
            shares[i % workers].push(state);
        }
        let results: Vec<Result<Vec<CiStructure>>> = std::thread::scope(|scope| {
            let handles: Vec<_> = shares
                .into_iter()
                .map(|share| {
                    let searcher = &searcher;
                    scope.spawn(move || {
                        let mut out = Vec::new();
                        for state in share {
                            searcher.complete(state, &mut out)?;
                        }
                        Ok(out)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .collect()
        });
        let mut merged = Vec::new();
        for r in results {
            merged.extend(r?);
        }
        merged
    };
    found.sort();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::is_quasigroup;
    use crate::search::enumerate_oracle;

    #[test]
    fn agrees_with_oracle_small_orders() {
        for n in 1..=3 {
            assert_eq!(
                enumerate_propagate(n).unwrap(),
                enumerate_oracle(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn pruning_is_sound() {
        for n in 1..=3 {
            let config = SearchConfig::new(n, Mode::Propagate).row_pruning(false);
            assert_eq!(
                enumerate_propagate_with(&config).unwrap(),
                enumerate_oracle(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let single = enumerate_propagate(4).unwrap();
        for workers in [2, 3, 8] {
            let config = SearchConfig::new(4, Mode::Propagate).workers(workers);
            assert_eq!(enumerate_propagate_with(&config).unwrap(), single);
        }
    }

    #[test]
    fn order_four_outputs_are_quasigroups() {
        let found = enumerate_propagate(4).unwrap();
        assert!(!found.is_empty());
        assert!(found.iter().all(|s| is_quasigroup(&s.table)));
    }

    #[test]
    fn node_limit_is_enforced() {
        let config = SearchConfig::new(4, Mode::Propagate).node_limit(10);
        assert_eq!(
            enumerate_propagate_with(&config),
            Err(Error::NodeLimitExceeded { limit: 10 })
        );
    }

    #[test]
    fn order_cap() {
        assert_eq!(
            enumerate_propagate(7),
            Err(Error::OrderTooLarge { order: 7, limit: 6 })
        );
    }

    #[test]
    fn forced_cells_follow_the_identity() {
        // jr(0) = 0 and 0·0 = 1 force cell (1, 0) = 0.
        let mut s = State::new(2);
        assert!(s.set_jr(0, 0, true));
        assert!(s.assign(0, 0, 1, true));
        assert_eq!(s.cells.get(1, 0), Some(0));
        // a contradicting guess in row 1 is rejected
        let mut bad = s.clone();
        assert!(!bad.assign(1, 0, 1, true));
    }
}
