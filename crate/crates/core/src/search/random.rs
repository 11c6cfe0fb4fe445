use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{CayleyTable, Element};
use crate::error::{Error, Result};

pub const DEFAULT_RANDOM_MAX_ORDER: usize = 9;

/// Nodes allowed per attempt before the fill restarts from an empty grid.
const RESTART_BUDGET: usize = 20_000;

/// A random Latin square of order `n`, reproducible from `seed`.
///
/// Cells are filled row-major by backtracking with a random value order per
/// cell; an attempt that exhausts its node budget restarts from scratch.
pub fn random_quasigroup(n: usize, seed: u64) -> Result<CayleyTable> {
    random_quasigroup_with_limit(n, seed, DEFAULT_RANDOM_MAX_ORDER)
}

pub fn random_quasigroup_with_limit(n: usize, seed: u64, max_order: usize) -> Result<CayleyTable> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if n > max_order {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: max_order,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut fill = Fill::new(n);
        if fill.run(0, &mut rng) == Outcome::Done {
            return Ok(CayleyTable::from_raw(n, fill.cells));
        }
    }
}

#[derive(PartialEq, Eq)]
enum Outcome {
    Done,
    DeadEnd,
    Restart,
}

struct Fill {
    n: usize,
    cells: Vec<Element>,
    row_used: Vec<u64>,
    col_used: Vec<u64>,
    nodes: usize,
}

impl Fill {
    fn new(n: usize) -> Self {
        Fill {
            n,
            cells: vec![0; n * n],
            row_used: vec![0; n],
            col_used: vec![0; n],
            nodes: 0,
        }
    }

    fn run(&mut self, pos: usize, rng: &mut ChaCha8Rng) -> Outcome {
        if pos == self.n * self.n {
            return Outcome::Done;
        }
        self.nodes += 1;
        if self.nodes > RESTART_BUDGET {
            return Outcome::Restart;
        }
        let (r, c) = (pos / self.n, pos % self.n);
        let taken = self.row_used[r] | self.col_used[c];
        let mut values: Vec<Element> = (0..self.n).filter(|v| taken & (1 << v) == 0).collect();
        values.shuffle(rng);
        for v in values {
            self.cells[pos] = v;
            self.row_used[r] |= 1 << v;
            self.col_used[c] |= 1 << v;
            match self.run(pos + 1, rng) {
                Outcome::DeadEnd => {}
                done_or_restart => return done_or_restart,
            }
            self.row_used[r] &= !(1 << v);
            self.col_used[c] &= !(1 << v);
        }
        Outcome::DeadEnd
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::is_quasigroup;

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(
            random_quasigroup(7, 42).unwrap(),
            random_quasigroup(7, 42).unwrap()
        );
    }

    #[test]
    fn outputs_are_latin_squares() {
        for n in 1..=9 {
            for seed in 0..5 {
                assert!(
                    is_quasigroup(&random_quasigroup(n, seed).unwrap()),
                    "n={n} seed={seed}"
                );
            }
        }
    }

    #[test]
    fn order_one() {
        assert_eq!(random_quasigroup(1, 123).unwrap().entries(), &[0]);
    }

    #[test]
    fn seeds_vary_output() {
        let distinct: std::collections::BTreeSet<_> =
            (0..20).map(|s| random_quasigroup(5, s).unwrap()).collect();
        assert!(distinct.len() > 1);
    }

    #[test]
    fn order_cap() {
        assert!(matches!(
            random_quasigroup(10, 0),
            Err(Error::OrderTooLarge { .. })
        ));
    }
}
