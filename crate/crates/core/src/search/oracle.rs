use crate::algebra::{CayleyTable, TotalMap};
use crate::ci::left_ci_holds;
use crate::error::{Error, Result};

use super::CiStructure;

/// Hard cap for the brute-force enumerator: `3^9 · 3^3` candidate pairs.
pub const ORACLE_MAX_ORDER: usize = 3;

/// Advances `digits` as a base-`radix` odometer, most significant digit first.
/// Returns `false` after wrapping past the last value.
fn advance(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

/// Every `(table, j)` pair of order `n` with `(x · y) · j(x) = y`, found by
/// scanning all `n^(n²)` tables against all `n^n` maps.
pub fn enumerate_oracle(n: usize) -> Result<Vec<CiStructure>> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if n > ORACLE_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: ORACLE_MAX_ORDER,
        });
    }
    let mut found = Vec::new();
    let mut entries = vec![0; n * n];
    loop {
        let table = CayleyTable::from_raw(n, entries.clone());
        let mut image = vec![0; n];
        loop {
            let j = TotalMap::from_raw(image.clone());
            if left_ci_holds(&table, &j) {
                found.push(CiStructure::from_raw(table.clone(), j));
            }
            if !advance(&mut image, n) {
                break;
            }
        }
        if !advance(&mut entries, n) {
            break;
        }
    }
    found.sort();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odometer_counts_every_value() {
        let mut digits = vec![0; 3];
        let mut count = 1;
        while advance(&mut digits, 2) {
            count += 1;
        }
        assert_eq!(count, 8);
        assert_eq!(digits, vec![0, 0, 0]);
    }

    #[test]
    fn order_one() {
        let found = enumerate_oracle(1).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].table.entries(), &[0]);
        assert_eq!(found[0].jr.image(), &[0]);
    }

    #[test]
    fn order_two() {
        let found = enumerate_oracle(2).unwrap();
        let pairs: Vec<_> = found
            .iter()
            .map(|s| (s.table.entries().to_vec(), s.jr.image().to_vec()))
            .collect();
        assert_eq!(
            pairs,
            vec![
                (vec![0, 1, 1, 0], vec![0, 1]),
                (vec![1, 0, 0, 1], vec![0, 1])
            ]
        );
    }

    #[test]
    fn order_three_matches_affine_criterion() {
        // x·y = ax + by + c over Z3 is left CI iff ab ≡ 1 (mod 3); every
        // quasigroup of order 3 is affine, so these are all of them.
        let mut affine: Vec<Vec<usize>> = Vec::new();
        for a in 1..3 {
            for b in 1..3 {
                if (a * b) % 3 != 1 {
                    continue;
                }
                for c in 0..3 {
                    affine.push(
                        (0..9)
                            .map(|i| (a * (i / 3) + b * (i % 3) + c) % 3)
                            .collect(),
                    );
                }
            }
        }
        affine.sort();
        let found = enumerate_oracle(3).unwrap();
        let tables: Vec<Vec<usize>> = found.iter().map(|s| s.table.entries().to_vec()).collect();
        assert_eq!(found.len(), 6);
        assert_eq!(tables, affine);
    }

    #[test]
    fn rejects_large_orders() {
        assert_eq!(
            enumerate_oracle(4),
            Err(Error::OrderTooLarge { order: 4, limit: 3 })
        );
        assert_eq!(enumerate_oracle(0), Err(Error::ZeroOrder));
    }
}
