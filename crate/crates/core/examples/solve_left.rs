//! Solves `a · x = b` in a left CI table with `x = b · J_r(a)` and checks
//! every answer against the table.
//!
//! cargo run --example solve_left

use ci_quasigroup::{derive_right_j, solve_left, CayleyTable};

pub fn main() {
    let t = CayleyTable::from_fn(5, |x, y| (3 * x + 2 * y + 1) % 5).unwrap();
    let jr = derive_right_j(&t)
        .unwrap()
        .expect("3 * 2 = 1 mod 5, so the table is left CI");
    println!("x·y = 3x + 2y + 1 (mod 5), J_r = {:?}", jr.image());
    for a in 0..5 {
        let row: Vec<usize> = (0..5).map(|b| solve_left(&t, &jr, a, b).unwrap()).collect();
        assert!(row.iter().enumerate().all(|(b, &x)| t.get(a, x) == b));
        println!("  a = {a}: solutions for b = 0..4 are {row:?}");
    }
}
