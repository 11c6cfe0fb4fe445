//! Samples seeded random Latin squares and reports how many are left CI.
//!
//! cargo run --release --example random_quasigroups

use ci_quasigroup::io::{render_document, TableDocument};
use ci_quasigroup::{derive_right_j, random_quasigroup};

pub fn main() {
    let sample = random_quasigroup(5, 2024).unwrap();
    print!(
        "{}",
        render_document(&TableDocument::new(sample, None, "sample"))
    );
    for n in 3..=6 {
        let hits = (0..500)
            .filter(|&seed| {
                derive_right_j(&random_quasigroup(n, seed).unwrap())
                    .unwrap()
                    .is_some()
            })
            .count();
        println!("order {n}: {hits}/500 random quasigroups are left CI");
    }
}
