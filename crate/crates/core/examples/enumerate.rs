//! Enumerates left CI-groupoids with both engines and confirms they agree,
//! then shows the propagating engine is independent of the worker count.
//!
//! cargo run --release --example enumerate

use ci_quasigroup::search::enumerate_propagate_with;
use ci_quasigroup::{enumerate_oracle, enumerate_propagate, Mode, SearchConfig};

pub fn main() {
    for n in 1..=3 {
        let oracle = enumerate_oracle(n).unwrap();
        let propagate = enumerate_propagate(n).unwrap();
        assert_eq!(oracle, propagate);
        println!("order {n}: {} structures, engines agree", oracle.len());
    }
    for n in 4..=5 {
        let single = enumerate_propagate(n).unwrap();
        let parallel =
            enumerate_propagate_with(&SearchConfig::new(n, Mode::Propagate).workers(4)).unwrap();
        assert_eq!(single, parallel);
        println!(
            "order {n}: {} structures, identical with 1 and 4 workers",
            single.len()
        );
    }
    let first = &enumerate_propagate(4).unwrap()[0];
    println!("first order-4 structure: {first:?}");
}
