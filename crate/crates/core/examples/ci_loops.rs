//! Among all left CI structures up to order 5, picks out the loops and checks
//! `x · J(x) = 1` and that `J` is an automorphism.
//!
//! cargo run --release --example ci_loops

use ci_quasigroup::{ci_loop_report, enumerate_propagate, identity_element};

pub fn main() {
    for n in 1..=5 {
        let structures = enumerate_propagate(n).unwrap();
        let loops: Vec<_> = structures
            .iter()
            .filter_map(|s| identity_element(&s.table).map(|e| (s, e)))
            .collect();
        for (s, _) in &loops {
            assert_eq!(ci_loop_report(&s.table, &s.jr).unwrap(), (true, true));
        }
        let identities: Vec<usize> = loops.iter().map(|(_, e)| *e).collect();
        println!(
            "order {n}: {} of {} structures are CI-loops; identity elements {identities:?}",
            loops.len(),
            structures.len()
        );
    }
}
