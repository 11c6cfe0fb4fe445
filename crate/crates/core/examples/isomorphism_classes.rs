//! Groups enumerated structures into isomorphism classes by canonical form.
//!
//! cargo run --release --example isomorphism_classes

use ci_quasigroup::{enumerate_classes, Mode, SearchConfig};

pub fn main() {
    for n in 1..=5 {
        let classes = enumerate_classes(&SearchConfig::new(n, Mode::Propagate)).unwrap();
        let sizes: Vec<usize> = classes.iter().map(|c| c.size).collect();
        println!("order {n}: {} classes, sizes {sizes:?}", classes.len());
        for c in classes.iter().filter(|c| c.representative.order() <= 3) {
            println!("  {:?}", c.representative);
        }
    }
}
