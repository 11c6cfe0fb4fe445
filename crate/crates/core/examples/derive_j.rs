//! Derives `J_r` and `J_l` from bare tables and shows `J_l = J_r⁻¹`.
//!
//! cargo run --example derive_j

use ci_quasigroup::{derive_left_j, derive_right_j, invert_map, CayleyTable};

pub fn main() {
    let tables = [
        ("Z3", CayleyTable::cyclic_group(3).unwrap()),
        ("Z4", CayleyTable::cyclic_group(4).unwrap()),
        (
            "2x + 2y mod 3",
            CayleyTable::from_fn(3, |x, y| (2 * x + 2 * y) % 3).unwrap(),
        ),
        (
            "y - x mod 3",
            CayleyTable::from_fn(3, |x, y| (y + 3 - x) % 3).unwrap(),
        ),
    ];
    for (name, t) in &tables {
        let jr = derive_right_j(t).unwrap();
        let jl = derive_left_j(t).unwrap();
        match (&jr, &jl) {
            (Some(jr), Some(jl)) => {
                let inverse = invert_map(jr).unwrap();
                println!(
                    "{name}: J_r = {:?}, J_l = {:?}, J_l = J_r^-1: {}",
                    jr.image(),
                    jl.image(),
                    jl == inverse.as_map()
                );
            }
            _ => println!(
                "{name}: no J_r (left CI fails), J_l {:?}",
                jl.map(|j| j.image().to_vec())
            ),
        }
    }
}
