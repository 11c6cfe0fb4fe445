//! Checks the left and right CI identities and the translation form
//! `R_{J(x)} ∘ L_x = ε` against hand-picked maps.
//!
//! cargo run --example check_identities

use ci_quasigroup::{check_left_ci, check_right_ci, translation_form_holds, CayleyTable, TotalMap};

pub fn main() {
    let z3 = CayleyTable::cyclic_group(3).unwrap();
    let candidates = [vec![0, 2, 1], vec![0, 1, 2], vec![1, 2, 0]];
    for image in candidates {
        let j = TotalMap::new(image).unwrap();
        let per_x: Vec<bool> = (0..3)
            .map(|x| translation_form_holds(&z3, &j, x).unwrap())
            .collect();
        println!(
            "Z3, J = {:?}: left CI {}, right CI {}, translation form per x {:?}",
            j.image(),
            check_left_ci(&z3, &j).unwrap(),
            check_right_ci(&z3, &j).unwrap(),
            per_x
        );
    }
}
