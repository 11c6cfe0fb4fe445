macro_rules! example {
    ($name:ident, $file:literal) => {
        #[path = $file]
        mod $name;
    };
}

example!(check_identities, "../examples/check_identities.rs");
example!(derive_j, "../examples/derive_j.rs");
example!(solve_left, "../examples/solve_left.rs");
example!(classify_tables, "../examples/classify_tables.rs");
example!(enumerate, "../examples/enumerate.rs");
example!(isomorphism_classes, "../examples/isomorphism_classes.rs");
example!(verify_theorem, "../examples/verify_theorem.rs");
example!(ci_loops, "../examples/ci_loops.rs");
example!(random_quasigroups, "../examples/random_quasigroups.rs");

#[test]
fn examples_run() {
    check_identities::main();
    derive_j::main();
    solve_left::main();
    classify_tables::main();
    enumerate::main();
    isomorphism_classes::main();
    verify_theorem::main();
    ci_loops::main();
    random_quasigroups::main();
}
