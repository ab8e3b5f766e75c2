// Runs every example in-process so the walkthroughs cannot rot.

#[allow(dead_code)]
mod catalan_counts {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/catalan_counts.rs"));
}

#[allow(dead_code)]
mod hasse_dot {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/hasse_dot.rs"));
}

#[allow(dead_code)]
mod boolean_matrices {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/boolean_matrices.rs"));
}

#[allow(dead_code)]
mod representations {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/representations.rs"));
}

#[allow(dead_code)]
mod complementarity {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/complementarity.rs"));
}

#[allow(dead_code)]
mod young_diagrams {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/young_diagrams.rs"));
}

#[allow(dead_code)]
mod optimality {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/optimality.rs"));
}

#[allow(dead_code)]
mod isomorphism {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/isomorphism.rs"));
}

#[allow(dead_code)]
mod custom_identity {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/custom_identity.rs"));
}

#[allow(dead_code)]
mod reproduce_all {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/reproduce_all.rs"));
}

#[test]
fn catalan_counts_example_runs() {
    let out = catalan_counts::run_example().unwrap();
    assert!(out.contains(" 8    6435   1430    1430        1430        1430"));
}

#[test]
fn hasse_dot_example_runs() {
    let out = hasse_dot::run_example().unwrap();
    assert_eq!(out.matches("->").count(), 12);
    assert!(out.contains("\"123\" [color=black]"));
}

#[test]
fn boolean_matrices_example_runs() {
    let out = boolean_matrices::run_example().unwrap();
    assert!(out.contains("|stair(3)| = 5"));
}

#[test]
fn representations_example_runs() {
    let out = representations::run_example().unwrap();
    assert!(out.contains("M(123) = 10/11"));
    assert!(out.contains("products Holds, sums Fails"));
}

#[test]
fn complementarity_example_runs() {
    let out = complementarity::run_example().unwrap();
    assert!(out.contains("bar a = 1134"));
    assert!(out.contains("all 42 maps"));
}

#[test]
fn young_diagrams_example_runs() {
    let out = young_diagrams::run_example().unwrap();
    assert!(out.contains("123 -> 10/11 -> (2,1)"));
    assert!(out.contains("staircase(8): 4862"));
}

#[test]
fn optimality_example_runs() {
    let out = optimality::run_example().unwrap();
    assert!(out.contains("x = 233, y = 223: 233 vs 333"));
}

#[test]
fn isomorphism_example_runs() {
    let out = isomorphism::run_example().unwrap();
    assert!(out.contains("n = 2: monoids Holds, semilattices Holds, semirings Fails"));
    assert!(out.contains("n = 3: monoids Holds, semilattices Fails, semirings Fails"));
}

#[test]
fn custom_identity_example_runs() {
    let out = custom_identity::run_example().unwrap();
    assert_eq!(out.lines().count(), 5);
}

#[test]
fn reproduce_all_example_runs() {
    let out = reproduce_all::run_example().unwrap();
    assert!(out.ends_with("149/149 passed\n"));
}
