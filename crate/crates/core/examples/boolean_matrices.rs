// Boolean matrix arithmetic: max for addition, max-min for multiplication,
// and conjugation by the antidiagonal matrix.

use catalan::boolean_matrix::{antidiagonal, conjugate_by_p, enumerate_matrices, mat_add, mat_mul, Shape};
use catalan::{BoolMatrix, Result};

pub fn run_example() -> Result<String> {
    let a: BoolMatrix = "110/011/001".parse()?;
    let b: BoolMatrix = "100/110/011".parse()?;
    let mut out = String::new();
    out += &format!("A =\n{a}\nB =\n{b}\n");
    out += &format!("A + B =\n{}\n", mat_add(&a, &b)?);
    out += &format!("A B =\n{}\n", mat_mul(&a, &b)?);
    out += &format!("P =\n{}\n", antidiagonal(3));
    out += &format!("P B P =\n{}\n", conjugate_by_p(&b));

    // conjugation by P swaps lower and upper triangular matrices
    for m in enumerate_matrices(3, Shape::Lower)? {
        assert!(conjugate_by_p(&m).is_upper_triangular());
    }
    for shape in [Shape::Full, Shape::Upper, Shape::Lower, Shape::Stair] {
        let n = 3;
        out += &format!("|{}({n})| = {}\n", shape.name(), enumerate_matrices(n, shape)?.len());
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
