// The two identities of upper triangular n x n Boolean matrices, and maps in
// slightly larger Catalan semirings that violate them.

use catalan::algebra::{
    check_identity_with, optimality_witnesses, semiring_from_matrices, semiring_from_transformations,
    triangular_identities, CheckOptions,
};
use catalan::chain_maps::{power, MonoidClass};
use catalan::{Result, Shape};

pub fn run_example() -> Result<String> {
    let opts = CheckOptions::default();
    let mut out = String::new();
    for n in 2..=3u32 {
        let (first, second) = triangular_identities(n)?;
        let upper = semiring_from_matrices(n as usize, Shape::Upper)?;
        out += &format!("upper({n}):\n");
        for id in [&first, &second] {
            let r = check_identity_with(id, &upper, &opts)?;
            out += &format!("  {id}: {:?} over {} assignments\n", r.verdict, r.pairs_checked);
        }

        let w = optimality_witnesses(n)?;
        let c_big = semiring_from_transformations(n as usize + 2, MonoidClass::C)?;
        let r = check_identity_with(&first, &c_big, &opts)?;
        out += &format!("  {first} in C_{}: {:?}\n", n + 2, r.verdict);
        out += &format!(
            "    a = {}: a^{n} = {}, a^{} = {}\n",
            w.alpha,
            power(&w.alpha, n),
            n + 1,
            power(&w.alpha, n + 1)
        );

        let c_next = semiring_from_transformations(n as usize + 1, MonoidClass::C)?;
        let beta = c_next.index_of(&w.beta).expect("extensive");
        let gamma = c_next.index_of(&w.gamma).expect("extensive");
        let (l, r) = second.evaluate(&[beta, gamma], &c_next);
        out += &format!(
            "  {second} in C_{} at x = {}, y = {}: {} vs {}\n",
            n + 1,
            w.beta,
            w.gamma,
            c_next.element(l),
            c_next.element(r)
        );
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
