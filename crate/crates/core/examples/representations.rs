// The three matrix representations and the checks behind them.
//
// B (graph matrix) respects composition but not pointwise max.
// S is an isomorphism of C_n onto the stair triangular matrices.
// M embeds C-_{n+1} into lower triangular n x n matrices.

use catalan::algebra::{check_homomorphism, check_injective, semiring_from_matrices, semiring_from_transformations, Ops};
use catalan::chain_maps::MonoidClass;
use catalan::representations::{rep_b, rep_m, rep_s, RepresentationRecord};
use catalan::{Result, Shape, Transformation};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    for a in ["111", "112", "113", "122", "123"] {
        let a: Transformation = a.parse()?;
        out += &format!("M({a}) = {}\n", rep_m(&a)?.to_string().replace('\n', "/"));
    }

    let record = RepresentationRecord::new(&"1244".parse()?);
    out += &format!("{}\n", serde_json::to_string(&record).expect("plain data"));

    let c3 = semiring_from_transformations(3, MonoidClass::C)?;
    let upper3 = semiring_from_matrices(3, Shape::Upper)?;
    let stair3 = semiring_from_matrices(3, Shape::Stair)?;
    let rep_s = |a: &Transformation| rep_s(a).expect("extensive");

    let mul = check_homomorphism(rep_b, &c3, &upper3, Ops::Mul)?;
    let add = check_homomorphism(rep_b, &c3, &upper3, Ops::Add)?;
    out += &format!("B on C_3: products {:?}, sums {:?}\n", mul.verdict, add.verdict);
    if let Some(w) = add.witness {
        let pair: Vec<&str> = w.bindings.iter().map(|b| b.value.as_str()).collect();
        out += &format!("  sums break at {pair:?}: {} vs {}\n", w.lhs, w.rhs);
    }
    out += &format!(
        "S on C_3: injective {:?}, semiring map {:?}\n",
        check_injective(rep_s, &c3).verdict,
        check_homomorphism(rep_s, &c3, &stair3, Ops::Both)?.verdict
    );
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
