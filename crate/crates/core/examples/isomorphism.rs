// C_n and C-_n are isomorphic monoids (via bar) but not isomorphic semirings
// once n > 1.

use catalan::algebra::{check_isomorphism_exists, semiring_from_transformations, Ops};
use catalan::chain_maps::{bar, MonoidClass};
use catalan::Result;

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    for n in 1..=4 {
        let c = semiring_from_transformations(n, MonoidClass::C)?;
        let cm = semiring_from_transformations(n, MonoidClass::Cminus)?;
        let mul = check_isomorphism_exists(&c, &cm, Ops::Mul)?;
        let add = check_isomorphism_exists(&c, &cm, Ops::Add)?;
        let both = check_isomorphism_exists(&c, &cm, Ops::Both)?;
        out += &format!(
            "n = {n}: monoids {:?}, semilattices {:?}, semirings {:?}\n",
            mul.verdict, add.verdict, both.verdict
        );
        if let Some(f) = mul.bijection {
            let pairs: Vec<String> = f.iter().enumerate().map(|(i, &j)| format!("{}->{}", c.element(i), cm.element(j))).collect();
            out += &format!("  found: {}\n", pairs.join(" "));
        }
        let via_bar: Vec<String> = c.elements().iter().map(|a| format!("{a}->{}", bar(a))).collect();
        out += &format!("  bar:   {}\n", via_bar.join(" "));
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
