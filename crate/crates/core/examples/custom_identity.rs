// Parse identities from text and test them on built-in carriers and on a
// hand-made semiring (the three-element chain under max and min).

use std::sync::Arc;

use catalan::algebra::{check_identity_with, semiring_from_transformations, CheckOptions, FiniteSemiring, Identity};
use catalan::chain_maps::MonoidClass;
use catalan::Result;

pub fn run_example() -> Result<String> {
    let opts = CheckOptions::default();
    let chain = FiniteSemiring::new(
        "max-min chain",
        vec![0u8, 1, 2],
        Arc::new(|a: &u8, b: &u8| *a.max(b)),
        Arc::new(|a: &u8, b: &u8| *a.min(b)),
    )?;
    let c4 = semiring_from_transformations(4, MonoidClass::C)?;

    let mut out = String::new();
    for text in ["x y = y x", "x^2 = x", "x + x y = x", "x y x = x y", "(x + y)^2 = x^2 + y^2"] {
        let id: Identity = text.parse()?;
        let on_chain = check_identity_with(&id, &chain, &opts)?;
        let on_c4 = check_identity_with(&id, &c4, &opts)?;
        out += &format!("{:<22} chain: {:?}  C_4: {:?}", id.to_string(), on_chain.verdict, on_c4.verdict);
        if let Some(w) = on_c4.witness {
            let b: Vec<String> = w.bindings.iter().map(|b| format!("{}={}", b.variable, b.value)).collect();
            out += &format!(" at {}", b.join(", "));
        }
        out.push('\n');
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
