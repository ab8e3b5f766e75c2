// Sizes of the three monoids of order-preserving maps and of the stair
// triangular matrices, next to their closed forms.

use catalan::boolean_matrix::{enumerate_matrices, Shape};
use catalan::chain_maps::{enumerate, MonoidClass};
use catalan::counting::{catalan, order_preserving_count};
use catalan::Result;

pub fn run_example() -> Result<String> {
    let mut out = String::from(" n   |O_n|  |C_n|  |C-_n|  |stair(n)|  Catalan(n)\n");
    for n in 1..=8 {
        let o = enumerate(n, MonoidClass::O)?.len();
        let c = enumerate(n, MonoidClass::C)?.len();
        let cm = enumerate(n, MonoidClass::Cminus)?.len();
        let stair = enumerate_matrices(n, Shape::Stair)?.len();
        assert_eq!(o as u128, order_preserving_count(n as u64));
        assert_eq!(c, cm);
        out += &format!("{n:2} {o:7} {c:6} {cm:7} {stair:11} {:11}\n", catalan(n as u64));
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
