// Negating the strict upper triangle of S(a), then dropping the first column
// and last row, lands on P M(bar a) P. Shown in full for a = 1244 and checked
// for every extensive map on five points.

use catalan::chain_maps::{enumerate, MonoidClass};
use catalan::representations::ComplementSteps;
use catalan::{Result, Transformation};

pub fn run_example() -> Result<String> {
    let a: Transformation = "1244".parse()?;
    let steps = ComplementSteps::new(&a)?;
    let mut out = format!(
        "a = {}\nS(a) =\n{}\nnegated =\n{}\ncropped =\n{}\nbar a = {}\nM(bar a) =\n{}\nP M(bar a) P =\n{}\n",
        steps.alpha, steps.stair, steps.negated, steps.cropped, steps.alpha_bar, steps.m_of_bar, steps.pmp_of_bar
    );
    assert!(steps.closes());

    let all = enumerate(5, MonoidClass::C)?;
    for b in &all {
        assert!(ComplementSteps::new(b)?.closes(), "{b}");
    }
    out += &format!("cycle closes for all {} maps in C_5\n", all.len());
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
