// Young diagrams inside the staircase (n, n-1, ..., 1), obtained from the
// matrices M(a), a in C-_{n+1}. Rows are counted from the bottom.

use catalan::chain_maps::{enumerate, MonoidClass};
use catalan::counting::catalan;
use catalan::representations::{enumerate_staircase_partitions, matrix_to_partition, rep_m};
use catalan::Result;

pub fn run_example() -> Result<String> {
    let n = 2;
    let mut out = String::new();
    for a in enumerate(n + 1, MonoidClass::Cminus)? {
        let m = rep_m(&a)?;
        let p = matrix_to_partition(&m)?;
        out += &format!("{a} -> {} -> {p}\n{}\n\n", m.to_string().replace('\n', "/"), p.diagram(n));
    }
    for n in 1..=8 {
        let count = enumerate_staircase_partitions(n)?.len();
        assert_eq!(count as u128, catalan(n as u64 + 1));
        out += &format!("diagrams in staircase({n}): {count}\n");
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
