// Every claim at every size up to 3, as run by `catalan report-all`.

use catalan::algebra::CheckOptions;
use catalan::verify::verify_all;
use catalan::Result;

pub fn run_example() -> Result<String> {
    let opts = CheckOptions {
        parallel: true,
        ..CheckOptions::default()
    };
    let checks = verify_all(3, &opts)?;
    let mut out = String::new();
    for c in &checks {
        out += &format!("{} {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name);
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    out += &format!("{passed}/{} passed\n", checks.len());
    assert_eq!(passed, checks.len());
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
