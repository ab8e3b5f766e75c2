// The covering relation of the pointwise order on O_3 as a Graphviz digraph.
// Pipe into `dot -Tsvg` to draw it.

use catalan::chain_maps::{enumerate, hasse_edges, MonoidClass, Transformation};
use catalan::Result;

pub fn run_example() -> Result<String> {
    let elements = enumerate(3, MonoidClass::O)?;
    let edges = hasse_edges(&elements);
    let identity = Transformation::identity(3);

    let mut dot = String::from("digraph O_3 {\n  rankdir=BT;\n");
    for e in &elements {
        // the extensive maps sit above the identity, the decreasing ones below
        let color = if e == &identity {
            "black"
        } else if e.is_extensive() {
            "blue"
        } else if e.is_decreasing() {
            "red"
        } else {
            "gray"
        };
        dot += &format!("  \"{e}\" [color={color}];\n");
    }
    for (a, b) in edges {
        dot += &format!("  \"{}\" -> \"{}\";\n", elements[a], elements[b]);
    }
    dot.push_str("}\n");
    Ok(dot)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
