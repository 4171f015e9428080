use std::fmt::Write;

use super::Diagram;

/// Renders the plane graph of a diagram: vertices on a horizontal line, one
/// base edge per leaf, and one arc per caret spanning the caret's leaves
/// (above the line for the top forest, below it for the bottom forest).
pub fn diagram_to_dot(d: &Diagram) -> String {
    let n = d.leaves();
    let mut out = String::new();
    out.push_str("graph diagram {\n");
    out.push_str("  rankdir=LR;\n");
    out.push_str("  node [shape=point];\n");
    out.push_str("  { rank=same;");
    for v in 0..=n {
        write!(out, " v{v}").unwrap();
    }
    out.push_str(" }\n");
    for v in 0..n {
        writeln!(out, "  v{} -- v{} [weight=100];", v, v + 1).unwrap();
    }
    for (first, count) in d.top().caret_spans() {
        writeln!(
            out,
            "  v{} -- v{} [tailport=n, headport=n, constraint=false, color=blue];",
            first,
            first + count
        )
        .unwrap();
    }
    for (first, count) in d.bottom().caret_spans() {
        writeln!(
            out,
            "  v{} -- v{} [tailport=s, headport=s, constraint=false, color=red];",
            first,
            first + count
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atomic_x0_renders_one_arc_each_side() {
        let d: Diagram = "(..)|..".parse().unwrap();
        let dot = diagram_to_dot(&d);
        assert!(dot.starts_with("graph diagram {"));
        assert_eq!(dot.matches("color=blue").count(), 1);
        assert_eq!(dot.matches("color=red").count(), 0);
        assert!(dot.contains("v0 -- v2 [tailport=n"));
        assert_eq!(dot.matches("[weight=100]").count(), 2);
    }
}
