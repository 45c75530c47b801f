//! Small reference graphs, also shipped as JSON under `fixtures/`.

use crate::alexander::{interior_subset, restrict};
use crate::digraph::LabeledDigraph;

fn linear(vertices: &[&str], edges: &[(&str, &str, &str)], order: &[&str]) -> LabeledDigraph {
    LabeledDigraph::from_linear(vertices, edges, order).expect("fixture graphs are valid")
}

/// Six vertices: three direct edges labeled 1, 2, 3 and four two-edge
/// paths, two labeled (1, 2) and two labeled (2, 1). Linear order.
/// Its cd-index is `2*c + 3`.
pub fn fig1_left() -> LabeledDigraph {
    linear(
        &["0", "x1", "x2", "x3", "x4", "1"],
        &[
            ("0", "x1", "1"),
            ("0", "x2", "1"),
            ("0", "x3", "2"),
            ("0", "x4", "2"),
            ("x1", "1", "2"),
            ("x2", "1", "2"),
            ("x3", "1", "1"),
            ("x4", "1", "1"),
            ("0", "1", "1"),
            ("0", "1", "2"),
            ("0", "1", "3"),
        ],
        &["1", "2", "3"],
    )
}

/// Twelve vertices in four ranks. Rank-one vertices `a1..a5` join
/// rank-two vertices `b1..b5` by vertical edges (label 1) and by the
/// shifted edges `a_i → b_{i+1}` and `a5 → b1` (label 3). Edges to and
/// from the ends carry label 2. Its cd-index is `5*d`.
pub fn fig1_right() -> LabeledDigraph {
    let a = ["a1", "a2", "a3", "a4", "a5"];
    let b = ["b1", "b2", "b3", "b4", "b5"];
    let mut edges: Vec<(&str, &str, &str)> = Vec::new();
    for x in a {
        edges.push(("0", x, "2"));
    }
    for i in 0..5 {
        edges.push((a[i], b[i], "1"));
    }
    for i in 0..4 {
        edges.push((a[i], b[i + 1], "3"));
    }
    edges.push((a[4], b[0], "3"));
    for y in b {
        edges.push((y, "1", "2"));
    }
    let mut vertices = vec!["0"];
    vertices.extend(a);
    vertices.extend(b);
    vertices.push("1");
    linear(&vertices, &edges, &["1", "2", "3"])
}

const FIG2_VERTICES: [&str; 4] = ["0", "x", "y", "1"];
const FIG2_EDGES: [(&str, &str, &str); 4] = [
    ("0", "x", "beta"),
    ("x", "y", "alpha"),
    ("x", "y", "gamma"),
    ("y", "1", "beta"),
];

/// A four-vertex chain with a doubled middle edge, labels ordered
/// `alpha < beta < gamma`. Its cd-index is `d`.
pub fn fig2_relation_i() -> LabeledDigraph {
    linear(&FIG2_VERTICES, &FIG2_EDGES, &["alpha", "beta", "gamma"])
}

/// The same graph with only `alpha ∼ beta` and `beta ∼ alpha` related.
/// Its cd-index is `cc - d`.
pub fn fig2_relation_ii() -> LabeledDigraph {
    LabeledDigraph::from_pairs(
        &FIG2_VERTICES,
        &FIG2_EDGES,
        &[("alpha", "beta"), ("beta", "alpha")],
    )
    .expect("fixture graphs are valid")
}

/// The Boolean algebra on `{1,2,3}` with `I → I ∪ {i}` labeled `i`.
pub fn fig3_b3() -> LabeledDigraph {
    let sets = [
        "{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}",
    ];
    let members = |s: &str| -> Vec<char> { s.chars().filter(char::is_ascii_digit).collect() };
    let mut edges = Vec::new();
    for x in sets {
        for y in sets {
            let (mx, my) = (members(x), members(y));
            if my.len() == mx.len() + 1 && mx.iter().all(|c| my.contains(c)) {
                let new = my.iter().find(|c| !mx.contains(c)).unwrap();
                edges.push((x, y, new.to_string()));
            }
        }
    }
    let edges: Vec<(&str, &str, &str)> =
        edges.iter().map(|(x, y, l)| (*x, *y, l.as_str())).collect();
    linear(&sets, &edges, &["1", "2", "3"])
}

/// `B₃` restricted to `{1}` and `{1,3}`; it has no falling path.
pub fn fig3_gs() -> LabeledDigraph {
    let g = fig3_b3();
    let s = interior_subset(&g, &["{1}", "{1,3}"]).unwrap();
    restrict(&g, &s).unwrap().graph
}

/// `B₃` restricted to `{2}`, `{3}`, `{1,2}` and `{2,3}`; its falling
/// paths have lengths 2 and 3.
pub fn fig3_gt() -> LabeledDigraph {
    let g = fig3_b3();
    let t = interior_subset(&g, &["{2}", "{3}", "{1,2}", "{2,3}"]).unwrap();
    restrict(&g, &t).unwrap().graph
}

/// Two edges labeled 2 then 1 under the linear order; unbalanced.
pub fn chain21() -> LabeledDigraph {
    linear(
        &["0", "x", "1"],
        &[("0", "x", "2"), ("x", "1", "1")],
        &["1", "2"],
    )
}

/// Every fixture with its file name.
pub fn all() -> Vec<(&'static str, LabeledDigraph)> {
    vec![
        ("fig1_left.json", fig1_left()),
        ("fig1_right.json", fig1_right()),
        ("fig2_relation_i.json", fig2_relation_i()),
        ("fig2_relation_ii.json", fig2_relation_ii()),
        ("fig3_b3.json", fig3_b3()),
        ("fig3_gs.json", fig3_gs()),
        ("fig3_gt.json", fig3_gt()),
        ("chain21.json", chain21()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let g = fig1_left();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 11));
        let g = fig1_right();
        assert_eq!((g.vertex_count(), g.edge_count()), (12, 20));
        let g = fig3_b3();
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 12));
        assert_eq!(fig3_gs().edge_count(), 4);
        assert_eq!(fig3_gt().edge_count(), 9);
    }

    #[test]
    fn shipped_files_match_builders() {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
        for (name, g) in all() {
            let text = std::fs::read_to_string(dir.join(name)).unwrap();
            assert_eq!(text, g.to_json(), "{name}");
            assert_eq!(LabeledDigraph::from_json(&text).unwrap(), g, "{name}");
        }
    }
}
