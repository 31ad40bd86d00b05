//! Text interchange formats.
//!
//! Both documents are TOML. The writers emit a canonical layout (fixed key
//! order, one matrix row or list per line, LF endings) so equal values give
//! identical bytes.
//!
//! ```toml
//! m = 1
//! n = 2
//! r = 2
//! matrix = [
//!   [1, 2],
//! ]
//! ```

use std::fmt::Write as _;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::model::{Color, ColoredBiclique, PartiteHypergraph};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ColoringDoc {
    m: usize,
    n: usize,
    r: usize,
    matrix: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergraphDoc {
    classes: Vec<Vec<usize>>,
    edges: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairDoc {
    h1: HypergraphDoc,
    h2: HypergraphDoc,
}

pub fn parse_coloring(text: &str) -> Result<ColoredBiclique> {
    let doc: ColoringDoc = toml::from_str(text).map_err(|e| Error::Parse(e.message().to_owned()))?;
    if doc.matrix.len() != doc.m {
        return Err(Error::InvalidShape(format!(
            "m = {} but the matrix has {} rows",
            doc.m,
            doc.matrix.len()
        )));
    }
    let mut colors = Vec::with_capacity(doc.m * doc.n);
    for (row, entries) in doc.matrix.iter().enumerate() {
        if entries.len() != doc.n {
            return Err(Error::RaggedMatrix {
                row,
                found: entries.len(),
                expected: doc.n,
            });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value < 1 || value > doc.r as i64 {
                return Err(Error::ColorOutOfRange {
                    row,
                    col,
                    value,
                    r: doc.r,
                });
            }
            colors.push(value as Color);
        }
    }
    ColoredBiclique::new(doc.m, doc.n, doc.r, colors)
}

pub fn serialize_coloring(cb: &ColoredBiclique) -> String {
    let mut out = String::new();
    writeln!(out, "m = {}", cb.m()).unwrap();
    writeln!(out, "n = {}", cb.n()).unwrap();
    writeln!(out, "r = {}", cb.r()).unwrap();
    write_rows(&mut out, "matrix", cb.rows());
    out
}

pub fn parse_hypergraph(text: &str) -> Result<PartiteHypergraph> {
    let doc: HypergraphDoc =
        toml::from_str(text).map_err(|e| Error::Parse(e.message().to_owned()))?;
    PartiteHypergraph::new(doc.classes, doc.edges)
}

pub fn serialize_hypergraph(h: &PartiteHypergraph) -> String {
    let mut out = String::new();
    write_hypergraph_body(&mut out, h);
    out
}

/// Two hypergraphs on shared classes, as `[h1]` and `[h2]` tables.
pub fn serialize_pair(h1: &PartiteHypergraph, h2: &PartiteHypergraph) -> String {
    let mut out = String::from("[h1]\n");
    write_hypergraph_body(&mut out, h1);
    out.push_str("\n[h2]\n");
    write_hypergraph_body(&mut out, h2);
    out
}

pub fn parse_pair(text: &str) -> Result<(PartiteHypergraph, PartiteHypergraph)> {
    let doc: PairDoc = toml::from_str(text).map_err(|e| Error::Parse(e.message().to_owned()))?;
    Ok((
        PartiteHypergraph::new(doc.h1.classes, doc.h1.edges)?,
        PartiteHypergraph::new(doc.h2.classes, doc.h2.edges)?,
    ))
}

fn write_hypergraph_body(out: &mut String, h: &PartiteHypergraph) {
    write_rows(out, "classes", h.classes().iter().map(Vec::as_slice));
    write_rows(out, "edges", h.edges().iter().map(Vec::as_slice));
}

fn write_rows<'a, T: std::fmt::Display + 'a>(
    out: &mut String,
    key: &str,
    rows: impl Iterator<Item = &'a [T]>,
) {
    writeln!(out, "{key} = [").unwrap();
    for row in rows {
        out.push_str("  [");
        for (k, v) in row.iter().enumerate() {
            if k > 0 {
                out.push_str(", ");
            }
            write!(out, "{v}").unwrap();
        }
        out.push_str("],\n");
    }
    out.push_str("]\n");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{doubling, gstar};
    use proptest::prelude::*;

    #[test]
    fn smallest_instance() {
        let text = "m = 1\nn = 1\nr = 1\nmatrix = [\n  [1],\n]\n";
        let cb = parse_coloring(text).unwrap();
        assert_eq!(cb, ColoredBiclique::monochromatic(1, 1, 1).unwrap());
        assert_eq!(serialize_coloring(&cb), text);
    }

    #[test]
    fn gstar2_document() {
        let text = serialize_coloring(&gstar(2).unwrap());
        assert_eq!(text, "m = 1\nn = 2\nr = 2\nmatrix = [\n  [1, 2],\n]\n");
    }

    #[test]
    fn round_trips_constructions() {
        for cb in [gstar(3).unwrap(), doubling(2).unwrap(), doubling(4).unwrap()] {
            let text = serialize_coloring(&cb);
            let back = parse_coloring(&text).unwrap();
            assert_eq!(back, cb);
            assert_eq!(serialize_coloring(&back), text);
        }
    }

    #[test]
    fn accepts_inline_arrays() {
        let cb = parse_coloring("r = 2\nm = 2\nn = 2\nmatrix = [[1, 2], [2, 1]]").unwrap();
        assert_eq!(cb, doubling(2).unwrap());
    }

    #[test]
    fn rejects_invalid_documents() {
        let zero = parse_coloring("m = 1\nn = 1\nr = 1\nmatrix = [[0]]");
        assert!(matches!(zero, Err(Error::ColorOutOfRange { value: 0, .. })));
        assert!(zero.unwrap_err().to_string().contains("color out of range"));
        assert!(matches!(
            parse_coloring("m = 2\nn = 2\nr = 2\nmatrix = [[1, 2], [1]]"),
            Err(Error::RaggedMatrix { row: 1, .. })
        ));
        assert!(matches!(
            parse_coloring("m = 2\nn = 1\nr = 1\nmatrix = [[1]]"),
            Err(Error::InvalidShape(_))
        ));
        assert!(matches!(parse_coloring("m = 1\nn = "), Err(Error::Parse(_))));
        assert!(matches!(
            parse_coloring("m = 1\nn = 1\nr = 1\nmatrix = [[1]]\nextra = 3"),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn hypergraph_round_trip() {
        let h = PartiteHypergraph::new(
            vec![vec![0, 1], vec![2, 3]],
            vec![vec![0, 2], vec![1, 3], vec![0, 2]],
        )
        .unwrap();
        let text = serialize_hypergraph(&h);
        assert_eq!(parse_hypergraph(&text).unwrap(), h);
        let pair = serialize_pair(&h, &h);
        assert_eq!(parse_pair(&pair).unwrap(), (h.clone(), h));
    }

    fn arb_coloring() -> impl Strategy<Value = ColoredBiclique> {
        (1usize..6, 1usize..6, 1usize..5).prop_flat_map(|(m, n, r)| {
            proptest::collection::vec(1..=r as Color, m * n)
                .prop_map(move |colors| ColoredBiclique::new(m, n, r, colors).unwrap())
        })
    }

    proptest! {
        #[test]
        fn parse_inverts_serialize(cb in arb_coloring()) {
            prop_assert_eq!(parse_coloring(&serialize_coloring(&cb)).unwrap(), cb);
        }

        #[test]
        fn serialize_is_injective(a in arb_coloring(), b in arb_coloring()) {
            prop_assert_eq!(serialize_coloring(&a) == serialize_coloring(&b), a == b);
        }
    }
}
