//! Inputs shared by the criterion benches.

use bicover::constructions::{doubling, gstar, ham_factor};
use bicover::covers::ktt_minus;
use bicover::{BipartiteGraph, ColoredBiclique};

/// Colorings for the cover and analysis benches, labelled for reports.
pub fn cover_inputs() -> Vec<(&'static str, ColoredBiclique)> {
    vec![
        ("gstar(4)", gstar(4).unwrap()),
        ("doubling(4)", doubling(4).unwrap()),
        ("ham_factor(3)", ham_factor(3).unwrap()),
    ]
}

pub fn eqbi_inputs() -> Vec<(&'static str, BipartiteGraph)> {
    vec![("K33-", ktt_minus(3).unwrap()), ("K44-", ktt_minus(4).unwrap())]
}
