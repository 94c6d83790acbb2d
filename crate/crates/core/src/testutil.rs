//! Shared fixtures for unit tests.

use crate::diagrams::{BettiDiagram, DegreeSequence};
use crate::rational::rat_int;

pub(crate) fn deg(v: &[i64]) -> DegreeSequence {
    DegreeSequence::new(v.to_vec()).unwrap()
}

/// The diagram of S/(x^2, xy, y^3): the running worked example.
pub(crate) fn example_quotient_diagram() -> BettiDiagram {
    BettiDiagram::from_triples([
        (0, 0, rat_int(1)),
        (1, 2, rat_int(2)),
        (1, 3, rat_int(1)),
        (2, 3, rat_int(1)),
        (2, 4, rat_int(1)),
    ])
}
