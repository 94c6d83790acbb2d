//! Greedy decomposition of Betti diagrams into chains of pure diagrams,
//! plus a brute-force membership oracle and integrality reporting.
//!
//! The greedy loop peels the maximal multiple of the pure diagram of the
//! current lower bound, in Cohen-Macaulay mode (fixed codimension, all
//! degree sequences of equal length) or general mode (sequences may
//! shorten along the chain, in the padded order).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::diagrams::{
    lower_bound_sequence, pure_diagram, BettiDiagram, DegreeSequence, PureDiagram, Window,
};
use crate::error::{Error, Result};
use crate::fan::{count_maximal_chains, maximal_chains};
use crate::linalg::solve_in_span;
use crate::rational::{denominator_lcm, Rational};

/// One peeled ray: a positive coefficient on the pure diagram of `degrees`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTerm {
    pub coefficient: Rational,
    pub degrees: DegreeSequence,
}

/// An ordered positive combination of pure diagrams along a chain.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    pub terms: Vec<DecompositionTerm>,
}

impl Decomposition {
    /// Re-sum the combination into a diagram.
    pub fn resum(&self) -> BettiDiagram {
        let mut acc = BettiDiagram::new();
        for term in &self.terms {
            let pi = pure_diagram(&term.degrees);
            for (i, (&j, v)) in pi.degrees.entries().iter().zip(&pi.values).enumerate() {
                acc.add(i, j, &term.coefficient * Rational::from_integer(v.clone()));
            }
        }
        acc
    }

    /// Whether the degree sequences form a strictly increasing chain.
    pub fn is_chain(&self) -> bool {
        self.terms
            .windows(2)
            .all(|w| w[0].degrees < w[1].degrees)
    }
}

/// Scaling data for a decomposition, per the integrality discussion on rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityReport {
    /// Least common multiple of the coefficient denominators.
    pub denominator_lcm: BigInt,
    /// Smallest positive integer `m` such that every coefficient of `m`
    /// times the input diagram's decomposition is an integer.
    pub minimal_integer_multiple: BigInt,
}

/// Decomposition mode: Cohen-Macaulay with a declared codimension, or
/// arbitrary graded modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecomposeMode {
    CohenMacaulay { codim: usize },
    General,
}

/// The largest `c > 0` with `beta - c * pi` still nonnegative.
///
/// `pi` is expected to be the pure diagram of `beta`'s lower bound, so all
/// of its positions carry nonzero entries of `beta`.
pub fn max_peel_coefficient(beta: &BettiDiagram, pi: &PureDiagram) -> Result<Rational> {
    let mut best: Option<Rational> = None;
    for (i, (&j, v)) in pi.degrees.entries().iter().zip(&pi.values).enumerate() {
        let entry = beta.get(i, j);
        if entry.is_zero() {
            return Err(Error::MismatchedSupport { col: i, degree: j });
        }
        let ratio = entry / Rational::from_integer(v.clone());
        best = Some(match best {
            Some(b) if b <= ratio => b,
            _ => ratio,
        });
    }
    best.ok_or_else(|| Error::NotInCone("empty".to_string()))
}

fn cone_reason(e: Error) -> Error {
    match e {
        Error::ZeroColumnGap(i) => Error::NotInCone(format!("zero column gap at column {i}")),
        Error::NotStrictlyIncreasing(v) => {
            Error::NotInCone(format!("lower bound {v:?} not strictly increasing"))
        }
        other => other,
    }
}

/// Greedy Boij-Soderberg decomposition.
///
/// Peels `c_k * pi(d_k)` with `d_k` the current lower bound until the
/// diagram is exhausted. The result re-sums to `beta` exactly and its
/// degree sequences form a strictly increasing chain. Structural failures
/// (zero-column gaps, non-monotone lower bounds, a vanishing top column in
/// CM mode, or exceeding the chain-length safety cap) report [`Error::NotInCone`].
pub fn decompose_betti(beta: &BettiDiagram, mode: DecomposeMode) -> Result<Decomposition> {
    if beta.is_zero() {
        return Err(Error::NotInCone("empty".to_string()));
    }
    if !beta.is_nonnegative() {
        return Err(Error::NotInCone("negative entry".to_string()));
    }
    if let DecomposeMode::CohenMacaulay { codim } = mode {
        if beta.ncols() != codim + 1 {
            return Err(Error::NotInCone(format!(
                "expected nonzero columns 0..={codim}, found top column {}",
                beta.ncols() as i64 - 1
            )));
        }
    }

    // Safety cap: one more than the maximal chain length of the bounding
    // window, so malformed input fails instead of looping.
    let mut cap: u64 = 2;
    for i in 0..beta.ncols() {
        if let (Some(lo), Some(hi)) = (beta.column_min(i), beta.column_max(i)) {
            cap += (hi - lo) as u64;
        }
    }

    let mut rem = beta.clone();
    let mut terms = Vec::new();
    let mut steps: u64 = 0;
    while !rem.is_zero() {
        steps += 1;
        if steps > cap {
            return Err(Error::NotInCone("iteration cap exceeded".to_string()));
        }
        let degrees = lower_bound_sequence(&rem).map_err(cone_reason)?;
        if let DecomposeMode::CohenMacaulay { codim } = mode {
            if degrees.len() != codim + 1 {
                return Err(Error::NotInCone(format!(
                    "column count dropped to {} before the diagram was exhausted",
                    degrees.len()
                )));
            }
        }
        let pi = pure_diagram(&degrees);
        let coefficient = max_peel_coefficient(&rem, &pi)?;
        rem.sub_scaled_pure(&coefficient, &pi);
        if !rem.is_nonnegative() {
            // cannot happen: the peel coefficient is the min ratio
            return Err(Error::NotInCone("peel overshoot".to_string()));
        }
        terms.push(DecompositionTerm {
            coefficient,
            degrees,
        });
    }
    Ok(Decomposition { terms })
}

/// Check that `dec` re-sums to `beta` exactly, with positive coefficients
/// along a strictly increasing chain.
pub fn verify_decomposition(beta: &BettiDiagram, dec: &Decomposition) -> bool {
    dec.terms.iter().all(|t| t.coefficient.is_positive())
        && dec.is_chain()
        && dec.resum() == *beta
}

/// The smallest integer multiple making every coefficient integral.
pub fn integrality_report(dec: &Decomposition) -> IntegralityReport {
    let lcm = denominator_lcm(dec.terms.iter().map(|t| &t.coefficient));
    IntegralityReport {
        denominator_lcm: lcm.clone(),
        minimal_integer_multiple: lcm,
    }
}

/// Default cap on the oracle's chain enumeration.
pub const DEFAULT_CHAIN_CAP: u64 = 1_000_000;

/// Brute-force membership oracle over a window.
///
/// Enumerates every maximal chain of `[a, b]`, solves for the coordinates
/// of `beta` in each chain basis by exact elimination, and returns the
/// chain with all-nonnegative coordinates (zero coefficients dropped), or
/// `None` when no chain works. Independent of the greedy path by
/// construction.
pub fn oracle_membership(
    beta: &BettiDiagram,
    window: &Window,
    cap: u64,
) -> Result<Option<Decomposition>> {
    for (&(i, j), _) in beta.iter() {
        if !window.contains(i, j) {
            return Err(Error::SupportOutsideWindow { col: i, degree: j });
        }
    }
    let count = count_maximal_chains(window);
    if count > cap {
        return Err(Error::WindowTooLarge { cap, count });
    }

    let positions = window.positions();
    let target: Vec<Rational> = positions.iter().map(|&(i, j)| beta.get(i, j)).collect();

    for chain in maximal_chains(window) {
        let columns: Vec<Vec<Rational>> = chain
            .iter()
            .map(|d| {
                let pi = pure_diagram(d).to_diagram();
                positions.iter().map(|&(i, j)| pi.get(i, j)).collect()
            })
            .collect();
        let Some(coords) = solve_in_span(&columns, &target) else {
            // beta violates the Herzog-Kuhl equations; no chain can work.
            return Ok(None);
        };
        if coords.iter().all(|c| !c.is_negative()) {
            let terms = chain
                .into_iter()
                .zip(coords)
                .filter(|(_, c)| !c.is_zero())
                .map(|(degrees, coefficient)| DecompositionTerm {
                    coefficient,
                    degrees,
                })
                .collect();
            return Ok(Some(Decomposition { terms }));
        }
    }
    Ok(None)
}
