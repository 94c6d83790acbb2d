//! The simplicial fan of diagrams: maximal chains of the degree-sequence
//! interval, exterior facet classification, the facet-equation coefficient
//! diagrams, and the pairing between diagrams and cohomology tables.

use std::collections::BTreeMap;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cohomology::CohomologyTable;
use crate::diagrams::{BettiDiagram, DegreeSequence, Window};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A signed rational functional on a window, stored sparsely by
/// `(column, degree)` in true internal degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientDiagram {
    entries: BTreeMap<(usize, i64), Rational>,
    window: Window,
}

impl CoefficientDiagram {
    pub fn new(window: Window) -> Self {
        CoefficientDiagram {
            entries: BTreeMap::new(),
            window,
        }
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    /// Coefficient of `beta_{i,j}`; zero if absent.
    pub fn get(&self, i: usize, j: i64) -> Rational {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, i: usize, j: i64, v: Rational) {
        debug_assert!(self.window.contains(i, j));
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, i64), &Rational)> {
        self.entries.iter()
    }

    /// Entrywise difference; both sides must share a window.
    pub fn sub(&self, other: &CoefficientDiagram) -> CoefficientDiagram {
        assert_eq!(self.window, other.window, "windows disagree");
        let mut out = self.clone();
        for (&(i, j), v) in other.entries.iter() {
            let w = out.get(i, j) - v;
            out.set(i, j, w);
        }
        out
    }
}

/// Lazy depth-first enumeration of the maximal chains of `[a, b]`.
///
/// Chains are yielded in lexicographic order of their coordinate-increment
/// positions; every chain runs from `a` to `b` in unit steps and has
/// length `1 + sum(b_i - a_i)`. The cursor is `Clone`, so independent
/// consumers can fork the iteration.
#[derive(Debug, Clone)]
pub struct MaximalChains<'w> {
    window: &'w Window,
    stack: Vec<(Vec<DegreeSequence>, usize)>,
}

/// Iterate all maximal chains of the interval `[a, b]` of `window`.
pub fn maximal_chains(window: &Window) -> MaximalChains<'_> {
    MaximalChains {
        window,
        stack: vec![(vec![window.lower().clone()], 0)],
    }
}

impl<'w> Iterator for MaximalChains<'w> {
    type Item = Vec<DegreeSequence>;

    fn next(&mut self) -> Option<Self::Item> {
        while let Some((chain, start)) = self.stack.pop() {
            let last = chain.last().expect("chains are nonempty");
            if last == self.window.upper() {
                return Some(chain);
            }
            for coord in start..self.window.ncols() {
                if last.get(coord) >= self.window.upper().get(coord) {
                    continue;
                }
                let Some(next) = last.bump(coord) else {
                    continue;
                };
                self.stack.push((chain.clone(), coord + 1));
                let mut extended = chain;
                extended.push(next);
                self.stack.push((extended, 0));
                break;
            }
        }
        None
    }
}

/// Count the maximal chains of `[a, b]` by dynamic programming over the
/// interval, without enumerating them.
pub fn count_maximal_chains(window: &Window) -> u64 {
    fn count(
        d: &DegreeSequence,
        window: &Window,
        memo: &mut HashMap<DegreeSequence, u64>,
    ) -> u64 {
        if d == window.upper() {
            return 1;
        }
        if let Some(&c) = memo.get(d) {
            return c;
        }
        let mut total = 0u64;
        for coord in 0..window.ncols() {
            if d.get(coord) >= window.upper().get(coord) {
                continue;
            }
            if let Some(next) = d.bump(coord) {
                total = total.saturating_add(count(&next, window, memo));
            }
        }
        memo.insert(d.clone(), total);
        total
    }
    let mut memo = HashMap::new();
    count(window.lower(), window, &mut memo)
}

/// How the omission of a chain element meets the rest of the fan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FacetKind {
    /// The omitted element is the chain's first or last.
    Type1,
    /// Predecessor and successor differ in exactly one position.
    Type2,
    /// Predecessor and successor differ in two adjacent positions in the
    /// pattern `(r-1, r) / (r-1, r+1) / (r, r+1)`.
    Type3,
}

/// An exterior facet of a maximal simplicial cone, with its chain context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetDescriptor {
    pub kind: FacetKind,
    /// The omitted degree sequence `f`.
    pub f: DegreeSequence,
    /// Chain element immediately before `f`, when it exists.
    pub f_minus: Option<DegreeSequence>,
    /// Chain element immediately after `f`, when it exists.
    pub f_plus: Option<DegreeSequence>,
    /// For Type3, the position of `r - 1` in `f`; for Type2, the changing
    /// position.
    pub tau: Option<usize>,
}

/// Classify the facet obtained by omitting `chain[omitted_index]`.
///
/// Returns `None` when the omission yields an interior facet (the chain
/// gap can be refilled by a different element).
pub fn classify_facet(chain: &[DegreeSequence], omitted_index: usize) -> Option<FacetDescriptor> {
    let f = chain[omitted_index].clone();
    if omitted_index == 0 || omitted_index + 1 == chain.len() {
        return Some(FacetDescriptor {
            kind: FacetKind::Type1,
            f_minus: (omitted_index > 0).then(|| chain[omitted_index - 1].clone()),
            f_plus: (omitted_index + 1 < chain.len()).then(|| chain[omitted_index + 1].clone()),
            f,
            tau: None,
        });
    }
    let pred = &chain[omitted_index - 1];
    let succ = &chain[omitted_index + 1];
    let diff: Vec<usize> = (0..pred.len())
        .filter(|&p| pred.get(p) != succ.get(p))
        .collect();
    match diff.as_slice() {
        [p] => Some(FacetDescriptor {
            kind: FacetKind::Type2,
            f_minus: Some(pred.clone()),
            f_plus: Some(succ.clone()),
            f,
            tau: Some(*p),
        }),
        [p, q] if *q == *p + 1 && pred.get(*q) == pred.get(*p) + 1 => {
            // pred = (..., r-1, r, ...), f = (..., r-1, r+1, ...),
            // succ = (..., r, r+1, ...): the alternative filler (r, r)
            // collides, so the facet is exterior.
            Some(FacetDescriptor {
                kind: FacetKind::Type3,
                f_minus: Some(pred.clone()),
                f_plus: Some(succ.clone()),
                f,
                tau: Some(*p),
            })
        }
        _ => None,
    }
}

/// The diagram `H(z)` on a window: `H_{i,d} = (-1)^i p(-d)` with
/// `p(t) = prod_k (t - z_k)`.
///
/// Consecutive rows carry the same absolute values with opposite signs.
/// For the facet equations `z` has length `c - 1` on a window of `c + 1`
/// columns, making the functional a combination of the Herzog-Kuhl forms.
pub fn h_table(z: &[i64], window: &Window) -> CoefficientDiagram {
    assert!(
        z.windows(2).all(|w| w[0] > w[1]),
        "H(z) needs strictly decreasing z"
    );
    let mut out = CoefficientDiagram::new(window.clone());
    for (i, d) in window.positions() {
        let mut p = BigInt::one();
        for &zk in z {
            p *= BigInt::from(-d - zk);
        }
        if i % 2 == 1 {
            p = -p;
        }
        out.set(i, d, Rational::from_integer(p));
    }
    out
}

fn check_type3(f: &DegreeSequence, tau: usize, window: &Window) -> Result<()> {
    if tau + 1 >= f.len() {
        return Err(Error::InvalidFacet(format!(
            "tau = {tau} has no adjacent position in {f}"
        )));
    }
    if f.get(tau + 1) != f.get(tau) + 2 {
        return Err(Error::InvalidFacet(format!(
            "{f} does not embed r-1, r+1 at positions {tau}, {}",
            tau + 1
        )));
    }
    if window.ncols() != f.len() {
        return Err(Error::InvalidFacet(format!(
            "window has {} columns but f has {}",
            window.ncols(),
            f.len()
        )));
    }
    Ok(())
}

/// The upper facet equation `U(f, tau)` of a type-3 facet.
///
/// Coefficients are `H(fhat)` where `fhat` negates `f` and drops positions
/// `tau, tau+1`, restricted to `d < f_i` for `i != tau` and `d <= f_tau`
/// for `i = tau` (equivalently zero at and above the support of
/// `pi(f_plus)`), and zero elsewhere.
pub fn upper_facet_equation(
    f: &DegreeSequence,
    tau: usize,
    window: &Window,
) -> Result<CoefficientDiagram> {
    check_type3(f, tau, window)?;
    let fhat: Vec<i64> = (0..f.len())
        .filter(|&k| k != tau && k != tau + 1)
        .map(|k| -f.get(k))
        .collect();
    let h = h_table(&fhat, window);
    let mut out = CoefficientDiagram::new(window.clone());
    for (&(i, d), v) in h.iter() {
        let keep = if i == tau { d <= f.get(tau) } else { d < f.get(i) };
        if keep {
            out.set(i, d, v.clone());
        }
    }
    Ok(out)
}

/// The lower facet equation: `H(fhat) - U(f, tau)`, entrywise.
pub fn lower_facet_equation(
    f: &DegreeSequence,
    tau: usize,
    window: &Window,
) -> Result<CoefficientDiagram> {
    check_type3(f, tau, window)?;
    let fhat: Vec<i64> = (0..f.len())
        .filter(|&k| k != tau && k != tau + 1)
        .map(|k| -f.get(k))
        .collect();
    let h = h_table(&fhat, window);
    let upper = upper_facet_equation(f, tau, window)?;
    Ok(h.sub(&upper))
}

/// Evaluate a coefficient functional on a diagram:
/// `sum coeffs_{i,j} * beta_{i,j}`.
pub fn evaluate_functional(coeffs: &CoefficientDiagram, beta: &BettiDiagram) -> Result<Rational> {
    let mut acc = Rational::zero();
    for (&(i, j), v) in beta.iter() {
        if !coeffs.window().contains(i, j) {
            return Err(Error::SupportOutsideWindow { col: i, degree: j });
        }
        let c = coeffs.get(i, j);
        if !c.is_zero() {
            acc += c * v;
        }
    }
    Ok(acc)
}

/// The pairing `<beta, gamma>_{e, tau}` between a diagram and a
/// cohomology table.
///
/// With `gamma_{<=i,d}` the alternating partial sum of column `d`, the
/// pairing adds `(-1)^i beta_{i,d} gamma_{<=i,-d}` for rows below `tau`,
/// splits rows `tau` and `tau + 1` at `e` and `e + 1` between
/// `gamma_{<=tau}` and `gamma_{<=tau-1}`, and uses `gamma_{<=i-2,-d}` for
/// rows above `tau + 1`. It is nonnegative whenever `beta` is the diagram
/// of a minimal free resolution and `gamma` the table of a coherent sheaf.
pub fn pairing(
    beta: &BettiDiagram,
    gamma: &CohomologyTable,
    e: i64,
    tau: usize,
) -> Result<Rational> {
    let tau_i = tau as i64;
    let mut acc = Rational::zero();
    for (&(i, d), b) in beta.iter() {
        if !gamma.covers(-d) {
            return Err(Error::InsufficientTableRange(-d));
        }
        let i_i = i as i64;
        let upto = if i_i < tau_i {
            i_i
        } else if i_i == tau_i {
            if d <= e {
                tau_i
            } else {
                tau_i - 1
            }
        } else if i_i == tau_i + 1 {
            if d <= e + 1 {
                tau_i
            } else {
                tau_i - 1
            }
        } else {
            i_i - 2
        };
        let partial = gamma.alternating_sum(upto, -d);
        if partial.is_zero() {
            continue;
        }
        if i % 2 == 0 {
            acc += b * partial;
        } else {
            acc -= b * partial;
        }
    }
    Ok(acc)
}
