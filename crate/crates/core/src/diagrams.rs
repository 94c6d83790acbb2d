//! Betti diagrams, degree sequences, windows and pure diagrams.
//!
//! A diagram is a finitely supported map `(column i, degree j) -> Rational`.
//! Degrees are true internal degrees: the entry for the free summand
//! `S(-j)` in homological position `i` is keyed by `(i, j)`, not by the
//! shifted display row `j - i`. Display shifting is a presentation concern
//! and lives in the CLI.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A strictly increasing sequence of integers `(d_0, ..., d_s)`.
///
/// Degree sequences record the generating degrees of a pure resolution and
/// index the rays of the cone of diagrams. They are partially ordered by
/// the padded coordinatewise order (see [`PartialOrd`] impl): a shorter
/// sequence is treated as if padded with `+infinity`, so
/// `(0,3) > (0,3,4)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence(Vec<i64>);

impl DegreeSequence {
    /// Build a degree sequence, checking strict increase.
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::NotStrictlyIncreasing(entries));
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing(entries));
        }
        Ok(DegreeSequence(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Number of entries, `s + 1`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    /// The sequence with entry `i` incremented by one, if still strictly
    /// increasing; `None` otherwise.
    pub fn bump(&self, i: usize) -> Option<DegreeSequence> {
        let mut v = self.0.clone();
        v[i] += 1;
        if i + 1 < v.len() && v[i] >= v[i + 1] {
            return None;
        }
        Some(DegreeSequence(v))
    }
}

/// The padded partial order: `d >= e` iff `len(d) <= len(e)` and
/// `d_i >= e_i` for all shared positions (missing entries count as
/// `+infinity`).
impl PartialOrd for DegreeSequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let ge = |a: &Self, b: &Self| {
            a.len() <= b.len() && a.0.iter().zip(&b.0).all(|(x, y)| x >= y)
        };
        match (ge(self, other), ge(other, self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            (false, false) => None,
        }
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Result of [`compare_deg`], the padded partial order on degree sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegOrder {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// Compare two degree sequences in the padded order.
pub fn compare_deg(d: &DegreeSequence, e: &DegreeSequence) -> DegOrder {
    match d.partial_cmp(e) {
        Some(Ordering::Less) => DegOrder::Less,
        Some(Ordering::Greater) => DegOrder::Greater,
        Some(Ordering::Equal) => DegOrder::Equal,
        None => DegOrder::Incomparable,
    }
}

/// A window `D(a, b)`: diagrams supported in columns `0..=c` with
/// `a_i <= j <= b_i` in column `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    a: DegreeSequence,
    b: DegreeSequence,
}

impl Window {
    /// Build a window, checking `len(a) == len(b)` and `a_i <= b_i`.
    pub fn new(a: DegreeSequence, b: DegreeSequence) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::InvalidWindow(format!(
                "bounds have lengths {} and {}",
                a.len(),
                b.len()
            )));
        }
        if a.entries().iter().zip(b.entries()).any(|(x, y)| x > y) {
            return Err(Error::InvalidWindow(format!("{a} is not <= {b}")));
        }
        Ok(Window { a, b })
    }

    pub fn lower(&self) -> &DegreeSequence {
        &self.a
    }

    pub fn upper(&self) -> &DegreeSequence {
        &self.b
    }

    /// Number of columns, `c + 1`.
    pub fn ncols(&self) -> usize {
        self.a.len()
    }

    /// Whether position `(i, j)` lies inside the window.
    pub fn contains(&self, i: usize, j: i64) -> bool {
        i < self.ncols() && self.a.get(i) <= j && j <= self.b.get(i)
    }

    /// All positions `(i, j)` of the window, column-major.
    pub fn positions(&self) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for i in 0..self.ncols() {
            for j in self.a.get(i)..=self.b.get(i) {
                out.push((i, j));
            }
        }
        out
    }

    /// `1 + sum(b_i - a_i)`, the dimension of the Herzog-Kuhl subspace and
    /// the length of every maximal chain in `[a, b]`.
    pub fn chain_length(&self) -> u64 {
        1 + self
            .a
            .entries()
            .iter()
            .zip(self.b.entries())
            .map(|(x, y)| (y - x) as u64)
            .sum::<u64>()
    }

    /// All degree sequences `d` with `a <= d <= b`, in lexicographic order.
    pub fn interval(&self) -> Vec<DegreeSequence> {
        let mut out = Vec::new();
        let mut cur: Vec<i64> = Vec::with_capacity(self.ncols());
        self.interval_rec(&mut cur, &mut out);
        out
    }

    fn interval_rec(&self, cur: &mut Vec<i64>, out: &mut Vec<DegreeSequence>) {
        let i = cur.len();
        if i == self.ncols() {
            out.push(DegreeSequence(cur.clone()));
            return;
        }
        let lo = if i == 0 {
            self.a.get(0)
        } else {
            self.a.get(i).max(cur[i - 1] + 1)
        };
        for j in lo..=self.b.get(i) {
            cur.push(j);
            self.interval_rec(cur, out);
            cur.pop();
        }
    }
}

/// A sparse diagram of graded Betti numbers.
///
/// Only nonzero entries are stored; an absent key reads as zero. Values of
/// genuine Betti diagrams are nonnegative, but the container itself does
/// not forbid signs (remainders during verification may briefly hold
/// differences).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiDiagram {
    entries: BTreeMap<(usize, i64), Rational>,
}

impl BettiDiagram {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build from `(column, degree, value)` triples; zero values are dropped.
    pub fn from_triples<I>(triples: I) -> Self
    where
        I: IntoIterator<Item = (usize, i64, Rational)>,
    {
        let mut d = BettiDiagram::new();
        for (i, j, v) in triples {
            d.add(i, j, v);
        }
        d
    }

    /// Entry at `(i, j)`; zero if absent.
    pub fn get(&self, i: usize, j: i64) -> Rational {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Set entry `(i, j)`; removes the key when `v` is zero.
    pub fn set(&mut self, i: usize, j: i64, v: Rational) {
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    /// Add `v` to entry `(i, j)`.
    pub fn add(&mut self, i: usize, j: i64, v: Rational) {
        let w = self.get(i, j) + v;
        self.set(i, j, w);
    }

    /// Iterate nonzero entries in `(column, degree)` order.
    pub fn iter(&self) -> impl Iterator<Item = (&(usize, i64), &Rational)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of columns tracked: one past the largest nonzero column.
    pub fn ncols(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i + 1).max().unwrap_or(0)
    }

    /// Whether every entry is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|v| !v.is_negative())
    }

    /// Smallest degree with a nonzero entry in column `i`.
    pub fn column_min(&self, i: usize) -> Option<i64> {
        self.entries
            .range((i, i64::MIN)..=(i, i64::MAX))
            .map(|(&(_, j), _)| j)
            .next()
    }

    /// Largest degree with a nonzero entry in column `i`.
    pub fn column_max(&self, i: usize) -> Option<i64> {
        self.entries
            .range((i, i64::MIN)..=(i, i64::MAX))
            .map(|(&(_, j), _)| j)
            .next_back()
    }

    /// Whether the support lies inside `window`.
    pub fn supported_in(&self, window: &Window) -> bool {
        self.entries.keys().all(|&(i, j)| window.contains(i, j))
    }

    /// `self * q`, entrywise.
    pub fn scaled(&self, q: &Rational) -> BettiDiagram {
        if q.is_zero() {
            return BettiDiagram::new();
        }
        BettiDiagram {
            entries: self
                .entries
                .iter()
                .map(|(&k, v)| (k, v * q))
                .collect(),
        }
    }

    /// Subtract `q` times the pure diagram `pi` in place.
    pub fn sub_scaled_pure(&mut self, q: &Rational, pi: &PureDiagram) {
        for (i, (j, v)) in pi.degrees.entries().iter().zip(&pi.values).enumerate() {
            let delta = q * Rational::from_integer(v.clone());
            self.add(i, *j, -delta);
        }
    }
}

/// The smallest integral diagram on the ray of pure diagrams of type `d`.
///
/// Column `i` holds the single entry `values[i]` in degree `degrees[i]`;
/// the values are coprime positive integers proportional to
/// `prod_{k != i} 1 / |d_k - d_i|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureDiagram {
    pub degrees: DegreeSequence,
    pub values: Vec<BigInt>,
}

impl PureDiagram {
    /// View as a sparse diagram.
    pub fn to_diagram(&self) -> BettiDiagram {
        BettiDiagram::from_triples(
            self.degrees
                .entries()
                .iter()
                .zip(&self.values)
                .enumerate()
                .map(|(i, (&j, v))| (i, j, Rational::from_integer(v.clone()))),
        )
    }
}

/// The pure diagram `pi(d)`: smallest integer solution of the Herzog-Kuhl
/// equations supported on the single positions `(i, d_i)`.
pub fn pure_diagram(d: &DegreeSequence) -> PureDiagram {
    let n = d.len();
    // v_i = prod_{k != i} 1/|d_k - d_i|, exactly.
    let raw: Vec<Rational> = (0..n)
        .map(|i| {
            let mut denom = BigInt::one();
            for k in 0..n {
                if k != i {
                    denom *= BigInt::from((d.get(k) - d.get(i)).abs());
                }
            }
            Rational::new(BigInt::one(), denom)
        })
        .collect();
    // Clear denominators by their lcm, then divide by the gcd.
    let lcm = crate::rational::denominator_lcm(raw.iter());
    let scaled: Vec<BigInt> = raw
        .iter()
        .map(|v| (v * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = scaled.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let values = scaled.into_iter().map(|v| v / &gcd).collect();
    PureDiagram {
        degrees: d.clone(),
        values,
    }
}

/// The first `c` Herzog-Kuhl residuals `sum_{i,j} (-1)^i j^p beta_{ij}`
/// for `p = 0, ..., c-1`, with the convention `0^0 = 1`.
///
/// All residuals vanish exactly when `beta` is the Betti diagram of a
/// Cohen-Macaulay module of codimension `c`.
pub fn hk_residual(beta: &BettiDiagram, c: usize) -> Vec<Rational> {
    (0..c)
        .map(|p| {
            let mut acc = Rational::zero();
            for (&(i, j), v) in beta.iter() {
                let jp = BigInt::from(j).pow(p as u32); // 0^0 == 1 via pow(0)
                let sign = if i % 2 == 0 { 1 } else { -1 };
                acc += v * Rational::from_integer(jp * BigInt::from(sign));
            }
            acc
        })
        .collect()
}

/// The lower bound `d(beta)`: per-column minimal degrees of the support.
///
/// Columns `0..=s` (with `s` the largest nonzero column) must all be
/// nonzero and the minima must be strictly increasing, otherwise the
/// diagram lies outside the cone and an error is returned.
pub fn lower_bound_sequence(beta: &BettiDiagram) -> Result<DegreeSequence> {
    let ncols = beta.ncols();
    if ncols == 0 {
        return Err(Error::NotInCone("empty".to_string()));
    }
    let mut mins = Vec::with_capacity(ncols);
    for i in 0..ncols {
        match beta.column_min(i) {
            Some(j) => mins.push(j),
            None => return Err(Error::ZeroColumnGap(i)),
        }
    }
    DegreeSequence::new(mins)
}
