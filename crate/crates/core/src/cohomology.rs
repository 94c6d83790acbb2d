//! Cohomology tables over a finite twist range, root sequences,
//! supernatural tables and the corner peeling decomposition.
//!
//! Tables are finite: every table declares an inclusive twist range
//! `[d_min, d_max]` and a row count. The polynomial-tail condition on
//! infinite tables is not modelled; wherever truncation would corrupt an
//! answer the operations report it instead of guessing.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::diagrams::{pure_diagram, DegreeSequence, PureDiagram};
use crate::error::{Error, Result};
use crate::rational::{denominator_lcm, numerator_gcd, Rational};

/// A strictly decreasing sequence of integers `z_1 > ... > z_s`.
///
/// Ordered by the `-infinity`-padded coordinatewise order: missing tail
/// entries count as `-infinity`, so a shorter sequence can only sit below
/// a longer one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RootSequence(Vec<i64>);

impl RootSequence {
    /// Build a root sequence, checking strict decrease. Empty is allowed
    /// and denotes the root data of a table concentrated in row zero.
    pub fn new(roots: Vec<i64>) -> Result<Self> {
        if roots.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotStrictlyDecreasing(roots));
        }
        Ok(RootSequence(roots))
    }

    pub fn roots(&self) -> &[i64] {
        &self.0
    }

    /// Number of roots `s`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Root `z_p`, 1-based as in `z_1 > ... > z_s`.
    pub fn root(&self, p: usize) -> i64 {
        self.0[p - 1]
    }
}

impl PartialOrd for RootSequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let le = |a: &Self, b: &Self| {
            a.len() <= b.len() && a.0.iter().zip(&b.0).all(|(x, y)| x <= y)
        };
        match (le(self, other), le(other, self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl fmt::Display for RootSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, z) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{z}")?;
        }
        write!(f, ")")
    }
}

/// A sparse cohomology table on rows `0..=m` and twists `d_min..=d_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyTable {
    entries: BTreeMap<(usize, i64), Rational>,
    nrows: usize,
    d_min: i64,
    d_max: i64,
}

impl CohomologyTable {
    /// Empty table with `nrows` rows over the inclusive range.
    pub fn new(nrows: usize, d_min: i64, d_max: i64) -> Self {
        assert!(d_min <= d_max, "inverted twist range");
        CohomologyTable {
            entries: BTreeMap::new(),
            nrows,
            d_min,
            d_max,
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn range(&self) -> (i64, i64) {
        (self.d_min, self.d_max)
    }

    pub fn covers(&self, d: i64) -> bool {
        self.d_min <= d && d <= self.d_max
    }

    pub fn get(&self, i: usize, d: i64) -> Rational {
        self.entries.get(&(i, d)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Set an entry; panics outside the declared rows or range.
    pub fn set(&mut self, i: usize, d: i64, v: Rational) {
        assert!(i < self.nrows, "row {i} outside declared rows");
        assert!(self.covers(d), "twist {d} outside declared range");
        if v.is_zero() {
            self.entries.remove(&(i, d));
        } else {
            self.entries.insert((i, d), v);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, i64), &Rational)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|v| !v.is_negative())
    }

    /// Largest twist with a nonzero entry in row `i`.
    pub fn row_last_nonzero(&self, i: usize) -> Option<i64> {
        self.entries
            .range((i, i64::MIN)..=(i, i64::MAX))
            .map(|(&(_, d), _)| d)
            .next_back()
    }

    /// `self * q`, entrywise.
    pub fn scaled(&self, q: &Rational) -> CohomologyTable {
        let mut out = CohomologyTable::new(self.nrows, self.d_min, self.d_max);
        if q.is_zero() {
            return out;
        }
        out.entries = self.entries.iter().map(|(&k, v)| (k, v * q)).collect();
        out
    }

    /// `self - q * other`, restricted to this table's range.
    ///
    /// Rows of `other` beyond `self.nrows` must be zero in range.
    pub fn sub_scaled(&self, q: &Rational, other: &CohomologyTable) -> CohomologyTable {
        let mut out = self.clone();
        for (&(i, d), v) in other.entries.iter() {
            if !out.covers(d) {
                continue;
            }
            let w = out.get(i, d) - q * v;
            assert!(i < out.nrows, "subtrahend has more rows than table");
            out.set(i, d, w);
        }
        out
    }

    /// The alternating partial sum
    /// `gamma_{0,d} - gamma_{1,d} + ... + (-1)^i gamma_{i,d}`,
    /// zero when `upto < 0`.
    pub fn alternating_sum(&self, upto: i64, d: i64) -> Rational {
        let mut acc = Rational::zero();
        let top = upto.min(self.nrows as i64 - 1);
        let mut i = 0i64;
        while i <= top {
            let v = self.get(i as usize, d);
            if !v.is_zero() {
                if i % 2 == 0 {
                    acc += v;
                } else {
                    acc -= v;
                }
            }
            i += 1;
        }
        acc
    }
}

/// `dim gamma`: the largest nonzero row index, `-1` for the zero table.
pub fn dim_table(gamma: &CohomologyTable) -> isize {
    gamma
        .iter()
        .map(|(&(i, _), _)| i as isize)
        .max()
        .unwrap_or(-1)
}

/// Normalization of a supernatural table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Exact values `(1/s!)
    /// * prod_k |d - z_k|` in the band `z_i > d > z_{i+1}`.
    Canonical,
    /// The unique positive rescaling with integer entries of gcd 1 over
    /// the declared range.
    SmallestIntegral,
}

/// The supernatural table of a root sequence over a finite range.
///
/// Row `i` is nonzero exactly in the band `z_i > d > z_{i+1}` (with
/// `z_0 = +infinity` and `z_{s+1} = -infinity`), where its value is
/// `(1/s!) * prod_k |d - z_k|`. At most one row is nonzero per twist.
pub fn supernatural_table(
    z: &RootSequence,
    d_min: i64,
    d_max: i64,
    normalization: Normalization,
) -> CohomologyTable {
    let s = z.len();
    let mut table = CohomologyTable::new(s + 1, d_min, d_max);
    let mut sfact = BigInt::one();
    for k in 2..=s {
        sfact *= BigInt::from(k);
    }
    for d in d_min..=d_max {
        if z.roots().contains(&d) {
            continue; // a vanishing twist between bands
        }
        let row = z.roots().iter().filter(|&&zk| zk > d).count();
        let mut prod = BigInt::one();
        for &zk in z.roots() {
            prod *= BigInt::from((d - zk).abs());
        }
        table.set(row, d, Rational::new(prod, sfact.clone()));
    }
    if normalization == Normalization::SmallestIntegral && !table.is_zero() {
        let lcm = denominator_lcm(table.entries.values());
        let scaled = table.scaled(&Rational::from_integer(lcm));
        let gcd = numerator_gcd(scaled.entries.values());
        return scaled.scaled(&Rational::new(BigInt::one(), gcd));
    }
    table
}

/// Extract the root sequence `z_p = r_p - p` from the partial
/// regularities of a table.
///
/// `r_p` is the smallest `d` such that row `i` vanishes at all twists
/// `>= d - i` for every `i >= p`; on a finite table this is
/// `max_{i >= p} (lastNonzero_i + i + 1)` over nonempty rows. Rows
/// `1..=dim` must vanish strictly before `d_max` so the vanishing is
/// witnessed rather than truncated.
pub fn root_sequence_of(gamma: &CohomologyTable) -> Result<RootSequence> {
    let dim = dim_table(gamma);
    if dim <= 0 {
        return Ok(RootSequence::default());
    }
    let m = dim as usize;
    let (_, d_max) = gamma.range();
    let mut last: Vec<Option<i64>> = vec![None]; // row 0 never enters the regularity
    for i in 1..=m {
        let l = gamma.row_last_nonzero(i);
        if l == Some(d_max) {
            return Err(Error::TruncatedTable(i));
        }
        last.push(l);
    }
    let mut roots = Vec::with_capacity(m);
    for p in 1..=m {
        let r_p = (p..=m)
            .filter_map(|i| last[i].map(|d| d + i as i64 + 1))
            .max()
            .expect("row `dim` is nonzero");
        roots.push(r_p - p as i64);
    }
    Ok(RootSequence::new(roots).expect("r_p is weakly decreasing, so z_p is strict"))
}

/// Corner positions `(i, z_i - 1)` of a root sequence: the rows where the
/// next root leaves a gap (`z_{s+1} = -infinity`, so the last root always
/// yields a corner).
pub fn corner_positions(z: &RootSequence) -> Vec<(usize, i64)> {
    let s = z.len();
    let mut out = Vec::new();
    for i in 1..=s {
        let gap = if i == s {
            true
        } else {
            z.root(i + 1) < z.root(i) - 1
        };
        if gap {
            out.push((i, z.root(i) - 1));
        }
    }
    out
}

/// The peel coefficient `q_z = min over corners of gamma's corner value
/// divided by the canonical supernatural corner value`.
pub fn corner_peel_coefficient(gamma: &CohomologyTable, z: &RootSequence) -> Result<Rational> {
    let corners = corner_positions(z);
    let reference = supernatural_table(z, gamma.range().0, gamma.range().1, Normalization::Canonical);
    let mut best: Option<Rational> = None;
    for (i, d) in corners {
        if !gamma.covers(d) {
            return Err(Error::RangeTooSmall { row: i, twist: d });
        }
        let denom = reference.get(i, d);
        debug_assert!(!denom.is_zero(), "supernatural corner value is never zero");
        let ratio = gamma.get(i, d) / denom;
        best = Some(match best {
            Some(b) if b <= ratio => b,
            _ => ratio,
        });
    }
    best.ok_or(Error::RangeTooSmall { row: 0, twist: 0 })
}

/// One term of a table decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableTerm {
    pub coefficient: Rational,
    pub roots: RootSequence,
}

/// Result of the corner peeling loop: peeled supernatural terms in order,
/// plus whatever remainder the finite range (or the step bound) left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDecomposition {
    pub terms: Vec<TableTerm>,
    pub remainder: CohomologyTable,
}

impl TableDecomposition {
    /// Whether the peeled root sequences strictly decrease.
    pub fn is_chain(&self) -> bool {
        self.terms.windows(2).all(|w| w[1].roots < w[0].roots)
    }
}

/// Corner peeling decomposition of a nonnegative table.
///
/// Repeatedly subtracts `q_z * gamma^z` for `z` the remainder's root
/// sequence. Stops when the remainder is zero, when `max_steps` peels have
/// been taken, or when the finite range makes the next peel untrustworthy:
/// a corner position falls below `d_min`, a peel would drive an entry
/// negative (which on true tables only truncation can cause), the roots
/// fail to decrease, or the remainder is concentrated in row zero so no
/// corners exist. The remainder of the returned decomposition records
/// whatever was not peeled.
pub fn decompose_cohomology(
    gamma: &CohomologyTable,
    max_steps: usize,
) -> Result<TableDecomposition> {
    let mut rem = gamma.clone();
    let mut terms: Vec<TableTerm> = Vec::new();
    for _ in 0..max_steps {
        if rem.is_zero() {
            break;
        }
        let z = root_sequence_of(&rem)?;
        if z.is_empty() {
            break; // only row zero left; no corners to peel against
        }
        if let Some(prev) = terms.last() {
            if z.partial_cmp(&prev.roots) != Some(Ordering::Less) {
                break; // no strict progress; refuse to loop
            }
        }
        let q = match corner_peel_coefficient(&rem, &z) {
            Ok(q) => q,
            Err(Error::RangeTooSmall { .. }) => break,
            Err(e) => return Err(e),
        };
        if q.is_zero() {
            break;
        }
        let sup = supernatural_table(&z, rem.range().0, rem.range().1, Normalization::Canonical);
        let candidate = rem.sub_scaled(&q, &sup);
        if !candidate.is_nonnegative() {
            break; // truncation artifact: a genuine table never goes negative
        }
        rem = candidate;
        terms.push(TableTerm {
            coefficient: q,
            roots: z,
        });
    }
    Ok(TableDecomposition {
        terms,
        remainder: rem,
    })
}

/// The facet functional of a one-position triple of root sequences.
///
/// For `z_minus < z < z_plus` differing only in position `i` (1-based) by
/// consecutive integers, the union of their entries negated and sorted is
/// a degree sequence `f`; the functional `gamma -> <pi(f), gamma>_{e, i}`
/// with `e = -z_i - 1` cuts out the facet separating the three
/// supernatural rays. Returns `(pi(f), e, i)`.
pub fn gamma_facet_functional(
    z_minus: &RootSequence,
    z: &RootSequence,
    z_plus: &RootSequence,
) -> Result<(PureDiagram, i64, usize)> {
    let s = z.len();
    if z_minus.len() != s || z_plus.len() != s || s == 0 {
        return Err(Error::InvalidPattern(format!(
            "lengths {} / {} / {} do not match",
            z_minus.len(),
            s,
            z_plus.len()
        )));
    }
    let mut position = None;
    for p in 1..=s {
        let (lo, mid, hi) = (z_minus.root(p), z.root(p), z_plus.root(p));
        if lo == mid && mid == hi {
            continue;
        }
        if position.is_some() || lo != mid - 1 || hi != mid + 1 {
            return Err(Error::InvalidPattern(format!(
                "{z_minus} < {z} < {z_plus} is not a one-position consecutive triple"
            )));
        }
        position = Some(p);
    }
    let Some(i) = position else {
        return Err(Error::InvalidPattern("the three sequences are equal".to_string()));
    };
    let mut negatives: Vec<i64> = z_minus
        .roots()
        .iter()
        .chain(z.roots())
        .chain(z_plus.roots())
        .map(|&v| -v)
        .collect();
    negatives.sort_unstable();
    negatives.dedup();
    let f = DegreeSequence::new(negatives).expect("deduped sorted entries are strict");
    let e = -z.root(i) - 1;
    Ok((pure_diagram(&f), e, i))
}
