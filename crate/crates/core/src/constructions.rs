//! Closed-form Betti numbers of the pure-resolution constructions:
//! the equivariant resolution and the generic-matrix resolution, via a
//! Weyl-dimension engine for Schur modules. Ranks only; the differentials
//! need representation-theoretic machinery outside this crate's scope.

use num_bigint::BigInt;
use num_traits::One;

use crate::diagrams::DegreeSequence;
use crate::error::{Error, Result};

/// A partition: weakly decreasing nonnegative parts, trailing zeros
/// normalized away.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u64>);

impl Partition {
    /// Build a partition; panics unless the parts weakly decrease.
    pub fn new(parts: Vec<u64>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must weakly decrease: {parts:?}"
        );
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero beyond the stored parts.
    pub fn part(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }
}

/// Transpose of the Young diagram.
pub fn conjugate(lambda: &Partition) -> Partition {
    let Some(&first) = lambda.parts().first() else {
        return Partition(Vec::new());
    };
    let parts = (1..=first)
        .map(|j| lambda.parts().iter().filter(|&&p| p >= j).count() as u64)
        .collect();
    Partition(parts)
}

/// Dimension of the Schur module `S_lambda` of an `n`-dimensional space,
/// by the Weyl formula
/// `prod_{1 <= i < j <= n} (lambda_i - lambda_j + j - i) / (j - i)`.
pub fn schur_dimension(lambda: &Partition, n: usize) -> Result<BigInt> {
    if lambda.len() > n {
        return Err(Error::TooManyParts {
            parts: lambda.len(),
            n,
        });
    }
    let mut numer = BigInt::one();
    let mut denom = BigInt::one();
    for i in 0..n {
        for j in (i + 1)..n {
            let li = lambda.part(i) as i64;
            let lj = lambda.part(j) as i64;
            let gap = (j - i) as i64;
            numer *= BigInt::from(li - lj + gap);
            denom *= BigInt::from(gap);
        }
    }
    Ok(numer / denom)
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::from(0);
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for step in 0..k {
        acc = acc * BigInt::from(n - step) / BigInt::from(step + 1);
    }
    acc
}

/// The partition `alpha(e, i)` of the equivariant resolution: with
/// `lambda_k = sum_{j > k} (e_j - 1)`, the first `i` parts are raised by
/// their `e`.
fn alpha(e: &[u64], i: usize) -> Partition {
    let n = e.len();
    let lambda: Vec<u64> = (0..n)
        .map(|k| e[k + 1..].iter().map(|&ej| ej - 1).sum())
        .collect();
    let parts = (0..n)
        .map(|k| if k < i { lambda[k] + e[k] } else { lambda[k] })
        .collect();
    Partition::new(parts)
}

/// Ranks of the equivariant pure resolution of type
/// `(d_0, d_0 + e_1, d_0 + e_1 + e_2, ...)`: the dimensions of
/// `S_{alpha(e, i)}` of an `n = len(e)` dimensional space, for
/// `i = 0..=n`. All `e_j` must be at least 1.
pub fn equivariant_betti(e: &[u64]) -> Vec<BigInt> {
    assert!(!e.is_empty() && e.iter().all(|&x| x >= 1), "differences must be >= 1");
    let n = e.len();
    (0..=n)
        .map(|i| schur_dimension(&alpha(e, i), n).expect("alpha has n parts"))
        .collect()
}

/// Ranks of the generic-matrix pure resolution of type `d`.
///
/// With `e_i = d_i - d_{i-1}`, `r = sum e_i` and an `r - c + 1`
/// dimensional space `F`, term `i` is
/// `S_{dual alpha(e,i)} F (x) wedge^{d_i} G*`, of rank
/// `dim S * binom(r, d_i)`. A nonzero `d_0` is normalized away by
/// twisting.
pub fn generic_matrix_betti(d: &DegreeSequence) -> Result<Vec<BigInt>> {
    let c = d.len() - 1;
    if c == 0 {
        return Err(Error::InvalidPattern(
            "generic-matrix construction needs length >= 2".to_string(),
        ));
    }
    let base = d.get(0);
    let shifted: Vec<i64> = d.entries().iter().map(|&x| x - base).collect();
    let e: Vec<u64> = shifted.windows(2).map(|w| (w[1] - w[0]) as u64).collect();
    let r: u64 = e.iter().sum();
    let dim_f = (r as usize) - c + 1;
    let mut out = Vec::with_capacity(c + 1);
    for (i, &twist) in shifted.iter().enumerate() {
        let gamma = conjugate(&alpha(&e, i));
        let dim = schur_dimension(&gamma, dim_f)?;
        out.push(dim * binomial(r, twist));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::pure_diagram;
    use crate::testutil::deg;
    use num_traits::Zero;

    fn part(v: &[u64]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn schur_dimensions_from_worked_resolutions() {
        assert_eq!(schur_dimension(&part(&[3, 1]), 3).unwrap(), BigInt::from(15));
        assert_eq!(schur_dimension(&part(&[3, 1, 1]), 3).unwrap(), BigInt::from(6));
        // symmetric powers are binomials
        for (r, n, expect) in [(4u64, 3usize, 15i64), (2, 5, 15), (0, 4, 1)] {
            assert_eq!(
                schur_dimension(&part(&[r]), n).unwrap(),
                BigInt::from(expect)
            );
        }
        assert!(matches!(
            schur_dimension(&part(&[1, 1, 1]), 2),
            Err(Error::TooManyParts { parts: 3, n: 2 })
        ));
    }

    #[test]
    fn determinant_twist_preserves_dimension() {
        for lambda in [vec![3, 1], vec![2, 2, 1], vec![4]] {
            let n = 3;
            let d0 = schur_dimension(&part(&lambda), n).unwrap();
            let raised: Vec<u64> = (0..n)
                .map(|i| lambda.get(i).copied().unwrap_or(0) + 2)
                .collect();
            let d1 = schur_dimension(&part(&raised), n).unwrap();
            assert_eq!(d0, d1);
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&part(&[4])), part(&[1, 1, 1, 1]));
        assert_eq!(conjugate(&part(&[4, 2])), part(&[2, 2, 1, 1]));
        assert_eq!(conjugate(&part(&[])), part(&[]));
        for lambda in [vec![5, 3, 3, 1], vec![2, 1], vec![7]] {
            let p = part(&lambda);
            assert_eq!(conjugate(&conjugate(&p)), p);
        }
    }

    #[test]
    fn equivariant_ranks() {
        assert_eq!(equivariant_betti(&[3, 1, 1]), big(&[1, 10, 15, 6]));
        assert_eq!(equivariant_betti(&[1, 2, 1]), big(&[3, 6, 6, 3]));
        assert_eq!(equivariant_betti(&[1, 1, 1]), big(&[1, 3, 3, 1]));
    }

    #[test]
    fn generic_matrix_ranks() {
        assert_eq!(
            generic_matrix_betti(&deg(&[0, 3, 5])).unwrap(),
            big(&[4, 10, 6])
        );
        assert_eq!(
            generic_matrix_betti(&deg(&[0, 4, 5])).unwrap(),
            big(&[1, 5, 4])
        );
        assert_eq!(
            generic_matrix_betti(&deg(&[0, 1, 5])).unwrap(),
            big(&[4, 5, 1])
        );
        // twisting normalizes away
        assert_eq!(
            generic_matrix_betti(&deg(&[2, 5, 7])).unwrap(),
            generic_matrix_betti(&deg(&[0, 3, 5])).unwrap()
        );
    }

    /// Both constructions land on the pure-diagram ray: the rank vector is
    /// an exact positive integer multiple of pi(d).
    #[test]
    fn ray_law_small_types() {
        let mut compositions: Vec<Vec<u64>> = Vec::new();
        fn rec(prefix: &mut Vec<u64>, remaining: u64, out: &mut Vec<Vec<u64>>) {
            if !prefix.is_empty() && prefix.len() <= 4 {
                out.push(prefix.clone());
            }
            if prefix.len() == 4 {
                return;
            }
            for next in 1..=remaining {
                prefix.push(next);
                rec(prefix, remaining - next, out);
                prefix.pop();
            }
        }
        rec(&mut Vec::new(), 7, &mut compositions);

        for e in compositions {
            let mut degrees = vec![0i64];
            for &step in &e {
                degrees.push(degrees.last().unwrap() + step as i64);
            }
            let d = deg(&degrees);
            let pi = pure_diagram(&d);
            for ranks in [Some(equivariant_betti(&e)), generic_matrix_betti(&d).ok()] {
                let ranks = ranks.unwrap();
                assert_eq!(ranks.len(), pi.values.len());
                let m = &ranks[0] / &pi.values[0];
                assert!(!m.is_zero());
                assert_eq!(&ranks[0], &(&m * &pi.values[0]), "integral multiple");
                for (r, v) in ranks.iter().zip(&pi.values) {
                    assert_eq!(r, &(&m * v), "e={e:?}");
                }
            }
        }
    }
}
