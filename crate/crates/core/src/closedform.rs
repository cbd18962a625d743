//! Integer closed forms for Catalan counts and for the fixed-point counts of
//! rotation on configurations.
//!
//! These are computed purely from binomial coefficients and serve as an
//! oracle independent of both enumeration and polynomial evaluation.

use num_bigint::BigInt;
use num_integer::{gcd, Integer};
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact binomial coefficient, zero for `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n, n) / (n + 1)
}

/// Both sides of the arc-count decomposition of `C_n`:
/// `Σ_a binom(n-1, 2a) · binom(2a, a)/(a+1) · 2^(n-1-2a)` and `C_n`.
pub fn catalan_sum_identity(n: usize) -> Result<(BigInt, BigInt)> {
    let m = n
        .checked_sub(1)
        .ok_or_else(|| Error::Domain("the summation identity needs n >= 1".into()))?;
    let left = (0..=m / 2)
        .map(|a| {
            let (inner, rem) = binomial(2 * a, a).div_rem(&BigInt::from(a + 1));
            debug_assert!(rem.is_zero());
            binomial(m, 2 * a) * inner * (BigInt::one() << (m - 2 * a))
        })
        .sum();
    Ok((left, catalan(n)))
}

/// Value of `C_{da/2}(q)` at `q = e^{2πia/(da)}`, the number of rotation-invariant
/// noncrossing matchings of `[da]` under rotation by `a`.
///
/// Zero when `da` is odd. For `d = 1` the root is 1 and the value is the
/// Catalan number itself. Otherwise `binom(a, a/2)` for even `a`,
/// `binom(a, (a-1)/2)` for odd `a` with `d = 2`, and zero for odd `a` with `d > 2`.
pub fn half_catalan_at_root(a: usize, d: usize) -> BigInt {
    assert!(d >= 1, "d must be positive");
    if (d * a) % 2 == 1 {
        BigInt::zero()
    } else if d == 1 {
        catalan(a / 2)
    } else if a.is_multiple_of(2) {
        binomial(a, a / 2)
    } else if d == 2 {
        binomial(a, (a - 1) / 2)
    } else {
        BigInt::zero()
    }
}

/// One summand of the fixed-count sum, indexed by the number `a` of points of
/// `[k]` covered by arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedCountTerm {
    pub a: usize,
    /// `binom(k, a)`: which points of `[k]` are arc-covered.
    pub binomial: BigInt,
    /// Invariant noncrossing matchings of the `da` arc-covered points.
    pub inner: BigInt,
    /// `2^(k-a)`: ball or uncovered for the remaining points of `[k]`.
    pub power_of_two: BigInt,
}

impl FixedCountTerm {
    pub fn value(&self) -> BigInt {
        &self.binomial * &self.inner * &self.power_of_two
    }
}

/// Constructive count of configurations of `[n-1]` fixed by `g^k`, for
/// `k | n - 1` and `d = (n - 1) / k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedCountBreakdown {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub terms: Vec<FixedCountTerm>,
    pub total: BigInt,
}

/// Builds the fixed-count sum for `g^k` on configurations of `[n-1]`.
///
/// `k` must be a positive divisor of `n - 1`; reduce a general exponent with
/// `gcd(k, n - 1)` first.
pub fn fixed_count_formula(n: usize, k: usize) -> Result<FixedCountBreakdown> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "fixed-count formula needs n >= 2, got {n}"
        )));
    }
    let m = n - 1;
    if k == 0 || !m.is_multiple_of(k) {
        return Err(Error::Domain(format!(
            "k = {k} does not divide n - 1 = {m}"
        )));
    }
    let d = m / k;
    let terms: Vec<_> = (0..=k)
        .map(|a| FixedCountTerm {
            a,
            binomial: binomial(k, a),
            inner: half_catalan_at_root(a, d),
            power_of_two: BigInt::one() << (k - a),
        })
        .collect();
    let total = terms.iter().map(FixedCountTerm::value).sum();
    Ok(FixedCountBreakdown {
        n,
        k,
        d,
        terms,
        total,
    })
}

/// Closed form for `C_n(q)` at `q = e^{2πik/(n-1)}`.
///
/// With `k' = gcd(k, n-1)` and `d = (n-1)/k'`: `C_n` if `d = 1`,
/// `binom(n, (n-1)/2)` if `d = 2`, and `binom(2k', k')` otherwise.
pub fn rhs_closed_form(n: usize, k: i64) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::Domain(format!("closed form needs n >= 2, got {n}")));
    }
    let m = n - 1;
    let k = gcd(k.unsigned_abs() as usize, m);
    Ok(match m / k {
        1 => catalan(n),
        2 => binomial(n, m / 2),
        _ => binomial(2 * k, k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::count_fixed;
    use crate::objects::enumerate_configurations;
    use crate::qpoly::{eval_at_primitive_root, q_catalan};

    fn big(v: u64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn catalan_examples() {
        let expected = [1u64, 1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(n), big(c));
        }
        assert_eq!(binomial(14, 7), big(3432));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn sum_identity() {
        assert_eq!(catalan_sum_identity(1).unwrap(), (big(1), big(1)));
        assert_eq!(catalan_sum_identity(3).unwrap(), (big(5), big(5)));
        assert_eq!(catalan_sum_identity(7).unwrap(), (big(429), big(429)));
        for n in 1..=30 {
            let (l, r) = catalan_sum_identity(n).unwrap();
            assert_eq!(l, r, "n={n}");
        }
        assert!(catalan_sum_identity(0).is_err());
    }

    #[test]
    fn half_catalan_examples() {
        assert_eq!(half_catalan_at_root(2, 3), big(2));
        assert_eq!(half_catalan_at_root(1, 3), big(0));
        assert_eq!(half_catalan_at_root(3, 2), big(3));
        assert_eq!(half_catalan_at_root(0, 5), big(1));
        assert_eq!(half_catalan_at_root(3, 1), big(0));
        assert_eq!(half_catalan_at_root(4, 1), big(2));
        // C_3(q) at q = -1
        let v = eval_at_primitive_root(&q_catalan(3), 2);
        assert_eq!(v.as_integer(), Some(big(3)));
    }

    #[test]
    fn half_catalan_matches_cyclotomic_reduction() {
        for a in 1..=12usize {
            for d in 1..=6usize {
                if (d * a) % 2 == 1 {
                    assert_eq!(half_catalan_at_root(a, d), BigInt::zero());
                    continue;
                }
                let points = d * a;
                let order = points / gcd(a, points);
                let value = eval_at_primitive_root(&q_catalan(points / 2), order);
                assert_eq!(
                    value.as_integer(),
                    Some(half_catalan_at_root(a, d)),
                    "a={a} d={d}"
                );
            }
        }
    }

    #[test]
    fn fixed_count_examples() {
        let b = fixed_count_formula(5, 4).unwrap();
        assert_eq!((b.d, b.total.clone()), (1, big(42)));
        let b = fixed_count_formula(5, 1).unwrap();
        assert_eq!(b.d, 4);
        assert_eq!(
            b.terms
                .iter()
                .map(FixedCountTerm::value)
                .collect::<Vec<_>>(),
            [big(2), big(0)]
        );
        assert_eq!(b.total, big(2));
        let b = fixed_count_formula(5, 2).unwrap();
        let values: Vec<_> = b.terms.iter().map(FixedCountTerm::value).collect();
        assert_eq!(values, [big(4), big(4), big(2)]);
        assert_eq!(b.total, big(10));
        assert!(fixed_count_formula(5, 3).is_err());
        assert!(fixed_count_formula(5, 0).is_err());
        assert!(fixed_count_formula(1, 1).is_err());
    }

    #[test]
    fn rhs_examples() {
        assert_eq!(rhs_closed_form(6, 0).unwrap(), big(132));
        assert_eq!(rhs_closed_form(5, 2).unwrap(), big(10));
        assert_eq!(rhs_closed_form(7, 2).unwrap(), big(6));
        assert_eq!(
            eval_at_primitive_root(&q_catalan(7), 3).as_integer(),
            Some(big(6))
        );
        assert!(rhs_closed_form(1, 0).is_err());
    }

    #[test]
    fn rhs_depends_only_on_gcd() {
        for n in 2..=20usize {
            for k in -30i64..=30 {
                let g = gcd(k.unsigned_abs() as usize, n - 1) as i64;
                assert_eq!(
                    rhs_closed_form(n, k).unwrap(),
                    rhs_closed_form(n, g).unwrap()
                );
            }
        }
    }

    #[test]
    fn three_routes_agree() {
        for n in 2..=15usize {
            let poly = q_catalan(n);
            for k in (1..n).filter(|k| (n - 1) % k == 0) {
                let formula = fixed_count_formula(n, k).unwrap().total;
                let closed = rhs_closed_form(n, k as i64).unwrap();
                let exact = eval_at_primitive_root(&poly, (n - 1) / k).as_integer();
                assert_eq!(formula, closed, "n={n} k={k}");
                assert_eq!(exact, Some(closed), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn formula_matches_enumeration() {
        for n in 2..=10usize {
            let all = enumerate_configurations(n - 1).unwrap();
            for k in (1..n).filter(|k| (n - 1) % k == 0) {
                let brute = count_fixed(&all, k as i64);
                assert_eq!(fixed_count_formula(n, k).unwrap().total, big(brute));
            }
        }
    }
}
