//! Exact binomials, central binomials, Catalan numbers and factorials.
//!
//! Everything is evaluated with [`BigUint`] by incremental multiplication, so
//! no intermediate value ever touches floating point or a fixed-width integer.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Arbitrary-precision walk count.
pub type BigCount = BigUint;

/// `n choose k`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    // acc = C(n - k + i, i) after step i, always an integer.
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// `(2m choose m)`: closed walks of length `2m` at the origin of the integer line.
pub fn central_binomial(m: u64) -> BigUint {
    binomial(2 * m, m)
}

/// The Catalan number `C_m = binom(2m, m) / (m + 1)`.
pub fn catalan(m: u64) -> BigUint {
    central_binomial(m) / (m + 1)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Both sides of `sum_k binom(2m,2k) binom(2k,k) binom(2m-2k,m-k) = binom(2m,m)^2`.
pub fn binomial_identity_sides(m: u64) -> (BigUint, BigUint) {
    let lhs: BigUint = (0..=m)
        .map(|k| binomial(2 * m, 2 * k) * central_binomial(k) * central_binomial(m - k))
        .sum();
    let c = central_binomial(m);
    (lhs, &c * &c)
}

/// Checks the identity of [`binomial_identity_sides`] with exact arithmetic.
pub fn verify_binomial_identity(m: u64) -> bool {
    let (lhs, rhs) = binomial_identity_sides(m);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(n: usize) -> Vec<Vec<BigUint>> {
        let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![BigUint::one(); i + 1];
            for j in 1..i {
                row[j] = &prev[j - 1] + &prev[j];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let rows = pascal(70);
        for (n, row) in rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n as u64, k as u64), v, "C({n},{k})");
            }
            assert!(binomial(n as u64, n as u64 + 1).is_zero());
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(central_binomial(0), BigUint::one());
        assert_eq!(central_binomial(2), BigUint::from(6u32));
        assert_eq!(catalan(3), BigUint::from(5u32));
        let cats: Vec<u32> = vec![1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862];
        for (m, c) in cats.into_iter().enumerate() {
            assert_eq!(catalan(m as u64), BigUint::from(c));
        }
        assert_eq!(factorial(10), BigUint::from(3_628_800u32));
    }

    #[test]
    fn catalan_is_exact_for_large_m() {
        // C_m (m + 1) = binom(2m, m) must hold without remainder.
        for m in 0..200u64 {
            assert_eq!(catalan(m) * (m + 1), central_binomial(m));
        }
    }

    #[test]
    fn identity_small_and_large() {
        // m = 2: 6 + 24 + 6 = 36
        let terms: Vec<BigUint> = (0..=2u64)
            .map(|k| binomial(4, 2 * k) * central_binomial(k) * central_binomial(2 - k))
            .collect();
        assert_eq!(terms, vec![6u32.into(), 24u32.into(), 6u32.into()]);
        for m in [0, 1, 2, 30, 31, 64] {
            assert!(verify_binomial_identity(m), "m = {m}");
        }
    }
}
