//! Complete elliptic integrals of the first and second kind by the
//! arithmetic-geometric mean.
//!
//! With `a_0 = 1`, `b_0 = k'`, `c_0 = k` and the usual AGM recursion,
//! `K = pi / (2 a_inf)` and `E = K (1 - sum_n 2^{n-1} c_n^2)`.

use std::f64::consts::FRAC_PI_2;

use crate::error::Error;
use crate::Result;

const MAX_ITER: usize = 64;

/// `K(k)` and `E(k)` for modulus `k`, with the AGM iteration count.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EllipticPair {
    pub k: f64,
    pub first_kind: f64,
    pub second_kind: f64,
    pub iterations: usize,
}

/// Complete elliptic integrals at modulus `0 <= k < 1`.
pub fn elliptic_ke(k: f64) -> Result<EllipticPair> {
    if !(0.0..1.0).contains(&k) {
        return Err(Error::Domain(format!(
            "elliptic modulus must lie in [0, 1), got {k}"
        )));
    }
    Ok(agm(k, ((1.0 - k) * (1.0 + k)).sqrt()))
}

/// Same integrals parameterised by the complementary modulus
/// `k' = sqrt(1 - k^2)` in `(0, 1]`, which keeps full relative accuracy as
/// `k -> 1`.
pub fn elliptic_ke_complementary(k_prime: f64) -> Result<EllipticPair> {
    if !(k_prime > 0.0 && k_prime <= 1.0) {
        return Err(Error::Domain(format!(
            "complementary modulus must lie in (0, 1], got {k_prime}"
        )));
    }
    Ok(agm(((1.0 - k_prime) * (1.0 + k_prime)).sqrt(), k_prime))
}

fn agm(k: f64, k_prime: f64) -> EllipticPair {
    let (mut a, mut b) = (1.0f64, k_prime);
    let mut sum = 0.5 * k * k;
    // weight is 2^{n-1} for c_n, starting at n = 1
    let mut weight = 1.0;
    let mut iterations = 0;
    while iterations < MAX_ITER {
        let c = 0.5 * (a - b);
        sum += weight * c * c;
        if c.abs() <= f64::EPSILON * a {
            break;
        }
        let next_a = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next_a;
        weight *= 2.0;
        iterations += 1;
    }
    let first_kind = FRAC_PI_2 / a;
    EllipticPair {
        k,
        first_kind,
        second_kind: first_kind * (1.0 - sum),
        iterations,
    }
}
