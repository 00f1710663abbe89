//! Hermite polynomials (physicists' convention) and their half-line norms.
//!
//! Convention: H_0 = 1, H_1(x) = 2x, H_{j+1} = 2x H_j − 2j H_{j−1}. The
//! half-line norm is N_j = ∫_0^∞ H_j(x)² e^{-x²} dx = √π 2^{j−1} j!. The
//! probabilists' convention would silently change every kernel value built
//! on top of these, so everything downstream assumes the physicists' one.
//!
//! Values are carried as mantissa · exp(log_scale) so that degrees up to a
//! few thousand at |x| ≤ 100 never overflow a double.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// A real number stored as `mantissa * exp(log_scale)`.
#[derive(Clone, Copy, Debug)]
pub struct WeightedValue {
    pub mantissa: f64,
    pub log_scale: f64,
}

impl WeightedValue {
    pub fn new(mantissa: f64, log_scale: f64) -> Self {
        WeightedValue {
            mantissa,
            log_scale,
        }
    }

    /// Collapse to a plain double. May over/underflow for extreme scales.
    pub fn value(self) -> f64 {
        self.mantissa * self.log_scale.exp()
    }

    /// ln |value|; −∞ for an exact zero.
    pub fn ln_abs(self) -> f64 {
        if self.mantissa == 0.0 {
            f64::NEG_INFINITY
        } else {
            self.mantissa.abs().ln() + self.log_scale
        }
    }

    pub fn signum(self) -> f64 {
        self.mantissa.signum()
    }

    pub fn is_zero(self) -> bool {
        self.mantissa == 0.0
    }
}

// Renormalisation threshold for the three-term recurrence.
const BIG: f64 = 1e120;
const BIG_INV: f64 = 1e-120;
const LN_BIG: f64 = 276.31021115928547; // ln 1e120

/// H_j(x) with internal rescaling; no intermediate overflow for j ≤ 2000,
/// |x| ≤ 100.
pub fn hermite_eval(j: u32, x: f64) -> Result<WeightedValue> {
    if !x.is_finite() {
        return Err(Error::domain("hermite_eval: x must be finite"));
    }
    let mut log_scale = 0.0f64;
    let mut prev = 1.0f64; // H_0
    if j == 0 {
        return Ok(WeightedValue::new(prev, log_scale));
    }
    let mut cur = 2.0 * x; // H_1
    for k in 1..j {
        let next = 2.0 * x * cur - 2.0 * (k as f64) * prev;
        prev = cur;
        cur = next;
        if cur.abs() > BIG {
            cur *= BIG_INV;
            prev *= BIG_INV;
            log_scale += LN_BIG;
        }
    }
    Ok(WeightedValue::new(cur, log_scale))
}

/// e^{-x²/2} H_j(x), the weighted variant used inside kernels.
pub fn hermite_weighted(j: u32, x: f64) -> Result<WeightedValue> {
    let mut v = hermite_eval(j, x)?;
    v.log_scale -= 0.5 * x * x;
    Ok(v)
}

/// ln n! by table lookup for small n and a Stirling series beyond.
pub fn ln_factorial(n: u64) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut t = vec![0.0f64; 4096];
        for i in 2..t.len() {
            t[i] = t[i - 1] + (i as f64).ln();
        }
        t
    });
    if (n as usize) < table.len() {
        return table[n as usize];
    }
    // Stirling series for ln Γ(n+1); already ~1e-16 accurate at this size.
    let z = n as f64 + 1.0;
    let zi = 1.0 / z;
    (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln()
        + zi * (1.0 / 12.0 - zi * zi * (1.0 / 360.0 - zi * zi / 1260.0))
}

/// ln N_j where N_j = √π 2^{j−1} j! is the half-line Hermite norm.
pub fn ln_hermite_norm(j: u32) -> f64 {
    0.5 * PI.ln() + (j as f64 - 1.0) * std::f64::consts::LN_2 + ln_factorial(j as u64)
}

/// N_j as a plain double; overflows for j beyond roughly 130.
pub fn hermite_norm(j: u32) -> f64 {
    ln_hermite_norm(j).exp()
}

/// ln γ_j where γ_j = N_j^{1/2} normalises e^{-x²/2}H_j to unit L² norm on
/// the half line.
pub fn ln_gamma_j(j: u32) -> f64 {
    0.5 * ln_hermite_norm(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::quad::quad_semiinf;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn low_degree_values() {
        assert_eq!(hermite_eval(0, 3.7).unwrap().value(), 1.0);
        assert_eq!(hermite_eval(1, 0.0).unwrap().value(), 0.0);
        // H_3 = 8x³ − 12x, so H_3(2) = 64 − 24 = 40.
        assert!((hermite_eval(3, 2.0).unwrap().value() - 40.0).abs() < 1e-12);
    }

    #[test]
    fn norms() {
        assert!((hermite_norm(0) - PI.sqrt() / 2.0).abs() < 1e-12);
        assert!((hermite_norm(1) - PI.sqrt()).abs() < 1e-12);
        assert!((hermite_norm(2) - 4.0 * PI.sqrt()).abs() < 1e-11);
    }

    #[test]
    fn non_finite_rejected() {
        assert!(hermite_eval(3, f64::NAN).is_err());
        assert!(hermite_eval(3, f64::INFINITY).is_err());
    }

    #[test]
    fn recurrence_consistency() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let j: u32 = rng.random_range(1..=200);
            let x: f64 = rng.random_range(-10.0..10.0);
            let hm = hermite_eval(j - 1, x).unwrap();
            let h = hermite_eval(j, x).unwrap();
            let hp = hermite_eval(j + 1, x).unwrap();
            // Compare on a common scale.
            let scale = h.ln_abs().max(hm.ln_abs()).max(hp.ln_abs());
            if scale == f64::NEG_INFINITY {
                continue;
            }
            let a = hp.signum() * (hp.ln_abs() - scale).exp();
            let b = h.signum() * (h.ln_abs() - scale).exp();
            let c = hm.signum() * (hm.ln_abs() - scale).exp();
            let resid = a - 2.0 * x * b + 2.0 * (j as f64) * c;
            assert!(
                resid.abs() < 1e-9,
                "recurrence residual {resid} at j={j}, x={x}"
            );
        }
    }

    #[test]
    fn parity() {
        for j in 0..12u32 {
            let lhs = hermite_eval(j, 1.3).unwrap().value();
            let rhs = hermite_eval(j, -1.3).unwrap().value();
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            assert!((lhs - sign * rhs).abs() < 1e-10 * lhs.abs().max(1.0));
        }
    }

    #[test]
    fn high_degree_no_overflow() {
        let v = hermite_eval(2000, 100.0).unwrap();
        assert!(v.mantissa.is_finite());
        assert!(v.ln_abs().is_finite());
        let w = hermite_weighted(2000, 100.0).unwrap();
        assert!(w.ln_abs().is_finite());
    }

    #[test]
    fn orthogonality_via_quadrature() {
        // ∫_0^∞ H_ja H_jb e^{-x²} dx = δ N_ja within same parity; the
        // integrals are normalised by √(N_ja N_jb) so the quadrature runs
        // at unit scale.
        let pairs_even = [(0u32, 0u32), (1, 1), (3, 3), (0, 2), (1, 4), (5, 5), (10, 10), (2, 10)];
        let pairs_odd = [(0u32, 0u32), (2, 2), (1, 3), (4, 4), (0, 4)];
        let run = |ja: u32, jb: u32| {
            let ln_scale = 0.5 * (ln_hermite_norm(ja) + ln_hermite_norm(jb));
            let integral = quad_semiinf(
                |x| {
                    let ha = hermite_eval(ja, x).unwrap();
                    let hb = hermite_eval(jb, x).unwrap();
                    let ln = ha.ln_abs() + hb.ln_abs() - x * x - ln_scale;
                    ha.signum() * hb.signum() * ln.exp()
                },
                0.0,
                1e-10,
            )
            .unwrap()
            .value;
            let expect = if ja == jb {
                (ln_hermite_norm(ja) - ln_scale).exp()
            } else {
                0.0
            };
            assert!(
                (integral - expect).abs() < 1e-8 * expect.max(1.0),
                "ja={ja} jb={jb}: {integral} vs {expect}"
            );
        };
        for (a, b) in pairs_even {
            run(2 * a, 2 * b);
        }
        for (a, b) in pairs_odd {
            run(2 * a + 1, 2 * b + 1);
        }
    }
}
