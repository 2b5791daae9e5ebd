//! Truncated power series arithmetic.
//!
//! A [`Series`] holds the first `len` Taylor coefficients of an analytic
//! function around some expansion point. All products and quotients are
//! truncated to the length of the left operand, which is how the jets in
//! [`crate::special`] obtain every derivative order of the rational
//! trigonometric forms without symbolic differentiation.

use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    coeffs: Vec<f64>,
}

impl Series {
    pub fn zeros(len: usize) -> Self {
        Self {
            coeffs: vec![0.0; len],
        }
    }

    pub fn from_coeffs(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn constant(value: f64, len: usize) -> Self {
        let mut s = Self::zeros(len);
        if len > 0 {
            s.coeffs[0] = value;
        }
        s
    }

    /// `a + h`, the expansion variable itself shifted by `a`.
    pub fn variable(a: f64, len: usize) -> Self {
        let mut s = Self::constant(a, len);
        if len > 1 {
            s.coeffs[1] = 1.0;
        }
        s
    }

    /// Taylor coefficients of `sin(a + h)` in `h`.
    pub fn sin_at(a: f64, len: usize) -> Self {
        let (s, c) = a.sin_cos();
        Self::trig(s, c, len)
    }

    /// Taylor coefficients of `cos(a + h)` in `h`.
    pub fn cos_at(a: f64, len: usize) -> Self {
        let (s, c) = a.sin_cos();
        Self::trig(c, -s, len)
    }

    // f(a+h) where f(a) = v0, f'(a) = v1, f'' = -f
    fn trig(v0: f64, v1: f64, len: usize) -> Self {
        let mut coeffs = Vec::with_capacity(len);
        let mut fact = 1.0;
        for k in 0..len {
            if k > 0 {
                fact *= k as f64;
            }
            let d = match k % 4 {
                0 => v0,
                1 => v1,
                2 => -v0,
                _ => -v1,
            };
            coeffs.push(d / fact);
        }
        Self { coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Drops the first `k` coefficients, i.e. divides by `h^k`.
    ///
    /// The dropped coefficients must vanish analytically; the caller is
    /// responsible for that.
    pub fn shift_down(&self, k: usize) -> Self {
        Self {
            coeffs: self.coeffs.iter().skip(k).copied().collect(),
        }
    }

    pub fn truncate(&self, len: usize) -> Self {
        Self {
            coeffs: self.coeffs.iter().take(len).copied().collect(),
        }
    }

    /// Series quotient `self / rhs`. Requires `rhs[0] != 0`.
    pub fn div(&self, rhs: &Series) -> Self {
        let len = self.len().min(rhs.len());
        let d0 = rhs.coeffs[0];
        let mut q = vec![0.0; len];
        for k in 0..len {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc -= rhs.coeffs[j] * q[k - j];
            }
            q[k] = acc / d0;
        }
        Self { coeffs: q }
    }

    /// Formal derivative with respect to the expansion variable.
    pub fn derivative(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| k as f64 * c)
                .collect(),
        }
    }

    /// Derivatives `f(a), f'(a), ..., f^(len-1)(a)` from the coefficients.
    pub fn derivatives(&self) -> Vec<f64> {
        let mut fact = 1.0;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if k > 0 {
                    fact *= k as f64;
                }
                c * fact
            })
            .collect()
    }

    /// Re-expands the series around `x0`, keeping `len` coefficients.
    ///
    /// Coefficient `j` of the result is `f^(j)(x0) / j!`, summed from the
    /// stored coefficients with Horner-style accumulation.
    pub fn recenter(&self, x0: f64, len: usize) -> Self {
        let n = self.len();
        let mut out = Vec::with_capacity(len);
        for j in 0..len.min(n) {
            // sum_{k >= j} binom(k, j) c_k x0^{k-j}, evaluated from the top
            let mut acc = 0.0;
            for k in (j..n).rev() {
                acc = acc * x0 + binomial(k, j) * self.coeffs[k];
            }
            out.push(acc);
        }
        out.resize(len, 0.0);
        Self { coeffs: out }
    }

    /// Alternates the sign of odd coefficients: `f(h) -> f(-h)`.
    pub fn reflect(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { *c })
                .collect(),
        }
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let len = self.len().min(rhs.len());
        Series {
            coeffs: (0..len).map(|k| self.coeffs[k] + rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        let len = self.len().min(rhs.len());
        Series {
            coeffs: (0..len).map(|k| self.coeffs[k] - rhs.coeffs[k]).collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let len = self.len().min(rhs.len());
        let mut out = vec![0.0; len];
        for (i, a) in self.coeffs.iter().take(len).enumerate() {
            if *a == 0.0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(len - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Series { coeffs: out }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        self.scale(-1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sin_squared_plus_cos_squared_is_one() {
        let s = Series::sin_at(0.7, 12);
        let c = Series::cos_at(0.7, 12);
        let one = &(&s * &s) + &(&c * &c);
        assert!((one.coeff(0) - 1.0).abs() < 1e-15);
        for k in 1..12 {
            assert!(one.coeff(k).abs() < 1e-15, "k={k}: {}", one.coeff(k));
        }
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = Series::from_coeffs(vec![1.0, 2.0, -0.5, 0.25, 3.0]);
        let b = Series::from_coeffs(vec![2.0, -1.0, 0.5, 0.0, 1.0]);
        let q = (&a * &b).div(&b);
        for k in 0..5 {
            assert!((q.coeff(k) - a.coeff(k)).abs() < 1e-14);
        }
    }

    #[test]
    fn recenter_matches_shifted_expansion() {
        let s = Series::sin_at(0.0, 30);
        let moved = s.recenter(0.3, 5);
        let direct = Series::sin_at(0.3, 5);
        for k in 0..5 {
            assert!((moved.coeff(k) - direct.coeff(k)).abs() < 1e-15);
        }
    }

    #[test]
    fn derivatives_scale_by_factorial() {
        let e = Series::from_coeffs(vec![1.0, 1.0, 0.5, 1.0 / 6.0]);
        for d in e.derivatives() {
            assert!((d - 1.0).abs() < 1e-15);
        }
    }
}
