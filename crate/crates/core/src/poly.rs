//! Univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::exact::Rational;

/// Coefficients in ascending degree; trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c * x^degree`
    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Polynomial::new(self.coeffs.iter().map(|c| c * r).collect())
    }

    /// `p(x + h)`
    pub fn shift(&self, h: &Rational) -> Self {
        let x_plus_h = Polynomial::new(vec![h.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::zero(), |acc, c| {
                &(&acc * &x_plus_h) + &Polynomial::constant(c.clone())
            })
    }

    /// Forward difference `p(x + 1) - p(x)`.
    pub fn forward_difference(&self) -> Self {
        &self.shift(&Rational::one()) - self
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    /// Formats in the variable `x`, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_in(self, "x"))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", format_in(self, "x"))
    }
}

/// Renders `c*v^k` terms, highest degree first, e.g. `-3*x^2 - 3*x + 2`.
pub fn format_in(p: &Polynomial, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let body = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if body.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag == Rational::one() {
            out.push_str(&body);
        } else {
            out.push_str(&format!("{mag}*{body}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn poly(cs: &[i64]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&c| Rational::from(c)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(poly(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[0]).degree(), None);
    }

    #[test]
    fn shift_and_difference() {
        // (x+1)^2 = x^2 + 2x + 1
        assert_eq!(poly(&[0, 0, 1]).shift(&Rational::one()), poly(&[1, 2, 1]));
        assert_eq!(poly(&[0, 0, 1]).forward_difference(), poly(&[1, 2]));
    }

    #[test]
    fn eval_horner() {
        let p = poly(&[2, -3, -3]);
        assert_eq!(p.eval(&q(1, 2)), q(-1, 4));
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[2, -3, -3]).to_string(), "-3*x^2 - 3*x + 2");
        assert_eq!(poly(&[0, 1]).to_string(), "x");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
