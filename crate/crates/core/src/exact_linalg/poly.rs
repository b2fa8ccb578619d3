use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{Field, Rational};

/// Univariate polynomial, coefficient `j` multiplies `tʲ`.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no coefficients at all.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(F::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// `c·tʲ`
    pub fn monomial(c: F, j: usize) -> Self {
        let mut coeffs = vec![F::zero(); j + 1];
        coeffs[j] = c;
        Self::new(coeffs)
    }

    /// `t - t0`
    pub fn linear_root(t0: &F) -> Self {
        Self::new(vec![-t0.clone(), F::one()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `tʲ`, zero past the degree.
    pub fn coeff(&self, j: usize) -> F {
        self.coeffs.get(j).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c.clone() * F::from_int(j as i64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::constant(F::one()), |acc, _| &acc * self)
    }

    /// Synthetic division by `t - t0`: returns quotient and remainder `f(t0)`.
    pub fn div_linear(&self, t0: &F) -> (Self, F) {
        if self.coeffs.is_empty() {
            return (Self::zero(), F::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![F::zero(); n - 1];
        let mut carry = F::zero();
        for j in (1..n).rev() {
            carry = self.coeffs[j].clone() + carry * t0.clone();
            q[j - 1] = carry.clone();
        }
        let rem = self.coeffs[0].clone() + carry * t0.clone();
        (Self::new(q), rem)
    }

    /// Coefficients of `u ↦ f(t0 + u)`, the Taylor expansion at `t0`.
    pub fn taylor_at(&self, t0: &F) -> Self {
        let mut rest = self.clone();
        let mut out = Vec::with_capacity(self.coeffs.len());
        while !rest.is_zero() {
            let (q, r) = rest.div_linear(t0);
            out.push(r);
            rest = q;
        }
        Self::new(out)
    }

    /// `u ↦ f(c·u)`
    pub fn rescale_variable(&self, c: &F) -> Self {
        let mut power = F::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            out.push(x.clone() * power.clone());
            power = power * c.clone();
        }
        Self::new(out)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl Poly<Rational> {
    pub fn lift<G: Field>(&self) -> Poly<G> {
        self.map(G::from_rational)
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| match j {
                0 => format!("({c})"),
                1 => format!("({c})*t"),
                _ => format!("({c})*t^{j}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::field::{int, rat};

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn trims_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let f = p(&[1, 1]);
        assert_eq!(&f * &f, p(&[1, 2, 1]));
        assert_eq!(&f - &f, Poly::zero());
        assert_eq!(f.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[5, 0, 3]).derivative(), p(&[0, 6]));
        assert_eq!(p(&[1, 2, 3]).eval(&int(2)), int(17));
    }

    #[test]
    fn synthetic_division() {
        // t³ - 1 = (t - 1)(t² + t + 1)
        let (q, r) = p(&[-1, 0, 0, 1]).div_linear(&int(1));
        assert_eq!(q, p(&[1, 1, 1]));
        assert_eq!(r, int(0));
        let (_, r) = p(&[3, 0, 1]).div_linear(&int(2));
        assert_eq!(r, int(7));
    }

    #[test]
    fn taylor_expansion() {
        // t² at t0 = 3: 9 + 6u + u²
        assert_eq!(p(&[0, 0, 1]).taylor_at(&int(3)), p(&[9, 6, 1]));
        let f = Poly::new(vec![rat(1, 2), int(-3), rat(2, 3), int(1)]);
        let g = f.taylor_at(&rat(-5, 4));
        assert_eq!(g.eval(&rat(7, 3)), f.eval(&(rat(-5, 4) + rat(7, 3))));
    }

    #[test]
    fn rescaling() {
        assert_eq!(p(&[1, 1, 1]).rescale_variable(&int(2)), p(&[1, 2, 4]));
    }
}
