//! Elements of quadratic extensions ℚ(√d) and exact roots of quadratics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::field::{format_rational, Field, Rational};
use super::LinalgError;

/// Primes below this bound are divided out exactly when extracting the
/// square-free part of a radicand.
const TRIAL_DIVISION_BOUND: u64 = 100_000;

/// `a + b·√d` with rational `a`, `b` and square-free integer `d`.
///
/// `√d` denotes the principal root (`i·√|d|` when `d < 0`). Elements with
/// `b = 0` are rational and carry `d = 1`; they combine freely with elements
/// of any extension. Combining two irrational elements requires their
/// radicands to agree up to a rational square.
#[derive(Clone, Debug)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: BigInt,
}

impl QuadExt {
    /// Builds `a + b√d`, pulling square factors out of `d`.
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Self {
        if b.is_zero() || d.is_zero() {
            return Self::rational(a);
        }
        let (s, core) = squarefree_decompose(&d);
        let b = b * Rational::from_integer(s);
        if core.is_one() {
            return Self::rational(a + b);
        }
        Self { a, b, d: core }
    }

    pub fn rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
            d: BigInt::one(),
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `a - b√d`.
    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    /// `a² - d·b²`, the field norm down to ℚ.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(self.d.clone()) * &self.b * &self.b
    }

    /// Rewrites the irrational parts of `self` and `other` over one radicand.
    fn align(&self, other: &Self) -> (Rational, Rational, BigInt) {
        if other.b.is_zero() || self.d == other.d {
            return (self.b.clone(), other.b.clone(), self.d.clone());
        }
        if self.b.is_zero() {
            return (Rational::zero(), other.b.clone(), other.d.clone());
        }
        // √d₂ = (s/|d₁|)·√d₁ whenever d₁d₂ = s² with s > 0.
        let prod = &self.d * &other.d;
        let s = if prod.is_positive() {
            prod.sqrt()
        } else {
            BigInt::zero()
        };
        assert!(
            !s.is_zero() && &s * &s == prod,
            "incompatible quadratic extensions: sqrt({}) and sqrt({})",
            self.d,
            other.d
        );
        let factor = Rational::new(s, self.d.abs());
        (self.b.clone(), &other.b * factor, self.d.clone())
    }

    fn normalized(a: Rational, b: Rational, d: BigInt) -> Self {
        if b.is_zero() {
            Self::rational(a)
        } else {
            Self { a, b, d }
        }
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        if self.a != other.a {
            return false;
        }
        if self.b.is_zero() || other.b.is_zero() {
            return self.b.is_zero() && other.b.is_zero();
        }
        let prod = &self.d * &other.d;
        if !prod.is_positive() {
            return false;
        }
        let s = prod.sqrt();
        if &s * &s != prod {
            return false;
        }
        let (b1, b2, _) = self.align(other);
        b1 == b2
    }
}

impl Eq for QuadExt {}

impl From<Rational> for QuadExt {
    fn from(a: Rational) -> Self {
        Self::rational(a)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", format_rational(&self.a));
        }
        let root = format!("sqrt({})", self.d);
        let b_abs = self.b.abs();
        let b_part = if b_abs.is_one() {
            root
        } else {
            format!("{}*{}", format_rational(&b_abs), root)
        };
        if self.a.is_zero() {
            let sign = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{sign}{b_part}")
        } else {
            let sign = if self.b.is_negative() { "-" } else { "+" };
            write!(f, "{} {sign} {b_part}", format_rational(&self.a))
        }
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: QuadExt) -> QuadExt {
        let (b1, b2, d) = self.align(&rhs);
        QuadExt::normalized(self.a + rhs.a, b1 + b2, d)
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: QuadExt) -> QuadExt {
        let (b1, b2, d) = self.align(&rhs);
        QuadExt::normalized(self.a - rhs.a, b1 - b2, d)
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: QuadExt) -> QuadExt {
        let (b1, b2, d) = self.align(&rhs);
        let dq = Rational::from_integer(d.clone());
        let a = &self.a * &rhs.a + dq * &b1 * &b2;
        let b = &self.a * &b2 + &b1 * &rhs.a;
        QuadExt::normalized(a, b, d)
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::normalized(-self.a, -self.b, self.d)
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl Field for QuadExt {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // d is not a rational square, so the norm vanishes only at zero.
        let n = self.norm();
        let c = self.conjugate();
        Some(QuadExt::normalized(&c.a / &n, &c.b / &n, c.d))
    }
    fn from_rational(r: &Rational) -> Self {
        Self::rational(r.clone())
    }
}

/// Writes `n = s²·d` with `s > 0`, returning `(s, d)`.
///
/// Primes below the trial-division bound are removed exactly, and a
/// perfect-square cofactor is absorbed, so `d` is square-free whenever the
/// remaining cofactor is below the cube of the bound.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_zero(), "square-free part of zero");
    let sign = if n.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let mut rest = n.abs();
    let mut square = BigInt::one();
    let mut core = BigInt::one();
    let mut p = 2u64;
    while p <= TRIAL_DIVISION_BOUND {
        let bp = BigInt::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut exp = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            exp += 1;
        }
        if exp > 0 {
            square *= bp.pow(exp / 2);
            if exp % 2 == 1 {
                core *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        square *= r;
    } else {
        core *= rest;
    }
    (square, sign * core)
}

/// All roots of `a x² + b x + c`, exact in ℚ(√disc), repeated by multiplicity.
///
/// A vanishing leading coefficient falls back to the linear root.
pub fn solve_quadratic(
    a: &Rational,
    b: &Rational,
    c: &Rational,
) -> Result<Vec<QuadExt>, LinalgError> {
    if a.is_zero() {
        if b.is_zero() {
            return Err(if c.is_zero() {
                LinalgError::ZeroPolynomial
            } else {
                LinalgError::NoSolution
            });
        }
        return Ok(vec![QuadExt::rational(-c / b)]);
    }
    let disc = b * b - Rational::from_integer(BigInt::from(4)) * a * c;
    let two_a = a * Rational::from_integer(BigInt::from(2));
    let center = -b / &two_a;
    if disc.is_zero() {
        return Ok(vec![
            QuadExt::rational(center.clone()),
            QuadExt::rational(center),
        ]);
    }
    // √(p/q) = √(pq)/q
    let radicand = disc.numer() * disc.denom();
    let scale = Rational::new(BigInt::one(), disc.denom().clone()) / &two_a;
    let half_width = QuadExt::new(Rational::zero(), scale, radicand);
    let center = QuadExt::rational(center);
    Ok(vec![
        center.clone() + half_width.clone(),
        center - half_width,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::field::{int, rat};

    fn q(a: Rational, b: Rational, d: i64) -> QuadExt {
        QuadExt::new(a, b, BigInt::from(d))
    }

    fn eval(a: &Rational, b: &Rational, c: &Rational, x: &QuadExt) -> QuadExt {
        let a = QuadExt::from_rational(a);
        let b = QuadExt::from_rational(b);
        let c = QuadExt::from_rational(c);
        a * x.clone() * x.clone() + b * x.clone() + c
    }

    #[test]
    fn roots_of_x2_minus_4() {
        let roots = solve_quadratic(&int(1), &int(0), &int(-4)).unwrap();
        assert_eq!(roots, vec![QuadExt::from(int(2)), QuadExt::from(int(-2))]);
        assert!(roots.iter().all(QuadExt::is_rational));
    }

    #[test]
    fn roots_of_x2_minus_2() {
        let roots = solve_quadratic(&int(1), &int(0), &int(-2)).unwrap();
        let sqrt2 = q(int(0), int(1), 2);
        assert_eq!(roots, vec![sqrt2.clone(), -sqrt2]);
        assert_eq!(roots[0].d(), &BigInt::from(2));
    }

    #[test]
    fn factorable_roots() {
        let roots = solve_quadratic(&int(1), &int(-3), &int(2)).unwrap();
        assert_eq!(roots, vec![QuadExt::from(int(2)), QuadExt::from(int(1))]);
    }

    #[test]
    fn linear_and_degenerate() {
        assert_eq!(
            solve_quadratic(&int(0), &int(2), &int(3)).unwrap(),
            vec![QuadExt::from(rat(-3, 2))]
        );
        assert_eq!(
            solve_quadratic(&int(0), &int(0), &int(3)),
            Err(LinalgError::NoSolution)
        );
        assert_eq!(
            solve_quadratic(&int(0), &int(0), &int(0)),
            Err(LinalgError::ZeroPolynomial)
        );
    }

    #[test]
    fn complex_roots_stay_exact() {
        // x² + x + 1 has roots (-1 ± √-3)/2
        let (a, b, c) = (int(1), int(1), int(1));
        let roots = solve_quadratic(&a, &b, &c).unwrap();
        assert_eq!(roots[0].d(), &BigInt::from(-3));
        for r in &roots {
            assert!(Zero::is_zero(&eval(&a, &b, &c, r)));
        }
    }

    #[test]
    fn rational_coefficients_roots_satisfy_equation() {
        let (a, b, c) = (rat(3, 7), rat(-5, 2), rat(1, 9));
        for r in solve_quadratic(&a, &b, &c).unwrap() {
            assert!(Zero::is_zero(&eval(&a, &b, &c, &r)), "{r}");
        }
    }

    #[test]
    fn double_root_reported_twice() {
        let roots = solve_quadratic(&int(1), &int(-4), &int(4)).unwrap();
        assert_eq!(roots, vec![QuadExt::from(int(2)), QuadExt::from(int(2))]);
    }

    #[test]
    fn squarefree_extraction() {
        let check = |n: i64, s: i64, d: i64| {
            assert_eq!(
                squarefree_decompose(&BigInt::from(n)),
                (BigInt::from(s), BigInt::from(d)),
                "{n}"
            );
        };
        check(12, 2, 3);
        check(-72, 6, -2);
        check(49, 7, 1);
        check(30, 1, 30);
        check(1, 1, 1);
        check(-1, 1, -1);
        // large prime squared survives via the perfect-square check
        let p = BigInt::from(1_000_003u64);
        assert_eq!(
            squarefree_decompose(&(&p * &p * BigInt::from(5))),
            (p, BigInt::from(5))
        );
    }

    #[test]
    fn radicand_normalization_makes_equal_values_compare_equal() {
        assert_eq!(q(int(1), int(1), 8), q(int(1), int(2), 2));
        assert_eq!(q(int(1), int(3), 9), QuadExt::from(int(10)));
        assert_ne!(q(int(0), int(1), 2), q(int(0), int(1), 3));
    }

    #[test]
    fn unreduced_radicands_align() {
        // bypass normalization to mimic a cofactor the trial division missed
        let x = QuadExt {
            a: int(0),
            b: int(1),
            d: BigInt::from(2),
        };
        let y = QuadExt {
            a: int(0),
            b: int(1),
            d: BigInt::from(8),
        };
        assert_eq!(y.clone(), x.clone() * QuadExt::from(int(2)));
        assert_eq!((x * y).to_string(), "4");
    }

    #[test]
    fn norm_identity_and_inverse() {
        let x = q(rat(3, 2), rat(-1, 5), 7);
        let prod = x.clone() * x.conjugate();
        assert_eq!(prod, QuadExt::from(x.norm()));
        assert_eq!(x.norm(), rat(9, 4) - int(7) * rat(1, 25));
        assert_eq!(x.clone() * x.inv().unwrap(), QuadExt::one());
        assert!(QuadExt::zero().inv().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(q(rat(1, 2), rat(-3, 2), 5).to_string(), "1/2 - 3/2*sqrt(5)");
        assert_eq!(q(int(0), int(1), 2).to_string(), "sqrt(2)");
        assert_eq!(q(int(0), int(-1), -1).to_string(), "-sqrt(-1)");
        assert_eq!(QuadExt::from(rat(-4, 3)).to_string(), "-4/3");
    }
}
