//! Exact bivariate Laurent polynomials in `x`, `y` with arbitrary-precision
//! integer coefficients.
//!
//! This is the coefficient ring of the representation: every formula in
//! the action (including the inverse, which uses `x⁻¹`, `y⁻¹`, `y⁻²`,
//! `y⁻³`) has only monomial denominators, so Laurent polynomials over `Z`
//! are closed under all operations performed here and no rational-function
//! normalization is ever needed.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

/// Term map from `(x-exponent, y-exponent)` to a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::monomial(0, 0, c)
    }

    /// `c · x^a y^b`
    pub fn monomial(x_exp: i64, y_exp: i64, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert((x_exp, y_exp), BigInt::from(c));
        }
        LaurentPoly { terms }
    }

    /// `y^b`
    pub fn y_power(b: i64) -> Self {
        LaurentPoly::monomial(0, b, 1)
    }

    /// `1 − y`
    pub fn one_minus_y() -> Self {
        LaurentPoly::constant(1) - LaurentPoly::y_power(1)
    }

    /// `y − 1`
    pub fn y_minus_one() -> Self {
        LaurentPoly::y_power(1) - LaurentPoly::constant(1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True iff some exponent (in either variable) is negative.
    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|&(a, b)| a < 0 || b < 0)
    }

    /// Largest y-exponent, if nonzero.
    pub fn y_degree(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    /// True iff the polynomial involves only `y` (every x-exponent is 0).
    pub fn is_y_only(&self) -> bool {
        self.terms.keys().all(|&(a, _)| a == 0)
    }

    fn insert_term(&mut self, key: (i64, i64), value: BigInt) {
        use std::collections::btree_map::Entry;
        if value == BigInt::ZERO {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(value);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += value;
                if *e.get() == BigInt::ZERO {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &LaurentPoly) {
        for (&key, c) in &other.terms {
            self.insert_term(key, c.clone());
        }
    }

    /// Multiply by `c · x^a y^b` in place.
    pub fn mul_monomial(&self, x_exp: i64, y_exp: i64, c: i64) -> LaurentPoly {
        if c == 0 {
            return LaurentPoly::zero();
        }
        let c = BigInt::from(c);
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), coeff)| ((a + x_exp, b + y_exp), coeff * &c))
                .collect(),
        }
    }

    /// Substitute `x = 0`: keep only terms with x-exponent zero. Panics if
    /// a negative x-exponent is present (the substitution would not exist).
    pub fn specialize_x0(&self) -> LaurentPoly {
        assert!(
            self.terms.keys().all(|&(a, _)| a >= 0),
            "x = 0 substitution on a pole"
        );
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(a, _), _)| a == 0)
                .map(|(&k, v)| (k, v.clone()))
                .collect(),
        }
    }

    /// Exact evaluation of a y-only polynomial at `y = 1/2`, returned as
    /// the pair `(numerator, k)` meaning `numerator / 2^k`.
    pub fn eval_y_half(&self) -> (BigInt, u32) {
        assert!(self.is_y_only() && !self.has_negative_exponents());
        let k = self.y_degree().unwrap_or(0) as u32;
        let mut num = BigInt::ZERO;
        for (&(_, b), c) in &self.terms {
            num += c * BigInt::from(2u8).pow(k - b as u32);
        }
        (num, k)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&key, c) in &rhs.terms {
            out.insert_term(key, -c);
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect(),
        }
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.insert_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// Canonical text form: terms sorted by `(x-exponent, y-exponent)`,
/// exponents spelled explicitly, e.g. `x^1*y^2 - x^1*y^3`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().enumerate() {
            let negative = c < &BigInt::ZERO;
            let mag = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != BigInt::from(1) || (a == 0 && b == 0) {
                factors.push(mag.to_string());
            }
            if a != 0 {
                factors.push(format!("x^{a}"));
            }
            if b != 0 {
                factors.push(format!("y^{b}"));
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
