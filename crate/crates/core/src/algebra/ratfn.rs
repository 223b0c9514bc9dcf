use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{self, Dense};
use super::{AlgebraError, LaurentPoly};

/// An element of `Q(q)` stored as `numerator / denominator`.
///
/// Canonical form: the denominator is an honest polynomial in `q` with a
/// nonzero constant term and a positive leading coefficient, numerator and
/// denominator share no common factor over `Q[q]`, and their integer
/// coefficients have no common divisor. Powers of `q` live in the numerator.
/// Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    pub fn q_pow(k: i32) -> Self {
        LaurentPoly::monomial(1, k).into()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some(p)` when the value is a Laurent polynomial.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// `Σ a_k b_k` with one reduction per distinct denominator product
    /// and one final reduction, instead of one per term.
    pub(crate) fn sum_of_products<'a>(pairs: impl IntoIterator<Item = (&'a Self, &'a Self)>) -> Self {
        let mut groups: Vec<(LaurentPoly, LaurentPoly)> = Vec::new();
        for (a, b) in pairs {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let den = &a.den * &b.den;
            let num = &a.num * &b.num;
            match groups.iter_mut().find(|(d, _)| *d == den) {
                Some((_, n)) => *n = &*n + &num,
                None => groups.push((den, num)),
            }
        }
        groups.retain(|(_, n)| !n.is_zero());
        match groups.len() {
            0 => Self::zero(),
            1 => {
                let (d, n) = groups.pop().expect("one group");
                Self::canonical(n, d)
            }
            _ => {
                let (mut den, mut num) = groups.pop().expect("nonempty");
                for (d, n) in groups {
                    num = &(&num * &d) + &(&n * &den);
                    den = &den * &d;
                }
                Self::canonical(num, den)
            }
        }
    }

    /// Re-run canonicalization; a no-op on values built through this API.
    pub fn canonicalize(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self { num, den };
        }
        let (mut n, n_shift) = num.to_dense();
        let (mut d, d_shift) = den.to_dense();
        if poly::degree(&d) == Some(0) {
            // constant denominator: only integer content to remove
            let c = d[0].clone();
            let g = poly::content(&n).gcd(&c);
            let sign = if c.is_negative() { -BigInt::one() } else { BigInt::one() };
            let scale = &g * &sign;
            for x in n.iter_mut() {
                *x = &*x / &scale;
            }
            let dc = &c / &scale;
            return Self {
                num: LaurentPoly::from_dense(&n, n_shift - d_shift),
                den: LaurentPoly::from_dense(&[dc], 0),
            };
        }
        let g = poly::gcd(&n, &d);
        if poly::degree(&g).unwrap_or(0) > 0 {
            n = poly::exact_div(&n, &g);
            d = poly::exact_div(&d, &g);
        }
        let c = poly::content(&n).gcd(&poly::content(&d));
        let negate = d.last().is_some_and(|x| x.is_negative());
        let scale = if negate { -c } else { c };
        if !scale.is_one() {
            let div = |v: &mut Dense| {
                for x in v.iter_mut() {
                    *x = &*x / &scale;
                }
            };
            div(&mut n);
            div(&mut d);
        }
        Self {
            num: LaurentPoly::from_dense(&n, n_shift - d_shift),
            den: LaurentPoly::from_dense(&d, 0),
        }
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c).into()
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::canonical(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return (&self.num * &rhs.num).into();
        }
        RationalFunction::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction { (&self).$m(&rhs) }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction { (&self).$m(rhs) }
        }
        impl $tr<RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl FromStr for RationalFunction {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse::parse_ratfn(s)
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
