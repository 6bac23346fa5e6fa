//! Scalar towers: exact Gaussian rationals for the algebra, `f64` complex numbers
//! for everything involving square roots of energies.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Double-precision complex scalar used by the plane-wave and coupling layers.
pub type ComplexFloat = num_complex::Complex64;

/// Minimal field interface shared by both scalar towers.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;
}

/// A complex number with arbitrary-precision rational parts.
///
/// `BigRational` keeps both parts reduced, so structural equality is exact
/// equality of the represented numbers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ExactComplex {
    pub re: BigRational,
    pub im: BigRational,
}

impl ExactComplex {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ExactComplex { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        ExactComplex::new(int(re), int(im))
    }

    pub fn real(re: BigRational) -> Self {
        ExactComplex::new(re, BigRational::zero())
    }

    pub fn i() -> Self {
        ExactComplex::from_ints(0, 1)
    }

    pub fn conj(&self) -> Self {
        ExactComplex::new(self.re.clone(), -self.im.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// |z|², exact.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// max(|re|, |im|), an exact norm that vanishes only at zero.
    pub fn max_norm(&self) -> BigRational {
        let (a, b) = (self.re.abs(), self.im.abs());
        if a >= b {
            a
        } else {
            b
        }
    }

    pub fn checked_div(&self, rhs: &ExactComplex) -> Result<ExactComplex> {
        let den = rhs.norm_sqr();
        if den.is_zero() {
            return Err(Error::Singular);
        }
        let num = self * &rhs.conj();
        Ok(ExactComplex::new(num.re / &den, num.im / &den))
    }

    pub fn to_float(&self) -> ComplexFloat {
        ComplexFloat::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }

    /// Exact conversion of a finite double (every finite double is a dyadic rational).
    pub fn from_float(z: ComplexFloat) -> Option<Self> {
        Some(ExactComplex::new(BigRational::from_float(z.re)?, BigRational::from_float(z.im)?))
    }
}

pub(crate) fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl From<i64> for ExactComplex {
    fn from(n: i64) -> Self {
        ExactComplex::from_ints(n, 0)
    }
}

impl From<Phase> for ExactComplex {
    fn from(p: Phase) -> Self {
        match p {
            Phase::One => ExactComplex::from_ints(1, 0),
            Phase::I => ExactComplex::from_ints(0, 1),
            Phase::MinusOne => ExactComplex::from_ints(-1, 0),
            Phase::MinusI => ExactComplex::from_ints(0, -1),
        }
    }
}

impl Add for &ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &ExactComplex {
    type Output = ExactComplex;
    fn mul(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

/// Panics on division by zero; use [`ExactComplex::checked_div`] when the
/// divisor is not known to be nonzero.
impl Div for &ExactComplex {
    type Output = ExactComplex;
    fn div(self, rhs: &ExactComplex) -> ExactComplex {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for ExactComplex {
            type Output = ExactComplex;
            fn $method(self, rhs: ExactComplex) -> ExactComplex {
                $tr::$method(&self, &rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        -&self
    }
}

impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = BigRational::one();
        let im_part = |f: &mut fmt::Formatter<'_>, im: &BigRational| {
            if *im == one {
                write!(f, "i")
            } else if *im == -one.clone() {
                write!(f, "-i")
            } else {
                write!(f, "{im}i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => im_part(f, &self.im),
            (false, false) => {
                write!(f, "{}", self.re)?;
                if self.im.is_positive() {
                    write!(f, "+")?;
                }
                im_part(f, &self.im)
            }
        }
    }
}

impl Scalar for ExactComplex {
    fn zero() -> Self {
        ExactComplex::default()
    }
    fn one() -> Self {
        ExactComplex::from_ints(1, 0)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        ExactComplex::conj(self)
    }
    fn is_zero(&self) -> bool {
        ExactComplex::is_zero(self)
    }
}

impl Scalar for ComplexFloat {
    fn zero() -> Self {
        ComplexFloat::new(0.0, 0.0)
    }
    fn one() -> Self {
        ComplexFloat::new(1.0, 0.0)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        ComplexFloat::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
}

/// A fourth root of unity: the phases that appear in front of Clifford monomials.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Phase {
    One,
    I,
    MinusOne,
    MinusI,
}

impl Phase {
    pub const ALL: [Phase; 4] = [Phase::One, Phase::MinusOne, Phase::I, Phase::MinusI];

    /// Exponent k in i^k.
    pub fn power(self) -> u8 {
        match self {
            Phase::One => 0,
            Phase::I => 1,
            Phase::MinusOne => 2,
            Phase::MinusI => 3,
        }
    }

    pub fn from_power(k: u8) -> Phase {
        match k % 4 {
            0 => Phase::One,
            1 => Phase::I,
            2 => Phase::MinusOne,
            _ => Phase::MinusI,
        }
    }

    pub fn conj(self) -> Phase {
        Phase::from_power(4 - self.power())
    }

    pub fn negate(self) -> Phase {
        Phase::from_power(self.power() + 2)
    }

    pub fn to_float(self) -> ComplexFloat {
        ExactComplex::from(self).to_float()
    }

    /// Recovers the phase from an exact unit complex number.
    pub fn from_exact(z: &ExactComplex) -> Option<Phase> {
        Phase::ALL.into_iter().find(|p| ExactComplex::from(*p) == *z)
    }

    /// Symbolic form: "1", "-1", "i", "-i".
    pub fn symbol(self) -> &'static str {
        match self {
            Phase::One => "1",
            Phase::I => "i",
            Phase::MinusOne => "-1",
            Phase::MinusI => "-i",
        }
    }
}

impl Mul for Phase {
    type Output = Phase;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Phase) -> Phase {
        Phase::from_power(self.power() + rhs.power())
    }
}

impl std::str::FromStr for Phase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Phase> {
        match s.trim() {
            "1" | "+1" => Ok(Phase::One),
            "-1" => Ok(Phase::MinusOne),
            "i" | "+i" => Ok(Phase::I),
            "-i" => Ok(Phase::MinusI),
            other => Err(Error::InvalidPhase(other.to_string())),
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Rank of a list of row vectors over the Gaussian rationals, by exact elimination.
pub fn exact_rank(rows: &[Vec<ExactComplex>]) -> usize {
    let mut rows: Vec<Vec<ExactComplex>> = rows.to_vec();
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for (c, p) in pivot_row.iter().enumerate().skip(col) {
                row[c] = &row[c] - &(&factor * p);
            }
        }
        rank += 1;
    }
    rank
}
