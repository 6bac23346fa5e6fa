//! Exact polynomial test functions in (x⁰, x¹, x², x³, c).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;

use crate::scalars::{ExactComplex, Scalar};

/// Number of polynomial variables: x⁰, x¹, x², x³ and the light-speed parameter c.
pub const NVARS: usize = 5;

pub type Exponents = [u8; NVARS];
pub type Point = [BigRational; NVARS];

/// Sparse polynomial with Gaussian-rational coefficients; zero terms are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Exponents, ExactComplex>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(z: ExactComplex) -> Self {
        let mut p = Polynomial::zero();
        p.add_term([0; NVARS], z);
        p
    }

    pub fn add_term(&mut self, exps: Exponents, z: ExactComplex) {
        let entry = self.terms.entry(exps).or_default();
        *entry = &*entry + &z;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &ExactComplex)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &ExactComplex) -> Self {
        let mut out = Polynomial::zero();
        for (e, z) in &self.terms {
            out.add_term(*e, k * z);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, z) in &other.terms {
            out.add_term(*e, z.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&ExactComplex::from(-1)))
    }

    /// Complex conjugate of the coefficients; the variables are real.
    pub fn conjugate(&self) -> Self {
        Polynomial { terms: self.terms.iter().map(|(e, z)| (*e, z.conj())).collect() }
    }

    /// Substitutes vᵢ → sᵢ·vᵢ for each variable.
    pub fn flip(&self, signs: [i8; NVARS]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, z)| {
                let odd_flips = (0..NVARS).filter(|&k| signs[k] < 0 && e[k] % 2 == 1).count();
                let z = if odd_flips % 2 == 1 { -z } else { z.clone() };
                (*e, z)
            })
            .collect();
        Polynomial { terms }
    }

    pub fn eval(&self, point: &Point) -> ExactComplex {
        let mut acc = ExactComplex::zero();
        for (e, z) in &self.terms {
            let mono = (0..NVARS).fold(BigRational::one(), |m, k| m * pow(&point[k], e[k]));
            acc = &acc + &(z * &ExactComplex::real(mono));
        }
        acc
    }

    /// A random polynomial of total degree ≤ `max_degree` with small Gaussian-rational coefficients.
    pub fn random<R: Rng>(rng: &mut R, max_degree: u8, n_terms: usize) -> Self {
        let mut p = Polynomial::zero();
        for _ in 0..n_terms {
            let mut exps = [0u8; NVARS];
            let mut budget = rng.random_range(0..=max_degree);
            while budget > 0 {
                exps[rng.random_range(0..NVARS)] += 1;
                budget -= 1;
            }
            p.add_term(exps, random_coeff(rng));
        }
        p
    }
}

fn pow(x: &BigRational, n: u8) -> BigRational {
    (0..n).fold(BigRational::one(), |acc, _| acc * x)
}

pub(crate) fn random_rational<R: Rng>(rng: &mut R, span: i64, max_den: i64) -> BigRational {
    BigRational::new(BigInt::from(rng.random_range(-span..=span)), BigInt::from(rng.random_range(1..=max_den)))
}

fn random_coeff<R: Rng>(rng: &mut R) -> ExactComplex {
    ExactComplex::new(random_rational(rng, 9, 7), random_rational(rng, 9, 7))
}

/// A random sample point with small rational coordinates.
pub fn random_point<R: Rng>(rng: &mut R) -> Point {
    std::array::from_fn(|_| random_rational(rng, 20, 5))
}

/// Four-component spinor-valued polynomial function of (x⁰, x, c).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TestFunction {
    pub components: [Polynomial; 4],
}

impl TestFunction {
    pub fn new(components: [Polynomial; 4]) -> Self {
        TestFunction { components }
    }

    /// A constant spinor.
    pub fn constant(v: [ExactComplex; 4]) -> Self {
        TestFunction { components: v.map(Polynomial::constant) }
    }

    pub fn random<R: Rng>(rng: &mut R) -> Self {
        TestFunction { components: std::array::from_fn(|_| Polynomial::random(rng, 3, 6)) }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn sub(&self, other: &Self) -> Self {
        TestFunction { components: std::array::from_fn(|k| self.components[k].sub(&other.components[k])) }
    }

    pub fn scale(&self, k: &ExactComplex) -> Self {
        TestFunction { components: std::array::from_fn(|j| self.components[j].scale(k)) }
    }

    pub fn eval(&self, point: &Point) -> [ExactComplex; 4] {
        std::array::from_fn(|k| self.components[k].eval(point))
    }
}
