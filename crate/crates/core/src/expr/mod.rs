//! A small expression language over gamma matrices.
//!
//! ```text
//! expr      := term { '*' term } ;
//! term      := [ '-' ] factor ;
//! factor    := 'I' | 'i' | integer | generator | func '(' expr ')' | '(' expr ')' ;
//! generator := 'g0' | 'g1' | 'g2' | 'g3' | 'g5' ;
//! func      := 'star' | 'transpose' | 'dagger' ;
//! ```

mod canonical;
mod format;
mod parse;

use num_bigint::BigUint;
use rand::Rng;

use crate::clifford::{dirac, Generator};
use crate::matrix::{ExactMatrix, StarKind};
use crate::scalars::ExactComplex;

pub use canonical::{canonicalize, Canonical};
pub use format::format;
pub use parse::{parse, ParseError, ParseErrorKind};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GammaExpr {
    Generator(Generator),
    Identity,
    ImaginaryUnit,
    Integer(BigUint),
    Negate(Box<GammaExpr>),
    Product(Vec<GammaExpr>),
    /// Entrywise complex conjugate.
    Star(Box<GammaExpr>),
    Transpose(Box<GammaExpr>),
    Dagger(Box<GammaExpr>),
}

impl GammaExpr {
    pub fn int(n: u64) -> GammaExpr {
        GammaExpr::Integer(BigUint::from(n))
    }

    pub fn negate(e: GammaExpr) -> GammaExpr {
        GammaExpr::Negate(Box::new(e))
    }

    /// Collapses empty and single-element products, recursively.
    pub fn normalized(&self) -> GammaExpr {
        use GammaExpr::*;
        match self {
            Product(items) => match items.len() {
                0 => Identity,
                1 => items[0].normalized(),
                _ => Product(items.iter().map(GammaExpr::normalized).collect()),
            },
            Negate(e) => Negate(Box::new(e.normalized())),
            Star(e) => Star(Box::new(e.normalized())),
            Transpose(e) => Transpose(Box::new(e.normalized())),
            Dagger(e) => Dagger(Box::new(e.normalized())),
            leaf => leaf.clone(),
        }
    }
}

/// Evaluates an expression to its exact 4×4 matrix in the Dirac representation.
pub fn eval_exact(e: &GammaExpr) -> ExactMatrix {
    let scalar = |z: ExactComplex| ExactMatrix::identity(4).unwrap().scale(&z);
    match e {
        GammaExpr::Generator(g) => dirac().generator(*g).clone(),
        GammaExpr::Identity => ExactMatrix::identity(4).unwrap(),
        GammaExpr::ImaginaryUnit => scalar(ExactComplex::i()),
        GammaExpr::Integer(n) => scalar(ExactComplex::real(num_rational::BigRational::from_integer(n.clone().into()))),
        GammaExpr::Negate(inner) => -eval_exact(inner),
        GammaExpr::Product(items) => {
            items.iter().fold(ExactMatrix::identity(4).unwrap(), |acc, item| &acc * &eval_exact(item))
        }
        GammaExpr::Star(inner) => eval_exact(inner).star(StarKind::Conjugate),
        GammaExpr::Transpose(inner) => eval_exact(inner).star(StarKind::Transpose),
        GammaExpr::Dagger(inner) => eval_exact(inner).star(StarKind::Adjoint),
    }
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str) -> Result<ExactMatrix, ParseError> {
    parse(text).map(|e| eval_exact(&e))
}

/// Expressions exercising every construct of the grammar.
pub const SAMPLE_EXPRESSIONS: &[&str] = &[
    "I",
    "i",
    "2",
    "g0",
    "g1",
    "g2",
    "g3",
    "g5",
    "-g2",
    "i*g0",
    "-i*g5",
    "g0*g2*g0",
    "g0*g1*g2*g3",
    "-i*g0*g1*g2*g3",
    "i*g1*g3",
    "-g0*g1*g3",
    "i*g1*g2*g3",
    "i*g0*g2",
    "3*i*g5*g0",
    "star(g2)",
    "transpose(g1)",
    "dagger(g1)",
    "dagger(i*g0*g2)",
    "star(transpose(g5*g2))",
    "-(g0*g1)*(g1*g0)",
    "-(-g3)",
    "(i*I)*(i*I)",
    "g5*g5",
    "2*g0*3*g1",
    "dagger(-i*g1*g3)*g0",
];

/// A random expression of bounded depth over the whole grammar.
pub fn random_expr<R: Rng>(rng: &mut R, depth: u32) -> GammaExpr {
    let leaf = |rng: &mut R| match rng.random_range(0..8) {
        0 => GammaExpr::Identity,
        1 => GammaExpr::ImaginaryUnit,
        2 => GammaExpr::int(rng.random_range(0..4)),
        k => GammaExpr::Generator(Generator::ALL[k - 3]),
    };
    if depth == 0 {
        return leaf(rng);
    }
    match rng.random_range(0..7) {
        0 | 1 => leaf(rng),
        2 => GammaExpr::negate(random_expr(rng, depth - 1)),
        3 | 4 => GammaExpr::Product((0..rng.random_range(2..4)).map(|_| random_expr(rng, depth - 1)).collect()),
        5 => GammaExpr::Star(Box::new(random_expr(rng, depth - 1))),
        _ => match rng.random_range(0..2) {
            0 => GammaExpr::Transpose(Box::new(random_expr(rng, depth - 1))),
            _ => GammaExpr::Dagger(Box::new(random_expr(rng, depth - 1))),
        },
    }
}
