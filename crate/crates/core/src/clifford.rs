//! The Dirac representation of the gamma matrices, γ⁵, and the 16-element
//! Clifford basis together with a sign-tracking normal form for products.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::matrix::{ExactMatrix, Matrix};
use crate::scalars::{ExactComplex, Phase};

/// One of the symbols that may appear in a gamma word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    G0,
    G1,
    G2,
    G3,
    G5,
}

impl Generator {
    pub const ALL: [Generator; 5] = [Generator::G0, Generator::G1, Generator::G2, Generator::G3, Generator::G5];

    /// Spacetime index for γ⁰..γ³; `None` for γ⁵.
    pub fn index(self) -> Option<usize> {
        match self {
            Generator::G0 => Some(0),
            Generator::G1 => Some(1),
            Generator::G2 => Some(2),
            Generator::G3 => Some(3),
            Generator::G5 => None,
        }
    }

    pub fn from_index(a: usize) -> Result<Generator> {
        match a {
            0 => Ok(Generator::G0),
            1 => Ok(Generator::G1),
            2 => Ok(Generator::G2),
            3 => Ok(Generator::G3),
            5 => Ok(Generator::G5),
            _ => Err(Error::IndexOutOfRange(a)),
        }
    }

    /// Accepts "0".."3", "5", optionally prefixed by "g".
    pub fn from_symbol(s: &str) -> Result<Generator> {
        let digits = s.strip_prefix('g').unwrap_or(s);
        match digits {
            "0" => Ok(Generator::G0),
            "1" => Ok(Generator::G1),
            "2" => Ok(Generator::G2),
            "3" => Ok(Generator::G3),
            "5" => Ok(Generator::G5),
            _ => Err(Error::InvalidSymbol(s.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::G0 => "g0",
            Generator::G1 => "g1",
            Generator::G2 => "g2",
            Generator::G3 => "g3",
            Generator::G5 => "g5",
        }
    }

    /// s with (γ)* = s·γ.
    pub fn conjugation_sign(self) -> Phase {
        match self {
            Generator::G2 => Phase::MinusOne,
            _ => Phase::One,
        }
    }

    /// s with (γ)ᵀ = s·γ.
    pub fn transpose_sign(self) -> Phase {
        match self {
            Generator::G1 | Generator::G3 => Phase::MinusOne,
            _ => Phase::One,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Diagonal metric entry g^{aa} for signature (+, −, −, −).
pub fn metric(a: usize) -> i8 {
    if a == 0 {
        1
    } else {
        -1
    }
}

/// A subset of {0, 1, 2, 3} labelling a Clifford basis element.
///
/// The basis matrix of a blade is the ascending product of its generators,
/// except for the full set whose slot is occupied by γ⁵ itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(u8);

impl Blade {
    pub const EMPTY: Blade = Blade(0);
    pub const FULL: Blade = Blade(0b1111);

    pub fn from_bits(bits: u8) -> Result<Blade> {
        if bits < 16 {
            Ok(Blade(bits))
        } else {
            Err(Error::IndexOutOfRange(bits as usize))
        }
    }

    pub fn from_indices(indices: &[usize]) -> Result<Blade> {
        let mut bits = 0u8;
        for &a in indices {
            if a > 3 {
                return Err(Error::IndexOutOfRange(a));
            }
            bits |= 1 << a;
        }
        Ok(Blade(bits))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn indices(self) -> Vec<usize> {
        (0..4).filter(|a| self.0 & (1 << a) != 0).collect()
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, a: usize) -> bool {
        a < 4 && self.0 & (1 << a) != 0
    }

    /// The generator word that names this blade's basis matrix.
    pub fn word(self) -> Vec<Generator> {
        if self == Blade::FULL {
            return vec![Generator::G5];
        }
        self.indices().into_iter().map(|a| Generator::from_index(a).unwrap()).collect()
    }

    /// All 16 blades ordered by grade, then lexicographically.
    pub fn all() -> Vec<Blade> {
        let mut all: Vec<Blade> = (0..16).map(Blade).collect();
        all.sort_by_key(|b| (b.grade(), b.indices()));
        all
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Blade::EMPTY {
            return f.write_str("I");
        }
        let names: Vec<&str> = self.word().into_iter().map(Generator::name).collect();
        f.write_str(&names.join("*"))
    }
}

/// The Dirac representation.
#[derive(Clone, Debug)]
pub struct GammaRep {
    pub gamma: [ExactMatrix; 4],
    pub gamma5: ExactMatrix,
    pub metric: [i8; 4],
    pub pauli: [ExactMatrix; 3],
}

fn ex(re: i64, im: i64) -> ExactComplex {
    ExactComplex::from_ints(re, im)
}

fn two_by_two(entries: [(i64, i64); 4]) -> ExactMatrix {
    Matrix::from_vec(2, entries.iter().map(|&(a, b)| ex(a, b)).collect()).unwrap()
}

/// Builds γ⁰ = diag(I, −I), γᵏ = [[0, σₖ], [−σₖ, 0]], γ⁵ = [[0, −I], [−I, 0]].
pub fn build_dirac_rep() -> GammaRep {
    let id = ExactMatrix::identity(2).unwrap();
    let zero = ExactMatrix::zeros(2).unwrap();
    let pauli = [
        two_by_two([(0, 0), (1, 0), (1, 0), (0, 0)]),
        two_by_two([(0, 0), (0, -1), (0, 1), (0, 0)]),
        two_by_two([(1, 0), (0, 0), (0, 0), (-1, 0)]),
    ];
    let g0 = Matrix::from_blocks(&id, &zero, &zero, &-&id).unwrap();
    let spatial = |s: &ExactMatrix| Matrix::from_blocks(&zero, s, &-s, &zero).unwrap();
    let gamma = [g0, spatial(&pauli[0]), spatial(&pauli[1]), spatial(&pauli[2])];
    let gamma5 = Matrix::from_blocks(&zero, &-&id, &-&id, &zero).unwrap();
    GammaRep { gamma, gamma5, metric: [1, -1, -1, -1], pauli }
}

/// Shared instance of the Dirac representation.
pub fn dirac() -> &'static GammaRep {
    static REP: OnceLock<GammaRep> = OnceLock::new();
    REP.get_or_init(build_dirac_rep)
}

impl GammaRep {
    pub fn generator(&self, g: Generator) -> &ExactMatrix {
        match g.index() {
            Some(a) => &self.gamma[a],
            None => &self.gamma5,
        }
    }

    /// γᵃγᵇ + γᵇγᵃ.
    pub fn anticommutator(&self, a: usize, b: usize) -> Result<ExactMatrix> {
        let ga = self.gamma.get(a).ok_or(Error::IndexOutOfRange(a))?;
        let gb = self.gamma.get(b).ok_or(Error::IndexOutOfRange(b))?;
        Ok(&(ga * gb) + &(gb * ga))
    }

    /// Exact product of a generator word by direct matrix multiplication.
    pub fn word_matrix(&self, word: &[Generator]) -> ExactMatrix {
        word.iter().fold(ExactMatrix::identity(4).unwrap(), |acc, &g| &acc * self.generator(g))
    }

    pub fn blade_matrix(&self, blade: Blade) -> ExactMatrix {
        self.word_matrix(&blade.word())
    }

    pub fn basis_table(&self) -> Vec<BasisElement> {
        Blade::all().into_iter().map(|blade| BasisElement { blade, matrix: self.blade_matrix(blade) }).collect()
    }

    /// Evaluates every identity group of the gamma-matrix algebra; each entry
    /// pairs a label with whether the identity holds exactly.
    pub fn identity_suite(&self) -> Vec<(&'static str, bool)> {
        let id = ExactMatrix::identity(4).unwrap();
        let g = &self.gamma;
        let g5 = &self.gamma5;
        let all4 = |f: &dyn Fn(usize) -> bool| (0..4).all(f);
        let spatial = |f: &dyn Fn(usize) -> bool| (1..4).all(f);
        let lambda_i = ExactComplex::from_ints(0, -1);
        vec![
            (
                "anticommutator {g^a, g^b} = 2 g^ab I",
                (0..4).all(|a| {
                    (0..4).all(|b| {
                        let expected = if a == b {
                            id.scale(&ExactComplex::from(2 * metric(a) as i64))
                        } else {
                            ExactMatrix::zeros(4).unwrap()
                        };
                        self.anticommutator(a, b).unwrap() == expected
                    })
                }),
            ),
            ("g^a g5 + g5 g^a = 0", all4(&|a| (&(&g[a] * g5) + &(g5 * &g[a])).is_zero())),
            ("dagger(g0) = g0", g[0].adjoint() == g[0]),
            ("dagger(g^k) = -g^k", spatial(&|k| g[k].adjoint() == -&g[k])),
            ("g0^2 = I", (&g[0] * &g[0]).is_identity()),
            ("(g^k)^2 = -I", spatial(&|k| &g[k] * &g[k] == -&id)),
            (
                "star(g0,g1,g3) = g0,g1,g3; star(g2) = -g2",
                [0, 1, 3].iter().all(|&a| g[a].conjugate() == g[a]) && g[2].conjugate() == -&g[2],
            ),
            (
                "transpose(g0,g2) = g0,g2; transpose(g1,g3) = -g1,-g3",
                [0, 2].iter().all(|&a| g[a].transpose() == g[a]) && [1, 3].iter().all(|&a| g[a].transpose() == -&g[a]),
            ),
            ("g5 = -i g0 g1 g2 g3", (&(&(&g[0] * &g[1]) * &g[2]) * &g[3]).scale(&lambda_i) == *g5),
            (
                "dagger(g5) = g5, star(g5) = g5, g5^2 = I",
                g5.adjoint() == *g5 && g5.conjugate() == *g5 && (g5 * g5).is_identity(),
            ),
        ]
    }
}

/// A member of the 16-element basis of 4×4 matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisElement {
    pub blade: Blade,
    pub matrix: ExactMatrix,
}

/// Anticommutator of γᵃ and γᵇ in the Dirac representation.
pub fn anticommutator(a: usize, b: usize) -> Result<ExactMatrix> {
    dirac().anticommutator(a, b)
}

/// The 16 Clifford basis elements in the Dirac representation.
pub fn basis_table() -> Vec<BasisElement> {
    dirac().basis_table()
}

/// Reduces a generator word to `phase × basis(blade)`.
///
/// γ⁵ is expanded as −iγ⁰γ¹γ²γ³; the word is then bubble-sorted with a sign
/// flip per transposition of distinct neighbours, and equal neighbours are
/// contracted with (γ⁰)² = 1, (γᵏ)² = −1. A surviving full set is reported in
/// the γ⁵ slot, using γ⁰γ¹γ²γ³ = iγ⁵.
pub fn canonical_product(word: &[Generator]) -> (Phase, Blade) {
    let mut phase = Phase::One;
    let mut seq: Vec<usize> = Vec::with_capacity(word.len() * 4);
    for &g in word {
        match g.index() {
            Some(a) => seq.push(a),
            None => {
                phase = phase * Phase::MinusI;
                seq.extend([0, 1, 2, 3]);
            }
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        let mut j = 0;
        while j + 1 < seq.len() {
            let (a, b) = (seq[j], seq[j + 1]);
            if a == b {
                if metric(a) < 0 {
                    phase = phase.negate();
                }
                seq.drain(j..j + 2);
                changed = true;
            } else {
                if a > b {
                    seq.swap(j, j + 1);
                    phase = phase.negate();
                    changed = true;
                }
                j += 1;
            }
        }
    }
    let blade = Blade::from_indices(&seq).expect("indices are 0..3");
    if blade == Blade::FULL {
        phase = phase * Phase::I;
    }
    (phase, blade)
}

/// Parses a word such as "2,0,2" or "g2 g0 g2" and canonicalizes it.
pub fn canonical_product_str(word: &str) -> Result<(Phase, Blade)> {
    let gens = word
        .split(|c: char| c == ',' || c.is_whitespace() || c == '*')
        .filter(|s| !s.is_empty())
        .map(Generator::from_symbol)
        .collect::<Result<Vec<_>>>()?;
    Ok(canonical_product(&gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::exact_rank;

    fn all_words(max_len: usize) -> Vec<Vec<Generator>> {
        let mut out = vec![vec![]];
        let mut frontier = vec![vec![]];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for g in Generator::ALL {
                    let mut w2: Vec<Generator> = w.clone();
                    w2.push(g);
                    next.push(w2);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn dirac_blocks() {
        let rep = build_dirac_rep();
        let diag = |d: [i64; 4]| ExactMatrix::from_fn(4, |r, c| if r == c { ex(d[r], 0) } else { ex(0, 0) }).unwrap();
        assert_eq!(rep.gamma[0], diag([1, 1, -1, -1]));
        assert_eq!(rep.pauli[2], two_by_two([(1, 0), (0, 0), (0, 0), (-1, 0)]));
        let expected_g5 = ExactMatrix::from_fn(4, |r, c| if (r + 2) % 4 == c { ex(-1, 0) } else { ex(0, 0) }).unwrap();
        assert_eq!(rep.gamma5, expected_g5);
    }

    #[test]
    fn identity_suite_holds() {
        for (name, ok) in dirac().identity_suite() {
            assert!(ok, "{name}");
        }
        assert_eq!(dirac().identity_suite().len(), 10);
    }

    #[test]
    fn anticommutator_examples() {
        let id = ExactMatrix::identity(4).unwrap();
        assert_eq!(anticommutator(0, 0).unwrap(), id.scale(&ex(2, 0)));
        assert_eq!(anticommutator(1, 1).unwrap(), id.scale(&ex(-2, 0)));
        assert!(anticommutator(0, 1).unwrap().is_zero());
        assert_eq!(anticommutator(4, 0).unwrap_err(), Error::IndexOutOfRange(4));
    }

    #[test]
    fn canonical_product_examples() {
        use Generator::*;
        assert_eq!(canonical_product(&[G2, G0, G2]), (Phase::One, Blade::from_indices(&[0]).unwrap()));
        assert_eq!(canonical_product(&[]), (Phase::One, Blade::EMPTY));
        assert_eq!(canonical_product(&[G0, G1, G2, G3]), (Phase::I, Blade::FULL));
        assert_eq!(canonical_product(&[G5, G5]), (Phase::One, Blade::EMPTY));
        assert_eq!(canonical_product_str("2,0,2").unwrap().1, Blade::from_indices(&[0]).unwrap());
        assert!(matches!(canonical_product_str("2,4"), Err(Error::InvalidSymbol(_))));
    }

    #[test]
    fn canonical_product_matches_matrix_multiplication() {
        let rep = dirac();
        let words = all_words(3);
        assert_eq!(words.len(), 1 + 5 + 25 + 125);
        for w in words {
            let (phase, blade) = canonical_product(&w);
            let lhs = rep.blade_matrix(blade).scale(&ExactComplex::from(phase));
            assert_eq!(lhs, rep.word_matrix(&w), "word {w:?}");
        }
    }

    #[test]
    fn basis_table_spans_matrix_space() {
        let table = basis_table();
        assert_eq!(table.len(), 16);
        assert!(table[0].matrix.is_identity());
        let rows: Vec<Vec<ExactComplex>> = table.iter().map(|e| e.matrix.entries().to_vec()).collect();
        assert_eq!(exact_rank(&rows), 16);
        for e in &table[1..] {
            assert!(e.matrix.trace().is_zero(), "trace of {}", e.blade);
        }
        let t = table.iter().find(|e| e.blade == Blade::from_indices(&[0, 1, 3]).unwrap()).unwrap();
        let rep = dirac();
        assert_eq!(t.matrix, &(&rep.gamma[0] * &rep.gamma[1]) * &rep.gamma[3]);
        let full = table.iter().find(|e| e.blade == Blade::FULL).unwrap();
        assert_eq!(full.matrix, rep.gamma5);
    }

    #[test]
    fn blade_display() {
        assert_eq!(Blade::EMPTY.to_string(), "I");
        assert_eq!(Blade::FULL.to_string(), "g5");
        assert_eq!(Blade::from_indices(&[0, 1, 3]).unwrap().to_string(), "g0*g1*g3");
    }

    #[test]
    fn star_signs_match_matrices() {
        let rep = dirac();
        for g in Generator::ALL {
            let m = rep.generator(g);
            assert_eq!(m.conjugate(), m.scale(&g.conjugation_sign().into()));
            assert_eq!(m.transpose(), m.scale(&g.transpose_sign().into()));
        }
    }
}
