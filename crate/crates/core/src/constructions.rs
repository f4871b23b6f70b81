//! Explicit code families: repetition codes, the two block constructions
//! for lengths `9m + 3` and `9m + 4`, and the `(c1 + c2, c1 - c2)`
//! combination of two codes.
//!
//! Constructors build the generator exactly as written down and make no
//! claim about the result. Whether a family is LCD, or reaches some
//! distance, is for the caller (and the claim checker) to test.

use std::fmt;
use std::str::FromStr;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::matrix::MatGF;

/// `[n, 1]_p` code spanned by the all-ones word.
pub fn repetition(n: usize, p: Prime) -> Result<LinearCode> {
    if n == 0 {
        return Err(Error::InvalidParameters(
            "repetition length must be >= 1".into(),
        ));
    }
    LinearCode::new(MatGF::from_rows(p, &[vec![1i64; n]]))
}

/// `[n, 1]_p` code spanned by `(0, 1, ..., 1)`.
pub fn zero_prefixed_repetition(n: usize, p: Prime) -> Result<LinearCode> {
    if n < 2 {
        return Err(Error::InvalidParameters(
            "zero-prefixed repetition length must be >= 2".into(),
        ));
    }
    let mut row = vec![1i64; n];
    row[0] = 0;
    LinearCode::new(MatGF::from_rows(p, &[row]))
}

/// Which of the two ternary block constructions to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mod9Case {
    /// Length `9m + 3`.
    Three,
    /// Length `9m + 4`.
    Four,
}

impl Mod9Case {
    pub fn length(self, m: usize) -> usize {
        match self {
            Mod9Case::Three => 9 * m + 3,
            Mod9Case::Four => 9 * m + 4,
        }
    }

    /// Block lengths of the first row: ones, twos, zeros.
    fn blocks(self, m: usize) -> [usize; 3] {
        match self {
            Mod9Case::Three => [3 * m, 3 * m + 2, 3 * m + 1],
            Mod9Case::Four => [3 * m + 1, 3 * m + 2, 3 * m + 1],
        }
    }
}

impl TryFrom<u32> for Mod9Case {
    type Error = Error;

    fn try_from(tag: u32) -> Result<Self> {
        match tag {
            3 => Ok(Mod9Case::Three),
            4 => Ok(Mod9Case::Four),
            _ => Err(Error::InvalidParameters(format!(
                "construction case must be 3 or 4, got {tag}"
            ))),
        }
    }
}

impl fmt::Display for Mod9Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mod9Case::Three => f.write_str("3"),
            Mod9Case::Four => f.write_str("4"),
        }
    }
}

/// The ternary `[9m + 3, 2]` or `[9m + 4, 2]` block code.
///
/// Row one is `1…1 | 2…2 | 0…0` and row two is `0…0 | 0…0 | 2…2`, with the
/// block lengths of [`Mod9Case`]. `m = 0` is allowed; see
/// [`ConstructionSpec::build`] for the warning attached to it.
pub fn mod9_construction(case: Mod9Case, m: usize) -> Result<LinearCode> {
    let [ones, twos, zeros] = case.blocks(m);
    let n = ones + twos + zeros;
    debug_assert_eq!(n, case.length(m));
    let mut row1 = Vec::with_capacity(n);
    row1.extend(std::iter::repeat(1i64).take(ones));
    row1.extend(std::iter::repeat(2i64).take(twos));
    row1.extend(std::iter::repeat(0i64).take(zeros));
    let mut row2 = vec![0i64; ones + twos];
    row2.extend(std::iter::repeat(2i64).take(zeros));
    LinearCode::new(MatGF::from_rows(Prime::THREE, &[row1, row2]))
}

/// `{(c1 + c2, c1 - c2)}` with generator `[[G1, G1], [G2, -G2]]`.
///
/// Needs equal lengths and an odd field: over GF(2) the two halves coincide.
pub fn between(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode> {
    if c1.prime() != c2.prime() {
        return Err(Error::ModulusMismatch {
            left: c1.prime().get(),
            right: c2.prime().get(),
        });
    }
    if c1.n() != c2.n() {
        return Err(Error::DimensionMismatch(format!(
            "operand lengths differ: {} and {}",
            c1.n(),
            c2.n()
        )));
    }
    if c1.prime() == Prime::TWO {
        return Err(Error::InvalidParameters(
            "the (c1 + c2, c1 - c2) construction needs an odd field".into(),
        ));
    }
    let g1 = c1.generator();
    let g2 = c2.generator();
    LinearCode::new(MatGF::block_compose(g1, g1, g2, &g2.neg())?)
}

/// Family names as used on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Repetition,
    ZeroRepetition,
    Mod9Case3,
    Mod9Case4,
    Between,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Repetition,
        Family::ZeroRepetition,
        Family::Mod9Case3,
        Family::Mod9Case4,
        Family::Between,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Repetition => "repetition",
            Family::ZeroRepetition => "zero-rep",
            Family::Mod9Case3 => "mod9-3",
            Family::Mod9Case4 => "mod9-4",
            Family::Between => "between",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown family `{s}`")))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A fully parameterised construction request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionSpec {
    Repetition { n: usize, p: Prime },
    ZeroRepetition { n: usize, p: Prime },
    Mod9 { case: Mod9Case, m: usize },
    Between(Box<LinearCode>, Box<LinearCode>),
}

/// A built code plus any warnings about degenerate parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constructed {
    pub code: LinearCode,
    pub warnings: Vec<String>,
}

impl ConstructionSpec {
    pub fn family(&self) -> Family {
        match self {
            ConstructionSpec::Repetition { .. } => Family::Repetition,
            ConstructionSpec::ZeroRepetition { .. } => Family::ZeroRepetition,
            ConstructionSpec::Mod9 {
                case: Mod9Case::Three,
                ..
            } => Family::Mod9Case3,
            ConstructionSpec::Mod9 {
                case: Mod9Case::Four,
                ..
            } => Family::Mod9Case4,
            ConstructionSpec::Between(..) => Family::Between,
        }
    }

    pub fn build(&self) -> Result<Constructed> {
        let mut warnings = Vec::new();
        let code = match self {
            ConstructionSpec::Repetition { n, p } => repetition(*n, *p)?,
            ConstructionSpec::ZeroRepetition { n, p } => zero_prefixed_repetition(*n, *p)?,
            ConstructionSpec::Mod9 { case, m } => {
                if *m == 0 {
                    warnings.push(format!(
                        "m = 0 is outside the positive range; case {case} degenerates to length {}",
                        case.length(0)
                    ));
                }
                mod9_construction(*case, *m)?
            }
            ConstructionSpec::Between(c1, c2) => between(c1, c2)?,
        };
        Ok(Constructed { code, warnings })
    }
}
