//! Linear codes given by a full-rank generator matrix.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Prime;
use crate::matrix::MatGF;

/// Default cap on the number of messages `p^k` enumerated for distance and
/// weight computations.
pub const DEFAULT_ENUMERATION_CAP: u128 = 14_348_907; // 3^15

/// An `[n, k]_p` linear code. The generator always has full row rank and
/// `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    g: MatGF,
}

/// Distance data derived from a full codeword enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeMetrics {
    pub d: usize,
    pub t: usize,
    pub detect: usize,
    pub weight_distribution: Vec<u128>,
}

/// `(t, detect)` for a code of minimum distance `d`: the number of errors it
/// corrects and the number it detects.
pub fn error_capability(d: i64) -> Result<(u64, u64)> {
    if d < 1 {
        return Err(Error::InvalidDistance(d));
    }
    Ok((((d - 1) / 2) as u64, (d - 1) as u64))
}

pub fn hamming_weight(word: &[u8]) -> usize {
    word.iter().filter(|&&x| x != 0).count()
}

impl LinearCode {
    /// Wraps a generator matrix, rejecting rank-deficient or zero input.
    pub fn new(g: MatGF) -> Result<Self> {
        if g.rows() == 0 || g.cols() == 0 {
            return Err(Error::InvalidParameters(format!(
                "a generator needs at least one row and column, got {}x{}",
                g.rows(),
                g.cols()
            )));
        }
        let rank = g.rank();
        if rank < g.rows() {
            return Err(Error::RankDeficient {
                rank,
                rows: g.rows(),
            });
        }
        Ok(LinearCode { g })
    }

    /// The code spanned by the rows of `g`, whatever their rank. The
    /// generator becomes the RREF basis of the row space.
    pub fn from_spanning(g: &MatGF) -> Result<Self> {
        LinearCode::new(g.row_space_basis())
    }

    pub fn parse(text: &str) -> Result<Self> {
        LinearCode::new(MatGF::parse(text)?)
    }

    pub fn generator(&self) -> &MatGF {
        &self.g
    }

    pub fn into_generator(self) -> MatGF {
        self.g
    }

    pub fn prime(&self) -> Prime {
        self.g.prime()
    }

    pub fn n(&self) -> usize {
        self.g.cols()
    }

    pub fn k(&self) -> usize {
        self.g.rows()
    }

    /// A parity-check matrix: a basis of the right kernel of `G`. Empty when
    /// `k = n`.
    pub fn parity_check(&self) -> MatGF {
        self.g.nullspace_basis()
    }

    pub fn dual(&self) -> Result<LinearCode> {
        if self.k() == self.n() {
            return Err(Error::TrivialDual { n: self.n() });
        }
        LinearCode::new(self.parity_check())
    }

    pub fn gram(&self) -> MatGF {
        self.g
            .mul(&self.g.transpose())
            .expect("G and G^T are conformable")
    }

    /// Whether the code meets its dual only in zero, decided by the Gram
    /// matrix. Rank and determinant are both computed and must agree.
    pub fn is_lcd(&self) -> bool {
        let gram = self.gram();
        let by_rank = gram.rank() == self.k();
        let by_det = !gram.det().expect("Gram matrix is square").is_zero();
        assert_eq!(
            by_rank, by_det,
            "Gram rank and determinant disagree for\n{}",
            self.g
        );
        by_rank
    }

    /// `dim(C ∩ C^⊥) = k - rank(G G^T)`.
    pub fn hull_dim(&self) -> usize {
        self.k() - self.gram().rank()
    }

    /// A basis of `C ∩ C^⊥` computed directly from the two row spaces.
    pub fn hull_basis(&self) -> MatGF {
        MatGF::rowspace_intersect(&self.g, &self.parity_check())
            .expect("G and H share length and field")
    }

    pub fn hull_dim_by_intersection(&self) -> usize {
        self.hull_basis().rows()
    }

    /// Membership via the parity-check matrix: `v H^T = 0`.
    pub fn contains(&self, v: &[u8]) -> Result<bool> {
        if v.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: v.len(),
            });
        }
        let h = self.parity_check();
        let p = self.prime().get() as u32;
        let in_code = h.row_iter().all(|row| {
            row.iter()
                .zip(v)
                .map(|(&a, &b)| a as u32 * (b as u32 % p))
                .sum::<u32>()
                % p
                == 0
        });
        Ok(in_code)
    }

    /// Membership by elimination against `G`.
    pub fn contains_by_solve(&self, v: &[u8]) -> Result<bool> {
        let p = self.prime();
        let v: Vec<u8> = v.iter().map(|&x| p.reduce(x as i64)).collect();
        self.g.in_row_space(&v)
    }

    /// True when both generators span the same subspace.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.g.row_space_basis() == other.g.row_space_basis()
    }

    /// Number of coordinates that are not identically zero on the code.
    pub fn support_size(&self) -> usize {
        (0..self.n())
            .filter(|&c| (0..self.k()).any(|r| self.g.get(r, c) != 0))
            .count()
    }

    pub fn encode(&self, message: &[u8]) -> Result<Vec<u8>> {
        self.g.vec_mul(message)
    }

    fn message_count(&self) -> u128 {
        (self.prime().get() as u128).pow(self.k() as u32)
    }

    fn check_cap(&self, cap: u128) -> Result<()> {
        let count = self.message_count();
        if count > cap {
            return Err(Error::BudgetExceeded {
                what: format!("enumerating {}^{} codewords", self.prime(), self.k()),
                required: count,
                cap,
            });
        }
        Ok(())
    }

    /// Calls `f` on every codeword, stepping through messages like an
    /// odometer: bumping message digit `i` adds row `i` to the word, and a
    /// digit wrapping from `p-1` to `0` is also one addition of row `i`.
    pub fn for_each_codeword(&self, cap: u128, mut f: impl FnMut(&[u8])) -> Result<()> {
        self.check_cap(cap)?;
        let p = self.prime();
        let (k, n) = (self.k(), self.n());
        let mut message = vec![0u8; k];
        let mut word = vec![0u8; n];
        f(&word);
        loop {
            let mut i = 0;
            loop {
                for (w, &g) in word.iter_mut().zip(self.g.row(i)) {
                    *w = p.add(*w, g);
                }
                message[i] += 1;
                if message[i] < p.get() {
                    break;
                }
                message[i] = 0;
                i += 1;
                if i == k {
                    return Ok(());
                }
            }
            f(&word);
        }
    }

    pub fn codewords(&self) -> Result<Vec<Vec<u8>>> {
        let mut out = Vec::new();
        self.for_each_codeword(DEFAULT_ENUMERATION_CAP, |w| out.push(w.to_vec()))?;
        Ok(out)
    }

    pub fn weight_distribution(&self) -> Result<Vec<u128>> {
        self.weight_distribution_capped(DEFAULT_ENUMERATION_CAP)
    }

    pub fn weight_distribution_capped(&self, cap: u128) -> Result<Vec<u128>> {
        let mut dist = vec![0u128; self.n() + 1];
        self.for_each_codeword(cap, |w| dist[hamming_weight(w)] += 1)?;
        Ok(dist)
    }

    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_capped(DEFAULT_ENUMERATION_CAP)
    }

    /// Least nonzero codeword weight over all `p^k - 1` nonzero messages.
    pub fn min_distance_capped(&self, cap: u128) -> Result<usize> {
        let mut best = usize::MAX;
        let mut first = true;
        self.for_each_codeword(cap, |w| {
            if first {
                first = false;
                return;
            }
            best = best.min(hamming_weight(w));
        })?;
        Ok(best)
    }

    pub fn metrics(&self) -> Result<CodeMetrics> {
        let weight_distribution = self.weight_distribution()?;
        let d = weight_distribution
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &a)| a > 0)
            .map(|(w, _)| w)
            .expect("k >= 1 gives a nonzero codeword");
        let (t, detect) = error_capability(d as i64)?;
        Ok(CodeMetrics {
            d,
            t: t as usize,
            detect: detect as usize,
            weight_distribution,
        })
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.g.fmt(f)
    }
}
