//! Exhaustive and randomized search for the largest minimum distance of an
//! LCD code with given `(n, k, p)`.
//!
//! Every `[n, k]` code is column-permutation equivalent to one with a
//! systematic generator `[I_k | A]`, and permuting coordinates changes
//! neither the Gram matrix nor the weight distribution. The exhaustive
//! search therefore walks the sorted multisets of columns of `A`, each
//! exactly once, in lexicographic order.
//!
//! Work is split into contiguous chunks of that stream. Workers share no
//! mutable state; their results are merged by `(d desc, A asc)`, a total
//! order, so any thread count yields the same entry.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{LinearCode, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::matrix::{det_in_place, MatGF};

/// Record format version written into every table line.
pub const RECORD_VERSION: u32 = 1;

const CHUNK: usize = 1 << 14;
const RANK_RETRIES: usize = 1000;

/// Number of multisets of size `slots` drawn from `values` kinds.
pub fn multiset_count(slots: usize, values: usize) -> u128 {
    if values == 0 {
        return u128::from(slots == 0);
    }
    binomial(
        (slots + values - 1) as u128,
        (values - 1).min(slots) as u128,
    )
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Column `value` of `GF(p)^k` with row 0 as the most significant digit, so
/// numeric order on values is lexicographic order on column entries.
fn column_digits(value: u32, k: usize, p: u32) -> Vec<u8> {
    let mut out = vec![0u8; k];
    let mut v = value;
    for slot in out.iter_mut().rev() {
        *slot = (v % p) as u8;
        v /= p;
    }
    out
}

/// A systematic generator `[I_k | A]` whose `A` columns are stored as a
/// sorted list of column values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalSystematic {
    pub n: usize,
    pub k: usize,
    pub p: Prime,
    pub columns: Vec<u32>,
}

impl CanonicalSystematic {
    pub fn column(&self, i: usize) -> Vec<u8> {
        column_digits(self.columns[i], self.k, self.p.get() as u32)
    }

    pub fn generator(&self) -> MatGF {
        let mut g = MatGF::identity(self.p, self.k)
            .hstack(&MatGF::zeros(self.p, self.k, self.n - self.k))
            .expect("same row count");
        for (j, _) in self.columns.iter().enumerate() {
            for (r, x) in self.column(j).into_iter().enumerate() {
                g.set(r, self.k + j, x as i64);
            }
        }
        g
    }

    pub fn code(&self) -> LinearCode {
        LinearCode::new(self.generator()).expect("systematic generators have full rank")
    }
}

/// Search knobs shared by single cells and tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Ceiling on `canonical forms x codewords per form`.
    pub budget: u128,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
    /// Over GF(3), only enumerate columns whose first nonzero entry is 1.
    /// Scaling a column by 2 leaves the Gram matrix and all weights alone.
    pub sign_reduction: bool,
    /// Ceiling on `p^k` for distance enumeration.
    pub enumeration_cap: u128,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: 500_000_000,
            jobs: 1,
            sign_reduction: false,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

fn allowed_columns(k: usize, p: Prime, sign_reduction: bool) -> Result<Vec<u32>> {
    let pu = p.get() as u32;
    let total = pu.checked_pow(k as u32).ok_or_else(|| {
        Error::InvalidParameters(format!("{p}^{k} column values do not fit in memory"))
    })?;
    if !sign_reduction || p == Prime::TWO {
        return Ok((0..total).collect());
    }
    if p != Prime::THREE {
        return Err(Error::InvalidParameters(
            "sign reduction is only sound over GF(2) and GF(3)".into(),
        ));
    }
    Ok((0..total)
        .filter(|&v| {
            column_digits(v, k, pu)
                .into_iter()
                .find(|&x| x != 0)
                .map_or(true, |x| x == 1)
        })
        .collect())
}

/// Iterator over sorted column multisets, in lexicographic order.
#[derive(Debug, Clone)]
pub struct CanonicalIter {
    n: usize,
    k: usize,
    p: Prime,
    values: Vec<u32>,
    idx: Vec<usize>,
    done: bool,
}

impl CanonicalIter {
    fn new(n: usize, k: usize, p: Prime, values: Vec<u32>) -> Self {
        CanonicalIter {
            n,
            k,
            p,
            idx: vec![0; n - k],
            done: values.is_empty() && n > k,
            values,
        }
    }

    fn next_columns(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().map(|&i| self.values[i]).collect();
        let top = self.values.len().saturating_sub(1);
        match self.idx.iter().rposition(|&i| i < top) {
            Some(pos) => {
                let v = self.idx[pos] + 1;
                for slot in &mut self.idx[pos..] {
                    *slot = v;
                }
            }
            None => self.done = true,
        }
        Some(out)
    }
}

impl Iterator for CanonicalIter {
    type Item = CanonicalSystematic;

    fn next(&mut self) -> Option<CanonicalSystematic> {
        let columns = self.next_columns()?;
        Some(CanonicalSystematic {
            n: self.n,
            k: self.k,
            p: self.p,
            columns,
        })
    }
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// Number of canonical forms the exhaustive search visits.
pub fn canonical_count(n: usize, k: usize, p: Prime, sign_reduction: bool) -> Result<u128> {
    check_nk(n, k)?;
    let values = allowed_columns(k, p, sign_reduction)?;
    Ok(multiset_count(n - k, values.len()))
}

/// Every sorted column multiset for `[I_k | A]`, refusing when the number
/// of forms alone exceeds `budget`.
pub fn canonical_iter(
    n: usize,
    k: usize,
    p: Prime,
    sign_reduction: bool,
    budget: u128,
) -> Result<CanonicalIter> {
    check_nk(n, k)?;
    let values = allowed_columns(k, p, sign_reduction)?;
    let count = multiset_count(n - k, values.len());
    if count > budget {
        return Err(Error::BudgetExceeded {
            what: format!("canonical forms for (n={n}, k={k}, q={p})"),
            required: count,
            cap: budget,
        });
    }
    Ok(CanonicalIter::new(n, k, p, values))
}

/// Precomputed tables for scoring systematic generators of one `(k, p)`.
struct Evaluator {
    k: usize,
    p: Prime,
    /// Column digits for every column value.
    digits: Vec<Vec<u8>>,
    /// Weights of the projective messages (first nonzero digit 1).
    msg_weight: Vec<u32>,
    /// `nonzero[m * values + v]`: whether message `m` dotted with column `v`
    /// is nonzero.
    nonzero: Vec<bool>,
    values: usize,
}

impl Evaluator {
    fn new(k: usize, p: Prime) -> Self {
        let pu = p.get() as u32;
        let values = pu.pow(k as u32) as usize;
        let digits: Vec<Vec<u8>> = (0..values as u32)
            .map(|v| column_digits(v, k, pu))
            .collect();
        let messages: Vec<&Vec<u8>> = digits
            .iter()
            .filter(|d| d.iter().find(|&&x| x != 0) == Some(&1))
            .collect();
        let mut nonzero = Vec::with_capacity(messages.len() * values);
        for m in &messages {
            for col in &digits {
                let dot: u32 = m.iter().zip(col).map(|(&a, &b)| a as u32 * b as u32).sum();
                nonzero.push(dot % pu != 0);
            }
        }
        Evaluator {
            k,
            p,
            msg_weight: messages
                .iter()
                .map(|m| m.iter().filter(|&&x| x != 0).count() as u32)
                .collect(),
            digits,
            nonzero,
            values,
        }
    }

    /// Gram matrix `I + A A^T` is invertible.
    fn is_lcd(&self, columns: &[u32], gram: &mut Vec<u32>, scratch: &mut Vec<u8>) -> bool {
        let k = self.k;
        gram.clear();
        gram.resize(k * k, 0);
        for i in 0..k {
            gram[i * k + i] = 1;
        }
        for &c in columns {
            let d = &self.digits[c as usize];
            for i in 0..k {
                if d[i] == 0 {
                    continue;
                }
                for j in 0..k {
                    gram[i * k + j] += d[i] as u32 * d[j] as u32;
                }
            }
        }
        let pu = self.p.get() as u32;
        scratch.clear();
        scratch.extend(gram.iter().map(|&x| (x % pu) as u8));
        det_in_place(self.p, k, scratch) != 0
    }

    /// Minimum distance of `[I | A]`, or `None` once it is certain to fall
    /// below `floor`.
    fn distance(&self, columns: &[u32], floor: u32) -> Option<u32> {
        let mut best = u32::MAX;
        for (m, &w) in self.msg_weight.iter().enumerate() {
            let row = &self.nonzero[m * self.values..(m + 1) * self.values];
            let mut weight = w;
            for &c in columns {
                weight += row[c as usize] as u32;
            }
            best = best.min(weight);
            if best < floor {
                return None;
            }
        }
        Some(best)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Best {
    d: u32,
    columns: Vec<u32>,
}

fn better(a: Option<Best>, b: Option<Best>) -> Option<Best> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => {
            if a.d > b.d || (a.d == b.d && a.columns <= b.columns) {
                Some(a)
            } else {
                Some(b)
            }
        }
    }
}

fn scan_chunk(eval: &Evaluator, chunk: &[Vec<u32>], floor: u32, jobs: usize) -> Option<Best> {
    let score = |cols: &Vec<u32>, floor: u32, gram: &mut Vec<u32>, scratch: &mut Vec<u8>| {
        if !eval.is_lcd(cols, gram, scratch) {
            return None;
        }
        eval.distance(cols, floor).map(|d| Best {
            d,
            columns: cols.clone(),
        })
    };
    if jobs <= 1 {
        let mut best: Option<Best> = None;
        let (mut gram, mut scratch) = (Vec::new(), Vec::new());
        for cols in chunk {
            let f = best.as_ref().map_or(floor, |b| b.d.max(floor));
            best = better(best, score(cols, f, &mut gram, &mut scratch));
        }
        best
    } else {
        chunk
            .par_iter()
            .map_init(
                || (Vec::new(), Vec::new()),
                |(gram, scratch), cols| score(cols, floor, gram, scratch),
            )
            .reduce(|| None, better)
    }
}

/// How a table entry was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    Random,
    Skipped,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exhaustive => "exhaustive",
            Method::Random => "random",
            Method::Skipped => "skipped",
        })
    }
}

/// One cell of an `LCD[n, k]_q` table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcdTableEntry {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    /// Best distance found; 0 when no LCD code was found or the cell was skipped.
    pub d_lcd: usize,
    pub method: Method,
    pub witness: Option<MatGF>,
    pub elapsed_ms: u64,
    pub explored_count: u64,
    pub seed: Option<u64>,
    pub note: Option<String>,
}

/// Line-delimited record form of [`LcdTableEntry`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub version: u32,
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub d_lcd: usize,
    pub method: Method,
    pub witness_rows: Vec<String>,
    pub elapsed_ms: u64,
    pub explored_count: u64,
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl LcdTableEntry {
    /// Builds an entry after re-checking the witness from scratch: it must
    /// generate an LCD code of distance exactly `d_lcd`.
    #[allow(clippy::too_many_arguments)]
    pub fn validated(
        n: usize,
        k: usize,
        q: u32,
        d_lcd: usize,
        method: Method,
        witness: Option<MatGF>,
        elapsed_ms: u64,
        explored_count: u64,
        seed: Option<u64>,
        note: Option<String>,
    ) -> Result<Self> {
        if let Some(w) = &witness {
            let code = LinearCode::new(w.clone())
                .map_err(|e| Error::InvalidWitness(format!("({n},{k},{q}): {e}")))?;
            if (code.n(), code.k(), code.prime().get() as u32) != (n, k, q) {
                return Err(Error::InvalidWitness(format!(
                    "witness is [{}, {}]_{} for cell ({n},{k},{q})",
                    code.n(),
                    code.k(),
                    code.prime()
                )));
            }
            if !code.is_lcd() {
                return Err(Error::InvalidWitness(format!("({n},{k},{q}): not LCD")));
            }
            let d = code.min_distance()?;
            if d != d_lcd {
                return Err(Error::InvalidWitness(format!(
                    "({n},{k},{q}): witness distance {d}, recorded {d_lcd}"
                )));
            }
        } else if d_lcd != 0 {
            return Err(Error::InvalidWitness(format!(
                "({n},{k},{q}): distance {d_lcd} without a witness"
            )));
        }
        Ok(LcdTableEntry {
            n,
            k,
            q,
            d_lcd,
            method,
            witness,
            elapsed_ms,
            explored_count,
            seed,
            note,
        })
    }

    pub fn witness_code(&self) -> Option<LinearCode> {
        self.witness.clone().and_then(|w| LinearCode::new(w).ok())
    }

    /// Record form. With `timing` off, `elapsed_ms` is written as 0 so that
    /// records from different runs compare byte for byte.
    pub fn to_record(&self, timing: bool) -> TableRecord {
        TableRecord {
            version: RECORD_VERSION,
            n: self.n,
            k: self.k,
            q: self.q,
            d_lcd: self.d_lcd,
            method: self.method,
            witness_rows: self
                .witness
                .as_ref()
                .map(|w| {
                    w.row_iter()
                        .map(|r| r.iter().map(|x| char::from(b'0' + x)).collect())
                        .collect()
                })
                .unwrap_or_default(),
            elapsed_ms: if timing { self.elapsed_ms } else { 0 },
            explored_count: self.explored_count,
            seed: self.seed,
            note: self.note.clone(),
        }
    }

    pub fn to_record_line(&self, timing: bool) -> String {
        serde_json::to_string(&self.to_record(timing)).expect("records serialize")
    }

    /// Parses a record line and revalidates its witness.
    pub fn from_record_line(line: &str) -> Result<Self> {
        let rec: TableRecord = serde_json::from_str(line).map_err(|e| Error::Parse {
            line: 1,
            column: e.column(),
            message: e.to_string(),
        })?;
        let witness = if rec.witness_rows.is_empty() {
            None
        } else {
            let p = Prime::new(rec.q)?;
            let rows: Vec<Vec<i64>> = rec
                .witness_rows
                .iter()
                .map(|r| r.bytes().map(|b| (b as i64) - (b'0' as i64)).collect())
                .collect();
            if rows.iter().any(|r| r.len() != rec.n) {
                return Err(Error::InvalidWitness("ragged witness rows".into()));
            }
            Some(MatGF::from_rows(p, &rows))
        };
        LcdTableEntry::validated(
            rec.n,
            rec.k,
            rec.q,
            rec.d_lcd,
            rec.method,
            witness,
            rec.elapsed_ms,
            rec.explored_count,
            rec.seed,
            rec.note,
        )
    }
}

fn work_required(n: usize, k: usize, p: Prime, config: &SearchConfig) -> Result<u128> {
    let forms = canonical_count(n, k, p, config.sign_reduction)?;
    let words = (p.get() as u128).pow(k as u32);
    if words > config.enumeration_cap {
        return Err(Error::BudgetExceeded {
            what: format!("enumerating {p}^{k} codewords"),
            required: words,
            cap: config.enumeration_cap,
        });
    }
    let work = forms.saturating_mul(words);
    if work > config.budget {
        return Err(Error::BudgetExceeded {
            what: format!("exhaustive search of cell (n={n}, k={k}, q={p})"),
            required: work,
            cap: config.budget,
        });
    }
    Ok(work)
}

/// Exact `LCD[n, k]_p` by scanning every canonical form.
///
/// Ties go to the lexicographically smallest column list, so the witness is
/// reproducible.
pub fn lcd_max_exhaustive(
    n: usize,
    k: usize,
    p: Prime,
    config: &SearchConfig,
) -> Result<LcdTableEntry> {
    work_required(n, k, p, config)?;
    let forms = canonical_iter(n, k, p, config.sign_reduction, u128::MAX)?;
    lcd_max_over_forms(n, k, p, forms, config)
}

/// Best LCD code over an arbitrary stream of canonical forms for one cell.
///
/// The result depends only on the set of forms, not on their order or on
/// the number of workers.
pub fn lcd_max_over_forms<I>(
    n: usize,
    k: usize,
    p: Prime,
    forms: I,
    config: &SearchConfig,
) -> Result<LcdTableEntry>
where
    I: IntoIterator<Item = CanonicalSystematic>,
{
    check_nk(n, k)?;
    let start = Instant::now();
    let eval = Evaluator::new(k, p);
    let pool = if config.jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(config.jobs)
                .build()
                .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?,
        )
    } else {
        None
    };

    let mut best: Option<Best> = None;
    let mut explored = 0u64;
    let mut chunk: Vec<Vec<u32>> = Vec::with_capacity(CHUNK);
    let mut forms = forms.into_iter().peekable();
    while forms.peek().is_some() {
        chunk.clear();
        for form in forms.by_ref().take(CHUNK) {
            if (form.n, form.k, form.p) != (n, k, p) || form.columns.len() != n - k {
                return Err(Error::InvalidParameters(format!(
                    "form for ({}, {}, {}) in cell ({n}, {k}, {p})",
                    form.n, form.k, form.p
                )));
            }
            let mut cols = form.columns;
            cols.sort_unstable();
            chunk.push(cols);
        }
        explored += chunk.len() as u64;
        let floor = best.as_ref().map_or(0, |b| b.d);
        let found = match &pool {
            Some(pool) => pool.install(|| scan_chunk(&eval, &chunk, floor, config.jobs)),
            None => scan_chunk(&eval, &chunk, floor, 1),
        };
        best = better(best, found);
    }

    let elapsed_ms = start.elapsed().as_millis() as u64;
    let (d, witness) = match best {
        Some(b) => {
            let form = CanonicalSystematic {
                n,
                k,
                p,
                columns: b.columns,
            };
            (b.d as usize, Some(form.generator()))
        }
        None => (0, None),
    };
    LcdTableEntry::validated(
        n,
        k,
        p.get() as u32,
        d,
        Method::Exhaustive,
        witness,
        elapsed_ms,
        explored,
        None,
        None,
    )
}

/// Best LCD code among `trials` uniformly sampled full-rank generators.
pub fn lcd_max_random(
    n: usize,
    k: usize,
    p: Prime,
    trials: u64,
    seed: u64,
) -> Result<LcdTableEntry> {
    check_nk(n, k)?;
    if trials == 0 {
        return Err(Error::InvalidParameters("trials must be >= 1".into()));
    }
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(usize, MatGF)> = None;
    for _ in 0..trials {
        let Some(code) = sample_full_rank(&mut rng, p, n, k) else {
            continue;
        };
        if !code.is_lcd() {
            continue;
        }
        let d = code.min_distance()?;
        if best.as_ref().map_or(true, |(bd, _)| d > *bd) {
            best = Some((d, code.into_generator()));
        }
    }
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let (d, witness, note) = match best {
        Some((d, g)) => (d, Some(g), None),
        None => (
            0,
            None,
            Some("no LCD code among the sampled generators".to_string()),
        ),
    };
    LcdTableEntry::validated(
        n,
        k,
        p.get() as u32,
        d,
        Method::Random,
        witness,
        elapsed_ms,
        trials,
        Some(seed),
        note,
    )
}

/// Uniform `k x n` matrices, resampled until one has full rank.
pub fn sample_full_rank<R: rand::Rng>(
    rng: &mut R,
    p: Prime,
    n: usize,
    k: usize,
) -> Option<LinearCode> {
    (0..RANK_RETRIES).find_map(|_| LinearCode::new(MatGF::random(p, k, n, rng)).ok())
}

/// Settings for [`build_table`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableConfig {
    pub search: SearchConfig,
    /// Trials for cells that fall back to random search.
    pub random_trials: u64,
    /// Base seed; each random cell derives its own seed from it and records it.
    pub seed: u64,
}

impl Default for TableConfig {
    fn default() -> Self {
        TableConfig {
            search: SearchConfig::default(),
            random_trials: 10_000,
            seed: 0,
        }
    }
}

/// Deterministic per-cell seed.
pub fn cell_seed(base: u64, n: usize, k: usize) -> u64 {
    base ^ ((n as u64) << 32 | k as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// One entry per `(n, k)` in row-major order. Cells over budget fall back
/// to random search; cells with `k > n` are kept as skipped markers.
pub fn build_table(
    n_range: RangeInclusive<usize>,
    k_range: RangeInclusive<usize>,
    p: Prime,
    config: &TableConfig,
) -> Result<Vec<LcdTableEntry>> {
    if n_range.is_empty() || k_range.is_empty() {
        return Err(Error::InvalidParameters(
            "table ranges must be nonempty".into(),
        ));
    }
    let q = p.get() as u32;
    let mut out = Vec::new();
    for n in n_range {
        for k in k_range.clone() {
            if k == 0 || k > n {
                out.push(LcdTableEntry {
                    n,
                    k,
                    q,
                    d_lcd: 0,
                    method: Method::Skipped,
                    witness: None,
                    elapsed_ms: 0,
                    explored_count: 0,
                    seed: None,
                    note: Some("no [n, k] code with 1 <= k <= n".into()),
                });
                continue;
            }
            let entry = match work_required(n, k, p, &config.search) {
                Ok(_) => lcd_max_exhaustive(n, k, p, &config.search)?,
                Err(Error::BudgetExceeded {
                    what,
                    required,
                    cap,
                }) => {
                    let seed = cell_seed(config.seed, n, k);
                    let mut e = lcd_max_random(n, k, p, config.random_trials, seed)?;
                    let note = format!(
                        "exhaustive refused: {what} needs {required} > {cap}; lower bound only"
                    );
                    e.note = Some(match e.note {
                        Some(prev) => format!("{note}; {prev}"),
                        None => note,
                    });
                    e
                }
                Err(e) => return Err(e),
            };
            out.push(entry);
        }
    }
    Ok(out)
}

/// A pair of adjacent exhaustive cells where the distance drops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonicityViolation {
    pub q: u32,
    pub k: usize,
    pub n: usize,
    pub d_n: usize,
    pub d_next: usize,
}

impl fmt::Display for MonotonicityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LCD[{},{}]_{} = {} < LCD[{},{}]_{} = {}",
            self.n + 1,
            self.k,
            self.q,
            self.d_next,
            self.n,
            self.k,
            self.q,
            self.d_n
        )
    }
}

/// Checks `d(n + 1, k) >= d(n, k)` on every adjacent pair of exhaustive
/// cells. Random and skipped cells carry one-sided information and are
/// ignored.
pub fn check_monotonicity(table: &[LcdTableEntry]) -> Vec<MonotonicityViolation> {
    let mut cells: BTreeMap<(u32, usize, usize), usize> = BTreeMap::new();
    for e in table.iter().filter(|e| e.method == Method::Exhaustive) {
        cells.insert((e.q, e.k, e.n), e.d_lcd);
    }
    cells
        .iter()
        .filter_map(|(&(q, k, n), &d_n)| {
            let &d_next = cells.get(&(q, k, n + 1))?;
            (d_next < d_n).then_some(MonotonicityViolation {
                q,
                k,
                n,
                d_n,
                d_next,
            })
        })
        .collect()
}
