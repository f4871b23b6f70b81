//! Evaluates every claim of the catalog in [`crate::claims`] against the
//! library and produces a [`VerifyReport`].
//!
//! Each claim is evaluated at a list of parameter points. A point is
//! confirmed, refuted (with a concrete code as evidence) or out of budget;
//! nothing is guessed. A claim is refuted as soon as one point is, and
//! confirmed when at least one point is and none is refuted.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::{plotkin_average_bound, singleton_bound, stated_upper_bound};
use crate::claims::{paper_claims, ClaimRecord, Formula, Point, Prediction};
use crate::code::LinearCode;
use crate::constructions::{
    between, mod9_construction, repetition, zero_prefixed_repetition, Mod9Case,
};
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::matrix::MatGF;
use crate::search::{
    check_monotonicity, lcd_max_exhaustive, sample_full_rank, LcdTableEntry, SearchConfig,
};

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Confirmed,
    Refuted,
    OutOfBudget,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
            Verdict::OutOfBudget => "out_of_budget",
        })
    }
}

/// A concrete code with the metrics that make it evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub label: String,
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub generator_rows: Vec<String>,
    pub gram_rows: Vec<String>,
    pub is_lcd: bool,
    pub hull_dim: usize,
    pub min_distance: Option<usize>,
}

fn digit_rows(m: &MatGF) -> Vec<String> {
    m.row_iter()
        .map(|r| r.iter().map(|x| char::from(b'0' + x)).collect())
        .collect()
}

impl Evidence {
    pub fn from_code(label: impl Into<String>, code: &LinearCode) -> Self {
        Evidence {
            label: label.into(),
            n: code.n(),
            k: code.k(),
            q: code.prime().get() as u32,
            generator_rows: digit_rows(code.generator()),
            gram_rows: digit_rows(&code.gram()),
            is_lcd: code.is_lcd(),
            hull_dim: code.hull_dim(),
            min_distance: code.min_distance().ok(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointResult {
    pub point: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimOutcome {
    pub claim: ClaimRecord,
    pub verdict: Verdict,
    pub points: Vec<PointResult>,
    pub evidence: Vec<Evidence>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub confirmed: usize,
    pub refuted: usize,
    pub out_of_budget: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub budget: u128,
    pub outcomes: Vec<ClaimOutcome>,
    pub summary: Summary,
}

/// Knobs for [`verify_paper`]. The defaults finish in a few seconds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub search: SearchConfig,
    pub seed: u64,
    /// Random codes for the Gram criterion and dual closure.
    pub massey_trials: usize,
    /// Random LCD operand pairs for the `(c1 + c2, c1 - c2)` construction.
    pub between_trials: usize,
    /// Block constructions are evaluated for `m = 1..=max_m`.
    pub max_m: usize,
    /// `(k, n_max)` rows of the exhaustive GF(3) table.
    pub ternary_rows: Vec<(usize, usize)>,
    /// `(k, n_max)` rows of the exhaustive GF(2) table.
    pub binary_rows: Vec<(usize, usize)>,
    /// Lengths at which `LCD[n, 2]_3` is compared with `floor(3n/8)`.
    pub value_lengths: Vec<usize>,
    /// Largest `n` for the `k = 1` and `k = n - 1` claims.
    pub small_n_max: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            search: SearchConfig {
                budget: 100_000_000,
                ..SearchConfig::default()
            },
            seed: 0x1cd,
            massey_trials: 1200,
            between_trials: 200,
            max_m: 4,
            ternary_rows: vec![(1, 10), (2, 10), (3, 8)],
            binary_rows: vec![(1, 10), (2, 10), (3, 8)],
            value_lengths: vec![3, 4, 12, 13, 21, 22, 30, 31],
            small_n_max: 9,
        }
    }
}

/// Exhaustive cells computed once per report.
struct Cells<'a> {
    config: &'a SearchConfig,
    cache: BTreeMap<(usize, usize, Prime), Option<LcdTableEntry>>,
}

impl<'a> Cells<'a> {
    fn new(config: &'a SearchConfig) -> Self {
        Cells {
            config,
            cache: BTreeMap::new(),
        }
    }

    /// `None` when the cell is over budget.
    fn get(&mut self, n: usize, k: usize, p: Prime) -> Result<Option<LcdTableEntry>> {
        if let Some(e) = self.cache.get(&(n, k, p)) {
            return Ok(e.clone());
        }
        let entry = match lcd_max_exhaustive(n, k, p, self.config) {
            Ok(e) => Some(e),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        self.cache.insert((n, k, p), entry.clone());
        Ok(entry)
    }
}

struct Builder {
    claim: ClaimRecord,
    points: Vec<PointResult>,
    evidence: Vec<Evidence>,
    notes: Vec<String>,
}

impl Builder {
    fn new(claim: ClaimRecord) -> Self {
        Builder {
            claim,
            points: Vec::new(),
            evidence: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn point(&mut self, point: impl Into<String>, verdict: Verdict, detail: impl Into<String>) {
        self.points.push(PointResult {
            point: point.into(),
            verdict,
            detail: detail.into(),
        });
    }

    fn check(&mut self, point: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let v = if ok {
            Verdict::Confirmed
        } else {
            Verdict::Refuted
        };
        self.point(point, v, detail);
    }

    fn evidence(&mut self, label: impl Into<String>, code: &LinearCode) {
        self.evidence.push(Evidence::from_code(label, code));
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn finish(self) -> ClaimOutcome {
        let refuted = self.points.iter().any(|p| p.verdict == Verdict::Refuted);
        let confirmed = self.points.iter().any(|p| p.verdict == Verdict::Confirmed);
        let verdict = if refuted {
            Verdict::Refuted
        } else if confirmed {
            Verdict::Confirmed
        } else {
            Verdict::OutOfBudget
        };
        assert!(
            verdict != Verdict::Refuted || !self.evidence.is_empty(),
            "refuted claim {} without evidence",
            self.claim.claim_id
        );
        ClaimOutcome {
            claim: self.claim,
            verdict,
            points: self.points,
            evidence: self.evidence,
            notes: self.notes,
        }
    }
}

fn cell_label(n: usize, k: usize, q: u32) -> String {
    format!("n={n},k={k},q={q}")
}

fn random_prime<R: Rng>(rng: &mut R) -> Prime {
    Prime::new(Prime::SUPPORTED[rng.gen_range(0..Prime::SUPPORTED.len())] as u32)
        .expect("supported")
}

fn check_massey(b: &mut Builder, cfg: &VerifyConfig) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x4d41_5353);
    let mut per_prime: BTreeMap<u8, (usize, usize)> = BTreeMap::new();
    let mut disagreements = 0;
    for _ in 0..cfg.massey_trials {
        let p = random_prime(&mut rng);
        let n = rng.gen_range(1..=12);
        let k = rng.gen_range(1..=n.min(5));
        let Some(code) = sample_full_rank(&mut rng, p, n, k) else {
            continue;
        };
        let by_gram = code.is_lcd();
        let by_hull = code.hull_dim_by_intersection() == 0;
        let slot = per_prime.entry(p.get()).or_default();
        slot.0 += 1;
        slot.1 += by_gram as usize;
        if by_gram != by_hull {
            disagreements += 1;
            if disagreements <= 3 {
                b.evidence("Gram test and hull oracle disagree", &code);
            }
        }
    }
    let tested: usize = per_prime.values().map(|v| v.0).sum();
    b.check(
        format!("{tested} random codes, n <= 12, k <= 5"),
        disagreements == 0,
        format!("{disagreements} disagreements between Gram rank and C ∩ C^⊥"),
    );
    for (p, (count, lcd)) in per_prime {
        b.note(format!("GF({p}): {count} codes, {lcd} LCD"));
    }
}

fn check_examples(b: &mut Builder) -> Result<()> {
    let two = LinearCode::new(MatGF::from_rows(Prime::TWO, &[[0, 1]]))?;
    b.check(
        "{00, 01}",
        two.is_lcd() && two.hull_dim() == 0,
        format!("is_lcd = {}, hull_dim = {}", two.is_lcd(), two.hull_dim()),
    );
    let sd = LinearCode::new(MatGF::from_rows(Prime::TWO, &[[1, 0, 1, 0], [0, 1, 0, 1]]))?;
    let self_dual = sd.dual()?.same_code(&sd);
    let ok = !sd.is_lcd() && sd.hull_dim() == 2 && sd.hull_dim_by_intersection() == 2 && self_dual;
    b.check(
        "{0000, 1010, 0101, 1111}",
        ok,
        format!(
            "is_lcd = {}, hull_dim = {}, equals its dual = {self_dual}",
            sd.is_lcd(),
            sd.hull_dim()
        ),
    );
    if !ok {
        b.evidence("binary example", &sd);
    }
    Ok(())
}

fn check_dual_closure(b: &mut Builder, cfg: &VerifyConfig) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x4455_414c);
    let (mut lcd, mut failures) = (0, 0);
    for _ in 0..cfg.massey_trials {
        let p = random_prime(&mut rng);
        let n = rng.gen_range(2..=10);
        let k = rng.gen_range(1..n);
        let Some(code) = sample_full_rank(&mut rng, p, n, k) else {
            continue;
        };
        if !code.is_lcd() {
            continue;
        }
        lcd += 1;
        if !code.dual()?.is_lcd() {
            failures += 1;
            b.evidence("LCD code with non-LCD dual", &code);
        }
    }
    b.check(
        format!("{lcd} random LCD codes"),
        failures == 0 && lcd > 0,
        format!("{failures} duals failed the LCD test"),
    );
    Ok(())
}

fn table_cells(rows: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for &(k, n_max) in rows {
        for n in k.max(2)..=n_max {
            out.push((n, k));
        }
    }
    out
}

fn check_stated_bound(b: &mut Builder, cells: &mut Cells, cfg: &VerifyConfig) -> Result<()> {
    let mut table = vec![(4, 2, Prime::THREE)];
    for (n, k) in table_cells(&cfg.ternary_rows) {
        table.push((n, k, Prime::THREE));
    }
    for (n, k) in table_cells(&cfg.binary_rows) {
        table.push((n, k, Prime::TWO));
    }
    let mut seen = std::collections::BTreeSet::new();
    table.retain(|c| seen.insert(*c));
    let mut shown = 0;
    let mut refuted_cells = Vec::new();
    for (n, k, p) in table {
        let q = p.get() as u32;
        let bound = stated_upper_bound(n as u64, k as u32, q)?;
        let label = cell_label(n, k, q);
        match cells.get(n, k, p)? {
            None => b.point(label, Verdict::OutOfBudget, "exhaustive search over budget"),
            Some(e) => {
                let ok = e.d_lcd as u64 <= bound;
                b.check(
                    label,
                    ok,
                    format!("exhaustive LCD max {} vs stated bound {bound}", e.d_lcd),
                );
                if !ok {
                    refuted_cells.push((n, k, q));
                    // The (4, 2, 3) witness is always attached; others up to a few.
                    if (n, k, q) == (4, 2, 3) || shown < 4 {
                        shown += 1;
                        let code = e.witness_code().expect("positive distance has a witness");
                        b.evidence(
                            format!(
                                "LCD code with d = {} above the stated bound {bound}",
                                e.d_lcd
                            ),
                            &code,
                        );
                    }
                }
            }
        }
    }
    if !refuted_cells.is_empty() {
        let qs: std::collections::BTreeSet<u32> = refuted_cells.iter().map(|c| c.2).collect();
        b.note(format!(
            "{} cells exceed the stated bound, all with q in {:?}; for q = 2 the formula equals the average-weight bound",
            refuted_cells.len(),
            qs
        ));
    }
    Ok(())
}

fn printed_gram_matrix(rows: &[Vec<u8>]) -> MatGF {
    let rows: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i64).collect())
        .collect();
    MatGF::from_rows(Prime::THREE, &rows)
}

fn check_mod9(b: &mut Builder, case: Mod9Case, cfg: &VerifyConfig) -> Result<()> {
    let printed = match &b.claim.prediction {
        Prediction::Construction {
            printed_gram: Some(g),
            ..
        } => Some(printed_gram_matrix(g)),
        _ => None,
    };
    let mut gram_mismatch = Vec::new();
    for m in 1..=cfg.max_m {
        let code = mod9_construction(case, m)?;
        let n = code.n();
        let target = Formula::FloorThreeNOverEight.eval(&Point::new(n as u64, 2, 3)) as usize;
        let d = code.min_distance()?;
        let lcd = code.is_lcd();
        let gram = code.gram();
        let label = format!("m={m},n={n}");
        let square_sum: u64 = code
            .generator()
            .row(0)
            .iter()
            .map(|&x| (x as u64).pow(2))
            .sum();
        let detail = format!(
            "is_lcd = {lcd}, d = {d} (3m+1 = {}), floor(3n/8) = {target}, Gram top-left {} (integer sum of squares {square_sum})",
            3 * m + 1,
            gram.get(0, 0),
        );
        let ok = lcd && d == 3 * m + 1 && d == target;
        b.check(label, ok, detail);
        if !ok {
            let why = match (lcd, d == target) {
                (false, _) => "Gram matrix singular as printed".to_string(),
                (true, false) => format!("distance {d} falls short of floor(3n/8) = {target}"),
                (true, true) => format!("distance {d} differs from 3m+1"),
            };
            b.evidence(format!("m = {m}: {why}"), &code);
        }
        if let Some(pg) = &printed {
            if &gram != pg {
                gram_mismatch.push(format!(
                    "m={m}: computed diag({}, {}), det {}",
                    gram.get(0, 0),
                    gram.get(1, 1),
                    gram.det()?.value()
                ));
            }
        }
    }
    if let Some(pg) = &printed {
        if !gram_mismatch.is_empty() {
            b.note(format!(
                "given Gram matrix diag({}, {}) (det {}) differs from the computed one: {}",
                pg.get(0, 0),
                pg.get(1, 1),
                pg.det()?.value(),
                gram_mismatch.join("; ")
            ));
        }
    }
    if case == Mod9Case::Three {
        b.note("3m + 1 = floor(3(9m+3)/8) holds only for m <= 2");
    }
    Ok(())
}

fn check_value_claim(b: &mut Builder, cells: &mut Cells, cfg: &VerifyConfig) -> Result<()> {
    let mut refuting = 0;
    for &n in &cfg.value_lengths {
        let pt = Point::new(n as u64, 2, 3);
        if !b.claim.hypothesis.accepts(&pt) {
            continue;
        }
        let target = Formula::FloorThreeNOverEight.eval(&pt) as usize;
        let label = cell_label(n, 2, 3);
        match cells.get(n, 2, Prime::THREE)? {
            None => b.point(label, Verdict::OutOfBudget, "exhaustive search over budget"),
            Some(e) => {
                let ok = e.d_lcd == target;
                b.check(
                    label,
                    ok,
                    format!("exhaustive LCD max {} vs floor(3n/8) = {target}", e.d_lcd),
                );
                if !ok && refuting < 4 {
                    refuting += 1;
                    let code = e.witness_code().expect("positive distance has a witness");
                    b.evidence(format!("LCD [{n}, 2, {}]_3 code", e.d_lcd), &code);
                }
            }
        }
    }
    Ok(())
}

fn random_lcd<R: Rng>(rng: &mut R, n: usize, k: usize) -> LinearCode {
    loop {
        if let Some(c) = sample_full_rank(rng, Prime::THREE, n, k) {
            if c.is_lcd() {
                return c;
            }
        }
    }
}

fn check_between(b: &mut Builder, cfg: &VerifyConfig) -> Result<()> {
    let p = Prime::THREE;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x4254_574e);
    let (mut lcd_ok, mut gram_ok, mut det_ok, mut set_checked, mut set_ok) = (0, 0, 0, 0, 0);
    for _ in 0..cfg.between_trials {
        let n = rng.gen_range(1..=8);
        let k1 = rng.gen_range(1..=n.min(3));
        let k2 = rng.gen_range(1..=n.min(3));
        let c1 = random_lcd(&mut rng, n, k1);
        let c2 = random_lcd(&mut rng, n, k2);
        let code = between(&c1, &c2)?;
        let lcd = code.is_lcd();
        lcd_ok += lcd as usize;

        let (g1, g2) = (c1.gram(), c2.gram());
        let expected = MatGF::block_compose(
            &g1.scale(2),
            &MatGF::zeros(p, k1, k2),
            &MatGF::zeros(p, k2, k1),
            &g2.scale(2),
        )?;
        let gram = code.gram();
        let block = gram == expected;
        gram_ok += block as usize;

        let rhs = p.mul(
            p.pow(2, (k1 + k2) as u32),
            p.mul(g1.det()?.value(), g2.det()?.value()),
        );
        let det = gram.det()?.value() == rhs;
        det_ok += det as usize;

        let mut set = true;
        if k1 + k2 <= 8 {
            set_checked += 1;
            set = between_set_matches(&c1, &c2, &code)?;
            set_ok += set as usize;
        }
        if !(lcd && block && det && set) {
            b.evidence(
                format!("operands [{n},{k1}] and [{n},{k2}]: lcd {lcd}, block {block}, det {det}, set {set}"),
                &code,
            );
        }
    }
    let t = cfg.between_trials;
    b.check(
        format!("{t} random LCD pairs"),
        lcd_ok == t,
        format!("{lcd_ok}/{t} results LCD"),
    );
    b.check(
        "block Gram identity",
        gram_ok == t,
        format!("{gram_ok}/{t} Gram matrices equal diag(2 G1G1^T, 2 G2G2^T)"),
    );
    b.check(
        "determinant identity",
        det_ok == t,
        format!("{det_ok}/{t} satisfy det = 2^(k1+k2) det(G1G1^T) det(G2G2^T) mod 3"),
    );
    b.check(
        "codeword sets",
        set_ok == set_checked,
        format!("{set_ok}/{set_checked} enumerated sets equal {{(c1+c2, c1-c2)}}"),
    );
    Ok(())
}

fn between_set_matches(c1: &LinearCode, c2: &LinearCode, code: &LinearCode) -> Result<bool> {
    let p = c1.prime();
    let mut enumerated = code.codewords()?;
    let mut defined = Vec::new();
    for x in c1.codewords()? {
        for y in c2.codewords()? {
            let mut w: Vec<u8> = x.iter().zip(&y).map(|(&a, &b)| p.add(a, b)).collect();
            w.extend(x.iter().zip(&y).map(|(&a, &b)| p.sub(a, b)));
            defined.push(w);
        }
    }
    enumerated.sort();
    defined.sort();
    defined.dedup();
    Ok(enumerated == defined)
}

fn check_monotone(b: &mut Builder, cells: &mut Cells, cfg: &VerifyConfig) -> Result<()> {
    let mut table = Vec::new();
    for (n, k) in table_cells(&cfg.ternary_rows) {
        match cells.get(n, k, Prime::THREE)? {
            Some(e) => table.push(e),
            None => b.point(
                cell_label(n, k, 3),
                Verdict::OutOfBudget,
                "exhaustive search over budget",
            ),
        }
    }
    let violations = check_monotonicity(&table);
    let mut rows: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for e in &table {
        rows.entry(e.k).or_default().push((e.n, e.d_lcd));
    }
    for (k, row) in &rows {
        let bad: Vec<_> = violations.iter().filter(|v| v.k == *k).collect();
        let values: Vec<String> = row.iter().map(|(n, d)| format!("{n}:{d}")).collect();
        b.check(
            format!("k={k}, n={}..{}", row[0].0, row[row.len() - 1].0),
            bad.is_empty(),
            format!("LCD[n,{k}]_3 by n: {}", values.join(" ")),
        );
        for v in bad {
            for e in table
                .iter()
                .filter(|e| e.k == v.k && (e.n == v.n || e.n == v.n + 1))
            {
                if let Some(code) = e.witness_code() {
                    b.evidence(format!("{v}"), &code);
                }
            }
        }
    }
    Ok(())
}

/// Exhaustive value, construction and ceilings for one `k = 1` or
/// `k = n - 1` point.
fn check_small_point(
    b: &mut Builder,
    cells: &mut Cells,
    n: usize,
    k: usize,
    predicted: usize,
    construction: Option<(&str, LinearCode)>,
) -> Result<()> {
    let label = cell_label(n, k, 3);
    let singleton = singleton_bound(n as u64, k as u64)? as usize;
    let exhaustive = cells.get(n, k, Prime::THREE)?;
    let mut detail = Vec::new();
    let mut ok = true;
    let mut certified = false;
    if let Some((name, code)) = &construction {
        let d = code.min_distance()?;
        let lcd = code.is_lcd();
        detail.push(format!("{name}: is_lcd = {lcd}, d = {d}"));
        if lcd && d == predicted && d == singleton {
            certified = true;
            detail.push(format!("meets the Singleton ceiling {singleton}"));
        }
        if !(lcd && d == predicted) {
            b.evidence(format!("{name} at n = {n}"), code);
            if exhaustive.is_none() {
                ok = false;
            }
        }
    }
    match &exhaustive {
        Some(e) => {
            detail.push(format!("exhaustive LCD max {}", e.d_lcd));
            if e.d_lcd != predicted {
                ok = false;
                if let Some(code) = e.witness_code() {
                    b.evidence(
                        format!("best LCD [{n}, {k}]_3 code, d = {}", e.d_lcd),
                        &code,
                    );
                }
            }
        }
        None if certified => detail.push("exhaustive search over budget".into()),
        None => {
            b.point(label, Verdict::OutOfBudget, detail.join("; "));
            return Ok(());
        }
    }
    b.check(
        label,
        ok,
        format!("predicted {predicted}; {}", detail.join("; ")),
    );
    Ok(())
}

fn check_k1_repetition(b: &mut Builder, cells: &mut Cells, cfg: &VerifyConfig) -> Result<()> {
    for n in 1..=cfg.small_n_max {
        if !b.claim.hypothesis.accepts(&Point::new(n as u64, 1, 3)) {
            continue;
        }
        let rep = repetition(n, Prime::THREE)?;
        check_small_point(b, cells, n, 1, n, Some(("repetition code", rep)))?;
    }
    Ok(())
}

fn check_kn1_repetition_dual(b: &mut Builder, cells: &mut Cells, cfg: &VerifyConfig) -> Result<()> {
    for n in 2..=cfg.small_n_max {
        if !b
            .claim
            .hypothesis
            .accepts(&Point::new(n as u64, n as u64 - 1, 3))
        {
            continue;
        }
        let dual = repetition(n, Prime::THREE)?.dual()?;
        check_small_point(
            b,
            cells,
            n,
            n - 1,
            2,
            Some(("dual of the repetition code", dual)),
        )?;
    }
    Ok(())
}

fn check_k1_zero_repetition(b: &mut Builder, cells: &mut Cells, cfg: &VerifyConfig) -> Result<()> {
    for n in 2..=cfg.small_n_max {
        if !b.claim.hypothesis.accepts(&Point::new(n as u64, 1, 3)) {
            continue;
        }
        let code = zero_prefixed_repetition(n, Prime::THREE)?;
        check_small_point(
            b,
            cells,
            n,
            1,
            n - 1,
            Some(("code spanned by (0,1,...,1)", code)),
        )?;
    }
    b.note("hypothesis encoded as 3 | n; the printed condition 3 ∤ (n-1) also admits lengths covered by the repetition-code claim");
    Ok(())
}

fn check_kn1_zero_repetition_dual(
    b: &mut Builder,
    cells: &mut Cells,
    cfg: &VerifyConfig,
) -> Result<()> {
    for n in 2..=cfg.small_n_max {
        if !b
            .claim
            .hypothesis
            .accepts(&Point::new(n as u64, n as u64 - 1, 3))
        {
            continue;
        }
        let dual = zero_prefixed_repetition(n, Prime::THREE)?.dual()?;
        let mut e1 = vec![0u8; n];
        e1[0] = 1;
        if dual.contains(&e1)? {
            b.note(format!(
                "n={n}: the dual of <(0,1,...,1)> contains the weight-1 word {:?}",
                e1
            ));
        }
        check_small_point(b, cells, n, n - 1, 2, Some(("dual of <(0,1,...,1)>", dual)))?;
    }
    b.note("an [n, n-1]_3 code has d = 2 only if its dual is spanned by a full-weight word, whose Gram entry is n ≡ 0 (mod 3) when 3 | n");
    Ok(())
}

fn check_ceilings(cells: &Cells) -> Vec<String> {
    let mut problems = Vec::new();
    for (&(n, k, p), e) in &cells.cache {
        let Some(e) = e else { continue };
        let q = p.get() as u32;
        let plotkin = plotkin_average_bound(n as u64, k as u32, q).unwrap_or(u64::MAX);
        let singleton = singleton_bound(n as u64, k as u64).unwrap_or(u64::MAX);
        if e.d_lcd as u64 > plotkin || e.d_lcd as u64 > singleton {
            problems.push(format!(
                "{}: d = {} exceeds Plotkin {plotkin} or Singleton {singleton}",
                cell_label(n, k, q),
                e.d_lcd
            ));
        }
    }
    problems
}

/// Evaluates every catalog claim. Out-of-budget points are marked, never
/// guessed.
pub fn verify_paper(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut cells = Cells::new(&cfg.search);
    let mut outcomes = Vec::new();
    for claim in paper_claims() {
        let id = claim.claim_id.clone();
        let mut b = Builder::new(claim);
        match id.as_str() {
            "massey-criterion" => check_massey(&mut b, cfg),
            "lcd-examples" => check_examples(&mut b)?,
            "dual-closure" => check_dual_closure(&mut b, cfg)?,
            "remark-bound" => check_stated_bound(&mut b, &mut cells, cfg)?,
            "lcd-n2-3" => check_mod9(&mut b, Mod9Case::Three, cfg)?,
            "lcd-n2-4" => check_mod9(&mut b, Mod9Case::Four, cfg)?,
            "lcd-n2-value" => check_value_claim(&mut b, &mut cells, cfg)?,
            "between-lcd" => check_between(&mut b, cfg)?,
            "monotonicity" => check_monotone(&mut b, &mut cells, cfg)?,
            "k1-repetition" => check_k1_repetition(&mut b, &mut cells, cfg)?,
            "kn1-repetition-dual" => check_kn1_repetition_dual(&mut b, &mut cells, cfg)?,
            "k1-zero-repetition" => check_k1_zero_repetition(&mut b, &mut cells, cfg)?,
            "kn1-zero-repetition-dual" => check_kn1_zero_repetition_dual(&mut b, &mut cells, cfg)?,
            other => b.note(format!("no evaluator for claim `{other}`")),
        }
        outcomes.push(b.finish());
    }
    let problems = check_ceilings(&cells);
    assert!(
        problems.is_empty(),
        "classical ceilings violated: {problems:?}"
    );

    let mut summary = Summary::default();
    for o in &outcomes {
        match o.verdict {
            Verdict::Confirmed => summary.confirmed += 1,
            Verdict::Refuted => summary.refuted += 1,
            Verdict::OutOfBudget => summary.out_of_budget += 1,
        }
    }
    Ok(VerifyReport {
        seed: cfg.seed,
        budget: cfg.search.budget,
        outcomes,
        summary,
    })
}

impl VerifyReport {
    pub fn outcome(&self, claim_id: &str) -> Option<&ClaimOutcome> {
        self.outcomes.iter().find(|o| o.claim.claim_id == claim_id)
    }

    pub fn has_refutations(&self) -> bool {
        self.summary.refuted > 0
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "claim verification (seed {}, budget {})",
            self.seed, self.budget
        );
        for o in &self.outcomes {
            let _ = writeln!(s, "\n[{}] {}", o.verdict, o.claim.claim_id);
            let _ = writeln!(s, "  {}", o.claim.statement);
            if let Some(printed) = &o.claim.printed_hypothesis {
                let _ = writeln!(s, "  (printed hypothesis: {printed})");
            }
            for p in &o.points {
                let _ = writeln!(s, "  - {:<14} {:<28} {}", p.verdict, p.point, p.detail);
            }
            for e in &o.evidence {
                let _ = writeln!(
                    s,
                    "  evidence: {} [{}, {}]_{} lcd={} hull={} d={}",
                    e.label,
                    e.n,
                    e.k,
                    e.q,
                    e.is_lcd,
                    e.hull_dim,
                    e.min_distance.map_or("?".to_string(), |d| d.to_string())
                );
                let _ = writeln!(s, "    G = {}", e.generator_rows.join(" / "));
                let _ = writeln!(s, "    GG^T = {}", e.gram_rows.join(" / "));
            }
            for n in &o.notes {
                let _ = writeln!(s, "  note: {n}");
            }
        }
        let _ = writeln!(
            s,
            "\nsummary: {} confirmed, {} refuted, {} out of budget",
            self.summary.confirmed, self.summary.refuted, self.summary.out_of_budget
        );
        s
    }

    /// One JSON object per claim, then a summary line.
    pub fn render_records(&self) -> String {
        let mut s = String::new();
        for o in &self.outcomes {
            let rec = serde_json::json!({
                "version": REPORT_VERSION,
                "record": "claim",
                "claim_id": o.claim.claim_id,
                "verdict": o.verdict,
                "points": o.points,
                "evidence": o.evidence,
                "notes": o.notes,
            });
            s.push_str(&rec.to_string());
            s.push('\n');
        }
        let rec = serde_json::json!({
            "version": REPORT_VERSION,
            "record": "summary",
            "seed": self.seed,
            "budget": self.budget.to_string(),
            "confirmed": self.summary.confirmed,
            "refuted": self.summary.refuted,
            "out_of_budget": self.summary.out_of_budget,
        });
        s.push_str(&rec.to_string());
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyConfig {
        VerifyConfig {
            massey_trials: 200,
            between_trials: 40,
            max_m: 3,
            ternary_rows: vec![(1, 7), (2, 7)],
            binary_rows: vec![(1, 6), (2, 6)],
            value_lengths: vec![3, 4, 12],
            small_n_max: 7,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn every_claim_appears_once() {
        let report = verify_paper(&quick()).unwrap();
        let claims = paper_claims();
        assert_eq!(report.outcomes.len(), claims.len());
        for c in &claims {
            assert_eq!(
                report
                    .outcomes
                    .iter()
                    .filter(|o| o.claim.claim_id == c.claim_id)
                    .count(),
                1
            );
        }
        let s = report.summary;
        assert_eq!(s.confirmed + s.refuted + s.out_of_budget, claims.len());
    }

    #[test]
    fn refutations_carry_evidence() {
        let report = verify_paper(&quick()).unwrap();
        for o in report
            .outcomes
            .iter()
            .filter(|o| o.verdict == Verdict::Refuted)
        {
            assert!(!o.evidence.is_empty(), "{}", o.claim.claim_id);
        }
    }

    #[test]
    fn expected_verdicts() {
        let report = verify_paper(&quick()).unwrap();
        let v = |id: &str| report.outcome(id).unwrap().verdict;
        assert_eq!(v("massey-criterion"), Verdict::Confirmed);
        assert_eq!(v("lcd-examples"), Verdict::Confirmed);
        assert_eq!(v("dual-closure"), Verdict::Confirmed);
        assert_eq!(v("remark-bound"), Verdict::Refuted);
        assert_eq!(v("lcd-n2-3"), Verdict::Refuted);
        assert_eq!(v("lcd-n2-4"), Verdict::Refuted);
        assert_eq!(v("between-lcd"), Verdict::Confirmed);
        assert_eq!(v("monotonicity"), Verdict::Confirmed);
        assert_eq!(v("k1-repetition"), Verdict::Confirmed);
        assert_eq!(v("kn1-repetition-dual"), Verdict::Confirmed);
        assert_eq!(v("k1-zero-repetition"), Verdict::Confirmed);
        assert_eq!(v("kn1-zero-repetition-dual"), Verdict::Refuted);
    }

    #[test]
    fn out_of_budget_points_are_marked() {
        let cfg = VerifyConfig {
            value_lengths: vec![12, 30],
            ..quick()
        };
        let report = verify_paper(&cfg).unwrap();
        let o = report.outcome("lcd-n2-value").unwrap();
        let p30 = o.points.iter().find(|p| p.point == "n=30,k=2,q=3").unwrap();
        assert_eq!(p30.verdict, Verdict::OutOfBudget);
    }

    #[test]
    fn renderings_mention_every_claim() {
        let report = verify_paper(&quick()).unwrap();
        let text = report.render_text();
        let records = report.render_records();
        for o in &report.outcomes {
            assert!(text.contains(&o.claim.claim_id));
            assert!(records.contains(&format!("\"claim_id\":\"{}\"", o.claim.claim_id)));
        }
        assert_eq!(records.lines().count(), report.outcomes.len() + 1);
        for line in records.lines() {
            serde_json::from_str::<serde_json::Value>(line).unwrap();
        }
    }
}
