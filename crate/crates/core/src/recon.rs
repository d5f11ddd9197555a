//! Reconstruction statistics: the zero-syndrome hypothesis test with its
//! separation bound, the mean zero-coefficient (factor-entropy) statistic and
//! the root-divisibility statistic, plus the search over `(n, s, f)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::json;

use crate::channel::{segment_words, Block};
use crate::code::{make_code, parity_check_rows, residue_columns, residue_of, CyclicCode, MAX_ENUM_DIM};
use crate::dist::{build_subspace, noisy_distribution, BlockType, SubspaceSpec};
use crate::error::{guard, Error, Result};
use crate::gf2::{factor_xn1, is_irreducible, Poly2};
use crate::linalg::{self, span_of};

/// Blocks below which a candidate's statistics are flagged as thin.
pub const MIN_BLOCKS: usize = 50;

fn nonempty<T>(blocks: &[T]) -> Result<()> {
    if blocks.is_empty() {
        Err(Error::EmptyInput("no blocks"))
    } else {
        Ok(())
    }
}

/// Fraction of blocks whose syndrome modulo `f` is zero.
pub fn zero_syndrome_stat(blocks: &[Block], f: &Poly2) -> Result<f64> {
    nonempty(blocks)?;
    let mut zero = 0usize;
    for b in blocks {
        if b.poly().rem(f)?.is_zero() {
            zero += 1;
        }
    }
    Ok(zero as f64 / blocks.len() as f64)
}

/// `λ = (1 − (1−2p)^(n−deg f+1)) / (1 + (1−2p)^(n−deg f+1))`.
pub fn lambda_coeff(n: usize, deg_f: usize, p: f64) -> f64 {
    let t = (1.0 - 2.0 * p).powi((n + 1 - deg_f) as i32);
    (1.0 - t) / (1.0 + t)
}

/// Upper bound on the zero-syndrome probability under wrong parameters:
/// `P(C(n,f)) (λ + 1)/2`.
pub fn h1_upper_bound(code: &CyclicCode, p: f64) -> Result<f64> {
    let lambda = lambda_coeff(code.n(), code.n() - code.k(), p);
    Ok(code.p_zero_syndrome(p)? * (lambda + 1.0) / 2.0)
}

/// Lower bound on the KL divergence between the two Bernoulli hypotheses:
/// `(2 / ln 2) ((1 − λ)/2)^2 p0^2`.
pub fn kl_lower_bound(p0: f64, lambda: f64) -> f64 {
    let gap = (1.0 - lambda) / 2.0 * p0;
    2.0 / std::f64::consts::LN_2 * gap * gap
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    /// The candidate is consistent with the zero-syndrome rate of a true code.
    H0,
    H1,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::H0 => "H0",
            Self::H1 => "H1",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TestOutcome {
    pub n: usize,
    /// Candidate offset; filled in by the search.
    pub s: usize,
    pub f: Poly2,
    pub m: usize,
    pub stat: f64,
    pub p0: f64,
    pub bound: f64,
    pub tau: f64,
    pub decision: Decision,
    pub kl_lb: f64,
}

/// Accepts H0 iff `stat ≥ τ`, with `τ` the midpoint of `P(C(n,f))` and the
/// wrong-parameter bound.
pub fn hypothesis_test(stat: f64, m: usize, code: &CyclicCode, p: f64) -> Result<TestOutcome> {
    if m == 0 {
        return Err(Error::EmptyInput("hypothesis test on zero blocks"));
    }
    let p0 = code.p_zero_syndrome(p)?;
    Ok(outcome(stat, m, code, p, p0))
}

fn outcome(stat: f64, m: usize, code: &CyclicCode, p: f64, p0: f64) -> TestOutcome {
    let lambda = lambda_coeff(code.n(), code.n() - code.k(), p);
    let bound = p0 * (lambda + 1.0) / 2.0;
    let tau = (p0 + bound) / 2.0;
    TestOutcome {
        n: code.n(),
        s: 0,
        f: code.generator().clone(),
        m,
        stat,
        p0,
        bound,
        tau,
        decision: if stat >= tau { Decision::H0 } else { Decision::H1 },
        kl_lb: kl_lower_bound(p0, lambda),
    }
}

fn block_basis(code: &CyclicCode, block: BlockType, n: usize) -> Result<Vec<u64>> {
    build_subspace(&SubspaceSpec::from_block(code.clone(), block, n)?)
}

/// Mean over `l` of `P[y · h_l = 0]`, where the `h_l = X^l f⊥(X)` are the
/// parity-check rows of `C(n, f)`, `y = w + e`, `w` uniform on the block's
/// subspace and `e` a BSC(p) pattern.
///
/// `P[w · h = 0]` is counted over the subspace; `P[e · h = 1]` is
/// `(1 − (1−2p)^wt(h))/2`.
pub fn mean_zero_coeff_prob_exact(
    code: &CyclicCode,
    block: BlockType,
    n: usize,
    f: &Poly2,
    p: f64,
) -> Result<f64> {
    let basis = block_basis(code, block, n)?;
    guard("subspace dimension", basis.len(), MAX_ENUM_DIM)?;
    let rows = parity_check_rows(n, f)?;
    let elems = span_of(&basis);
    let total = elems.len() as f64;
    let sum: f64 = rows
        .iter()
        .map(|&h| {
            let zero = elems.iter().filter(|&&w| !linalg::dot(w, h)).count() as f64 / total;
            let flip = (1.0 - (1.0 - 2.0 * p).powi(h.count_ones() as i32)) / 2.0;
            zero * (1.0 - flip) + (1.0 - zero) * flip
        })
        .sum();
    Ok(sum / rows.len() as f64)
}

/// `P[f | y(X)]` for an irreducible `f`: the zero mass of the noisy syndrome
/// distribution.
pub fn root_divisibility_prob_exact(
    code: &CyclicCode,
    block: BlockType,
    n: usize,
    f_irred: &Poly2,
    p: f64,
) -> Result<f64> {
    if !is_irreducible(f_irred)? {
        return Err(Error::Precondition(format!("{f_irred} is not irreducible")));
    }
    let spec = SubspaceSpec::from_block(code.clone(), block, n)?;
    Ok(noisy_distribution(&spec, f_irred, p)?.zero_mass())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmpiricalStats {
    pub zero_syndrome_frac: f64,
    /// Average over blocks and `l` of `[y · h_l = 0]`.
    pub mean_zero_coeff_frac: f64,
    /// Fraction of blocks divisible by `f`; for irreducible `f`, the fraction
    /// in which the roots of `f` are roots of `y(X)`.
    pub divisibility_frac: f64,
}

pub fn empirical_stats(blocks: &[Block], f: &Poly2) -> Result<EmpiricalStats> {
    nonempty(blocks)?;
    let n = blocks[0].bits.len();
    let words: Vec<u64> = blocks
        .iter()
        .map(|b| b.word().ok_or(Error::ResourceGuard { what: "block length", value: n, cap: 64 }))
        .collect::<Result<_>>()?;
    word_stats(&words, n, f)
}

fn word_stats(words: &[u64], n: usize, f: &Poly2) -> Result<EmpiricalStats> {
    nonempty(words)?;
    let rows = parity_check_rows(n, f)?;
    let cols = residue_columns(n, f);
    let mut zero = 0usize;
    let mut zero_coeffs = 0usize;
    for &y in words {
        if residue_of(y, &cols) == 0 {
            zero += 1;
        }
        zero_coeffs += rows.iter().filter(|&&h| !linalg::dot(y, h)).count();
    }
    let m = words.len() as f64;
    Ok(EmpiricalStats {
        zero_syndrome_frac: zero as f64 / m,
        mean_zero_coeff_frac: zero_coeffs as f64 / (m * rows.len() as f64),
        divisibility_frac: zero as f64 / m,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ZeroSyndrome,
    FactorEntropy,
    RootEntropy,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ZeroSyndrome => "zero-syndrome",
            Self::FactorEntropy => "factor-entropy",
            Self::RootEntropy => "root-entropy",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zero-syndrome" => Ok(Self::ZeroSyndrome),
            "factor-entropy" => Ok(Self::FactorEntropy),
            "root-entropy" => Ok(Self::RootEntropy),
            other => Err(Error::Parse(format!("unknown method {other:?}"))),
        }
    }
}

/// Per-candidate statistic of the comparison methods.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateStat {
    pub n: usize,
    pub s: usize,
    pub f: Poly2,
    pub m: usize,
    /// Mean zero-coefficient fraction (factor-entropy) or divisibility
    /// fraction (root-entropy).
    pub stat: f64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Estimate {
    pub n: usize,
    pub s: usize,
    pub g: Poly2,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReconReport {
    pub method: Method,
    /// Zero-syndrome method records.
    pub tests: Vec<TestOutcome>,
    /// Comparison-method records.
    pub stats: Vec<CandidateStat>,
    pub winner: Option<Estimate>,
    pub diagnostics: Vec<String>,
}

impl ReconReport {
    /// One record per candidate, then the winner line.
    pub fn to_text(&self) -> String {
        let mut out = format!("method={}\n", self.method);
        for t in &self.tests {
            out.push_str(&format!(
                "n={} s={} f={} M={} stat={:.6} p0={:.6} bound={:.6} tau={:.6} decision={} kl_lb={:.6}\n",
                t.n, t.s, t.f, t.m, t.stat, t.p0, t.bound, t.tau, t.decision, t.kl_lb
            ));
        }
        for c in &self.stats {
            out.push_str(&format!("n={} s={} f={} M={} stat={:.6}\n", c.n, c.s, c.f, c.m, c.stat));
        }
        for d in &self.diagnostics {
            out.push_str(&format!("note: {d}\n"));
        }
        match &self.winner {
            Some(w) => out.push_str(&format!("winner n={} s={} g={}\n", w.n, w.s, w.g)),
            None => out.push_str("no code detected\n"),
        }
        out
    }

    /// The same fields as line-delimited JSON records.
    pub fn to_jsonl(&self) -> String {
        let mut lines = Vec::new();
        for t in &self.tests {
            lines.push(json!({
                "n": t.n, "s": t.s, "f": t.f.to_string(), "M": t.m, "stat": t.stat,
                "p0": t.p0, "bound": t.bound, "tau": t.tau,
                "decision": t.decision.to_string(), "kl_lb": t.kl_lb,
            }));
        }
        for c in &self.stats {
            lines.push(json!({
                "n": c.n, "s": c.s, "f": c.f.to_string(), "M": c.m, "stat": c.stat,
            }));
        }
        let winner = self.winner.as_ref().map(|w| json!({"n": w.n, "s": w.s, "g": w.g.to_string()}));
        lines.push(json!({
            "method": self.method.to_string(),
            "winner": winner,
            "diagnostics": self.diagnostics,
        }));
        lines.iter().map(|l| format!("{l}\n")).collect()
    }
}

/// Irreducible factors of `X^n + 1` of degree below `n`.
fn candidate_factors(n: usize) -> Result<Vec<Poly2>> {
    Ok(factor_xn1(n)?.irreducibles().filter(|f| f.deg() < n).cloned().collect())
}

fn product(fs: impl IntoIterator<Item = Poly2>) -> Poly2 {
    fs.into_iter().fold(Poly2::one(), |acc, f| acc.mul(&f))
}

/// Searches `n ∈ [n_min, n_max]`, `s ∈ [0, n)` and the irreducible factors
/// of `X^n + 1`.
///
/// The zero-syndrome method scores each `(n, s)` by `Σ M · kl_lb` over the
/// factors accepted under H0, picks the highest score (ties to smaller `n`,
/// then smaller `s`), and estimates `g` as the product of the accepted
/// factors. The comparison methods report their statistics and pick the
/// largest deviation from `1/2` (factor-entropy) or the largest spread of
/// divisibility fractions (root-entropy).
pub fn reconstruct(bits: &[bool], n_min: usize, n_max: usize, p: f64, method: Method) -> Result<ReconReport> {
    if n_min < 2 || n_max < n_min {
        return Err(Error::Precondition(format!(
            "length range [{n_min}, {n_max}] needs 2 <= n_min <= n_max"
        )));
    }
    guard("block length", n_max, 64)?;
    if !(0.0..0.5).contains(&p) {
        return Err(Error::Precondition(format!("crossover probability {p} outside [0, 1/2)")));
    }
    let mut diagnostics = Vec::new();
    let m_at_max = bits.len() / n_max;
    if m_at_max < MIN_BLOCKS {
        diagnostics.push(format!("only {m_at_max} blocks at n={n_max}; statistics are thin"));
    }
    let mut cells = Vec::new();
    for n in n_min..=n_max {
        let factors = candidate_factors(n)?;
        for s in 0..n {
            cells.push((n, s, factors.clone()));
        }
    }
    let p0: BTreeMap<(usize, Poly2), f64> = cells
        .iter()
        .filter(|c| c.1 == 0)
        .flat_map(|(n, _, fs)| fs.iter().map(move |f| (*n, f.clone())))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(n, f)| {
            let v = if method == Method::ZeroSyndrome {
                make_code(n, f.clone())?.p_zero_syndrome(p)?
            } else {
                0.0
            };
            Ok(((n, f), v))
        })
        .collect::<Result<_>>()?;
    let per_cell: Vec<Vec<(Poly2, usize, EmpiricalStats)>> = cells
        .par_iter()
        .map(|(n, s, fs)| {
            let words = segment_words(bits, *n, *s)?;
            if words.is_empty() {
                return Ok(Vec::new());
            }
            fs.iter().map(|f| Ok((f.clone(), words.len(), word_stats(&words, *n, f)?))).collect()
        })
        .collect::<Result<_>>()?;
    let mut report = ReconReport { method, tests: Vec::new(), stats: Vec::new(), winner: None, diagnostics };
    // (score, n, s, accepted factors)
    let mut best: Option<(f64, usize, usize, Vec<Poly2>)> = None;
    let mut accepting_lengths = Vec::new();
    for ((n, s, _), rows) in cells.iter().zip(per_cell) {
        if rows.is_empty() {
            continue;
        }
        let (score, accepted) = match method {
            Method::ZeroSyndrome => {
                let mut score = 0.0;
                let mut accepted = Vec::new();
                for (f, m, st) in rows {
                    let code = make_code(*n, f.clone())?;
                    let mut t = outcome(st.zero_syndrome_frac, m, &code, p, p0[&(*n, f.clone())]);
                    t.s = *s;
                    if t.decision == Decision::H0 {
                        score += m as f64 * t.kl_lb;
                        accepted.push(f.clone());
                    }
                    report.tests.push(t);
                }
                if !accepted.is_empty() && !accepting_lengths.contains(n) {
                    accepting_lengths.push(*n);
                }
                (score, accepted)
            }
            Method::FactorEntropy => {
                let devs: Vec<f64> = rows.iter().map(|r| (r.2.mean_zero_coeff_frac - 0.5).abs()).collect();
                let top = devs.iter().cloned().fold(0.0, f64::max);
                let accepted = rows
                    .iter()
                    .zip(&devs)
                    .filter(|(_, &d)| top > 0.0 && d >= top / 2.0)
                    .map(|(r, _)| r.0.clone())
                    .collect();
                for (f, m, st) in &rows {
                    report.stats.push(CandidateStat {
                        n: *n,
                        s: *s,
                        f: f.clone(),
                        m: *m,
                        stat: st.mean_zero_coeff_frac,
                    });
                }
                (top, accepted)
            }
            Method::RootEntropy => {
                let fr: Vec<f64> = rows.iter().map(|r| r.2.divisibility_frac).collect();
                let hi = fr.iter().cloned().fold(0.0, f64::max);
                let lo = fr.iter().cloned().fold(1.0, f64::min);
                let accepted = rows
                    .iter()
                    .zip(&fr)
                    .filter(|(_, &x)| hi > lo && x >= (hi + lo) / 2.0)
                    .map(|(r, _)| r.0.clone())
                    .collect();
                for (f, m, st) in &rows {
                    report.stats.push(CandidateStat {
                        n: *n,
                        s: *s,
                        f: f.clone(),
                        m: *m,
                        stat: st.divisibility_frac,
                    });
                }
                (hi - lo, accepted)
            }
        };
        if score > 0.0 && best.as_ref().is_none_or(|b| score > b.0) {
            best = Some((score, *n, *s, accepted));
        }
    }
    if accepting_lengths.len() > 1 {
        report.diagnostics.push(format!("H0 accepted at several lengths: {accepting_lengths:?}"));
    }
    report.winner = best.map(|(_, n, s, acc)| Estimate { n, s, g: product(acc) });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::{generate_stream, segment, StreamConfig};
    use crate::dist::block_decomposition;

    fn p(s: &str) -> Poly2 {
        s.parse().unwrap()
    }

    fn hamming() -> CyclicCode {
        make_code(7, p("x^3+x+1")).unwrap()
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_coeff(7, 3, 0.0), 0.0);
        assert_eq!(lambda_coeff(7, 3, 0.5), 1.0);
        let t = 0.9f64.powi(5);
        assert!((lambda_coeff(7, 3, 0.05) - (1.0 - t) / (1.0 + t)).abs() < 1e-15);
        assert!((lambda_coeff(7, 3, 0.05) - 0.25747).abs() < 1e-5);
    }

    #[test]
    fn bound_examples() {
        let c = hamming();
        assert_eq!(h1_upper_bound(&c, 0.0).unwrap(), 0.5);
        assert!((h1_upper_bound(&c, 0.5).unwrap() - 0.125).abs() < 1e-15);
        let want = c.p_zero_syndrome(0.05).unwrap() * (lambda_coeff(7, 3, 0.05) + 1.0) / 2.0;
        assert!((h1_upper_bound(&c, 0.05).unwrap() - want).abs() < 1e-15);
        assert!((h1_upper_bound(&c, 0.05).unwrap() - 0.4395).abs() < 1e-3);
    }

    #[test]
    fn kl_examples() {
        assert_eq!(kl_lower_bound(0.7, 1.0), 0.0);
        assert_eq!(kl_lower_bound(0.0, 0.3), 0.0);
        assert!((kl_lower_bound(1.0, 0.0) - 1.0 / (2.0 * std::f64::consts::LN_2)).abs() < 1e-15);
    }

    #[test]
    fn hypothesis_examples() {
        let c = hamming();
        let p0 = c.p_zero_syndrome(0.05).unwrap();
        let bound = h1_upper_bound(&c, 0.05).unwrap();
        assert_eq!(hypothesis_test(p0, 100, &c, 0.05).unwrap().decision, Decision::H0);
        assert_eq!(hypothesis_test(bound, 100, &c, 0.05).unwrap().decision, Decision::H1);
        let t = hypothesis_test(0.125, 100, &c, 0.05).unwrap();
        assert_eq!(t.decision, Decision::H1);
        assert!((t.tau - 0.569).abs() < 1e-3);
        assert!(t.bound < t.tau && t.tau < t.p0);
        assert!(hypothesis_test(0.5, 0, &c, 0.05).is_err());
    }

    #[test]
    fn zero_syndrome_examples() {
        let cfg = StreamConfig::new(hamming(), 2, 0.0, 40, 1).unwrap();
        let bits = generate_stream(&cfg);
        let blocks = segment(&bits, 7, 2).unwrap();
        assert_eq!(zero_syndrome_stat(&blocks, &p("x^3+x+1")).unwrap(), 1.0);
        let ones: Vec<Block> =
            (0..4).map(|j| Block { index: j + 1, bits: vec![true, false, false] }).collect();
        assert_eq!(zero_syndrome_stat(&ones, &p("x+1")).unwrap(), 0.0);
        let mut mixed = ones.clone();
        mixed[2].bits = vec![true, true, false];
        assert_eq!(zero_syndrome_stat(&mixed, &p("x+1")).unwrap(), 0.25);
        assert!(zero_syndrome_stat(&[], &p("x+1")).is_err());
    }

    #[test]
    fn table_one_values() {
        let c = hamming();
        let block = block_decomposition(7, 7, 1, 0, 1);
        let at = |f: &str, q: f64| mean_zero_coeff_prob_exact(&c, block, 7, &p(f), q).unwrap();
        assert!((at("x+1", 0.0) - 0.5).abs() < 5e-4);
        assert!((at("x^3+x+1", 0.0) - 5.0 / 6.0).abs() < 1e-12);
        assert!((at("x^3+x^2+1", 0.0) - 0.5).abs() < 5e-4);
        assert!((at("x^3+x+1", 0.01) - 0.8076).abs() < 5e-4);
        assert!((at("x^3+x+1", 0.05) - 0.7184).abs() < 5e-4);
    }

    #[test]
    fn empirical_matches_exact_at_table_one() {
        let c = hamming();
        let block = block_decomposition(7, 7, 1, 0, 1);
        let cfg = StreamConfig::new(c.clone(), 0, 0.05, 100_001, 42).unwrap();
        let bits = generate_stream(&cfg);
        let blocks = segment(&bits, 7, 1).unwrap();
        for f in ["x+1", "x^3+x+1", "x^3+x^2+1"] {
            let e = empirical_stats(&blocks, &p(f)).unwrap();
            let x = mean_zero_coeff_prob_exact(&c, block, 7, &p(f), 0.05).unwrap();
            assert!((e.mean_zero_coeff_frac - x).abs() < 0.01, "{f}: {} vs {x}", e.mean_zero_coeff_frac);
            let r = root_divisibility_prob_exact(&c, block, 7, &p(f), 0.05).unwrap();
            assert!((e.divisibility_frac - r).abs() < 0.01);
        }
    }

    #[test]
    fn empirical_examples() {
        let cfg = StreamConfig::new(hamming(), 0, 0.0, 30, 4).unwrap();
        let bits = generate_stream(&cfg);
        let blocks = segment(&bits, 7, 0).unwrap();
        let e = empirical_stats(&blocks, &p("x^3+x+1")).unwrap();
        assert_eq!((e.zero_syndrome_frac, e.mean_zero_coeff_frac, e.divisibility_frac), (1.0, 1.0, 1.0));
        let one = [Block { index: 1, bits: vec![true, false, false, false, false, false, false] }];
        let e = empirical_stats(&one, &p("x^3+x+1")).unwrap();
        assert_eq!(e.zero_syndrome_frac, 0.0);
        assert!(e.mean_zero_coeff_frac > 0.0 && e.mean_zero_coeff_frac < 1.0);
    }

    #[test]
    fn root_divisibility_examples() {
        let g0 = p("x^4+x^3+1").mul(&p("x^4+x^3+x^2+x+1")).mul(&p("x+1"));
        let c = make_code(15, g0).unwrap();
        let b = BlockType::Interior { offset: 0 };
        assert_eq!(root_divisibility_prob_exact(&c, b, 7, &p("x+1"), 0.0).unwrap(), 0.5);
        assert_eq!(root_divisibility_prob_exact(&c, b, 7, &p("x^3+x+1"), 0.0).unwrap(), 0.125);
        let h = hamming();
        let aligned = block_decomposition(7, 7, 0, 0, 1);
        assert_eq!(root_divisibility_prob_exact(&h, aligned, 7, &p("x^3+x+1"), 0.0).unwrap(), 1.0);
        assert!(root_divisibility_prob_exact(&h, aligned, 14, &p("x^2+1"), 0.0).is_err());
    }

    #[test]
    fn noise_free_reconstruction() {
        let cfg = StreamConfig::new(hamming(), 2, 0.0, 200, 7).unwrap();
        let bits = generate_stream(&cfg);
        let r = reconstruct(&bits, 3, 10, 0.0, Method::ZeroSyndrome).unwrap();
        assert_eq!(r.winner, Some(Estimate { n: 7, s: 2, g: p("x^3+x+1") }));
        assert!(r.to_text().ends_with("winner n=7 s=2 g=1101\n"));
        let lines = r.to_jsonl();
        assert!(lines.lines().last().unwrap().contains("\"g\":\"1101\""));
    }

    #[test]
    fn comparison_methods_report_statistics() {
        let cfg = StreamConfig::new(hamming(), 0, 0.01, 500, 8).unwrap();
        let bits = generate_stream(&cfg);
        for m in [Method::FactorEntropy, Method::RootEntropy] {
            let r = reconstruct(&bits, 3, 8, 0.01, m).unwrap();
            assert!(!r.stats.is_empty());
            assert!(r.tests.is_empty());
            assert!(r.winner.is_some());
        }
        assert_eq!("root-entropy".parse::<Method>().unwrap(), Method::RootEntropy);
        assert!("bogus".parse::<Method>().is_err());
    }
}
