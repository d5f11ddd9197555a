//! Exhaustive invariant sweeps: the algebraic lemmas, the structure theorems
//! on the noise-free and noisy syndrome distributions, the detection bounds,
//! and small reconstruction runs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::channel::{generate_stream, StreamConfig};
use crate::code::{make_code, parity_check_rows, spans_equal, syndrome_basis, CyclicCode};
use crate::dist::{
    block_decomposition, build_subspace, convolve, enumerate_distribution, error_residue_distribution,
    exact_distribution, noisy_distribution, reachable_blocks, subspace_distribution, DistributionClass,
    Predictor, SubspaceSpec, MASS_TOL, MAX_TABLE_DEG,
};
use crate::error::{Error, Result};
use crate::gf2::{
    divisors_of_divisor, divisors_xn1, factor_xn1, is_degenerate_pattern, is_irreducible, least_period,
    lrs_minimal_polynomial, order, word, Poly2,
};
use crate::linalg::{self, mask};
use crate::recon::{
    lambda_coeff, mean_zero_coeff_prob_exact, reconstruct, root_divisibility_prob_exact, Method,
};

use DistributionClass::{Degenerate, Irregular, RestrictedUniform, Uniform};

/// Largest subspace dimension compared against brute-force enumeration in
/// the sweeps.
const ENUM_CHECK_DIM: usize = 12;
/// Largest residue degree for the direct-convolution cross-check.
const CONV_CHECK_DEG: usize = 8;
const CONV_CHECK_DIM: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Algebra,
    Distributions,
    Noisy,
    Bounds,
    Recon,
    All,
}

impl Suite {
    const EACH: [Suite; 5] =
        [Suite::Algebra, Suite::Distributions, Suite::Noisy, Suite::Bounds, Suite::Recon];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Algebra => "algebra",
            Self::Distributions => "distributions",
            Self::Noisy => "noisy",
            Self::Bounds => "bounds",
            Self::Recon => "recon",
            Self::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "algebra" => Ok(Self::Algebra),
            "distributions" => Ok(Self::Distributions),
            "noisy" => Ok(Self::Noisy),
            "bounds" => Ok(Self::Bounds),
            "recon" => Ok(Self::Recon),
            "all" => Ok(Self::All),
            other => Err(Error::Parse(format!(
                "unknown suite {other:?} (expected algebra, distributions, noisy, bounds, recon or all)"
            ))),
        }
    }
}

/// Size caps for the sweeps.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    /// True code lengths swept.
    pub n0s: Vec<usize>,
    /// Block lengths run over `[2, min(2 n0 + 2, max_n)]`.
    pub max_n: Option<usize>,
    /// Crossover probabilities of the noisy sweep.
    pub ps: Vec<f64>,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { n0s: vec![7, 15], max_n: None, ps: vec![0.01, 0.05, 0.1], seed: 1 }
    }
}

/// Counts for one invariant.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Check {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    /// Instances outside the guards.
    pub skipped: u64,
    /// Failures are reported but do not fail the suite.
    pub informational: bool,
    pub first_failure: Option<String>,
    /// Named counters, e.g. which prediction rule fired.
    pub tally: BTreeMap<String, u64>,
}

impl Check {
    pub fn new(name: &str) -> Self {
        Self { name: name.to_string(), ..Self::default() }
    }

    fn info(name: &str) -> Self {
        Self { informational: true, ..Self::new(name) }
    }

    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    fn count(&mut self, key: impl ToString) {
        *self.tally.entry(key.to_string()).or_insert(0) += 1;
    }

    fn merge(&mut self, other: Check) {
        self.checked += other.checked;
        self.failures += other.failures;
        self.skipped += other.skipped;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
        for (k, v) in other.tally {
            *self.tally.entry(k).or_insert(0) += v;
        }
    }

    pub fn passed(&self) -> bool {
        self.informational || self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let verdict = match (c.failures, c.informational) {
                (0, _) => "PASS",
                (_, true) => "INFO",
                _ => "FAIL",
            };
            out.push_str(&format!(
                "{verdict} {}: {}: checked={} failures={} skipped={}\n",
                self.suite, c.name, c.checked, c.failures, c.skipped
            ));
            if let Some(first) = &c.first_failure {
                out.push_str(&format!("    first: {first}\n"));
            }
            if !c.tally.is_empty() {
                let t: Vec<String> = c.tally.iter().map(|(k, v)| format!("{k}={v}")).collect();
                out.push_str(&format!("    {}\n", t.join(" ")));
            }
        }
        out
    }

    pub fn to_jsonl(&self) -> String {
        self.checks
            .iter()
            .map(|c| {
                let line = json!({
                    "suite": self.suite.to_string(), "check": c.name, "checked": c.checked,
                    "failures": c.failures, "skipped": c.skipped, "informational": c.informational,
                    "first_failure": c.first_failure, "tally": c.tally,
                });
                format!("{line}\n")
            })
            .collect()
    }
}

/// Runs one suite, or every suite for [`Suite::All`].
pub fn run_verify(suite: Suite, cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    let wanted: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut out = Vec::new();
    // the noisy and bounds suites share one pass over the noisy sweep
    let mut shared: Option<(Vec<Check>, Vec<Check>)> = None;
    for s in wanted {
        let checks = match s {
            Suite::Algebra => algebra(cfg)?,
            Suite::Distributions => distributions(cfg)?,
            Suite::Noisy | Suite::Bounds => {
                if shared.is_none() {
                    shared = Some(noisy_sweep(cfg)?);
                }
                let (noisy, bounds) = shared.clone().expect("computed above");
                if s == Suite::Noisy {
                    noisy
                } else {
                    let mut b = bounds;
                    b.extend(bound_checks(cfg)?);
                    b
                }
            }
            Suite::Recon => recon(cfg)?,
            Suite::All => unreachable!(),
        };
        out.push(SuiteReport { suite: s, checks });
    }
    Ok(out)
}

fn random_poly(rng: &mut ChaCha8Rng) -> Poly2 {
    let limbs = rng.random_range(1..=3);
    Poly2::from_limbs((0..limbs).map(|_| rng.random::<u64>() >> rng.random_range(0..64)).collect())
}

/// Proper nontrivial divisors of `X^n + 1`.
fn proper_divisors(n: usize) -> Result<Vec<Poly2>> {
    Ok(divisors_xn1(n)?.into_iter().filter(|f| f.deg() >= 1 && f.deg() < n).collect())
}

/// Every nontrivial, non-degenerate code of length `n0`.
fn true_codes(n0: usize) -> Result<Vec<Predictor>> {
    let mut out = Vec::new();
    for g in divisors_xn1(n0)? {
        let code = make_code(n0, g)?;
        if !code.is_trivial() && !code.is_degenerate()? {
            out.push(Predictor::new(code)?);
        }
    }
    Ok(out)
}

fn bits_of(v: u64, n: usize) -> Vec<bool> {
    (0..n).map(|i| (v >> i) & 1 == 1).collect()
}

/// Trial division by every polynomial of degree `1..=deg/2`.
fn irreducible_by_trial(f: &Poly2) -> bool {
    let d = f.deg();
    let fw = f.to_word().expect("degree below 64");
    d >= 1 && (2u64..1 << (d / 2 + 1)).all(|m| word::rem(fw, m) != 0)
}

pub fn algebra(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut ring = Check::new("ring axioms");
    let mut division = Check::new("division: a = q m + r, deg r < deg m");
    let mut recip = Check::new("reciprocal is multiplicative");
    for _ in 0..500 {
        let (a, b, c) = (random_poly(&mut rng), random_poly(&mut rng), random_poly(&mut rng));
        let ok = a.mul(&b.add(&c)) == a.mul(&b).add(&a.mul(&c))
            && a.mul(&b).mul(&c) == a.mul(&b.mul(&c))
            && a.mul(&b) == b.mul(&a)
            && a.add(&a).is_zero()
            && a.mul(&Poly2::one()) == a;
        ring.record(ok, || format!("a={a} b={b} c={c}"));
        if !b.is_zero() {
            let (q, r) = a.div_rem(&b)?;
            let ok = q.mul(&b).add(&r) == a && r.degree().is_none_or(|dr| dr < b.deg());
            division.record(ok, || format!("a={a} m={b}"));
        }
        if !a.is_zero() && !b.is_zero() {
            recip.record(a.mul(&b).reciprocal()? == a.reciprocal()?.mul(&b.reciprocal()?), || {
                format!("a={a} b={b}")
            });
        }
    }

    let mut fact = Check::new("factorization of X^n+1, n <= 40");
    let mut divs = Check::new("divisor enumeration");
    for n in 1..=40 {
        let fm = factor_xn1(n)?;
        let irred = fm.irreducibles().all(|f| match f.deg() {
            d if d <= 24 => irreducible_by_trial(f),
            _ => is_irreducible(f).unwrap_or(false),
        });
        fact.record(fm.product() == Poly2::xn_plus_one(n) && irred, || format!("n={n}"));
        let all = divisors_xn1(n)?;
        let xn1 = Poly2::xn_plus_one(n);
        let ok = all.len() == fm.divisor_count() && all.iter().all(|d| d.divides(&xn1));
        divs.record(ok, || format!("n={n}: {} divisors, expected {}", all.len(), fm.divisor_count()));
    }

    let mut lrs = Check::new("order of minimal polynomial = least period");
    for period in 1..=15usize {
        for _ in 0..20 {
            let tile = loop {
                let t = rng.random::<u64>() & mask(period);
                if t != 0 {
                    break t;
                }
            };
            let seq: Vec<bool> = (0..4 * period).map(|i| (tile >> (i % period)) & 1 == 1).collect();
            let mp = lrs_minimal_polynomial(&seq);
            let want = least_period(&seq)? as u64;
            lrs.record(order(&mp.poly)? == want, || {
                format!("tile={tile:b} period={period} poly={}", mp.poly)
            });
        }
    }

    let mut checks = vec![ring, division, recip, fact, divs, lrs];
    checks.push(lemma1(&mut rng)?);
    checks.push(lemma2()?);
    checks.push(lemma3()?);

    let mut basis = Check::new("syndrome vectors span the dual code");
    for n in 4..=16 {
        for f in proper_divisors(n)? {
            let dual = make_code(n, f.clone())?.dual();
            let rows = dual.generator_rows()?;
            let ok =
                spans_equal(&syndrome_basis(n, &f)?, &rows) && spans_equal(&parity_check_rows(n, &f)?, &rows);
            basis.record(ok, || format!("n={n} f={f}"));
        }
    }
    checks.push(basis);

    let mut pc = Check::new("P(C(n,f)) = noise mass on residue 0");
    for n in 2..=31 {
        for f in proper_divisors(n)? {
            if f.deg() > MAX_TABLE_DEG {
                pc.skipped += 1;
                continue;
            }
            let code = make_code(n, f.clone())?;
            for &p in &cfg.ps {
                let a = code.p_zero_syndrome(p)?;
                let b = error_residue_distribution(n, &f, p)?.zero_mass();
                pc.record((a - b).abs() <= MASS_TOL, || format!("n={n} f={f} p={p}: {a} vs {b}"));
            }
        }
    }
    checks.push(pc);
    Ok(checks)
}

/// `v · h` is zero on exactly half the codewords iff `h ∉ C⊥`.
fn lemma1(rng: &mut ChaCha8Rng) -> Result<Check> {
    let mut c = Check::new("Lemma 1: v.h balanced iff h outside the dual");
    for n in 2..=16 {
        for g in divisors_xn1(n)? {
            let code = make_code(n, g)?;
            let k = code.k();
            if k == 0 || k > 12 {
                continue;
            }
            let words: Vec<u64> = code.codewords()?.collect();
            let gd = code.dual_generator().to_word().expect("n <= 16");
            for i in 0..200 {
                let h = if i % 2 == 0 {
                    word::mul(rng.random::<u64>() & mask(n - k), gd) as u64
                } else {
                    rng.random::<u64>() & mask(n)
                };
                let zeros = words.iter().filter(|&&v| !linalg::dot(v, h)).count();
                let in_dual = code.dual_generator().divides(&Poly2::from_word(h));
                let want = if in_dual { 1 << k } else { 1 << (k - 1) };
                c.record(zeros == want, || format!("n={n} g={} h={h:b}", code.generator()));
            }
        }
    }
    Ok(c)
}

/// For `h ∉ C⊥` and `d1 + d2 = n`, the prefix of `h` is outside the prefix
/// code's dual or the suffix is outside the suffix code's dual.
fn lemma2() -> Result<Check> {
    let mut tasks = Vec::new();
    for n in [7usize, 15] {
        for g in divisors_xn1(n)? {
            let code = make_code(n, g)?;
            if code.k() > 0 {
                tasks.push(code);
            }
        }
    }
    let parts: Vec<Check> = tasks
        .par_iter()
        .map(|code| {
            let mut c = Check::new("Lemma 2: prefix or suffix escapes its dual");
            let n = code.n();
            let rows = code.generator_rows()?;
            let gd = code.dual_generator().to_word().expect("n <= 15");
            for h in 1u64..1 << n {
                if word::rem(h, gd) == 0 {
                    continue;
                }
                for d1 in 1..n {
                    let pre = h & mask(d1);
                    let suf = h >> d1;
                    let pre_in = rows.iter().all(|&r| !linalg::dot(r & mask(d1), pre));
                    let suf_in = rows.iter().all(|&r| !linalg::dot(r >> d1, suf));
                    c.record(!(pre_in && suf_in), || format!("n={n} g={} h={h:b} d1={d1}", code.generator()));
                }
            }
            Ok(c)
        })
        .collect::<Result<_>>()?;
    Ok(fold_checks(parts))
}

/// A nonzero codeword is a tiled shorter vector iff `g⊥` has a nonconstant
/// factor of order below `n`.
fn lemma3() -> Result<Check> {
    let mut c = Check::new("Lemma 3: degenerate-pattern codeword iff low-order factor of the dual generator");
    for n in [7usize, 15] {
        for g in divisors_xn1(n)? {
            let code = make_code(n, g)?;
            let brute = code.codewords()?.any(|v| v != 0 && is_degenerate_pattern(&bits_of(v, n)).0);
            let mut predicate = false;
            for m in divisors_of_divisor(code.dual_generator(), n)? {
                if !m.is_one() && order(&m)? < n as u64 {
                    predicate = true;
                }
            }
            c.record(brute == predicate, || {
                format!("n={n} g={}: scan={brute} predicate={predicate}", code.generator())
            });
        }
    }
    Ok(c)
}

fn fold_checks(parts: Vec<Check>) -> Check {
    let mut it = parts.into_iter();
    let mut acc = it.next().unwrap_or_default();
    for p in it {
        acc.merge(p);
    }
    acc
}

struct Case<'a> {
    pred: &'a Predictor,
    spec: &'a SubspaceSpec,
    f: &'a Poly2,
}

impl Case<'_> {
    fn code(&self) -> &CyclicCode {
        self.pred.code()
    }

    /// `n = l n0`, `s = s0` and `f | g0`.
    fn correct(&self) -> bool {
        self.spec.is_aligned() && self.f.divides(self.code().generator())
    }

    fn label(&self) -> String {
        let desc = match self.spec {
            SubspaceSpec::Truncation { n, .. } => format!("trunc {n}"),
            SubspaceSpec::BoundarySpan { d1, q, d2, .. } => format!("d1={d1} q={q} d2={d2}"),
        };
        format!(
            "n0={} g0={} n={} {desc} f={}",
            self.code().n(),
            self.code().generator(),
            self.spec.n(),
            self.f
        )
    }
}

/// Visits every `(g0, n, block type, f)` of the sweep; `init` builds a fresh
/// set of checks per worker.
fn sweep<F>(cfg: &VerifyConfig, init: impl Fn() -> Vec<Check> + Sync, visit: F) -> Result<Vec<Check>>
where
    F: Fn(&Case, &mut [Check]) -> Result<()> + Sync,
{
    let mut tasks = Vec::new();
    let mut divs: BTreeMap<usize, Vec<Poly2>> = BTreeMap::new();
    for &n0 in &cfg.n0s {
        let top = (2 * n0 + 2).min(cfg.max_n.unwrap_or(usize::MAX)).min(64);
        for pred in true_codes(n0)? {
            for n in 2..=top {
                if !divs.contains_key(&n) {
                    divs.insert(n, proper_divisors(n)?);
                }
                tasks.push((pred.clone(), n));
            }
        }
    }
    let parts: Vec<Vec<Check>> = tasks
        .par_iter()
        .map(|(pred, n)| {
            let mut checks = init();
            for block in reachable_blocks(pred.code().n(), *n) {
                let spec = SubspaceSpec::from_block(pred.code().clone(), block, *n)?;
                for f in &divs[n] {
                    visit(&Case { pred, spec: &spec, f }, &mut checks)?;
                }
            }
            Ok(checks)
        })
        .collect::<Result<_>>()?;
    let mut out = init();
    for part in parts {
        for (acc, c) in out.iter_mut().zip(part) {
            acc.merge(c);
        }
    }
    Ok(out)
}

/// Bases of the independent summands of a boundary span: the suffix of one
/// codeword, each whole codeword, and the prefix of the next, at their
/// positions in the block.
fn component_bases(spec: &SubspaceSpec) -> Result<Vec<Vec<u64>>> {
    let SubspaceSpec::BoundarySpan { code, d1, q, d2 } = spec else {
        return Ok(Vec::new());
    };
    let n0 = code.n();
    let rows = code.generator_rows()?;
    let mut out = Vec::new();
    if *d1 > 0 {
        out.push(rows.iter().map(|r| r >> (n0 - d1)).collect());
    }
    for t in 0..*q {
        out.push(rows.iter().map(|r| r << (d1 + t * n0)).collect());
    }
    if *d2 > 0 {
        out.push(rows.iter().map(|r| (r & mask(*d2)) << (d1 + q * n0)).collect());
    }
    Ok(out)
}

pub fn distributions(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let init = || {
        vec![
            Check::new("predicted class = class of the exact distribution"),
            Check::new("no Irregular noise-free distribution"),
            Check::new("Degenerate iff n = l n0, s = s0 and f | g0"),
            Check::new("Proposition 1: incorrect parameters give Uniform or RestrictedUniform"),
            Check::new("exact distribution = brute-force enumeration"),
            Check::new("Theorem 2: uniform truncation makes every boundary span uniform"),
            Check::new("Theorem 3: all non-degenerate components Uniform gives Uniform"),
            Check::new("Theorem 3: any Uniform component gives Uniform"),
            Check::new(
                "Theorem 3: one restricted-uniform component, rest degenerate, gives RestrictedUniform",
            ),
            Check::info("Theorem 3 as printed: otherwise RestrictedUniform"),
        ]
    };
    sweep(cfg, init, |case, c| {
        let (spec, f) = (case.spec, case.f);
        let exact = exact_distribution(spec, f)?;
        let class = exact.class();
        let pr = case.pred.predict(spec, f)?;
        c[0].record(pr.class == class, || {
            format!("{}: exact={class} predicted={} ({})", case.label(), pr.class, pr.rule)
        });
        c[0].count(pr.rule);
        c[1].record(class != Irregular, || case.label());
        c[2].record((class == Degenerate) == case.correct(), || format!("{}: {class}", case.label()));
        if !case.correct() {
            c[3].record(matches!(class, Uniform | RestrictedUniform), || {
                format!("{}: {class}", case.label())
            });
        }
        let dim = build_subspace(spec)?.len();
        if dim <= ENUM_CHECK_DIM && f.deg() <= MAX_TABLE_DEG {
            let brute = enumerate_distribution(spec, f)?;
            let same = brute.to_table()? == exact.to_table()? && brute.class() == class;
            c[4].record(same, || case.label());
        } else {
            c[4].skipped += 1;
        }
        let n = spec.n();
        if let SubspaceSpec::BoundarySpan { code, .. } = spec {
            if n < code.n() {
                let trunc = exact_distribution(&SubspaceSpec::truncation(code.clone(), n)?, f)?.class();
                if trunc == Uniform {
                    c[5].record(class == Uniform, || format!("{}: {class}", case.label()));
                }
            }
        }
        let comps = component_bases(spec)?;
        if comps.len() >= 2 {
            let classes: Vec<DistributionClass> = comps
                .iter()
                .map(|b| subspace_distribution(b, f).map(|d| d.class()))
                .collect::<Result<_>>()?;
            let live: Vec<DistributionClass> = classes.iter().copied().filter(|c| *c != Degenerate).collect();
            let show = || format!("{}: components {classes:?} composite {class}", case.label());
            if !live.is_empty() && live.iter().all(|c| *c == Uniform) {
                c[6].record(class == Uniform, show);
            }
            if live.contains(&Uniform) {
                c[7].record(class == Uniform, show);
            }
            if live == [RestrictedUniform] {
                c[8].record(class == RestrictedUniform, show);
            }
            if live.contains(&RestrictedUniform) {
                c[9].record(class == RestrictedUniform, show);
                if class != RestrictedUniform {
                    c[9].count(if live.contains(&Uniform) {
                        "uniform-component"
                    } else {
                        "restricted-sum-uniform"
                    });
                }
            }
        }
        Ok(())
    })
}

/// `P(C(n,f))` at each configured `p`, for every length and divisor the sweep
/// touches.
fn p_zero_table(cfg: &VerifyConfig) -> Result<BTreeMap<(usize, Poly2), Vec<f64>>> {
    let top =
        cfg.n0s.iter().map(|n0| 2 * n0 + 2).max().unwrap_or(0).min(cfg.max_n.unwrap_or(usize::MAX)).min(64);
    let mut keys = Vec::new();
    for n in 2..=top {
        for f in proper_divisors(n)? {
            keys.push((n, f));
        }
    }
    keys.into_par_iter()
        .map(|(n, f)| {
            let code = make_code(n, f.clone())?;
            let v = if code.k() <= 16 {
                let w = code.weight_distribution()?;
                cfg.ps.iter().map(|&p| w.bsc_mass(p)).collect()
            } else {
                cfg.ps.iter().map(|&p| code.p_zero_syndrome(p)).collect::<Result<_>>()?
            };
            Ok(((n, f), v))
        })
        .collect()
}

/// Residues of the subspace: all of them for small dimensions, otherwise a
/// seeded sample of uniform subspace elements.
fn support_sample(basis: &[u64], f: &Poly2, seed: u64) -> Result<Vec<u64>> {
    let fw = f.to_word().expect("deg f < 64");
    if basis.len() <= 10 {
        return Ok(linalg::span_of(basis).into_iter().map(|w| word::rem(w, fw)).collect());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..256)
        .map(|_| {
            let pick = rng.random::<u64>();
            let w = basis.iter().enumerate().filter(|(i, _)| (pick >> i) & 1 == 1).fold(0, |a, (_, b)| a ^ b);
            word::rem(w, fw)
        })
        .collect())
}

/// Returns the noisy-suite checks and the sweep-based bounds checks.
fn noisy_sweep(cfg: &VerifyConfig) -> Result<(Vec<Check>, Vec<Check>)> {
    let p0 = p_zero_table(cfg)?;
    let init = || {
        vec![
            Check::new("Theorem 4: noise keeps Uniform"),
            Check::new("equal noisy masses on the noise-free support"),
            Check::new("quotient walk = direct convolution"),
            Check::new("Theorem 5: incorrect-parameter zero mass <= P(C(n,f))(lambda+1)/2"),
            Check::new("correct parameters: zero mass = P(C(n,f))"),
        ]
    };
    let mut all = sweep(cfg, init, |case, c| {
        let (spec, f) = (case.spec, case.f);
        let n = spec.n();
        let exact = exact_distribution(spec, f)?;
        let class = exact.class();
        let basis = build_subspace(spec)?;
        let dim = basis.len();
        for (pi, &p) in cfg.ps.iter().enumerate() {
            let noisy = match noisy_distribution(spec, f, p) {
                Ok(d) => d,
                Err(Error::ResourceGuard { .. }) => {
                    for k in c.iter_mut() {
                        k.skipped += 1;
                    }
                    continue;
                }
                Err(e) => return Err(e),
            };
            let label = || format!("{} p={p}", case.label());
            let zero = noisy.zero_mass();
            match class {
                Uniform => {
                    let flat = 0.5f64.powi(f.deg() as i32);
                    c[0].record(noisy.class() == Uniform && (zero - flat).abs() <= MASS_TOL, label);
                }
                RestrictedUniform => {
                    let masses: Vec<f64> = support_sample(&basis, f, cfg.seed)?
                        .into_iter()
                        .map(|r| noisy.mass_word(r))
                        .collect();
                    let hi = masses.iter().cloned().fold(f64::MIN, f64::max);
                    let lo = masses.iter().cloned().fold(f64::MAX, f64::min);
                    c[1].record(hi - lo <= MASS_TOL, label);
                }
                _ => {}
            }
            if f.deg() <= CONV_CHECK_DEG && dim <= CONV_CHECK_DIM {
                let direct =
                    convolve(&enumerate_distribution(spec, f)?, &error_residue_distribution(n, f, p)?)?;
                let (a, b) = (direct.to_table()?, noisy.to_table()?);
                c[2].record(a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= MASS_TOL), label);
            } else {
                c[2].skipped += 1;
            }
            let pc = p0[&(n, f.clone())][pi];
            if case.correct() {
                c[4].record((zero - pc).abs() <= MASS_TOL, || format!("{}: {zero} vs {pc}", label()));
            } else {
                let bound = pc * (lambda_coeff(n, f.deg(), p) + 1.0) / 2.0;
                c[3].record(zero <= bound + MASS_TOL, || format!("{}: {zero} > {bound}", label()));
            }
        }
        Ok(())
    })?;
    let bounds = all.split_off(3);
    Ok((all, bounds))
}

/// Checks of the bounds suite that do not need the sweep.
pub fn bound_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut ratio = Check::new("Sullivan: P[C]/P[coset] >= lambda");
    let mut direction =
        Check::new("Sullivan, form used by the Theorem 5 derivation: P[coset] <= lambda P[C]");
    let mut dp = Check::new("coset masses: dynamic program = enumeration");
    for n in 4..=12 {
        for f in proper_divisors(n)? {
            let fw = f.to_word().expect("n <= 12");
            for p in [0.05f64, 0.1] {
                let mut coset = vec![0.0f64; 1 << f.deg()];
                for e in 0u64..1 << n {
                    let w = e.count_ones() as i32;
                    coset[word::rem(e, fw) as usize] += p.powi(w) * (1.0 - p).powi(n as i32 - w);
                }
                let table = error_residue_distribution(n, &f, p)?.to_table()?;
                dp.record(coset.iter().zip(&table).all(|(a, b)| (a - b).abs() <= MASS_TOL), || {
                    format!("n={n} f={f} p={p}")
                });
                let lambda = lambda_coeff(n, f.deg(), p);
                for (r, &g) in coset.iter().enumerate().skip(1) {
                    let label = || {
                        format!("n={n} f={f} p={p} coset={r:b}: P[C]={} P[G]={g} lambda={lambda}", coset[0])
                    };
                    ratio.record(coset[0] >= lambda * g - MASS_TOL, label);
                    direction.record(g <= lambda * coset[0] + MASS_TOL, label);
                }
            }
        }
    }

    let mut lam = Check::new("0 < lambda < 1, increasing in p and in n - deg f");
    let mut below = Check::new("wrong-parameter bound < P(C(n,f))");
    let mut grid: Vec<f64> = cfg.ps.clone();
    grid.sort_by(f64::total_cmp);
    let top = cfg.n0s.iter().map(|n0| 2 * n0 + 2).max().unwrap_or(0).min(32);
    for n in 2..=top {
        for f in proper_divisors(n)? {
            let d = f.deg();
            let ls: Vec<f64> = grid.iter().map(|&p| lambda_coeff(n, d, p)).collect();
            let ok = ls.iter().all(|l| *l > 0.0 && *l < 1.0)
                && ls.windows(2).all(|w| w[0] < w[1])
                && grid.iter().all(|&p| lambda_coeff(n + 1, d, p) > lambda_coeff(n, d, p));
            lam.record(ok, || format!("n={n} f={f}: {ls:?}"));
            let code = make_code(n, f.clone())?;
            for (&p, l) in grid.iter().zip(&ls) {
                let pc = code.p_zero_syndrome(p)?;
                below.record(pc * (l + 1.0) / 2.0 < pc, || format!("n={n} f={f} p={p}"));
            }
        }
    }
    Ok(vec![ratio, direction, dp, lam, below])
}

pub fn recon(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut t6 = Check::new("Theorem 6: mean zero-coefficient probability is 1/2 for n < n0");
    for &n0 in &cfg.n0s {
        let codes = true_codes(n0)?;
        let parts: Vec<Check> = codes
            .par_iter()
            .map(|pred| {
                let mut c = Check::new(&t6.name);
                let code = pred.code();
                for n in 2..n0 {
                    for block in reachable_blocks(n0, n) {
                        for f in proper_divisors(n)? {
                            for p in [0.0, 0.05] {
                                let v = mean_zero_coeff_prob_exact(code, block, n, &f, p)?;
                                c.record((v - 0.5).abs() <= MASS_TOL, || {
                                    format!("g0={} n={n} {block:?} f={f} p={p}: {v}", code.generator())
                                });
                            }
                        }
                    }
                }
                Ok(c)
            })
            .collect::<Result<_>>()?;
        t6.merge(fold_checks(parts));
    }

    let mut table = Check::new("mean zero-coefficient probability at n = n0, s = s0 + 1 (n0 = 7)");
    let hamming = make_code(7, "x^3+x+1".parse()?)?;
    let block = block_decomposition(7, 7, 1, 0, 1);
    for (f, p, want) in [
        ("x+1", 0.0, 0.5),
        ("x^3+x+1", 0.0, 0.8334),
        ("x^3+x^2+1", 0.0, 0.5),
        ("x^3+x+1", 0.01, 0.8076),
        ("x^3+x+1", 0.05, 0.7184),
    ] {
        let v = mean_zero_coeff_prob_exact(&hamming, block, 7, &f.parse()?, p)?;
        table.record((v - want).abs() <= 5e-4, || format!("f={f} p={p}: {v} vs {want}"));
    }

    let mut roots = Check::new("root divisibility over a truncation matches brute force");
    let g0 = ["x^4+x^3+1", "x^4+x^3+x^2+x+1", "x+1"]
        .iter()
        .try_fold(Poly2::one(), |acc, s| s.parse::<Poly2>().map(|f| acc.mul(&f)))?;
    let ex = make_code(15, g0)?;
    let trunc: Vec<u64> = ex.codewords()?.map(|v| v & mask(7)).collect();
    for (f, want) in [("x+1", 0.5), ("x^3+x+1", 0.125)] {
        let fp: Poly2 = f.parse()?;
        let fw = fp.to_word().expect("small");
        let brute = trunc.iter().filter(|&&w| word::rem(w, fw) == 0).count() as f64 / trunc.len() as f64;
        let lib =
            root_divisibility_prob_exact(&ex, crate::dist::BlockType::Interior { offset: 0 }, 7, &fp, 0.0)?;
        roots.record(brute == want && lib == brute, || format!("f={f}: brute {brute} library {lib}"));
    }

    let mut e2e = Check::new("noise-free reconstruction recovers (n0, s0, g0)");
    for (s0, seed) in [(0usize, 3u64), (2, 7), (5, 11)] {
        let cfg = StreamConfig::new(hamming.clone(), s0, 0.0, 200, seed)?;
        let r = reconstruct(&generate_stream(&cfg), 3, 10, 0.0, Method::ZeroSyndrome)?;
        let ok = r.winner.as_ref().is_some_and(|w| (w.n, w.s, &w.g) == (7, s0, hamming.generator()));
        e2e.record(ok, || format!("s0={s0} seed={seed}: {:?}", r.winner));
    }
    let mut noise = Check::new("coin-flip stream: no code detected");
    for seed in 0..3u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bits: Vec<bool> = (0..10_000).map(|_| rng.random_bool(0.5)).collect();
        let r = reconstruct(&bits, 3, 10, 0.02, Method::ZeroSyndrome)?;
        noise.record(r.winner.is_none(), || format!("seed={seed}: {:?}", r.winner));
    }
    Ok(vec![t6, table, roots, e2e, noise])
}
