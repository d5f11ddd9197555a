//! The cyclic code `C(n, g)`: dimension, codewords, dual generator,
//! degeneracy, weight distribution and the zero-syndrome probability.

use crate::error::{guard, Error, Result};
use crate::gf2::{order, word, Poly2};
use crate::linalg::{self, span_of};

/// Largest dimension whose codewords are enumerated explicitly.
pub const MAX_ENUM_DIM: usize = 24;
/// Largest length handled by the packed-word kernels.
pub const MAX_WORD_LEN: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCode {
    n: usize,
    g: Poly2,
    k: usize,
    g_dual: Poly2,
}

impl CyclicCode {
    pub fn new(n: usize, g: Poly2) -> Result<Self> {
        if n == 0 {
            return Err(Error::UndefinedInput("code length must be positive"));
        }
        let xn1 = Poly2::xn_plus_one(n);
        let deg = g.degree().ok_or(Error::DivisionByZero)?;
        if !g.divides(&xn1) {
            return Err(Error::InvalidGenerator { n, generator: g.to_string() });
        }
        let g_dual = xn1.div_exact(&g)?.reciprocal()?;
        Ok(Self { n, g, k: n - deg, g_dual })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &Poly2 {
        &self.g
    }

    pub fn dual_generator(&self) -> &Poly2 {
        &self.g_dual
    }

    /// `k = 0` or `k = n`.
    pub fn is_trivial(&self) -> bool {
        self.k == 0 || self.k == self.n
    }

    /// The dual code `C(n, g⊥)`.
    pub fn dual(&self) -> Self {
        Self::new(self.n, self.g_dual.clone()).expect("dual generator divides X^n+1")
    }

    /// Degenerate iff `order(g⊥) < n`.
    pub fn is_degenerate(&self) -> Result<bool> {
        if self.is_trivial() {
            return Err(Error::NotApplicable("degeneracy of a trivial code"));
        }
        Ok(order(&self.g_dual)? < self.n as u64)
    }

    /// Generator rows `X^i g(X)`, `i < k`, packed as words.
    pub fn generator_rows(&self) -> Result<Vec<u64>> {
        guard("code length", self.n, MAX_WORD_LEN)?;
        let g = self.g.to_word().expect("n <= 64");
        Ok((0..self.k).map(|i| g << i).collect())
    }

    /// All `2^k` codewords `u(X) g(X)` in message order.
    pub fn codewords(&self) -> Result<impl Iterator<Item = u64>> {
        guard("code dimension", self.k, MAX_ENUM_DIM)?;
        guard("code length", self.n, MAX_WORD_LEN)?;
        let g = self.g.to_word().expect("n <= 64");
        Ok((0u64..1 << self.k).map(move |u| word::mul(u, g) as u64))
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        let mut counts = vec![0u64; self.n + 1];
        // Gray-code walk over the generator rows; the codeword set is the same
        for v in span_of(&self.generator_rows_guarded()?) {
            counts[v.count_ones() as usize] += 1;
        }
        Ok(WeightDistribution { counts })
    }

    fn generator_rows_guarded(&self) -> Result<Vec<u64>> {
        guard("code dimension", self.k, MAX_ENUM_DIM)?;
        self.generator_rows()
    }

    /// `P(C(n,g)) = Σ A_i p^i (1-p)^(n-i)`, the probability that a BSC(p)
    /// error pattern is a codeword.
    ///
    /// Above the enumeration guard the dual code is enumerated instead:
    /// `P = 2^-(n-k) Σ_{u ∈ C⊥} (1-2p)^wt(u)`.
    pub fn p_zero_syndrome(&self, p: f64) -> Result<f64> {
        if self.k <= MAX_ENUM_DIM {
            return Ok(self.weight_distribution()?.bsc_mass(p));
        }
        let dual = self.dual();
        let a = dual.weight_distribution()?;
        let r = 1.0 - 2.0 * p;
        let s: f64 = a.counts.iter().enumerate().map(|(w, &c)| c as f64 * r.powi(w as i32)).sum();
        Ok(s / 2f64.powi((self.n - self.k) as i32))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    /// `counts[i]` is the number of codewords of weight `i`.
    pub counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Probability a BSC(p) error pattern of this length is in the set.
    pub fn bsc_mass(&self, p: f64) -> f64 {
        let n = self.counts.len() - 1;
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| c as f64 * p.powi(i as i32) * (1.0 - p).powi((n - i) as i32))
            .sum()
    }
}

pub fn make_code(n: usize, g: Poly2) -> Result<CyclicCode> {
    CyclicCode::new(n, g)
}

pub fn dual_generator(code: &CyclicCode) -> Poly2 {
    code.dual_generator().clone()
}

pub fn is_degenerate_code(code: &CyclicCode) -> Result<bool> {
    code.is_degenerate()
}

pub fn codewords(code: &CyclicCode) -> Result<impl Iterator<Item = u64>> {
    code.codewords()
}

pub fn weight_distribution(code: &CyclicCode) -> Result<WeightDistribution> {
    code.weight_distribution()
}

pub fn p_zero_syndrome_code(code: &CyclicCode, p: f64) -> Result<f64> {
    code.p_zero_syndrome(p)
}

pub(crate) fn check_proper_divisor(n: usize, f: &Poly2) -> Result<CyclicCode> {
    let code = CyclicCode::new(n, f.clone())?;
    if code.is_trivial() {
        return Err(Error::NotApplicable("syndrome of a trivial divisor"));
    }
    guard("block length", n, MAX_WORD_LEN)?;
    Ok(code)
}

/// Coefficient vectors of the syndrome map: `h_l[i]` is the coefficient of
/// `X^l` in `X^i mod f`, so that `r_l = w · h_l`.
pub fn syndrome_basis(n: usize, f: &Poly2) -> Result<Vec<u64>> {
    check_proper_divisor(n, f)?;
    let fw = f.to_word().expect("deg f < n <= 64");
    let d = f.deg();
    let mut rows = vec![0u64; d];
    for i in 0..n {
        let c = word::x_pow_mod(i, fw);
        for (l, row) in rows.iter_mut().enumerate() {
            *row |= ((c >> l) & 1) << i;
        }
    }
    Ok(rows)
}

/// Parity-check rows `h_l = X^l f⊥(X)`, `l < deg f`: the generator rows of the
/// dual code `C(n, f⊥)`.
pub fn parity_check_rows(n: usize, f: &Poly2) -> Result<Vec<u64>> {
    let code = check_proper_divisor(n, f)?;
    let fd = code.dual_generator().to_word().expect("n <= 64");
    Ok((0..f.deg()).map(|l| fd << l).collect())
}

/// Residues `X^i mod f` for `i < n`, as words.
pub(crate) fn residue_columns(n: usize, f: &Poly2) -> Vec<u64> {
    let fw = f.to_word().expect("modulus fits a word");
    (0..n).map(|i| word::x_pow_mod(i, fw)).collect()
}

/// `v(X) mod f` through precomputed columns.
#[inline]
pub(crate) fn residue_of(v: u64, cols: &[u64]) -> u64 {
    let mut r = 0;
    let mut bits = v;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        r ^= cols[i];
    }
    r
}

/// Row space of a set of words contains the row space of another.
pub(crate) fn spans_equal(a: &[u64], b: &[u64]) -> bool {
    let ra = linalg::rank(a.iter().copied());
    ra == linalg::rank(b.iter().copied()) && ra == linalg::rank(a.iter().chain(b).copied())
}
