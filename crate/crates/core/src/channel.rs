//! Transmitter and channel model: iid uniform codewords of the true code sent
//! through a BSC, captured from an offset inside a codeword.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{CyclicCode, MAX_WORD_LEN};
use crate::error::{guard, Error, Result};
use crate::gf2::{word, Poly2};

/// RNG stream for message draws.
pub const MESSAGE_STREAM: u64 = 0;
/// RNG stream for channel flips.
pub const NOISE_STREAM: u64 = 1;

#[derive(Debug, Clone, PartialEq)]
pub struct StreamConfig {
    pub code: CyclicCode,
    pub s0: usize,
    pub p: f64,
    /// Number of whole codewords after the head.
    pub blocks: usize,
    pub seed: u64,
}

impl StreamConfig {
    pub fn new(code: CyclicCode, s0: usize, p: f64, blocks: usize, seed: u64) -> Result<Self> {
        if code.is_degenerate()? {
            return Err(Error::Precondition(format!(
                "transmitter code C({}, {}) is degenerate",
                code.n(),
                code.generator()
            )));
        }
        guard("code length", code.n(), MAX_WORD_LEN)?;
        if s0 >= code.n() {
            return Err(Error::InvalidOffset { s: s0, n: code.n() });
        }
        if !(0.0..0.5).contains(&p) {
            return Err(Error::Precondition(format!("crossover probability {p} outside [0, 1/2)")));
        }
        Ok(Self { code, s0, p, blocks, seed })
    }

    /// Stream length `s0 + blocks · n0`.
    pub fn len(&self) -> usize {
        self.s0 + self.blocks * self.code.n()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The received bitstream.
///
/// The first `s0` bits are the last `s0` bits of one extra codeword, so the
/// capture starts mid-codeword; then `blocks` codewords follow. Messages and
/// flips come from separate ChaCha8 streams of the same seed, so the
/// transmitted codewords do not depend on `p`.
pub fn generate_stream(cfg: &StreamConfig) -> Vec<bool> {
    let n0 = cfg.code.n();
    let k0 = cfg.code.k();
    let g = cfg.code.generator().to_word().expect("n0 <= 64");
    let mut messages = ChaCha8Rng::seed_from_u64(cfg.seed);
    messages.set_stream(MESSAGE_STREAM);
    let mut noise = ChaCha8Rng::seed_from_u64(cfg.seed);
    noise.set_stream(NOISE_STREAM);
    let mut draw = || {
        let u = messages.random::<u64>() & crate::linalg::mask(k0);
        word::mul(u, g) as u64
    };
    let mut out = Vec::with_capacity(cfg.len());
    let pad = draw();
    out.extend((n0 - cfg.s0..n0).map(|i| (pad >> i) & 1 == 1));
    for _ in 0..cfg.blocks {
        let v = draw();
        out.extend((0..n0).map(|i| (v >> i) & 1 == 1));
    }
    if cfg.p > 0.0 {
        for bit in out.iter_mut() {
            *bit ^= noise.random_bool(cfg.p);
        }
    }
    out
}

/// An `n`-bit received vector `y_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// 1-based block index.
    pub index: usize,
    pub bits: Vec<bool>,
}

impl Block {
    pub fn poly(&self) -> Poly2 {
        Poly2::from_coeffs(self.bits.iter().copied())
    }

    /// Packed form, coordinate `i` in bit `i`; `None` above 64 bits.
    pub fn word(&self) -> Option<u64> {
        (self.bits.len() <= 64).then(|| pack(&self.bits))
    }
}

pub(crate) fn pack(bits: &[bool]) -> u64 {
    bits.iter().enumerate().fold(0, |acc, (i, &b)| acc | (b as u64) << i)
}

/// The `⌊(N − s)/n⌋` blocks of length `n` starting at offset `s`; trailing
/// bits are dropped.
pub fn segment(bits: &[bool], n: usize, s: usize) -> Result<Vec<Block>> {
    if s >= n {
        return Err(Error::InvalidOffset { s, n });
    }
    let tail = bits.get(s..).unwrap_or(&[]);
    Ok(tail.chunks_exact(n).enumerate().map(|(j, c)| Block { index: j + 1, bits: c.to_vec() }).collect())
}

/// Packed blocks, for lengths up to 64.
pub fn segment_words(bits: &[bool], n: usize, s: usize) -> Result<Vec<u64>> {
    guard("block length", n, MAX_WORD_LEN)?;
    if s >= n {
        return Err(Error::InvalidOffset { s, n });
    }
    Ok(bits.get(s..).unwrap_or(&[]).chunks_exact(n).map(pack).collect())
}

/// Parses the stream file format: ASCII `0`/`1`, optional trailing newline.
pub fn parse_stream(text: &str) -> Result<Vec<bool>> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let body = body.strip_suffix('\r').unwrap_or(body);
    body.bytes()
        .enumerate()
        .map(|(i, b)| match b {
            b'0' => Ok(false),
            b'1' => Ok(true),
            other => Err(Error::Parse(format!(
                "stream character {:?} at position {i} is not 0 or 1",
                other as char
            ))),
        })
        .collect()
}

pub fn format_stream(bits: &[bool]) -> String {
    let mut s: String = bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
    s.push('\n');
    s
}
