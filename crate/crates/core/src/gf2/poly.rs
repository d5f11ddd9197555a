use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A polynomial over GF(2), bit-packed in ascending order: bit `i` of the
/// limb vector is the coefficient of `X^i`.
///
/// The limb vector never carries trailing zero limbs, so the zero polynomial
/// is the empty vector and equality is coefficientwise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    limbs: Vec<u64>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly2::from_word(1)
    }

    /// The monomial `X^i`.
    pub fn monomial(i: usize) -> Self {
        let mut limbs = vec![0u64; i / 64 + 1];
        limbs[i / 64] = 1 << (i % 64);
        Poly2 { limbs }
    }

    /// `X^n + 1`.
    pub fn xn_plus_one(n: usize) -> Self {
        let mut p = Poly2::monomial(n);
        p.flip(0);
        p
    }

    pub fn from_word(bits: u64) -> Self {
        let mut p = Poly2 { limbs: vec![bits] };
        p.normalize();
        p
    }

    pub fn from_limbs(limbs: Vec<u64>) -> Self {
        let mut p = Poly2 { limbs };
        p.normalize();
        p
    }

    /// Builds a polynomial from coefficients in ascending order.
    pub fn from_coeffs<I: IntoIterator<Item = bool>>(coeffs: I) -> Self {
        let mut limbs = Vec::new();
        for (i, c) in coeffs.into_iter().enumerate() {
            if i % 64 == 0 {
                limbs.push(0);
            }
            if c {
                limbs[i / 64] |= 1 << (i % 64);
            }
        }
        Poly2::from_limbs(limbs)
    }

    fn normalize(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    /// The low 64 coefficients as a word, or `None` when the degree is 64 or more.
    pub fn to_word(&self) -> Option<u64> {
        match self.limbs.len() {
            0 => Some(0),
            1 => Some(self.limbs[0]),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs.len() == 1 && self.limbs[0] == 1
    }

    /// Degree of the polynomial; `None` stands for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    /// Degree of a nonzero polynomial; panics on zero.
    pub fn deg(&self) -> usize {
        self.degree().expect("nonzero polynomial")
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.limbs.get(i / 64).is_some_and(|l| (l >> (i % 64)) & 1 == 1)
    }

    /// Constant coefficient, i.e. `f(0)`.
    pub fn constant_term(&self) -> bool {
        self.coeff(0)
    }

    pub fn weight(&self) -> u32 {
        self.limbs.iter().map(|l| l.count_ones()).sum()
    }

    fn flip(&mut self, i: usize) {
        if self.limbs.len() <= i / 64 {
            self.limbs.resize(i / 64 + 1, 0);
        }
        self.limbs[i / 64] ^= 1 << (i % 64);
        self.normalize();
    }

    /// Indices of the nonzero coefficients, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.limbs.iter().enumerate().flat_map(|(w, &limb)| {
            let mut l = limb;
            std::iter::from_fn(move || {
                if l == 0 {
                    return None;
                }
                let b = l.trailing_zeros() as usize;
                l &= l - 1;
                Some(w * 64 + b)
            })
        })
    }

    /// `self ^= other · X^shift` without normalizing.
    fn xor_shifted(&mut self, other: &Poly2, shift: usize) {
        if other.is_zero() {
            return;
        }
        let (ws, bs) = (shift / 64, shift % 64);
        let need = other.limbs.len() + ws + 1;
        if self.limbs.len() < need {
            self.limbs.resize(need, 0);
        }
        for (i, &l) in other.limbs.iter().enumerate() {
            self.limbs[i + ws] ^= l << bs;
            if bs != 0 {
                self.limbs[i + ws + 1] ^= l >> (64 - bs);
            }
        }
    }

    pub fn shl(&self, shift: usize) -> Poly2 {
        let mut out = Poly2::zero();
        out.xor_shifted(self, shift);
        out.normalize();
        out
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let (long, short) = if self.limbs.len() >= other.limbs.len() { (self, other) } else { (other, self) };
        let mut limbs = long.limbs.clone();
        for (a, b) in limbs.iter_mut().zip(&short.limbs) {
            *a ^= b;
        }
        Poly2::from_limbs(limbs)
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        let (sparse, dense) = if self.weight() <= other.weight() { (self, other) } else { (other, self) };
        for i in sparse.support() {
            out.xor_shifted(dense, i);
        }
        out.normalize();
        out
    }

    /// Quotient and remainder of division by `m`.
    pub fn div_rem(&self, m: &Poly2) -> Result<(Poly2, Poly2)> {
        let dm = m.degree().ok_or(Error::DivisionByZero)?;
        let mut r = self.clone();
        let mut q = Poly2::zero();
        while let Some(dr) = r.degree() {
            if dr < dm {
                break;
            }
            let shift = dr - dm;
            r.xor_shifted(m, shift);
            r.normalize();
            q.flip(shift);
        }
        Ok((q, r))
    }

    pub fn rem(&self, m: &Poly2) -> Result<Poly2> {
        if let (Some(a), Some(mw)) = (self.to_word(), m.to_word()) {
            if mw == 0 {
                return Err(Error::DivisionByZero);
            }
            return Ok(Poly2::from_word(word::rem(a, mw)));
        }
        Ok(self.div_rem(m)?.1)
    }

    /// Exact quotient; fails when `m` does not divide `self`.
    pub fn div_exact(&self, m: &Poly2) -> Result<Poly2> {
        let (q, r) = self.div_rem(m)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Precondition(format!("{m} does not divide {self}")))
        }
    }

    pub fn divides(&self, other: &Poly2) -> bool {
        other.rem(self).is_ok_and(|r| r.is_zero())
    }

    pub fn gcd(&self, other: &Poly2) -> Result<Poly2> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedInput("gcd of two zero polynomials"));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// `X^deg(f) · f(1/X)`: coefficients reversed across the degree.
    pub fn reciprocal(&self) -> Result<Poly2> {
        let d = self.degree().ok_or(Error::UndefinedInput("reciprocal of the zero polynomial"))?;
        Ok(Poly2::from_coeffs((0..=d).map(|i| self.coeff(d - i))))
    }

    /// `self · other mod m`.
    pub fn mul_mod(&self, other: &Poly2, m: &Poly2) -> Result<Poly2> {
        self.mul(other).rem(m)
    }

    /// `X^e mod m` by square-and-multiply.
    pub fn x_pow_mod(e: u64, m: &Poly2) -> Result<Poly2> {
        let mut result = Poly2::one().rem(m)?;
        let mut base = Poly2::monomial(1).rem(m)?;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_mod(&base, m)?;
            }
            base = base.mul_mod(&base, m)?;
            e >>= 1;
        }
        Ok(result)
    }

    /// Human-readable form, e.g. `x^3+x+1`; `0` for the zero polynomial.
    pub fn to_human(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<String> = self
            .support()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        terms.join("+")
    }

    fn parse_human(s: &str) -> Result<Poly2> {
        let mut p = Poly2::zero();
        for term in s.split('+') {
            let t = term.trim().to_ascii_lowercase();
            let exp = match t.as_str() {
                "1" => 0,
                "0" => continue,
                "x" => 1,
                _ => {
                    // `x^4` or the shorthand `x4`
                    let e = t
                        .strip_prefix("x^")
                        .or_else(|| t.strip_prefix('x'))
                        .ok_or_else(|| Error::Parse(format!("bad monomial {term:?}")))?;
                    e.parse::<usize>().map_err(|_| Error::Parse(format!("bad exponent in {term:?}")))?
                }
            };
            p.flip(exp);
        }
        Ok(p)
    }
}

/// Canonical order: by degree (zero first), then by coefficient bits read as
/// an integer. With the trailing-zero-free layout both reduce to comparing the
/// limb vectors as big integers.
impl Ord for Poly2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.limbs
            .len()
            .cmp(&other.limbs.len())
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl PartialOrd for Poly2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ascending-coefficient bit string; `"1101"` is `1+X+X^3`.
impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree() {
            None => f.write_str("0"),
            Some(d) => {
                let s: String = (0..=d).map(|i| if self.coeff(i) { '1' } else { '0' }).collect();
                f.write_str(&s)
            }
        }
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({})", self.to_human())
    }
}

impl FromStr for Poly2 {
    type Err = Error;

    /// Accepts either the canonical bit string or the human `x^3+x+1` form.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if s.bytes().all(|b| b == b'0' || b == b'1') {
            Ok(Poly2::from_coeffs(s.bytes().map(|b| b == b'1')))
        } else {
            Poly2::parse_human(s)
        }
    }
}

/// Single-word kernels for polynomials of degree below 64, used by the hot
/// enumeration loops.
pub mod word {
    #[inline]
    pub fn degree(a: u64) -> Option<u32> {
        if a == 0 {
            None
        } else {
            Some(63 - a.leading_zeros())
        }
    }

    /// `a mod m` for nonzero `m`.
    #[inline]
    pub fn rem(mut a: u64, m: u64) -> u64 {
        debug_assert!(m != 0);
        let dm = 63 - m.leading_zeros();
        while a != 0 {
            let da = 63 - a.leading_zeros();
            if da < dm {
                break;
            }
            a ^= m << (da - dm);
        }
        a
    }

    /// Carry-less product; the result must fit in 128 bits.
    #[inline]
    pub fn mul(a: u64, b: u64) -> u128 {
        let mut out = 0u128;
        let mut b = b;
        while b != 0 {
            let i = b.trailing_zeros();
            out ^= (a as u128) << i;
            b &= b - 1;
        }
        out
    }

    /// `a · b mod m` for operands already reduced mod `m`, `deg m < 64`.
    #[inline]
    pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
        let prod = mul(a, b);
        rem128(prod, m)
    }

    #[inline]
    pub fn rem128(mut a: u128, m: u64) -> u64 {
        let m = m as u128;
        let dm = 127 - m.leading_zeros();
        while a != 0 {
            let da = 127 - a.leading_zeros();
            if da < dm {
                break;
            }
            a ^= m << (da - dm);
        }
        a as u64
    }

    /// `X^i mod m`.
    #[inline]
    pub fn x_pow_mod(i: usize, m: u64) -> u64 {
        let dm = 63 - m.leading_zeros() as usize;
        if i < dm {
            return 1 << i;
        }
        let mut r = rem(1 << dm, m);
        for _ in dm..i {
            r <<= 1;
            if (r >> dm) & 1 == 1 {
                r ^= m;
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly2 {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert!(p("x+1").add(&p("x+1")).is_zero());
        assert_eq!(p("1+x").add(&p("x+x^2")), p("x^2+1"));
        assert_eq!(p("1101").add(&Poly2::zero()), p("1101"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("x+1").mul(&p("x+1")), p("x^2+1"));
        assert_eq!(p("x+1").mul(&p("x^2+x+1")), p("x^3+1"));
        assert_eq!(p("1101").mul(&Poly2::one()), p("1101"));
    }

    #[test]
    fn rem_examples() {
        assert!(Poly2::xn_plus_one(7).rem(&p("x^3+x+1")).unwrap().is_zero());
        assert_eq!(p("x^3").rem(&p("x^3+x+1")).unwrap(), p("x+1"));
        assert!(p("x^5+x").rem(&Poly2::one()).unwrap().is_zero());
        assert_eq!(p("x+1").rem(&Poly2::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p("x^2+1").gcd(&p("x^3+1")).unwrap(), p("x+1"));
        assert_eq!(p("1011").gcd(&Poly2::zero()).unwrap(), p("1011"));
        assert_eq!(p("1011").gcd(&p("1011")).unwrap(), p("1011"));
        assert!(Poly2::zero().gcd(&Poly2::zero()).is_err());
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p("x^3+x+1").reciprocal().unwrap(), p("x^3+x^2+1"));
        assert_eq!(p("x+1").reciprocal().unwrap(), p("x+1"));
        assert!(Poly2::zero().reciprocal().is_err());
    }

    #[test]
    fn degree_of_zero_is_not_an_integer() {
        assert_eq!(Poly2::zero().degree(), None);
        assert_eq!(Poly2::one().degree(), Some(0));
        assert_eq!(Poly2::monomial(130).degree(), Some(130));
    }

    #[test]
    fn text_formats() {
        assert_eq!(p("1101"), p("x^3+x+1"));
        assert_eq!(p("X^3 + X + 1").to_string(), "1101");
        assert_eq!(p("1101").to_human(), "x^3+x+1");
        assert_eq!(Poly2::zero().to_string(), "0");
        assert_eq!(p("0010"), Poly2::monomial(2));
        assert_eq!(p("X4+x3+1"), p("x^4+x^3+1"));
        assert!("x^a".parse::<Poly2>().is_err());
        assert!("".parse::<Poly2>().is_err());
        // duplicated monomials cancel
        assert_eq!(p("x+x+1"), Poly2::one());
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![p("x^2+1"), p("x+1"), p("x^2+x+1"), Poly2::one(), Poly2::zero()];
        v.sort();
        assert_eq!(v, vec![Poly2::zero(), Poly2::one(), p("x+1"), p("x^2+1"), p("x^2+x+1")]);
        assert!(Poly2::monomial(64) > Poly2::from_word(u64::MAX));
    }

    #[test]
    fn multi_limb_division() {
        let f = p("x^4+x+1");
        let a = Poly2::xn_plus_one(90).mul(&f);
        assert!(a.rem(&f).unwrap().is_zero());
        assert_eq!(a.div_exact(&f).unwrap(), Poly2::xn_plus_one(90));
    }

    #[test]
    fn word_kernels_match_generic() {
        let m = 0b1_0011u64; // x^4+x+1
        for i in 0..40 {
            let want = Poly2::monomial(i).rem(&Poly2::from_word(m)).unwrap();
            assert_eq!(Poly2::from_word(word::x_pow_mod(i, m)), want);
        }
        assert_eq!(word::mul_mod(0b0110, 0b1001, m), {
            let g = Poly2::from_word(0b0110).mul(&Poly2::from_word(0b1001));
            g.rem(&Poly2::from_word(m)).unwrap().to_word().unwrap()
        });
    }
}
