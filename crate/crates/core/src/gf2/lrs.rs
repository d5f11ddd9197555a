//! Linear recurring sequences: periods, minimal polynomials and the
//! minimal generating polynomial of a periodic bit pattern.

use super::poly::Poly2;
use crate::error::{Error, Result};

/// Smallest `d` dividing `v.len()` such that `v` is `v[..d]` tiled.
pub fn least_period(v: &[bool]) -> Result<usize> {
    if v.is_empty() {
        return Err(Error::EmptyInput("least_period of an empty sequence"));
    }
    let n = v.len();
    Ok((1..=n).filter(|d| n % d == 0).find(|&d| (d..n).all(|i| v[i] == v[i - d])).unwrap_or(n))
}

/// Whether `v` is a shorter vector repeated more than once; returns the
/// shortest tile when it is.
pub fn is_degenerate_pattern(v: &[bool]) -> (bool, Option<Vec<bool>>) {
    match least_period(v) {
        Ok(d) if d < v.len() => (true, Some(v[..d].to_vec())),
        _ => (false, None),
    }
}

/// Result of Berlekamp–Massey on a bit sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalPolynomial {
    /// Characteristic polynomial `X^L + Σ h_i X^i` of the shortest recurrence
    /// `v_{r+L} = Σ_{i<L} h_i v_{r+i}`.
    pub poly: Poly2,
    /// Set when the input was all zero; `poly` is then `1`.
    pub zero_sequence: bool,
}

/// Minimal polynomial of a linear recurring sequence via Berlekamp–Massey.
///
/// The caller must supply at least two full periods; the routine never guesses
/// periodicity.
pub fn lrs_minimal_polynomial(seq: &[bool]) -> MinimalPolynomial {
    // connection polynomial c(X) = 1 + c_1 X + ... + c_L X^L
    let n = seq.len();
    let mut c = vec![false; n + 1];
    let mut b = vec![false; n + 1];
    c[0] = true;
    b[0] = true;
    let mut len = 0usize;
    let mut m = 1usize;
    for i in 0..n {
        let mut disc = seq[i];
        for j in 1..=len {
            disc ^= c[j] & seq[i - j];
        }
        if !disc {
            m += 1;
            continue;
        }
        let prev = c.clone();
        for j in 0..=n - m {
            if b[j] {
                c[j + m] ^= true;
            }
        }
        if 2 * len <= i {
            len = i + 1 - len;
            b = prev;
            m = 1;
        } else {
            m += 1;
        }
    }
    if len == 0 {
        return MinimalPolynomial { poly: Poly2::one(), zero_sequence: true };
    }
    // characteristic polynomial X^L c(1/X)
    let poly = Poly2::from_coeffs((0..=len).map(|i| c[len - i]));
    MinimalPolynomial { poly, zero_sequence: false }
}

/// `m(X) = (X^{n'} + 1) / h'(X)` where `n'` is the least period of `w` tiled
/// and `h'` is the reciprocal of the tiled sequence's minimal polynomial.
/// `w(X)` is always a multiple of `m(X)`.
pub fn minimal_generating_polynomial(w: &[bool]) -> Result<Poly2> {
    if w.iter().all(|&b| !b) {
        return Err(Error::UndefinedInput("minimal generating polynomial of an all-zero pattern"));
    }
    let period = least_period(w)?;
    let tile = &w[..period];
    let tiled: Vec<bool> = tile.iter().chain(tile).copied().collect();
    let h = lrs_minimal_polynomial(&tiled).poly;
    Poly2::xn_plus_one(period).div_exact(&h.reciprocal()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::factor::order;

    fn bits(s: &str) -> Vec<bool> {
        s.bytes().map(|b| b == b'1').collect()
    }

    fn p(s: &str) -> Poly2 {
        s.parse().unwrap()
    }

    /// Checks `v_{r+L} = Σ h_i v_{r+i}` on every window.
    fn recurrence_holds(h: &Poly2, v: &[bool]) -> bool {
        let l = h.degree().unwrap();
        (0..v.len().saturating_sub(l)).all(|r| {
            let s = (0..l).fold(false, |acc, i| acc ^ (h.coeff(i) & v[r + i]));
            s == v[r + l]
        })
    }

    #[test]
    fn least_period_examples() {
        assert_eq!(least_period(&bits("101101")).unwrap(), 3);
        assert_eq!(least_period(&bits("1111111")).unwrap(), 1);
        assert_eq!(least_period(&bits("1011")).unwrap(), 4);
        assert!(least_period(&[]).is_err());
    }

    #[test]
    fn degenerate_pattern_examples() {
        assert_eq!(is_degenerate_pattern(&bits("101101")), (true, Some(bits("101"))));
        assert_eq!(is_degenerate_pattern(&bits("1011")), (false, None));
        assert_eq!(is_degenerate_pattern(&bits("1111111")), (true, Some(bits("1"))));
    }

    #[test]
    fn minimal_polynomial_examples() {
        assert_eq!(lrs_minimal_polynomial(&bits("111111")).poly, p("x+1"));
        assert_eq!(lrs_minimal_polynomial(&bits("101101")).poly, p("x^2+x+1"));
        assert_eq!(lrs_minimal_polynomial(&bits("110110")).poly, p("x^2+x+1"));
        let z = lrs_minimal_polynomial(&bits("0000"));
        assert!(z.zero_sequence);
        assert_eq!(z.poly, Poly2::one());
    }

    #[test]
    fn known_lfsr_sequences() {
        // m-sequence of x^4+x+1 (recurrence v_{r+4} = v_{r+1} + v_r)
        let mut v = vec![true, false, false, false];
        while v.len() < 30 {
            let r = v.len() - 4;
            v.push(v[r] ^ v[r + 1]);
        }
        let h = lrs_minimal_polynomial(&v).poly;
        assert_eq!(h, p("x^4+x+1"));
        assert!(recurrence_holds(&h, &v));
    }

    /// Order of the minimal polynomial equals the least period, for every
    /// periodic sequence of period up to 15 (checked on two tiled periods).
    #[test]
    fn order_equals_least_period() {
        for period in 1..=15usize {
            for pattern in 1u32..(1 << period) {
                let tile: Vec<bool> = (0..period).map(|i| (pattern >> i) & 1 == 1).collect();
                if least_period(&tile).unwrap() != period {
                    continue;
                }
                let seq: Vec<bool> = tile.iter().chain(&tile).copied().collect();
                let h = lrs_minimal_polynomial(&seq).poly;
                assert!(recurrence_holds(&h, &seq));
                assert_eq!(order(&h).unwrap(), period as u64, "tile {tile:?}");
            }
        }
    }

    #[test]
    fn minimal_generating_polynomial_examples() {
        assert_eq!(minimal_generating_polynomial(&bits("101")).unwrap(), p("x+1"));
        assert_eq!(minimal_generating_polynomial(&bits("1")).unwrap(), Poly2::one());
        let w = bits("110");
        let m = minimal_generating_polynomial(&w).unwrap();
        assert_eq!(m, p("x+1"));
        assert_eq!(Poly2::from_coeffs(w).div_exact(&m).unwrap(), Poly2::one());
        assert!(minimal_generating_polynomial(&bits("000")).is_err());
    }

    #[test]
    fn pattern_is_multiple_of_generating_polynomial() {
        for period in 1..=12usize {
            for pattern in 1u32..(1 << period) {
                let w: Vec<bool> = (0..period).map(|i| (pattern >> i) & 1 == 1).collect();
                let m = minimal_generating_polynomial(&w).unwrap();
                assert!(m.divides(&Poly2::from_coeffs(w.iter().copied())), "{w:?}");
            }
        }
    }
}
