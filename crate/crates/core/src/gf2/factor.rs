use super::poly::Poly2;
use crate::error::{Error, Result};

/// Irreducible factorization of `X^n + 1`: distinct irreducibles in canonical
/// order, each with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorMultiset {
    pub n: usize,
    pub entries: Vec<(Poly2, u32)>,
}

impl FactorMultiset {
    pub fn product(&self) -> Poly2 {
        self.entries.iter().fold(Poly2::one(), |acc, (f, m)| (0..*m).fold(acc, |a, _| a.mul(f)))
    }

    /// The distinct irreducible factors.
    pub fn irreducibles(&self) -> impl Iterator<Item = &Poly2> {
        self.entries.iter().map(|(f, _)| f)
    }

    /// Number of monic divisors, `Π (multiplicity + 1)`.
    pub fn divisor_count(&self) -> usize {
        self.entries.iter().map(|(_, m)| *m as usize + 1).product()
    }
}

/// Least `l ≥ 1` with `f | X^l + 1`.
pub fn order(f: &Poly2) -> Result<u64> {
    let d = match f.degree() {
        Some(d) if d >= 1 && f.constant_term() => d,
        _ => return Err(Error::NoOrder(f.to_string())),
    };
    if let Some(fw) = f.to_word() {
        let mut r: u64 = super::poly::word::rem(2, fw);
        let mut l = 1u64;
        while r != 1 {
            r <<= 1;
            if (r >> d) & 1 == 1 {
                r ^= fw;
            }
            l += 1;
        }
        return Ok(l);
    }
    let x = Poly2::monomial(1);
    let mut r = x.rem(f)?;
    let mut l = 1u64;
    while !r.is_one() {
        r = r.mul_mod(&x, f)?;
        l += 1;
    }
    Ok(l)
}

/// Irreducibility over GF(2): no factor of degree in `[1, deg f − 1]`.
///
/// Uses the distinct-degree criterion `gcd(f, X^(2^i) − X) = 1` for every
/// `i ≤ deg f / 2`.
pub fn is_irreducible(f: &Poly2) -> Result<bool> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::UndefinedInput("irreducibility of a constant")),
    };
    if d == 1 {
        return Ok(true);
    }
    let x = Poly2::monomial(1).rem(f)?;
    let mut h = x.clone();
    for _ in 1..=d / 2 {
        h = h.mul_mod(&h, f)?;
        if !h.add(&x).gcd(f)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All polynomials of exact degree `d` with nonzero constant term, in
/// canonical order.
fn candidates(d: usize) -> impl Iterator<Item = Poly2> {
    let mid = if d >= 2 { 1u64 << (d - 1) } else { 1 };
    (0..mid).map(move |inner| {
        let bits = if d == 1 { 0b11 } else { 1 | (inner << 1) | (1 << d) };
        Poly2::from_word(bits)
    })
}

/// Splits a product of distinct irreducibles that all have degree `d` by
/// trial division over the degree-`d` candidates.
fn split_equal_degree(mut g: Poly2, d: usize, out: &mut Vec<Poly2>) -> Result<()> {
    if g.deg() == d {
        out.push(g);
        return Ok(());
    }
    for c in candidates(d) {
        if c.divides(&g) {
            g = g.div_exact(&c)?;
            out.push(c);
            if g.deg() == d {
                out.push(g);
                return Ok(());
            }
        }
    }
    Ok(())
}

/// Distinct irreducible factors of a squarefree `p` with `p(0) = 1`.
fn squarefree_factors(p: &Poly2) -> Result<Vec<Poly2>> {
    let mut rest = p.clone();
    let mut out = Vec::new();
    let x = Poly2::monomial(1);
    let mut h = x.rem(&rest)?;
    let mut d = 1;
    while let Some(deg) = rest.degree() {
        if deg == 0 {
            break;
        }
        if deg < 2 * d {
            out.push(rest);
            break;
        }
        h = h.mul_mod(&h, &rest)?;
        let g = h.add(&x).gcd(&rest)?;
        if !g.is_one() {
            rest = rest.div_exact(&g)?;
            split_equal_degree(g, d, &mut out)?;
            h = h.rem(&rest)?;
        }
        d += 1;
    }
    out.sort();
    Ok(out)
}

/// Complete factorization of `X^n + 1` over GF(2).
///
/// With `n = 2^a · m`, `m` odd, `X^n + 1 = (X^m + 1)^(2^a)`, so only the odd
/// part is factored and multiplicities are `2^a`.
pub fn factor_xn1(n: usize) -> Result<FactorMultiset> {
    if n == 0 {
        return Err(Error::UndefinedInput("X^0+1 = 0 has no factorization"));
    }
    let a = n.trailing_zeros();
    let m = n >> a;
    let entries = squarefree_factors(&Poly2::xn_plus_one(m))?.into_iter().map(|f| (f, 1u32 << a)).collect();
    Ok(FactorMultiset { n, entries })
}

/// Every monic divisor of `X^n + 1`, deduplicated and canonically sorted,
/// including `1` and `X^n + 1`.
pub fn divisors_xn1(n: usize) -> Result<Vec<Poly2>> {
    Ok(divisors_of(&factor_xn1(n)?))
}

pub fn divisors_of(factors: &FactorMultiset) -> Vec<Poly2> {
    let mut out = vec![Poly2::one()];
    for (f, mult) in &factors.entries {
        let mut next = Vec::with_capacity(out.len() * (*mult as usize + 1));
        for d in &out {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..*mult {
                acc = acc.mul(f);
                next.push(acc.clone());
            }
        }
        out = next;
    }
    out.sort();
    out.dedup();
    out
}

/// Irreducible factorization of an arbitrary divisor `g` of `X^n + 1`.
pub fn factor_divisor(g: &Poly2, n: usize) -> Result<Vec<(Poly2, u32)>> {
    let full = factor_xn1(n)?;
    let mut rest = g.clone();
    let mut out = Vec::new();
    for f in full.irreducibles() {
        let mut mult = 0;
        while f.divides(&rest) {
            rest = rest.div_exact(f)?;
            mult += 1;
        }
        if mult > 0 {
            out.push((f.clone(), mult));
        }
    }
    if !rest.is_one() {
        return Err(Error::InvalidGenerator { n, generator: g.to_string() });
    }
    Ok(out)
}

/// Every divisor of `g`, where `g | X^n + 1`.
pub fn divisors_of_divisor(g: &Poly2, n: usize) -> Result<Vec<Poly2>> {
    let entries = factor_divisor(g, n)?;
    Ok(divisors_of(&FactorMultiset { n, entries }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly2 {
        s.parse().unwrap()
    }

    /// Trial division by every polynomial of degree in [1, deg/2].
    fn irreducible_by_trial(f: &Poly2) -> bool {
        let d = f.degree().unwrap();
        (1..=d / 2).all(|k| {
            (0..1u64 << k).all(|low| {
                let c = Poly2::from_word((1 << k) | low);
                !c.divides(f)
            })
        })
    }

    #[test]
    fn order_examples() {
        assert_eq!(order(&p("x+1")).unwrap(), 1);
        assert_eq!(order(&p("x^2+x+1")).unwrap(), 3);
        assert_eq!(order(&p("x^3+x+1")).unwrap(), 7);
        assert_eq!(order(&p("x^2+1")).unwrap(), 2);
        assert!(order(&p("x^2+x")).is_err());
        assert!(order(&Poly2::one()).is_err());
    }

    #[test]
    fn order_by_trial_division() {
        for bits in 3u64..512 {
            let f = Poly2::from_word(bits);
            if !f.constant_term() {
                continue;
            }
            let l = order(&f).unwrap();
            assert!(f.divides(&Poly2::xn_plus_one(l as usize)));
            assert!((1..l).all(|k| !f.divides(&Poly2::xn_plus_one(k as usize))));
        }
    }

    #[test]
    fn irreducible_examples() {
        assert!(is_irreducible(&p("x^3+x+1")).unwrap());
        assert!(!is_irreducible(&p("x^2+1")).unwrap());
        assert!(is_irreducible(&p("x+1")).unwrap());
        assert!(is_irreducible(&p("x")).unwrap());
        assert!(is_irreducible(&Poly2::one()).is_err());
    }

    #[test]
    fn irreducibility_matches_trial_division() {
        for bits in 2u64..(1 << 11) {
            let f = Poly2::from_word(bits);
            assert_eq!(is_irreducible(&f).unwrap(), irreducible_by_trial(&f), "{f}");
        }
    }

    #[test]
    fn factor_examples() {
        let f7 = factor_xn1(7).unwrap();
        assert_eq!(f7.entries, vec![(p("x+1"), 1), (p("x^3+x+1"), 1), (p("x^3+x^2+1"), 1)]);
        let f15 = factor_xn1(15).unwrap();
        let want: Vec<_> =
            ["x+1", "x^2+x+1", "x^4+x+1", "x^4+x^3+1", "x^4+x^3+x^2+x+1"].iter().map(|s| (p(s), 1)).collect();
        assert_eq!(f15.entries, want);
        assert_eq!(factor_xn1(4).unwrap().entries, vec![(p("x+1"), 4)]);
        assert_eq!(factor_xn1(1).unwrap().entries, vec![(p("x+1"), 1)]);
        assert!(factor_xn1(0).is_err());
    }

    #[test]
    fn factorization_invariants_up_to_40() {
        for n in 1..=40 {
            let fm = factor_xn1(n).unwrap();
            assert_eq!(fm.product(), Poly2::xn_plus_one(n), "n={n}");
            for f in fm.irreducibles() {
                assert!(irreducible_by_trial(f), "n={n} f={f}");
                assert_eq!(n as u64 % order(f).unwrap(), 0);
            }
            let mut sorted = fm.entries.clone();
            sorted.sort();
            assert_eq!(sorted, fm.entries);
        }
    }

    #[test]
    fn large_odd_parts_factor_quickly() {
        for n in [47, 59, 63, 64] {
            let fm = factor_xn1(n).unwrap();
            assert_eq!(fm.product(), Poly2::xn_plus_one(n));
        }
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors_xn1(7).unwrap().len(), 8);
        assert_eq!(divisors_xn1(2).unwrap(), vec![Poly2::one(), p("x+1"), p("x^2+1")]);
        for n in 1..=20 {
            let d = divisors_xn1(n).unwrap();
            assert_eq!(d.first(), Some(&Poly2::one()));
            assert_eq!(d.last(), Some(&Poly2::xn_plus_one(n)));
            assert_eq!(d.len(), factor_xn1(n).unwrap().divisor_count());
            assert!(d.iter().all(|g| g.divides(&Poly2::xn_plus_one(n))));
        }
    }

    #[test]
    fn divisor_factorization() {
        let g = p("x^4+x^3+1").mul(&p("x^4+x^3+x^2+x+1")).mul(&p("x+1"));
        let f = factor_divisor(&g, 15).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(divisors_of_divisor(&g, 15).unwrap().len(), 8);
        assert!(factor_divisor(&p("x^2+x+1"), 7).is_err());
    }
}
