//! Polynomials over GF(2).
//!
//! Coefficients are packed into 64-bit words in ascending exponent order: bit `i % 64` of
//! word `i / 64` is the coefficient of `x^i`. The word vector never carries trailing zero
//! words, and the zero polynomial has degree `None` (minus infinity).

mod factor;

pub use factor::{cyclotomic_cosets, factor_xn_minus_1, xn_minus_1_divisors, Factor};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    words: Vec<u64>,
    degree: Option<usize>,
}

fn top_degree(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .rposition(|&w| w != 0)
        .map(|i| i * 64 + 63 - words[i].leading_zeros() as usize)
}

/// `dst ^= src * x^shift`. Bits shifted past the end of `dst` must be zero.
fn xor_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let (ws, bs) = (shift / 64, shift % 64);
    for (i, &w) in src.iter().enumerate() {
        if w == 0 {
            continue;
        }
        let lo = i + ws;
        if lo < dst.len() {
            dst[lo] ^= w << bs;
        } else {
            debug_assert_eq!(w << bs, 0);
        }
        if bs != 0 {
            let hi = w >> (64 - bs);
            if lo + 1 < dst.len() {
                dst[lo + 1] ^= hi;
            } else {
                debug_assert_eq!(hi, 0);
            }
        }
    }
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn x() -> Self {
        Self::monomial(1)
    }

    pub fn monomial(k: usize) -> Self {
        let mut words = vec![0u64; k / 64 + 1];
        words[k / 64] = 1 << (k % 64);
        Self {
            words,
            degree: Some(k),
        }
    }

    /// `x^n + 1`.
    pub fn xn_plus_one(n: usize) -> Self {
        Self::monomial(n) + Self::one()
    }

    /// Builds a polynomial from packed words, trimming trailing zeros.
    pub fn from_words(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        let degree = top_degree(&words);
        Self { words, degree }
    }

    /// Sum of `x^e` over the given exponents (repeated exponents cancel).
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exponents: I) -> Self {
        let mut words = Vec::new();
        for e in exponents {
            if words.len() <= e / 64 {
                words.resize(e / 64 + 1, 0);
            }
            words[e / 64] ^= 1 << (e % 64);
        }
        Self::from_words(words)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.degree.is_none()
    }

    pub fn is_one(&self) -> bool {
        self.degree == Some(0)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `self * x^k`.
    pub fn shifted(&self, k: usize) -> Self {
        let Some(d) = self.degree else {
            return Self::zero();
        };
        let mut words = vec![0u64; (d + k) / 64 + 1];
        xor_shifted(&mut words, &self.words, k);
        Self::from_words(words)
    }

    /// `self(x^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        Self::from_exponents(self.exponents().map(|e| e * k))
    }

    /// Squaring is linear in characteristic 2: spread every bit to twice its index.
    pub fn square(&self) -> Self {
        let mut words = vec![0u64; self.words.len() * 2];
        for (i, &w) in self.words.iter().enumerate() {
            words[2 * i] = spread_bits(w as u32);
            words[2 * i + 1] = spread_bits((w >> 32) as u32);
        }
        Self::from_words(words)
    }

    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree.ok_or(Error::DivisionByZero)?;
        let Some(mut rd) = self.degree.filter(|&d| d >= dd) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut rem = self.words.clone();
        let mut quot = vec![0u64; (rd - dd) / 64 + 1];
        loop {
            let shift = rd - dd;
            quot[shift / 64] |= 1 << (shift % 64);
            xor_shifted(&mut rem, &divisor.words, shift);
            match top_degree(&rem[..=rd / 64]) {
                Some(d) if d >= dd => rd = d,
                _ => break,
            }
        }
        Ok((Self::from_words(quot), Self::from_words(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        let dd = divisor.degree.ok_or(Error::DivisionByZero)?;
        let Some(mut rd) = self.degree.filter(|&d| d >= dd) else {
            return Ok(self.clone());
        };
        let mut rem = self.words.clone();
        loop {
            xor_shifted(&mut rem, &divisor.words, rd - dd);
            match top_degree(&rem[..=rd / 64]) {
                Some(d) if d >= dd => rd = d,
                _ => break,
            }
        }
        Ok(Self::from_words(rem))
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic gcd (every nonzero binary polynomial is monic).
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    pub fn mulmod(&self, other: &Self, modulus: &Self) -> Result<Self> {
        (self * other).rem(modulus)
    }

    /// True iff `self` has no factor of degree at most `deg/2`, tested by
    /// `gcd(self, x^(2^i) - x) = 1` with `x^(2^i)` computed by repeated squaring.
    pub fn is_irreducible(&self) -> Result<bool> {
        let d = match self.degree {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::ConstantPolynomial(self.to_string())),
        };
        if d == 1 {
            return Ok(true);
        }
        if !self.coeff(0) {
            return Ok(false);
        }
        let x = Self::x();
        let mut h = x.clone();
        for _ in 1..=d / 2 {
            h = h.square().rem(self)?;
            if !self.gcd(&(&h + &x))?.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Parses either a plain sum of terms or a product form such as
    /// `(x^3+x+1)^2` or `(x^5+x^2+1)(x^5+x^3+1)`.
    pub fn parse_product(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if !compact.starts_with('(') {
            return compact.parse();
        }
        let err = |reason: &str| Error::PolyParse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let mut acc = Self::one();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            rest = rest.strip_prefix('*').unwrap_or(rest);
            let inner = rest
                .strip_prefix('(')
                .ok_or_else(|| err("expected '(' to open a factor"))?;
            let close = inner
                .find(')')
                .ok_or_else(|| err("unbalanced parenthesis"))?;
            let factor: Self = inner[..close].parse()?;
            rest = &inner[close + 1..];
            let mut power = 1u32;
            if let Some(after) = rest.strip_prefix('^') {
                let digits =
                    after.len() - after.trim_start_matches(|c: char| c.is_ascii_digit()).len();
                power = after[..digits]
                    .parse()
                    .map_err(|_| err("expected an exponent after '^'"))?;
                rest = &after[digits..];
            }
            for _ in 0..power {
                acc = &acc * &factor;
            }
        }
        Ok(acc)
    }
}

fn spread_bits(v: u32) -> u64 {
    let mut x = v as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

impl Add for &Gf2Poly {
    type Output = Gf2Poly;

    fn add(self, rhs: &Gf2Poly) -> Gf2Poly {
        let (long, short) = if self.words.len() >= rhs.words.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        Gf2Poly::from_words(words)
    }
}

impl Add for Gf2Poly {
    type Output = Gf2Poly;

    fn add(self, rhs: Gf2Poly) -> Gf2Poly {
        &self + &rhs
    }
}

impl Mul for &Gf2Poly {
    type Output = Gf2Poly;

    fn mul(self, rhs: &Gf2Poly) -> Gf2Poly {
        let (Some(da), Some(db)) = (self.degree, rhs.degree) else {
            return Gf2Poly::zero();
        };
        let (sparse, dense) = if self.weight() <= rhs.weight() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut words = vec![0u64; (da + db) / 64 + 1];
        for e in sparse.exponents() {
            xor_shifted(&mut words, &dense.words, e);
        }
        Gf2Poly::from_words(words)
    }
}

impl Mul for Gf2Poly {
    type Output = Gf2Poly;

    fn mul(self, rhs: Gf2Poly) -> Gf2Poly {
        &self * &rhs
    }
}

/// Orders by degree, then by coefficients read from the highest exponent down.
impl Ord for Gf2Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for Gf2Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut exps: Vec<usize> = self.exponents().collect();
        exps.reverse();
        for (i, e) in exps.into_iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            match e {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

impl FromStr for Gf2Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |reason: String| Error::PolyParse {
            text: s.to_string(),
            reason,
        };
        if compact.is_empty() {
            return Err(err("empty input".into()));
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut exps = Vec::new();
        for term in compact.split('+') {
            let e = match term {
                "1" => 0,
                "x" => 1,
                t => match t.strip_prefix("x^") {
                    Some(k) if !k.is_empty() && k.bytes().all(|b| b.is_ascii_digit()) => k
                        .parse::<usize>()
                        .map_err(|e| err(format!("bad exponent in {t:?}: {e}")))?,
                    _ => return Err(err(format!("unexpected term {t:?}"))),
                },
            };
            exps.push(e);
        }
        Ok(Self::from_exponents(exps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Gf2Poly {
        s.parse().unwrap()
    }

    #[test]
    fn addition() {
        assert!((p("x+1") + p("x+1")).is_zero());
        assert_eq!(p("x^3+x+1") + p("x^3+x^2+1"), p("x^2+x"));
        assert_eq!(p("x^3+x+1") + Gf2Poly::zero(), p("x^3+x+1"));
    }

    #[test]
    fn multiplication() {
        assert_eq!(p("x^3+x+1") * p("x^3+x^2+1"), p("x^6+x^5+x^4+x^3+x^2+x+1"));
        assert_eq!(p("x+1") * p("x+1"), p("x^2+1"));
        assert_eq!(p("x^9+x^2") * Gf2Poly::one(), p("x^9+x^2"));
        assert!((p("x+1") * Gf2Poly::zero()).is_zero());
    }

    #[test]
    fn multiplication_across_word_boundaries() {
        let a = p("x^63+x^64+1");
        let b = p("x^70+x");
        assert_eq!(&a * &b, p("x^133+x^134+x^70+x^64+x^65+x"));
        assert_eq!(a.square(), &a * &a);
    }

    #[test]
    fn division() {
        let (q, r) = p("x^7+1").divmod(&p("x^3+x+1")).unwrap();
        assert_eq!(q, p("x^4+x^2+x+1"));
        assert!(r.is_zero());

        let (q, r) = p("x^2+x+1").divmod(&p("x^3+x+1")).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p("x^2+x+1"));

        let (q, r) = p("x^5+x").divmod(&Gf2Poly::one()).unwrap();
        assert_eq!(q, p("x^5+x"));
        assert!(r.is_zero());

        assert_eq!(p("x").divmod(&Gf2Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcds() {
        assert_eq!(p("x^7+1").gcd(&p("x^3+x+1")).unwrap(), p("x^3+x+1"));
        assert!(p("x^3+x+1").gcd(&p("x^3+x^2+1")).unwrap().is_one());
        assert_eq!(p("x^4+x").gcd(&Gf2Poly::zero()).unwrap(), p("x^4+x"));
        assert_eq!(
            Gf2Poly::zero().gcd(&Gf2Poly::zero()),
            Err(Error::GcdOfZeros)
        );
    }

    #[test]
    fn irreducibility() {
        assert!(p("x^3+x+1").is_irreducible().unwrap());
        assert!(!p("x^6+x^5+x^4+x^3+x^2+x+1").is_irreducible().unwrap());
        assert!(p("x^2+x+1").is_irreducible().unwrap());
        assert!(p("x").is_irreducible().unwrap());
        assert!(!p("x^2+1").is_irreducible().unwrap());
        assert!(!p("x^4+x^2+1").is_irreducible().unwrap());
        assert!(p("x^5+x^3+x^2+x+1").is_irreducible().unwrap());
        assert!(matches!(
            Gf2Poly::one().is_irreducible(),
            Err(Error::ConstantPolynomial(_))
        ));
        assert!(Gf2Poly::zero().is_irreducible().is_err());
    }

    #[test]
    fn irreducibility_matches_trial_division() {
        // Every polynomial of degree <= 10 against brute-force trial division.
        for bits in 2u64..(1 << 11) {
            let f = Gf2Poly::from_words(vec![bits]);
            let d = f.degree().unwrap();
            let has_factor = (2u64..bits).any(|g| {
                let g = Gf2Poly::from_words(vec![g]);
                g.degree().unwrap() <= d / 2 && g.divides(&f).unwrap()
            });
            assert_eq!(f.is_irreducible().unwrap(), !has_factor, "{f}");
        }
    }

    #[test]
    fn text_form() {
        assert_eq!(p("x^3+x+1").to_string(), "x^3+x+1");
        assert_eq!(p("1+x^3+x").to_string(), "x^3+x+1");
        assert_eq!(p(" x ^ 2 + 1 ").to_string(), "x^2+1");
        assert_eq!(p("0").to_string(), "0");
        assert!(p("0").is_zero());
        assert_eq!(p("x+x").to_string(), "0");
        for bad in ["", "y", "x^", "x^-1", "2x", "x++1", "x^a"] {
            assert!(bad.parse::<Gf2Poly>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn product_form() {
        assert_eq!(
            Gf2Poly::parse_product("(x^3+x+1)(x^3+x^2+1)").unwrap(),
            p("x^6+x^5+x^4+x^3+x^2+x+1")
        );
        assert_eq!(
            Gf2Poly::parse_product("(x^3+x+1)^2").unwrap(),
            p("x^6+x^2+1")
        );
        assert_eq!(
            Gf2Poly::parse_product("(x^21 + x^7 + 1)(x^21 + x^14 + 1)").unwrap(),
            p("x^6+x^5+x^4+x^3+x^2+x+1").substitute_power(7)
        );
        assert_eq!(Gf2Poly::parse_product("x^3+x+1").unwrap(), p("x^3+x+1"));
        assert!(Gf2Poly::parse_product("(x+1").is_err());
        assert!(Gf2Poly::parse_product("(x+1)^").is_err());
        assert!(Gf2Poly::parse_product("(x+1)x").is_err());
    }

    #[test]
    fn ordering_is_degree_then_high_coefficients() {
        let mut v = vec![p("x^3+x^2+1"), p("x+1"), p("x^3+x+1"), Gf2Poly::zero()];
        v.sort();
        assert_eq!(
            v,
            vec![Gf2Poly::zero(), p("x+1"), p("x^3+x+1"), p("x^3+x^2+1")]
        );
    }
}
