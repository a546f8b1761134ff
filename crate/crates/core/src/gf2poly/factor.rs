//! Irreducible factorization of `x^n - 1` over GF(2).
//!
//! Write `n = 2^a * m` with `m` odd. Then `x^n - 1 = (x^m - 1)^(2^a)` and `x^m - 1` is
//! squarefree. The 2-cyclotomic cosets modulo `m` predict how many irreducible factors of
//! each degree exist; a distinct-degree pass isolates the product of all factors of one
//! degree and a trace-map equal-degree split separates them.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Gf2Poly;
use crate::error::{Error, Result};

/// One irreducible factor of `x^n - 1` with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub poly: Gf2Poly,
    pub multiplicity: usize,
}

const SPLIT_SEED: u64 = 0x6366_3278_6e31;

/// The cosets `{i, 2i, 4i, ...} mod m`, each sorted, ordered by smallest element.
pub fn cyclotomic_cosets(m: usize) -> Vec<Vec<usize>> {
    assert!(m >= 1, "modulus must be positive");
    let mut seen = vec![false; m];
    let mut cosets = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut coset = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            coset.push(i);
            i = (2 * i) % m;
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    cosets
}

/// Complete factorization of `x^n - 1`, sorted by degree and then by coefficients.
pub fn factor_xn_minus_1(n: usize) -> Result<Vec<Factor>> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    let multiplicity = 1usize << n.trailing_zeros();
    let m = n / multiplicity;

    let mut predicted: BTreeMap<usize, usize> = BTreeMap::new();
    for coset in cyclotomic_cosets(m) {
        *predicted.entry(coset.len()).or_default() += 1;
    }

    let mut remaining = Gf2Poly::xn_plus_one(m);
    let mut factors = Vec::new();
    for (&degree, &count) in &predicted {
        // x^(2^degree) - x mod remaining
        let mut h = Gf2Poly::x();
        for _ in 0..degree {
            h = h.square().rem(&remaining)?;
        }
        let block = remaining.gcd(&(&h + &Gf2Poly::x()))?;
        assert_eq!(
            block.degree(),
            Some(degree * count),
            "distinct-degree block disagrees with the cyclotomic coset count"
        );
        remaining = remaining.divmod(&block)?.0;
        let mut parts = Vec::with_capacity(count);
        split_equal_degree(block, degree, &mut parts)?;
        factors.extend(parts);
    }
    debug_assert!(remaining.is_one());

    factors.sort();
    Ok(factors
        .into_iter()
        .map(|poly| Factor { poly, multiplicity })
        .collect())
}

/// Every monic divisor of `x^n - 1`, including `1` and `x^n - 1` itself.
pub fn xn_minus_1_divisors(n: usize) -> Result<Vec<Gf2Poly>> {
    let factors = factor_xn_minus_1(n)?;
    let mut divisors = vec![Gf2Poly::one()];
    for f in &factors {
        let mut next = Vec::with_capacity(divisors.len() * (f.multiplicity + 1));
        for d in &divisors {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..f.multiplicity {
                acc = &acc * &f.poly;
                next.push(acc.clone());
            }
        }
        divisors = next;
    }
    divisors.sort();
    Ok(divisors)
}

/// Absolute trace `a + a^2 + ... + a^(2^(d-1))` reduced modulo `modulus`.
fn trace(a: &Gf2Poly, degree: usize, modulus: &Gf2Poly) -> Result<Gf2Poly> {
    let mut t = a.rem(modulus)?;
    let mut acc = t.clone();
    for _ in 1..degree {
        t = t.square().rem(modulus)?;
        acc = &acc + &t;
    }
    Ok(acc)
}

/// Splits a squarefree product of irreducibles of equal `degree` into its factors.
fn split_equal_degree(f: Gf2Poly, degree: usize, out: &mut Vec<Gf2Poly>) -> Result<()> {
    let fd = f.degree().expect("nonzero block");
    if fd == degree {
        out.push(f);
        return Ok(());
    }
    let try_split = |a: &Gf2Poly| -> Result<Option<Gf2Poly>> {
        let g = f.gcd(&trace(a, degree, &f)?)?;
        Ok(g.degree().filter(|&d| d > 0 && d < fd).map(|_| g))
    };

    let mut splitter = None;
    for j in 1..2 * fd {
        if let Some(g) = try_split(&Gf2Poly::monomial(j))? {
            splitter = Some(g);
            break;
        }
    }
    if splitter.is_none() {
        let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
        let words = fd.div_ceil(64);
        while splitter.is_none() {
            let mut w: Vec<u64> = (0..words).map(|_| rng.gen()).collect();
            if !fd.is_multiple_of(64) {
                *w.last_mut().unwrap() &= (1u64 << (fd % 64)) - 1;
            }
            splitter = try_split(&Gf2Poly::from_words(w))?;
        }
    }
    let g = splitter.unwrap();
    let h = f.divmod(&g)?.0;
    split_equal_degree(g, degree, out)?;
    split_equal_degree(h, degree, out)
}
