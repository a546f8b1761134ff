//! Automorphism tests, exhaustive automorphism groups, negative sampling and end-to-end
//! verification of claimed group orders.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::CyclicCode;
use crate::construct::{ConstructionSpec, Generator};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Largest length enumerated exhaustively by default (`10!` candidates).
pub const DEFAULT_MAX_N: usize = 10;
pub const DEFAULT_TRIALS: usize = 1000;
pub const DEFAULT_SEED: u64 = 0;

/// True iff `p` maps the code into itself.
///
/// It suffices to check the generator rows: they span the code and the action is linear.
pub fn is_automorphism(code: &CyclicCode, p: &Permutation) -> Result<bool> {
    p.check_degree(code.length())?;
    Ok(rows_preserved(code, &code.generator_row_supports(), p))
}

fn rows_preserved(code: &CyclicCode, rows: &[Vec<usize>], p: &Permutation) -> bool {
    rows.iter()
        .all(|row| code.support_in_code(row.iter().map(|&i| p.apply(i))))
}

/// All automorphisms of `code`, in lexicographic one-line order.
///
/// Candidates are partitioned by the image of the first coordinate and checked in
/// parallel; the concatenation preserves lexicographic order.
pub fn brute_force_aut(code: &CyclicCode, max_n: usize) -> Result<Vec<Permutation>> {
    let n = code.length();
    if n > max_n {
        return Err(Error::BruteForceLimit { n, max_n });
    }
    let rows = code.generator_row_supports();
    let chunks: Vec<Vec<Permutation>> = (0..n as u32)
        .into_par_iter()
        .map(|first| {
            let mut images: Vec<u32> = std::iter::once(first)
                .chain((0..n as u32).filter(|&v| v != first))
                .collect();
            let mut found = Vec::new();
            loop {
                let p = Permutation::from_images_unchecked(images.clone());
                if rows_preserved(code, &rows, &p) {
                    found.push(p);
                }
                if !next_permutation(&mut images[1..]) {
                    break;
                }
            }
            found
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// Advances to the next lexicographic arrangement; false after the last one.
fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// The brute-forced automorphisms as a group, checking that the list is closed: it lies
/// inside the group it generates, so equal sizes mean equality.
pub fn brute_force_group(code: &CyclicCode, max_n: usize) -> Result<(Vec<Permutation>, PermGroup)> {
    let all = brute_force_aut(code, max_n)?;
    let group = PermGroup::new(code.length(), &all)?;
    if group.order() != BigUint::from(all.len()) {
        return Err(Error::InvalidParameter(format!(
            "automorphism list of size {} is not closed (generates order {})",
            all.len(),
            group.order()
        )));
    }
    Ok((all, group))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleOutcome {
    pub trials: usize,
    pub seed: u64,
    /// Draws that were not members of the candidate group.
    pub outside: usize,
    /// Non-members that nevertheless preserve the code.
    pub escapes: Vec<Permutation>,
}

/// Draws `trials` seeded uniform permutations of the code's coordinates, discards members
/// of `group`, and collects those remaining that are automorphisms. If `group` is the full
/// automorphism group, no escapes are possible.
pub fn sample_outside(
    code: &CyclicCode,
    group: &PermGroup,
    trials: usize,
    seed: u64,
) -> Result<SampleOutcome> {
    let n = code.length();
    if group.degree() != n {
        return Err(Error::DegreeMismatch {
            left: group.degree(),
            right: n,
        });
    }
    let rows = code.generator_row_supports();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut images: Vec<u32> = (0..n as u32).collect();
    let mut outcome = SampleOutcome {
        trials,
        seed,
        outside: 0,
        escapes: Vec::new(),
    };
    for _ in 0..trials {
        images.shuffle(&mut rng);
        let p = Permutation::from_images_unchecked(images.clone());
        if group.member(&p)? {
            continue;
        }
        outcome.outside += 1;
        if rows_preserved(code, &rows, &p) {
            outcome.escapes.push(p);
        }
    }
    Ok(outcome)
}

/// How a computed order is compared with the expected one.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderClaim {
    /// The constructed group must have exactly the expected order.
    #[default]
    Exact,
    /// The constructed group only needs to be a subgroup of a group of the expected
    /// order: its order must divide the expected one.
    Subgroup,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sampling {
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default)]
    pub seed: Option<u64>,
}

fn default_trials() -> usize {
    DEFAULT_TRIALS
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub claim: OrderClaim,
    /// Negative sampling `(trials, seed)`, if requested.
    pub sampling: Option<(usize, u64)>,
    pub max_n: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            claim: OrderClaim::Exact,
            sampling: None,
            max_n: DEFAULT_MAX_N,
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub length: usize,
    pub generator: String,
    pub method: String,
    pub claim: OrderClaim,
    pub expected_order: BigUint,
    /// `None` when a generator failed and no group was built.
    pub computed_order: Option<BigUint>,
    pub generators_checked: usize,
    pub failed_generator: Option<Generator>,
    pub sampling: Option<SampleOutcome>,
    pub pass: bool,
    pub elapsed: Duration,
    pub notes: Vec<String>,
}

impl VerificationReport {
    /// One-line reason for failure, or "ok".
    pub fn summary(&self) -> String {
        if let Some(g) = &self.failed_generator {
            return format!("generator {g} is not an automorphism");
        }
        if let Some(s) = &self.sampling {
            if let Some(p) = s.escapes.first() {
                return format!(
                    "{} sampled non-members are automorphisms, e.g. {p}",
                    s.escapes.len()
                );
            }
        }
        match &self.computed_order {
            Some(c) if !self.pass => match self.claim {
                OrderClaim::Exact => {
                    format!(
                        "order mismatch: computed {c}, expected {}",
                        self.expected_order
                    )
                }
                OrderClaim::Subgroup => format!(
                    "computed order {c} does not divide expected {}",
                    self.expected_order
                ),
            },
            _ if self.pass => "ok".into(),
            _ => "failed".into(),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "code      : n={}, g={}", self.length, self.generator)?;
        writeln!(f, "method    : {} ({:?})", self.method, self.claim)?;
        writeln!(f, "expected  : {}", self.expected_order)?;
        match &self.computed_order {
            Some(c) => writeln!(f, "computed  : {c}")?,
            None => writeln!(f, "computed  : -")?,
        }
        writeln!(f, "generators: {} checked", self.generators_checked)?;
        if let Some(s) = &self.sampling {
            writeln!(
                f,
                "sampling  : {} trials, seed {}, {} outside, {} escapes",
                s.trials,
                s.seed,
                s.outside,
                s.escapes.len()
            )?;
        }
        for note in &self.notes {
            writeln!(f, "note      : {note}")?;
        }
        writeln!(f, "elapsed   : {} ms", self.elapsed.as_millis())?;
        write!(
            f,
            "result    : {} ({})",
            if self.pass { "PASS" } else { "FAIL" },
            self.summary()
        )
    }
}

pub fn parse_order(text: &str) -> Result<BigUint> {
    let t = text.trim();
    if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::OrderParse {
            text: text.to_string(),
            reason: "expected a decimal integer".into(),
        });
    }
    Ok(t.parse().expect("digits"))
}

/// Checks every generator individually, builds the group they generate and compares its
/// order with `expected_order`; optionally samples for automorphisms outside the group.
pub fn verify_generators(
    code: &CyclicCode,
    generators: &[Generator],
    expected_order: &str,
    method: &str,
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let expected = parse_order(expected_order)?;
    let mut report = VerificationReport {
        length: code.length(),
        generator: code.generator().to_string(),
        method: method.to_string(),
        claim: options.claim,
        expected_order: expected.clone(),
        computed_order: None,
        generators_checked: 0,
        failed_generator: None,
        sampling: None,
        pass: false,
        elapsed: Duration::ZERO,
        notes: Vec::new(),
    };

    let rows = code.generator_row_supports();
    for g in generators {
        g.perm.check_degree(code.length())?;
        report.generators_checked += 1;
        if !rows_preserved(code, &rows, &g.perm) {
            report.failed_generator = Some(g.clone());
            report.elapsed = start.elapsed();
            return Ok(report);
        }
    }

    let perms: Vec<Permutation> = generators.iter().map(|g| g.perm.clone()).collect();
    let group = PermGroup::new(code.length(), &perms)?;
    let order = group.order();
    let order_ok = match options.claim {
        OrderClaim::Exact => order == expected,
        OrderClaim::Subgroup => !order.is_zero() && (&expected % &order).is_zero(),
    };
    report.computed_order = Some(order);

    let mut sampling_ok = true;
    if let Some((trials, seed)) = options.sampling {
        let outcome = sample_outside(code, &group, trials, seed)?;
        sampling_ok = outcome.escapes.is_empty();
        report.sampling = Some(outcome);
    }

    report.pass = order_ok && sampling_ok;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Instantiates the constructions at the code's length and verifies them.
pub fn verify_claim(
    code: &CyclicCode,
    specs: &[ConstructionSpec],
    expected_order: &str,
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut generators = Vec::new();
    for spec in specs {
        generators.extend(spec.instantiate(code.length(), options.max_n)?);
    }
    let mut report = verify_generators(code, &generators, expected_order, "construct", options)?;
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{self, pair_swap, shift, InnerGroup};
    use crate::gf2poly::Gf2Poly;
    use std::collections::BTreeMap;

    fn c(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    fn code(n: usize, g: &str) -> CyclicCode {
        CyclicCode::new(n, Gf2Poly::parse_product(g).unwrap()).unwrap()
    }

    #[test]
    fn automorphism_checks() {
        let h = code(7, "x^3+x+1");
        assert!(is_automorphism(&h, &shift(7)).unwrap());
        assert!(!is_automorphism(&h, &c("(1,2)", 7)).unwrap());
        assert!(is_automorphism(&code(14, "(x^3+x+1)^2"), &pair_swap(7)).unwrap());
        assert!(is_automorphism(&h, &shift(8)).is_err());
    }

    #[test]
    fn next_permutation_is_lexicographic() {
        let mut v = vec![0, 1, 2];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
    }

    #[test]
    fn brute_force_small_codes() {
        let h = brute_force_aut(&code(7, "x^3+x+1"), DEFAULT_MAX_N).unwrap();
        assert_eq!(h.len(), 168);
        assert!(h.windows(2).all(|w| w[0] < w[1]));
        assert!(h[0].is_identity());

        let rep = brute_force_aut(&code(7, "(x^3+x+1)(x^3+x^2+1)"), DEFAULT_MAX_N).unwrap();
        assert_eq!(rep.len(), 5040);

        let zero = CyclicCode::new(5, Gf2Poly::xn_plus_one(5)).unwrap();
        let full = CyclicCode::new(5, Gf2Poly::one()).unwrap();
        assert_eq!(brute_force_aut(&zero, DEFAULT_MAX_N).unwrap().len(), 120);
        assert_eq!(brute_force_aut(&full, DEFAULT_MAX_N).unwrap().len(), 120);

        assert_eq!(
            brute_force_aut(&code(14, "x^3+x+1"), DEFAULT_MAX_N).unwrap_err(),
            Error::BruteForceLimit { n: 14, max_n: 10 }
        );
    }

    #[test]
    fn brute_force_sets_are_weight_preserving_groups() {
        for n in 1..=8 {
            for g in crate::gf2poly::xn_minus_1_divisors(n).unwrap() {
                let code = CyclicCode::new(n, g).unwrap();
                let (auts, group) = brute_force_group(&code, DEFAULT_MAX_N).unwrap();
                assert_eq!(group.order(), BigUint::from(auts.len()));
                assert!(auts.contains(&shift(n)));
                let dist = code.weight_distribution(20).unwrap();
                let words: Vec<_> = code.enumerate_codewords(20).unwrap().collect();
                for tau in auts.iter().step_by(97) {
                    let mut image = BTreeMap::new();
                    for w in &words {
                        let t = tau.apply_to_word(w).unwrap();
                        assert!(code.contains(&t).unwrap());
                        *image.entry(t.weight()).or_insert(0u64) += 1;
                    }
                    assert_eq!(image, dist);
                }
            }
        }
    }

    #[test]
    fn sampling() {
        let sq = code(14, "(x^3+x+1)^2");
        let s14 = PermGroup::symmetric(14);
        let out = sample_outside(&sq, &s14, 200, 1).unwrap();
        assert_eq!((out.outside, out.escapes.len()), (0, 0));

        let h = code(7, "x^3+x+1");
        let out = sample_outside(&h, &PermGroup::trivial(7), 1000, 5).unwrap();
        assert!(out.outside >= 995);
        for p in &out.escapes {
            assert!(is_automorphism(&h, p).unwrap());
        }
        // 168 of 5040 permutations are automorphisms; 1000 draws find some.
        assert!(!out.escapes.is_empty());
        assert_eq!(
            sample_outside(&h, &PermGroup::trivial(7), 1000, 5).unwrap(),
            out
        );
        assert!(sample_outside(&h, &PermGroup::trivial(8), 1, 0).is_err());
    }

    fn interleaved_square_spec() -> Vec<ConstructionSpec> {
        vec![
            ConstructionSpec::InterleavedLift {
                row: None,
                inner: InnerGroup::Brute {
                    n: 7,
                    generator: "x^3+x+1".into(),
                },
            },
            ConstructionSpec::PairSwap { p: 7 },
        ]
    }

    #[test]
    fn interleaved_construction_for_the_squared_generator() {
        let sq = code(14, "(x^3+x+1)^2");
        let opts = VerifyOptions {
            sampling: Some((1000, 0)),
            ..Default::default()
        };
        let r = verify_claim(&sq, &interleaved_square_spec(), "56448", &opts).unwrap();
        assert!(r.pass, "{r}");
        assert_eq!(r.computed_order, Some(BigUint::from(2u32 * 168 * 168)));
        assert_eq!(r.sampling.as_ref().unwrap().escapes.len(), 0);

        let group = PermGroup::new(
            14,
            &construct::ConstructionSpec::instantiate(&interleaved_square_spec()[0], 14, 10)
                .unwrap()
                .into_iter()
                .map(|g| g.perm)
                .chain([pair_swap(7)])
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(group.member(&shift(14)).unwrap());
    }

    #[test]
    fn block_construction_for_the_product_generator() {
        let prod = code(14, "(x^3+x+1)(x^3+x^2+1)");
        let specs = vec![
            ConstructionSpec::BlockRows { k: 2, n: 7 },
            ConstructionSpec::LiftedColumn {
                k: 2,
                inner: InnerGroup::Brute {
                    n: 7,
                    generator: "(x^3+x+1)(x^3+x^2+1)".into(),
                },
            },
        ];
        let r = verify_claim(&prod, &specs, "645120", &VerifyOptions::default()).unwrap();
        assert!(r.pass, "{r}");
    }

    #[test]
    fn failures_are_reported() {
        let sq = code(14, "(x^3+x+1)^2");
        let r = verify_claim(
            &sq,
            &interleaved_square_spec(),
            "56449",
            &VerifyOptions::default(),
        )
        .unwrap();
        assert!(!r.pass);
        assert!(r.summary().contains("56448"), "{}", r.summary());

        // block rows are not automorphisms of the interleaved code
        let bad = vec![ConstructionSpec::BlockRows { k: 2, n: 7 }];
        let r = verify_claim(&sq, &bad, "128", &VerifyOptions::default()).unwrap();
        assert!(!r.pass);
        assert!(r.failed_generator.is_some());
        assert!(r.computed_order.is_none());

        let wrong_len = vec![ConstructionSpec::PairSwap { p: 8 }];
        assert!(verify_claim(&sq, &wrong_len, "2", &VerifyOptions::default()).is_err());
        assert!(verify_claim(&sq, &[], "1e5", &VerifyOptions::default()).is_err());
    }

    #[test]
    fn subgroup_claims_need_divisibility() {
        let h = code(7, "x^3+x+1");
        let gens = vec![Generator {
            label: "shift".into(),
            perm: shift(7),
        }];
        let sub = VerifyOptions {
            claim: OrderClaim::Subgroup,
            ..Default::default()
        };
        assert!(verify_generators(&h, &gens, "168", "t", &sub).unwrap().pass);
        assert!(!verify_generators(&h, &gens, "160", "t", &sub).unwrap().pass);
        assert!(
            !verify_generators(&h, &gens, "168", "t", &VerifyOptions::default())
                .unwrap()
                .pass
        );
    }
}
