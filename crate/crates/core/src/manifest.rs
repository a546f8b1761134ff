//! Declarative verification manifests: one entry per claimed automorphism-group order.
//!
//! ```json
//! {"entries": [{"name": "hamming-7", "n": 7, "generator": "x^3+x+1",
//!               "expected_order": "168", "method": "brute"}]}
//! ```

use std::time::Instant;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::CyclicCode;
use crate::construct::{shift_multiplier_generators, ConstructionSpec, Generator};
use crate::error::{Error, Result};
use crate::gf2poly::Gf2Poly;
use crate::verify::{self, OrderClaim, Sampling, VerificationReport, VerifyOptions, DEFAULT_SEED};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Exhaustive enumeration of S_n.
    Brute,
    /// Explicit generators from `construction`, ordered by Schreier-Sims.
    Construct,
    /// The shift together with all automorphic multipliers.
    Multiplier,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Brute => "brute",
            Self::Construct => "construct",
            Self::Multiplier => "multiplier",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestEntry {
    pub name: String,
    pub n: usize,
    pub generator: String,
    pub expected_order: String,
    pub method: Method,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub construction: Vec<ConstructionSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sampling: Option<Sampling>,
    #[serde(default)]
    pub claim: OrderClaim,
    /// Closed form of `expected_order`, e.g. `2*168^2`; must evaluate to it exactly.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order_formula: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub entries: Vec<ManifestEntry>,
}

impl Manifest {
    /// Parses and validates every entry without running anything.
    pub fn from_json(text: &str) -> Result<Self> {
        let manifest: Self =
            serde_json::from_str(text).map_err(|e| Error::Manifest(e.to_string()))?;
        for entry in &manifest.entries {
            entry.validate()?;
        }
        Ok(manifest)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serialises")
    }

    /// Entries whose name contains `filter`.
    pub fn filtered(&self, filter: Option<&str>) -> Vec<&ManifestEntry> {
        self.entries
            .iter()
            .filter(|e| filter.is_none_or(|f| e.name.contains(f)))
            .collect()
    }
}

impl ManifestEntry {
    pub fn code(&self) -> Result<CyclicCode> {
        CyclicCode::new(self.n, Gf2Poly::parse_product(&self.generator)?)
    }

    pub fn validate(&self) -> Result<()> {
        let ctx = |e: Error| Error::Manifest(format!("entry {:?}: {e}", self.name));
        self.code().map_err(ctx)?;
        let expected = verify::parse_order(&self.expected_order).map_err(ctx)?;
        if let Some(formula) = &self.order_formula {
            let value = eval_order_formula(formula).map_err(ctx)?;
            if value != expected {
                return Err(ctx(Error::OrderParse {
                    text: formula.clone(),
                    reason: format!("evaluates to {value}, not {expected}"),
                }));
            }
        }
        if self.method == Method::Construct && self.construction.is_empty() {
            return Err(ctx(Error::InvalidParameter(
                "method construct needs a construction".into(),
            )));
        }
        Ok(())
    }

    /// Runs the verification; `seed` is used when the entry does not fix its own.
    pub fn run(&self, seed: u64, max_n: usize) -> Result<EntryOutcome> {
        let start = Instant::now();
        let code = self.code()?;
        let sampling = self.sampling.map(|s| (s.trials, s.seed.unwrap_or(seed)));
        let effective_seed = sampling.map_or(seed, |(_, s)| s);
        let options = VerifyOptions {
            claim: self.claim,
            sampling,
            max_n,
        };
        let mut report = match self.method {
            Method::Construct => {
                verify::verify_claim(&code, &self.construction, &self.expected_order, &options)?
            }
            Method::Multiplier => {
                let gens = label_all("shift+multipliers", shift_multiplier_generators(&code));
                verify::verify_generators(
                    &code,
                    &gens,
                    &self.expected_order,
                    "multiplier",
                    &options,
                )?
            }
            Method::Brute => {
                let (all, group) = verify::brute_force_group(&code, max_n)?;
                let gens = label_all("brute", group.generators().to_vec());
                let mut r = verify::verify_generators(
                    &code,
                    &gens,
                    &self.expected_order,
                    "brute",
                    &options,
                )?;
                r.notes
                    .push(format!("{} automorphisms enumerated", all.len()));
                r
            }
        };
        if let Some(formula) = &self.order_formula {
            report.notes.push(format!("expected order = {formula}"));
        }
        if let Some(note) = &self.note {
            report.notes.push(note.clone());
        }
        report.elapsed = start.elapsed();
        Ok(EntryOutcome {
            name: self.name.clone(),
            generator: self.generator.clone(),
            seed: effective_seed,
            report,
        })
    }
}

fn label_all(label: &str, perms: Vec<crate::perm::Permutation>) -> Vec<Generator> {
    perms
        .into_iter()
        .enumerate()
        .map(|(i, perm)| Generator {
            label: format!("{label}#{}", i + 1),
            perm,
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct EntryOutcome {
    pub name: String,
    /// Generator text as written in the manifest.
    pub generator: String,
    pub seed: u64,
    pub report: VerificationReport,
}

impl EntryOutcome {
    pub fn record(&self) -> EntryRecord {
        let r = &self.report;
        EntryRecord {
            name: self.name.clone(),
            n: r.length,
            generator: self.generator.clone(),
            expected_order: r.expected_order.to_string(),
            computed_order: r.computed_order.as_ref().map(|o| o.to_string()),
            pass: r.pass,
            elapsed_ms: r.elapsed.as_millis().to_u64().unwrap_or(u64::MAX),
            seed: self.seed,
        }
    }
}

/// Machine-readable result of one entry; orders are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryRecord {
    pub name: String,
    pub n: usize,
    pub generator: String,
    pub expected_order: String,
    pub computed_order: Option<String>,
    pub pass: bool,
    pub elapsed_ms: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: u64,
    pub max_n: usize,
    /// Worker threads for running entries concurrently; 0 picks the default.
    pub jobs: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            max_n: verify::DEFAULT_MAX_N,
            jobs: 1,
        }
    }
}

/// Runs entries concurrently; results come back in input order.
pub fn run_entries(entries: &[&ManifestEntry], options: RunOptions) -> Result<Vec<EntryOutcome>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    pool.install(|| {
        entries
            .par_iter()
            .map(|e| e.run(options.seed, options.max_n))
            .collect()
    })
}

/// Evaluates an exact integer expression over decimal literals with `*`, `^`, postfix `!`
/// and parentheses, e.g. `7!*(14!)^7`. `·` is accepted for `*`.
pub fn eval_order_formula(text: &str) -> Result<BigUint> {
    let tokens: Vec<char> = text
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '·' { '*' } else { c })
        .collect();
    let mut parser = FormulaParser {
        text,
        tokens: &tokens,
        pos: 0,
    };
    let value = parser.product()?;
    if parser.pos != tokens.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(value)
}

struct FormulaParser<'a> {
    text: &'a str,
    tokens: &'a [char],
    pos: usize,
}

/// Guards against formulas that would exhaust memory.
const MAX_FORMULA_BITS: u64 = 1 << 24;

impl FormulaParser<'_> {
    fn error(&self, reason: &str) -> Error {
        Error::OrderParse {
            text: self.text.to_string(),
            reason: format!("{reason} at position {}", self.pos),
        }
    }

    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).copied()
    }

    fn product(&mut self) -> Result<BigUint> {
        let mut acc = self.power()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc *= self.power()?;
            self.check_size(&acc)?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<BigUint> {
        let base = self.postfix()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let exp = self.postfix()?;
        let exp = exp
            .to_u32()
            .filter(|&e| base.bits().saturating_mul(e as u64) <= MAX_FORMULA_BITS)
            .ok_or_else(|| self.error("exponent too large"))?;
        Ok(base.pow(exp))
    }

    fn postfix(&mut self) -> Result<BigUint> {
        let mut value = self.atom()?;
        while self.peek() == Some('!') {
            self.pos += 1;
            let n = value
                .to_u32()
                .filter(|&n| n <= 100_000)
                .ok_or_else(|| self.error("factorial argument too large"))?;
            value = (2..=n).fold(BigUint::one(), |acc, i| acc * i);
        }
        Ok(value)
    }

    fn atom(&mut self) -> Result<BigUint> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.product()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.tokens[start..self.pos].iter().collect();
                Ok(digits.parse().expect("digits"))
            }
            _ => Err(self.error("expected a number or '('")),
        }
    }

    fn check_size(&self, v: &BigUint) -> Result<()> {
        if v.bits() > MAX_FORMULA_BITS {
            return Err(self.error("value too large"));
        }
        Ok(())
    }
}
