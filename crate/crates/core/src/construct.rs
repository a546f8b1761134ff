//! Explicit automorphism generators for cyclic codes built from shorter ones.
//!
//! Every constructor is a relabelling of a [`MatrixLayout`]:
//!
//! * block rows (`k x n`, row `a` = coordinates `(a-1)n+1 ..= an`): a code of length `kn`
//!   whose generator divides `x^n - 1` admits any row permutation inside a single column
//!   and any automorphism of the length-`n` code applied to all rows at once;
//! * residue rows (`r x c`, entry `(a, b)` = coordinate `a + (b-1)r`): for a generator
//!   `f(x^r)` every row is an independent codeword of the length-`c` code for `f`, so
//!   automorphisms act row by row and whole rows may be permuted. Two residue rows give the
//!   odd/even interleaving.
//!
//! [`ConstructionSpec`] is the serialisable description of a family of such generators used
//! by verification manifests.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::{CyclicCode, MatrixLayout};
use crate::error::{Error, Result};
use crate::gf2poly::Gf2Poly;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::verify;

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The `n`-cycle `(1,2,...,n)`: the right cyclic shift.
pub fn shift(n: usize) -> Permutation {
    let images = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    Permutation::from_images_unchecked(images)
}

/// Maps every point of `layout` through `f(row, col) -> (row, col)`.
fn relabel(layout: MatrixLayout, f: impl Fn(usize, usize) -> (usize, usize)) -> Permutation {
    let images = (1..=layout.len())
        .map(|c| {
            let (a, b) = layout.position(c);
            let (a2, b2) = f(a, b);
            (layout.coordinate(a2, b2) - 1) as u32
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

fn check_inner(inner: &Permutation, expected: usize, what: &str) -> Result<()> {
    if inner.degree() != expected {
        return Err(Error::InvalidParameter(format!(
            "{what} must act on {expected} points, got degree {}",
            inner.degree()
        )));
    }
    Ok(())
}

/// `(a, b) -> (a, tau(b))` on every row.
pub fn permute_columns(layout: MatrixLayout, tau: &Permutation) -> Result<Permutation> {
    check_inner(tau, layout.cols(), "column permutation")?;
    Ok(relabel(layout, |a, b| (a, tau.apply(b - 1) + 1)))
}

/// `(a, b) -> (beta(a), b)` on every column.
pub fn permute_rows(layout: MatrixLayout, beta: &Permutation) -> Result<Permutation> {
    check_inner(beta, layout.rows(), "row permutation")?;
    Ok(relabel(layout, |a, b| (beta.apply(a - 1) + 1, b)))
}

/// `(row, b) -> (row, sigma(b))`; other rows fixed.
pub fn permute_within_row(
    layout: MatrixLayout,
    row: usize,
    sigma: &Permutation,
) -> Result<Permutation> {
    check_inner(sigma, layout.cols(), "row action")?;
    if !(1..=layout.rows()).contains(&row) {
        return Err(Error::InvalidParameter(format!(
            "row {row} outside 1..={}",
            layout.rows()
        )));
    }
    Ok(relabel(layout, |a, b| {
        if a == row {
            (a, sigma.apply(b - 1) + 1)
        } else {
            (a, b)
        }
    }))
}

/// `(a, col) -> (rho(a), col)`; other columns fixed.
pub fn permute_within_column(
    layout: MatrixLayout,
    col: usize,
    rho: &Permutation,
) -> Result<Permutation> {
    check_inner(rho, layout.rows(), "column action")?;
    if !(1..=layout.cols()).contains(&col) {
        return Err(Error::InvalidParameter(format!(
            "column {col} outside 1..={}",
            layout.cols()
        )));
    }
    Ok(relabel(layout, |a, b| {
        if b == col {
            (rho.apply(a - 1) + 1, b)
        } else {
            (a, b)
        }
    }))
}

/// For each column `i` of the `k x n` block layout, the row cycle
/// `(i, n+i, ..., (k-1)n+i)` and the transposition `(i, n+i)`. For `k = 2` the two coincide
/// and only one copy is returned.
pub fn block_row_generators(k: usize, n: usize) -> Result<Vec<Permutation>> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "block rows need k >= 2, got {k}"
        )));
    }
    if n < 1 {
        return Err(Error::ZeroLength);
    }
    let layout = MatrixLayout::BlockRows { rows: k, cols: n };
    let cycle = shift(k);
    let swap = Permutation::from_cycles(k, &[[1, 2]])?;
    let mut out = Vec::with_capacity(2 * n);
    for i in 1..=n {
        out.push(permute_within_column(layout, i, &cycle)?);
        if k > 2 {
            out.push(permute_within_column(layout, i, &swap)?);
        }
    }
    Ok(out)
}

/// `tau` applied to each of the `k` consecutive length-`n` blocks:
/// `j + i*n -> tau(j) + i*n`.
pub fn lifted_column_perm(tau: &Permutation, k: usize) -> Result<Permutation> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    permute_columns(
        MatrixLayout::BlockRows {
            rows: k,
            cols: tau.degree(),
        },
        tau,
    )
}

/// `sigma` acting on the odd (`row = 1`) or even (`row = 2`) coordinates of a word of
/// length `2p`: `2j-1 -> 2sigma(j)-1`, respectively `2j -> 2sigma(j)`.
pub fn interleaved_lift(sigma: &Permutation, row: usize) -> Result<Permutation> {
    if row != 1 && row != 2 {
        return Err(Error::InvalidParameter(format!(
            "interleaved row must be 1 or 2, got {row}"
        )));
    }
    permute_within_row(
        MatrixLayout::ResidueRows {
            rows: 2,
            cols: sigma.degree(),
        },
        row,
        sigma,
    )
}

/// `(1,2)(3,4)...(2p-1,2p)`.
pub fn pair_swap(p: usize) -> Permutation {
    let layout = MatrixLayout::ResidueRows { rows: 2, cols: p };
    relabel(layout, |a, b| (3 - a, b))
}

fn residue_layout(p: usize, n: u32, m: u32) -> Result<MatrixLayout> {
    if p < 2 || m >= n {
        return Err(Error::InvalidParameter(format!(
            "residue layout needs p >= 2 and 0 <= m < n, got p={p}, n={n}, m={m}"
        )));
    }
    let rows = p
        .checked_pow(m)
        .ok_or_else(|| Error::InvalidParameter("p^m overflows".into()))?;
    let cols = p
        .checked_pow(n - m)
        .ok_or_else(|| Error::InvalidParameter("p^(n-m) overflows".into()))?;
    Ok(MatrixLayout::ResidueRows { rows, cols })
}

/// On a word of length `p^n` viewed as `p^m` residue rows of length `p^(n-m)`,
/// `alpha` acts on row `row`: `row + (b-1)p^m -> row + (alpha(b)-1)p^m`.
pub fn residue_lift(
    alpha: &Permutation,
    row: usize,
    p: usize,
    n: u32,
    m: u32,
) -> Result<Permutation> {
    permute_within_row(residue_layout(p, n, m)?, row, alpha)
}

/// Permutes the `p^m` residue rows: `a + (b-1)p^m -> beta(a) + (b-1)p^m`.
pub fn row_permutation(beta: &Permutation, p: usize, n: u32, m: u32) -> Result<Permutation> {
    permute_rows(residue_layout(p, n, m)?, beta)
}

/// The multiplier `i -> a*i mod n` on 0-based residues (`c(x) -> c(x^a)` on words).
pub fn multiplier(a: usize, n: usize) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    if gcd(a % n, n) != 1 {
        return Err(Error::InvalidParameter(format!(
            "multiplier {a} is not a unit modulo {n}"
        )));
    }
    let images = (0..n).map(|i| ((a * i) % n) as u32).collect();
    Ok(Permutation::from_images_unchecked(images))
}

/// Units `a` modulo `n` whose multiplier is an automorphism of `code`, ascending.
pub fn multiplier_subgroup(code: &CyclicCode) -> Vec<usize> {
    let n = code.length();
    if n == 1 {
        return vec![1];
    }
    (1..n)
        .filter(|&a| gcd(a, n) == 1)
        .filter(|&a| {
            let m = multiplier(a, n).expect("unit");
            verify::is_automorphism(code, &m).expect("matching degree")
        })
        .collect()
}

/// A permutation tagged with the construction that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub perm: Permutation,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.label, self.perm)
    }
}

/// Where the inner group of a lift comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum InnerGroup {
    /// Literal permutations in cycle notation on `degree` points.
    Perms { degree: usize, cycles: Vec<String> },
    /// Generators of the brute-forced automorphism group of a short code.
    Brute { n: usize, generator: String },
    /// The shift together with every automorphic multiplier of a code.
    ShiftMultipliers { n: usize, generator: String },
    /// The full symmetric group on the given number of points.
    Symmetric(usize),
    /// Generators produced by a nested construction for a code of length `n`.
    Construct {
        n: usize,
        generator: String,
        construction: Vec<ConstructionSpec>,
    },
}

impl InnerGroup {
    /// A generating set on `degree` points.
    pub fn generators(&self, degree: usize, max_n: usize) -> Result<Vec<Permutation>> {
        let check_len = |n: usize| -> Result<()> {
            if n != degree {
                return Err(Error::InvalidParameter(format!(
                    "inner group acts on {n} points where {degree} are needed"
                )));
            }
            Ok(())
        };
        let gens = match self {
            Self::Perms { degree: d, cycles } => {
                check_len(*d)?;
                cycles
                    .iter()
                    .map(|t| Permutation::parse_cycles(t, degree))
                    .collect::<Result<Vec<_>>>()?
            }
            Self::Brute { n, generator } => {
                check_len(*n)?;
                let code = CyclicCode::new(*n, Gf2Poly::parse_product(generator)?)?;
                let all = verify::brute_force_aut(&code, max_n)?;
                PermGroup::new(*n, &all)?.generators().to_vec()
            }
            Self::ShiftMultipliers { n, generator } => {
                check_len(*n)?;
                let code = CyclicCode::new(*n, Gf2Poly::parse_product(generator)?)?;
                shift_multiplier_generators(&code)
            }
            Self::Symmetric(n) => {
                check_len(*n)?;
                PermGroup::symmetric(*n).generators().to_vec()
            }
            Self::Construct {
                n,
                generator,
                construction,
            } => {
                check_len(*n)?;
                let code = CyclicCode::new(*n, Gf2Poly::parse_product(generator)?)?;
                let mut gens = Vec::new();
                for spec in construction {
                    for g in spec.instantiate(*n, max_n)? {
                        if !verify::is_automorphism(&code, &g.perm)? {
                            return Err(Error::InvalidParameter(format!(
                                "nested generator {g} is not an automorphism of C({n}, {generator})"
                            )));
                        }
                        gens.push(g.perm);
                    }
                }
                PermGroup::new(*n, &gens)?.generators().to_vec()
            }
        };
        Ok(gens)
    }

    /// Number of points the inner group acts on.
    pub fn degree(&self) -> usize {
        match self {
            Self::Perms { degree: n, .. }
            | Self::Brute { n, .. }
            | Self::ShiftMultipliers { n, .. }
            | Self::Symmetric(n)
            | Self::Construct { n, .. } => *n,
        }
    }

    fn describe(&self) -> String {
        match self {
            Self::Perms { cycles, .. } => format!("perms[{}]", cycles.len()),
            Self::Brute { n, generator } => format!("Aut C({n}, {generator})"),
            Self::ShiftMultipliers { n, generator } => {
                format!("shift+multipliers C({n}, {generator})")
            }
            Self::Symmetric(n) => format!("S{n}"),
            Self::Construct { n, generator, .. } => format!("constructed C({n}, {generator})"),
        }
    }
}

/// The shift plus the multipliers preserving `code`, reduced to a non-redundant list.
pub fn shift_multiplier_generators(code: &CyclicCode) -> Vec<Permutation> {
    let n = code.length();
    let mut gens = vec![shift(n)];
    gens.extend(
        multiplier_subgroup(code)
            .into_iter()
            .filter(|&a| a != 1)
            .map(|a| multiplier(a, n).expect("unit")),
    );
    PermGroup::new(n, &gens)
        .expect("uniform degree")
        .generators()
        .to_vec()
}

/// A serialisable family of generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ConstructionSpec {
    Shift {
        n: usize,
    },
    Multiplier {
        a: usize,
        n: usize,
    },
    PairSwap {
        p: usize,
    },
    /// Row cycles and transpositions inside each column of the `k x n` block layout.
    BlockRows {
        k: usize,
        n: usize,
    },
    /// The inner group applied to all `k` blocks at once.
    LiftedColumn {
        k: usize,
        inner: InnerGroup,
    },
    /// The inner group on odd (row 1) or even (row 2) coordinates; both when `row` is absent.
    InterleavedLift {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        row: Option<usize>,
        inner: InnerGroup,
    },
    /// The inner group on one residue row of the `p^m x p^(n-m)` layout; every row when
    /// `row` is absent.
    ResidueLift {
        p: usize,
        n: u32,
        m: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        row: Option<usize>,
        inner: InnerGroup,
    },
    /// The inner group (on `p^m` points) permuting the residue rows.
    RowPermutation {
        p: usize,
        n: u32,
        m: u32,
        inner: InnerGroup,
    },
}

impl ConstructionSpec {
    /// Instantiates the family for a code of the given length.
    pub fn instantiate(&self, length: usize, max_n: usize) -> Result<Vec<Generator>> {
        let gens = self.build(max_n)?;
        for g in &gens {
            if g.perm.degree() != length {
                return Err(Error::InvalidParameter(format!(
                    "{} has degree {}, but the code has length {length}",
                    g.label,
                    g.perm.degree()
                )));
            }
        }
        Ok(gens)
    }

    fn build(&self, max_n: usize) -> Result<Vec<Generator>> {
        let tag = |label: String, perm: Permutation| Generator { label, perm };
        Ok(match self {
            Self::Shift { n } => vec![tag(format!("shift({n})"), shift(*n))],
            Self::Multiplier { a, n } => {
                vec![tag(format!("multiplier({a} mod {n})"), multiplier(*a, *n)?)]
            }
            Self::PairSwap { p } => vec![tag(format!("pair_swap({p})"), pair_swap(*p))],
            Self::BlockRows { k, n } => block_row_generators(*k, *n)?
                .into_iter()
                .enumerate()
                .map(|(i, p)| tag(format!("block_rows(k={k},n={n})#{}", i + 1), p))
                .collect(),
            Self::LiftedColumn { k, inner } => inner
                .generators(inner.degree(), max_n)?
                .into_iter()
                .map(|tau| {
                    Ok(tag(
                        format!("lifted_column(k={k}, {}: {tau})", inner.describe()),
                        lifted_column_perm(&tau, *k)?,
                    ))
                })
                .collect::<Result<_>>()?,
            Self::InterleavedLift { row, inner } => {
                let p = inner.degree();
                let rows = row.map_or(vec![1, 2], |r| vec![r]);
                let sigmas = inner.generators(p, max_n)?;
                let mut out = Vec::new();
                for r in rows {
                    for sigma in &sigmas {
                        out.push(tag(
                            format!("interleaved_lift(row={r}, {}: {sigma})", inner.describe()),
                            interleaved_lift(sigma, r)?,
                        ));
                    }
                }
                out
            }
            Self::ResidueLift {
                p,
                n,
                m,
                row,
                inner,
            } => {
                let layout = residue_layout(*p, *n, *m)?;
                let rows = row.map_or_else(|| (1..=layout.rows()).collect(), |r| vec![r]);
                let alphas = inner.generators(layout.cols(), max_n)?;
                let mut out = Vec::new();
                for r in rows {
                    for alpha in &alphas {
                        out.push(tag(
                            format!("residue_lift(p={p},n={n},m={m},row={r}, {alpha})"),
                            residue_lift(alpha, r, *p, *n, *m)?,
                        ));
                    }
                }
                out
            }
            Self::RowPermutation { p, n, m, inner } => {
                let layout = residue_layout(*p, *n, *m)?;
                inner
                    .generators(layout.rows(), max_n)?
                    .into_iter()
                    .map(|beta| {
                        Ok(tag(
                            format!("row_permutation(p={p},n={n},m={m}, {beta})"),
                            row_permutation(&beta, *p, *n, *m)?,
                        ))
                    })
                    .collect::<Result<_>>()?
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{brute_force_aut, is_automorphism, DEFAULT_MAX_N};
    use num_bigint::BigUint;

    fn c(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    fn code(n: usize, g: &str) -> CyclicCode {
        CyclicCode::new(n, Gf2Poly::parse_product(g).unwrap()).unwrap()
    }

    #[test]
    fn shifts() {
        assert_eq!(shift(3), c("(1,2,3)", 3));
        assert!(shift(1).is_identity());
        let s14 = shift(14);
        assert_eq!(
            s14.pow(7),
            c("(1,8)(2,9)(3,10)(4,11)(5,12)(6,13)(7,14)", 14)
        );
    }

    #[test]
    fn block_rows() {
        let gens: Vec<String> = block_row_generators(2, 7)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(
            gens,
            ["(1,8)", "(2,9)", "(3,10)", "(4,11)", "(5,12)", "(6,13)", "(7,14)"]
        );
        assert_eq!(
            block_row_generators(3, 1).unwrap(),
            vec![c("(1,2,3)", 3), c("(1,2)", 3)]
        );
        let g = PermGroup::new(14, &block_row_generators(2, 7).unwrap()).unwrap();
        assert_eq!(g.order(), BigUint::from(128u32));
        assert!(block_row_generators(1, 7).is_err());
        assert_eq!(block_row_generators(4, 3).unwrap()[0], c("(1,4,7,10)", 12));
    }

    #[test]
    fn lifted_columns() {
        assert_eq!(
            lifted_column_perm(&shift(7), 2).unwrap(),
            c("(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)", 14)
        );
        assert!(lifted_column_perm(&Permutation::identity(5), 3)
            .unwrap()
            .is_identity());
    }

    #[test]
    fn lifted_hamming_automorphisms_preserve_the_long_code() {
        let short = code(7, "x^3+x+1");
        let long = code(14, "x^3+x+1");
        for tau in brute_force_aut(&short, DEFAULT_MAX_N).unwrap() {
            assert!(is_automorphism(&long, &lifted_column_perm(&tau, 2).unwrap()).unwrap());
        }
        // and conversely a non-automorphism lifts to a non-automorphism
        let bad = c("(1,2)", 7);
        assert!(!is_automorphism(&long, &lifted_column_perm(&bad, 2).unwrap()).unwrap());
    }

    #[test]
    fn interleaving() {
        let s = shift(7);
        assert_eq!(interleaved_lift(&s, 1).unwrap(), c("(1,3,5,7,9,11,13)", 14));
        assert_eq!(
            interleaved_lift(&s, 2).unwrap(),
            c("(2,4,6,8,10,12,14)", 14)
        );
        let both = interleaved_lift(&s, 1)
            .unwrap()
            .compose(&interleaved_lift(&s, 2).unwrap())
            .unwrap();
        assert_eq!(both, shift(14).pow(2));
        assert!(interleaved_lift(&s, 3).is_err());
    }

    #[test]
    fn pair_swaps() {
        assert_eq!(pair_swap(2), c("(1,2)(3,4)", 4));
        assert!(pair_swap(7).pow(2).is_identity());
        assert!(is_automorphism(&code(14, "(x^3+x+1)^2"), &pair_swap(7)).unwrap());
    }

    #[test]
    fn residue_lifts() {
        assert_eq!(
            residue_lift(&shift(7), 1, 7, 2, 1).unwrap(),
            c("(1,8,15,22,29,36,43)", 49)
        );
        assert!(residue_lift(&Permutation::identity(7), 4, 7, 2, 1)
            .unwrap()
            .is_identity());
        assert_eq!(
            residue_lift(&shift(3), 2, 3, 2, 1).unwrap(),
            c("(2,5,8)", 9)
        );
        assert!(residue_lift(&shift(7), 8, 7, 2, 1).is_err());
        assert!(residue_lift(&shift(7), 1, 7, 2, 2).is_err());
        assert!(residue_lift(&shift(6), 1, 7, 2, 1).is_err());
    }

    #[test]
    fn row_permutations() {
        assert_eq!(
            row_permutation(&c("(1,2)", 7), 7, 2, 1).unwrap(),
            c("(1,2)(8,9)(15,16)(22,23)(29,30)(36,37)(43,44)", 49)
        );
        assert!(row_permutation(&Permutation::identity(7), 7, 2, 1)
            .unwrap()
            .is_identity());
        let interleaved = MatrixLayout::ResidueRows { rows: 2, cols: 7 };
        assert_eq!(
            permute_rows(interleaved, &c("(1,2)", 2)).unwrap(),
            pair_swap(7)
        );
        assert_eq!(
            row_permutation(&c("(1,2)", 2), 2, 1, 0).unwrap_err(),
            Error::InvalidParameter("row permutation must act on 1 points, got degree 2".into())
        );
    }

    #[test]
    fn rows_normalize_residue_lifts() {
        let alpha = c("(1,3,2,7)", 7);
        for beta in [c("(1,2)", 7), c("(1,5,3)(2,7)", 7), shift(7)] {
            let rp = row_permutation(&beta, 7, 2, 1).unwrap();
            for a in 1..=7 {
                let lhs = rp
                    .compose(&residue_lift(&alpha, a, 7, 2, 1).unwrap())
                    .unwrap()
                    .compose(&rp.inverse())
                    .unwrap();
                let rhs = residue_lift(&alpha, beta.apply(a - 1) + 1, 7, 2, 1).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn multipliers() {
        assert!(multiplier(1, 7).unwrap().is_identity());
        let hamming = code(7, "x^3+x+1");
        let m2 = multiplier(2, 7).unwrap();
        let image = m2.apply_to_word(&"1101000".parse().unwrap()).unwrap();
        assert_eq!(image.to_string(), "1010001");
        assert!(hamming.contains(&image).unwrap());
        assert!(!is_automorphism(&hamming, &multiplier(3, 7).unwrap()).unwrap());
        assert!(multiplier(7, 14).is_err());
        assert!(multiplier(2, 14).is_err());
        assert_eq!(multiplier_subgroup(&hamming), vec![1, 2, 4]);
    }

    #[test]
    fn multiplier_subgroups_of_length_31() {
        let two = code(31, "(x^5+x^2+1)(x^5+x^3+1)");
        let units = multiplier_subgroup(&two);
        assert_eq!(units.len(), 10);
        assert!(units.contains(&2) && units.contains(&30));
        let three = code(31, "(x^5+x^2+1)(x^5+x^3+1)(x^5+x^3+x^2+x+1)");
        assert_eq!(multiplier_subgroup(&three).len(), 5);

        let g = PermGroup::new(31, &shift_multiplier_generators(&two)).unwrap();
        assert_eq!(g.order(), BigUint::from(310u32));
    }

    #[test]
    fn spec_round_trip_through_json() {
        let spec = ConstructionSpec::InterleavedLift {
            row: None,
            inner: InnerGroup::Brute {
                n: 7,
                generator: "x^3+x+1".into(),
            },
        };
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(
            text,
            r#"{"kind":"interleaved_lift","inner":{"brute":{"n":7,"generator":"x^3+x+1"}}}"#
        );
        assert_eq!(
            serde_json::from_str::<ConstructionSpec>(&text).unwrap(),
            spec
        );

        let gens = spec.instantiate(14, DEFAULT_MAX_N).unwrap();
        assert!(!gens.is_empty());
        assert!(spec.instantiate(15, DEFAULT_MAX_N).is_err());
    }

    #[test]
    fn literal_inner_permutations() {
        let spec: ConstructionSpec = serde_json::from_str(
            r#"{"kind":"lifted_column","k":2,"inner":{"perms":{"degree":7,"cycles":["(1,2,3,4,5,6,7)"]}}}"#,
        )
        .unwrap();
        let gens = spec.instantiate(14, DEFAULT_MAX_N).unwrap();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].perm, c("(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)", 14));
    }
}
