//! Permutations of coordinate sets.
//!
//! Points are 0-based internally and 1-based in cycle notation. Composition applies the
//! right factor first: `a.compose(&b)` maps `i` to `a(b(i))`. A permutation acts on a word
//! by moving the bit at coordinate `i` to coordinate `p(i)`, which makes `(1,2,...,n)` the
//! right cyclic shift `(c_0, ..., c_{n-1}) -> (c_{n-1}, c_0, ..., c_{n-2})`.

use std::fmt;

use crate::code::Codeword;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// From 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen
                .get_mut(i as usize)
                .ok_or_else(|| Error::NotABijection(format!("image {} out of range", i + 1)))?;
            if std::mem::replace(slot, true) {
                return Err(Error::NotABijection(format!("image {} repeated", i + 1)));
            }
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Self { images }
    }

    /// Builds a permutation from 1-based cycles; the cycles must be disjoint.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (idx, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > degree {
                    return Err(Error::NotABijection(format!(
                        "point {pt} outside 1..={degree}"
                    )));
                }
                if std::mem::replace(&mut used[pt - 1], true) {
                    return Err(Error::NotABijection(format!("point {pt} repeated")));
                }
                let next = cycle[(idx + 1) % cycle.len()];
                images[pt - 1] = (next - 1) as u32;
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of a 0-based point.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// 1-based one-line form.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self ∘ other`, i.e. `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_degree(other.degree())?;
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Self {
            images: other
                .images
                .iter()
                .map(|&j| self.images[j as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Self { images: inv }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::identity(self.degree());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            e >>= 1;
        }
        out
    }

    /// Smallest 0-based point not fixed.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .position(|(i, &j)| i as u32 != j)
    }

    /// Disjoint nontrivial cycles (1-based), each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.apply(i);
            }
            out.push(cycle);
        }
        out
    }

    /// Parses cycle notation such as `(1,2,3)(4,5)` or `()` on `degree` points.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let err = |reason: String| Error::CycleParse {
            text: text.to_string(),
            reason,
        };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input".into()));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .ok_or_else(|| err("expected '('".into()))?;
            let close = inner
                .find(')')
                .ok_or_else(|| err("unbalanced parenthesis".into()))?;
            let body = &inner[..close];
            rest = &inner[close + 1..];
            if body.is_empty() {
                continue;
            }
            let cycle = body
                .split(',')
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| err(format!("bad point {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
        }
        Self::from_cycles(degree, &cycles).map_err(|e| match e {
            Error::NotABijection(reason) => err(reason),
            other => other,
        })
    }

    /// Applies the permutation to a word: the bit at `i` moves to `self(i)`.
    pub fn apply_to_word(&self, w: &Codeword) -> Result<Codeword> {
        self.check_degree(w.len())?;
        let mut out = Codeword::zeros(w.len());
        for i in w.support() {
            out.set(self.apply(i), true);
        }
        Ok(out)
    }

    pub(crate) fn check_degree(&self, other: usize) -> Result<()> {
        if self.degree() != other {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, pt) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{pt}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{self}", self.degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    fn w(s: &str) -> Codeword {
        s.parse().unwrap()
    }

    #[test]
    fn composition_applies_right_factor_first() {
        assert!(c("(1,2)", 3).compose(&c("(1,2)", 3)).unwrap().is_identity());
        assert_eq!(
            c("(1,2,3)", 3).compose(&c("(1,2,3)", 3)).unwrap(),
            c("(1,3,2)", 3)
        );
        // (1,2)∘(2,3): 3 -> 2 -> 1, so 3 maps to 1.
        let ab = c("(1,2)", 3).compose(&c("(2,3)", 3)).unwrap();
        assert_eq!(ab.apply(2), 0);
        assert_eq!(ab, c("(1,2,3)", 3));
        let a = c("(1,4)(2,3)", 4);
        assert_eq!(a.compose(&Permutation::identity(4)).unwrap(), a);
        assert_eq!(
            a.compose(&Permutation::identity(5)),
            Err(Error::DegreeMismatch { left: 4, right: 5 })
        );
    }

    #[test]
    fn cycle_notation() {
        let p = c("(1,2,3)(4,5)", 5);
        assert_eq!(p.one_line(), vec![2, 3, 1, 5, 4]);
        assert!(c("()", 4).is_identity());
        assert_eq!(c("()", 4).to_string(), "()");
        assert_eq!(c("(2,14)", 14).to_string(), "(2,14)");
        assert_eq!(c("(4,5)(3,1,2)", 5).to_string(), "(1,2,3)(4,5)");
        assert_eq!(c("( 1, 2 ,3 )", 3).to_string(), "(1,2,3)");
        assert_eq!(c("(1)(2,3)", 3).to_string(), "(2,3)");
        for bad in [
            "(1,2,1)",
            "(1,2)(2,3)",
            "(0,1)",
            "(1,6)",
            "(1,2",
            "1,2)",
            "(a)",
            "",
        ] {
            assert!(
                matches!(
                    Permutation::parse_cycles(bad, 5),
                    Err(Error::CycleParse { .. })
                ),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn word_action() {
        let shift = c("(1,2,3,4,5,6,7)", 7);
        assert_eq!(shift.apply_to_word(&w("1101000")).unwrap(), w("0110100"));
        assert_eq!(
            Permutation::identity(7)
                .apply_to_word(&w("1101000"))
                .unwrap(),
            w("1101000")
        );
        assert_eq!(
            c("(1,2)", 7).apply_to_word(&w("1101000")).unwrap(),
            w("1101000")
        );
        assert!(shift.apply_to_word(&w("110100")).is_err());
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    fn arb_word(n: usize) -> impl Strategy<Value = Codeword> {
        proptest::collection::vec(any::<bool>(), n).prop_map(|bits| Codeword::from_bits(&bits))
    }

    proptest! {
        #[test]
        fn action_is_compatible_with_composition(
            (a, b, word) in (1usize..40).prop_flat_map(|n| (arb_perm(n), arb_perm(n), arb_word(n)))
        ) {
            let ab = a.compose(&b).unwrap();
            let lhs = ab.apply_to_word(&word).unwrap();
            let rhs = a.apply_to_word(&b.apply_to_word(&word).unwrap()).unwrap();
            prop_assert_eq!(&lhs, &rhs);
            prop_assert_eq!(lhs.weight(), word.weight());
            prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        }

        #[test]
        fn full_cycle_is_right_cyclic_shift(word in (1usize..80).prop_flat_map(arb_word)) {
            let n = word.len();
            let cycle: Vec<usize> = (1..=n).collect();
            let shift = Permutation::from_cycles(n, &[cycle]).unwrap();
            prop_assert_eq!(shift.apply_to_word(&word).unwrap(), word.cyclic_shift(1));
        }

        #[test]
        fn cycle_text_round_trips(p in (1usize..30).prop_flat_map(arb_perm)) {
            let text = p.to_string();
            prop_assert_eq!(Permutation::parse_cycles(&text, p.degree()).unwrap(), p);
        }
    }
}
