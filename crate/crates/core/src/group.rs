//! Permutation groups via a deterministic Schreier-Sims stabilizer chain.
//!
//! The chain is built incrementally. Each level stores its base point, the strong
//! generators that fix all earlier base points, the basic orbit and an explicit transversal
//! (`reps[i]` maps the base point to `orbit[i]`). For every level we record how many orbit
//! points each generator has been paired with, so a Schreier generator is sifted exactly
//! once even as orbits and generator lists grow. Transversals are append-only, which keeps
//! earlier Schreier generators valid.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::perm::Permutation;

const ABSENT: u32 = u32::MAX;

#[derive(Clone)]
struct Level {
    base: usize,
    gens: Vec<usize>,
    tested: Vec<usize>,
    orbit: Vec<u32>,
    slot: Vec<u32>,
    reps: Vec<Permutation>,
    inv_reps: Vec<Permutation>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut slot = vec![ABSENT; degree];
        slot[base] = 0;
        Self {
            base,
            gens: Vec::new(),
            tested: Vec::new(),
            orbit: vec![base as u32],
            slot,
            reps: vec![Permutation::identity(degree)],
            inv_reps: vec![Permutation::identity(degree)],
        }
    }

    fn add_generator(&mut self, index: usize, strong: &[Permutation]) {
        self.gens.push(index);
        self.tested.push(0);
        let mut i = 0;
        while i < self.orbit.len() {
            let gamma = self.orbit[i] as usize;
            for &g in &self.gens {
                let s = &strong[g];
                let delta = s.apply(gamma);
                if self.slot[delta] == ABSENT {
                    let rep = s.compose_unchecked(&self.reps[i]);
                    self.slot[delta] = self.orbit.len() as u32;
                    self.orbit.push(delta as u32);
                    self.inv_reps.push(rep.inverse());
                    self.reps.push(rep);
                }
            }
            i += 1;
        }
    }
}

/// A finitely generated permutation group with a complete stabilizer chain.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("base", &self.base())
            .finish()
    }
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            generators: Vec::new(),
            strong: Vec::new(),
            levels: Vec::new(),
        }
    }

    /// Builds the group generated by `gens` on `degree` points. Generators already in the
    /// group generated by their predecessors are dropped from [`Self::generators`].
    pub fn new(degree: usize, gens: &[Permutation]) -> Result<Self> {
        let mut group = Self::trivial(degree);
        for g in gens {
            group.add_generator(g)?;
        }
        Ok(group)
    }

    /// Like [`Self::new`], taking the degree from the first generator.
    pub fn from_generators(gens: &[Permutation]) -> Result<Self> {
        let degree = gens.first().map_or(0, Permutation::degree);
        Self::new(degree, gens)
    }

    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::from_cycles(degree, &[[1, 2]]).unwrap());
            let cycle: Vec<usize> = (1..=degree).collect();
            gens.push(Permutation::from_cycles(degree, &[cycle]).unwrap());
        }
        Self::new(degree, &gens).unwrap()
    }

    /// Adds a generator; returns `false` if it was already a member.
    pub fn add_generator(&mut self, g: &Permutation) -> Result<bool> {
        g.check_degree(self.degree)?;
        let mut h = g.images().to_vec();
        let drop = self.sift_in_place(&mut h, 0);
        if drop == self.levels.len() && is_identity(&h) {
            return Ok(false);
        }
        self.generators.push(g.clone());
        self.install(Permutation::from_images_unchecked(h), 0, drop);
        self.complete();
        Ok(true)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The non-redundant input generators.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    /// Base points (0-based).
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Exact order: the product of the basic orbit lengths.
    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| {
            acc * BigUint::from(l.orbit.len())
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn member(&self, p: &Permutation) -> Result<bool> {
        p.check_degree(self.degree)?;
        let mut h = p.images().to_vec();
        let drop = self.sift_in_place(&mut h, 0);
        Ok(drop == self.levels.len() && is_identity(&h))
    }

    /// A uniformly distributed element, deterministic in `seed`: the product of one
    /// uniformly chosen transversal element per level.
    pub fn random_element(&self, seed: u64) -> Permutation {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        self.random_element_with(&mut rng)
    }

    pub fn random_element_with<R: Rng>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in &self.levels {
            let i = rng.gen_range(0..level.reps.len());
            g = g.compose_unchecked(&level.reps[i]);
        }
        g
    }

    /// Every element, in no particular order. Intended for small groups.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.reps.len());
            for u in &level.reps {
                for g in &out {
                    next.push(u.compose_unchecked(g));
                }
            }
            out = next;
        }
        out
    }

    /// Sifts `h` through levels `from..`, returning the index of the first level whose
    /// orbit does not contain the image of its base point (or the chain length).
    fn sift_in_place(&self, h: &mut [u32], from: usize) -> usize {
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let b = h[level.base] as usize;
            let slot = level.slot[b];
            if slot == ABSENT {
                return j;
            }
            if b != level.base {
                let inv = level.inv_reps[slot as usize].images();
                for x in h.iter_mut() {
                    *x = inv[*x as usize];
                }
            }
        }
        self.levels.len()
    }

    /// Records `g` as a strong generator of levels `from..=to`, opening a new level when
    /// `to` is past the end of the chain.
    fn install(&mut self, g: Permutation, from: usize, to: usize) {
        if to == self.levels.len() {
            let base = g.first_moved().expect("nontrivial residue");
            self.levels.push(Level::new(base, self.degree));
        }
        let index = self.strong.len();
        self.strong.push(g);
        for level in &mut self.levels[from..=to] {
            level.add_generator(index, &self.strong);
        }
    }

    fn complete(&mut self) {
        let mut scratch = vec![0u32; self.degree];
        'restart: loop {
            for i in (0..self.levels.len()).rev() {
                if let Some((residue, drop)) = self.untested_schreier_failure(i, &mut scratch) {
                    self.install(residue, i + 1, drop);
                    continue 'restart;
                }
            }
            return;
        }
    }

    /// Tests the pending Schreier generators of level `i`; returns the first one that does
    /// not sift through the levels below, as a residue with the level it dropped out at.
    fn untested_schreier_failure(
        &mut self,
        i: usize,
        scratch: &mut [u32],
    ) -> Option<(Permutation, usize)> {
        for gi in 0..self.levels[i].gens.len() {
            loop {
                let level = &self.levels[i];
                let pt = level.tested[gi];
                if pt >= level.orbit.len() {
                    break;
                }
                self.levels[i].tested[gi] += 1;
                let level = &self.levels[i];
                let s = self.strong[level.gens[gi]].images();
                let delta = s[level.orbit[pt] as usize] as usize;
                let rep = level.reps[pt].images();
                let inv = level.inv_reps[level.slot[delta] as usize].images();
                // u_delta^-1 ∘ s ∘ u_gamma
                for (x, out) in scratch.iter_mut().enumerate() {
                    *out = inv[s[rep[x] as usize] as usize];
                }
                if is_identity(scratch) {
                    continue;
                }
                let drop = self.sift_in_place(scratch, i + 1);
                if drop < self.levels.len() || !is_identity(scratch) {
                    return Some((Permutation::from_images_unchecked(scratch.to_vec()), drop));
                }
            }
        }
        None
    }
}

fn is_identity(h: &[u32]) -> bool {
    h.iter().enumerate().all(|(i, &j)| i as u32 == j)
}

/// Checks that a finite set of permutations is closed under composition and inverses.
/// Quadratic in the size of the set.
pub fn is_closed_set(elements: &[Permutation]) -> Result<bool> {
    let Some(first) = elements.first() else {
        return Ok(false);
    };
    let degree = first.degree();
    let set: std::collections::HashSet<&Permutation> = elements.iter().collect();
    for a in elements {
        a.check_degree(degree)?;
        if !set.contains(&a.inverse()) {
            return Ok(false);
        }
        for b in elements {
            if !set.contains(&a.compose(b)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn c(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    fn full_cycle(n: usize) -> Permutation {
        let cycle: Vec<usize> = (1..=n).collect();
        Permutation::from_cycles(n, &[cycle]).unwrap()
    }

    fn factorial(n: u32) -> BigUint {
        (1..=n).fold(BigUint::one(), |a, k| a * BigUint::from(k))
    }

    #[test]
    fn small_orders() {
        let s3 = PermGroup::new(3, &[c("(1,2)", 3), c("(1,2,3)", 3)]).unwrap();
        assert_eq!(s3.order(), BigUint::from(6u32));
        assert_eq!(PermGroup::new(5, &[]).unwrap().order(), BigUint::one());
        assert_eq!(PermGroup::symmetric(7).order(), BigUint::from(5040u32));

        let swaps: Vec<_> = (1..=7)
            .map(|i| c(&format!("({i},{})", i + 7), 14))
            .collect();
        assert_eq!(
            PermGroup::new(14, &swaps).unwrap().order(),
            BigUint::from(128u32)
        );

        assert_eq!(PermGroup::symmetric(30).order(), factorial(30));
        // A_n from 3-cycles
        let a6: Vec<_> = (3..=6).map(|k| c(&format!("(1,2,{k})"), 6)).collect();
        assert_eq!(
            PermGroup::new(6, &a6).unwrap().order(),
            BigUint::from(360u32)
        );
    }

    #[test]
    fn membership() {
        let s3 = PermGroup::new(3, &[c("(1,2)", 3), c("(1,2,3)", 3)]).unwrap();
        assert!(s3.member(&c("(1,3,2)", 3)).unwrap());
        let c3 = PermGroup::new(3, &[c("(1,2,3)", 3)]).unwrap();
        assert!(!c3.member(&c("(1,2)", 3)).unwrap());
        assert!(c3.member(&Permutation::identity(3)).unwrap());
        assert!(c3.member(&Permutation::identity(4)).is_err());
        assert!(PermGroup::new(3, &[c("(1,2)", 4)]).is_err());
    }

    #[test]
    fn redundant_generators_are_filtered() {
        let g = PermGroup::new(
            4,
            &[
                c("(1,2,3,4)", 4),
                c("(1,3)(2,4)", 4),
                c("(1,2)", 4),
                c("(3,4)", 4),
            ],
        )
        .unwrap();
        assert_eq!(g.order(), BigUint::from(24u32));
        assert_eq!(g.generators().len(), 2);
    }

    #[test]
    fn random_elements() {
        assert!(PermGroup::trivial(6).random_element(3).is_identity());
        let g = PermGroup::new(8, &[c("(1,2,3)(4,5)", 8), c("(5,6,7,8)", 8)]).unwrap();
        for seed in 0..50 {
            let x = g.random_element(seed);
            assert!(g.member(&x).unwrap());
            assert_eq!(x, g.random_element(seed));
        }
    }

    #[test]
    fn elements_enumerates_the_group() {
        let g = PermGroup::new(5, &[c("(1,2,3,4,5)", 5), c("(2,5)(3,4)", 5)]).unwrap();
        let els = g.elements();
        assert_eq!(els.len(), 10);
        assert!(is_closed_set(&els).unwrap());
    }

    #[test]
    fn cyclic_orders_up_to_100() {
        for n in 1..=100 {
            let g = PermGroup::new(n, &[full_cycle(n)]).unwrap();
            assert_eq!(g.order(), BigUint::from(n), "n={n}");
        }
    }

    #[test]
    fn wreath_product_order() {
        // S_3 wr S_4 on 12 points, block rows of length 3: order (3!)^4 * 4!
        let mut gens = Vec::new();
        for b in 0..4 {
            let base = 3 * b;
            gens.push(c(&format!("({},{})", base + 1, base + 2), 12));
            gens.push(c(&format!("({},{},{})", base + 1, base + 2, base + 3), 12));
        }
        gens.push(c("(1,4)(2,5)(3,6)", 12));
        gens.push(c("(1,4,7,10)(2,5,8,11)(3,6,9,12)", 12));
        let g = PermGroup::new(12, &gens).unwrap();
        assert_eq!(g.order(), BigUint::from(6u32.pow(4) * 24));
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn closed_under_products(
            (gens, seed) in (2usize..9).prop_flat_map(|n| {
                (proptest::collection::vec(arb_perm(n), 1..4), any::<u64>())
            })
        ) {
            let g = PermGroup::from_generators(&gens).unwrap();
            for s in &gens {
                prop_assert!(g.member(s).unwrap());
            }
            let a = g.random_element(seed);
            let b = g.random_element(seed.wrapping_add(1));
            prop_assert!(g.member(&a.compose(&b).unwrap()).unwrap());
            prop_assert!(g.member(&a.inverse()).unwrap());
            // enumerated size agrees with the chain's order
            let els = g.elements();
            prop_assert_eq!(BigUint::from(els.len()), g.order());
            let unique: std::collections::HashSet<_> = els.iter().collect();
            prop_assert_eq!(unique.len(), els.len());
        }
    }
}
