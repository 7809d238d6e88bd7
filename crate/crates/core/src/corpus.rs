//! Deterministic random semigroups for cross-validation runs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::gcd_all;
use crate::semigroup::{Generators, Semigroup};

#[derive(Debug, Clone, Copy)]
pub struct CorpusSpec {
    pub max_multiplicity: u64,
    pub max_generator: u64,
    pub min_embedding_dimension: usize,
    pub max_embedding_dimension: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            max_multiplicity: 20,
            max_generator: 150,
            min_embedding_dimension: 2,
            max_embedding_dimension: 5,
        }
    }
}

/// `count` distinct semigroups drawn with a seeded generator. The embedding
/// dimension is drawn uniformly from the requested range (before the cap by
/// the multiplicity); multiplicity and generators respect the caps.
pub fn random_semigroups(seed: u64, count: usize, spec: CorpusSpec) -> Vec<Semigroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Semigroup> = Vec::with_capacity(count);
    while out.len() < count {
        let e = rng.gen_range(2..=spec.max_multiplicity);
        let upper = spec.max_embedding_dimension.min(e as usize);
        if upper < spec.min_embedding_dimension {
            continue;
        }
        let nu = rng.gen_range(spec.min_embedding_dimension..=upper);
        // One candidate per residue class keeps the draw close to minimal.
        // Small multipliers give generators near e, where factorizations
        // collide and the maximal denumerant gets interesting.
        let mut classes: Vec<u64> = (1..e).collect();
        classes.shuffle(&mut rng);
        let cap = if rng.gen_bool(0.3) { u64::MAX } else { rng.gen_range(1..=3) };
        let mut gens = vec![e];
        for &r in classes.iter().take(nu - 1) {
            let top = (spec.max_generator - r) / e;
            if top < 1 {
                continue;
            }
            gens.push(r + e * rng.gen_range(1..=top.min(cap)));
        }
        if gcd_all(&gens) != 1 {
            continue;
        }
        let Ok(s) = Semigroup::new(&gens) else {
            continue;
        };
        if s.embedding_dimension() != nu {
            continue;
        }
        if out.iter().any(|t| t.generators() == s.generators()) {
            continue;
        }
        out.push(s);
    }
    out
}
