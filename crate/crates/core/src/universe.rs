//! Test universes: every hereditary hypergraph on a few vertices, and seeded
//! random samples on more.

use alloc::vec::Vec;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hypergraph::HereditaryHypergraph;
use crate::{Error, Result, VertexSet, MAX_VERTICES};

/// Largest `n` for exhaustive enumeration.
pub const MAX_EXHAUSTIVE_N: usize = 5;

/// Every antichain of nonempty subsets of `0..n` whose union is `0..n`, i.e.
/// every hereditary hypergraph on `n` labelled vertices, each exactly once.
///
/// Candidate subsets are considered in increasing bit order and each is
/// either taken (when incomparable with everything taken so far) or skipped,
/// so the output order is fixed.
pub fn enumerate_hereditary(n: usize) -> Result<Vec<HereditaryHypergraph>> {
    if n == 0 || n > MAX_EXHAUSTIVE_N {
        return Err(Error::TooLarge(n));
    }
    let full = VertexSet::full(n);
    let subsets: Vec<VertexSet> = full.subsets().skip(1).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    collect_antichains(&subsets, 0, &mut chosen, full, &mut out);
    Ok(out)
}

fn collect_antichains(
    subsets: &[VertexSet],
    i: usize,
    chosen: &mut Vec<VertexSet>,
    full: VertexSet,
    out: &mut Vec<HereditaryHypergraph>,
) {
    if i == subsets.len() {
        let covered = chosen.iter().fold(VertexSet::EMPTY, |a, s| a.union(*s));
        if covered == full {
            out.push(HereditaryHypergraph::from_hyperedges(full.len(), chosen).expect("covering antichain"));
        }
        return;
    }
    let s = subsets[i];
    if chosen.iter().all(|c| !s.is_subset(*c) && !c.is_subset(s)) {
        chosen.push(s);
        collect_antichains(subsets, i + 1, chosen, full, out);
        chosen.pop();
    }
    collect_antichains(subsets, i + 1, chosen, full, out);
}

/// How a test universe is produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub n: usize,
    pub mode: Mode,
    pub seed: u64,
    /// Instances drawn in random mode.
    pub sample_count: usize,
    /// Upper bound on the sampled subsets per random instance.
    pub max_generator_count: usize,
}

impl GeneratorConfig {
    pub fn exhaustive(n: usize) -> Self {
        GeneratorConfig { n, mode: Mode::Exhaustive, seed: 0, sample_count: 0, max_generator_count: 0 }
    }

    pub fn random(n: usize, seed: u64, sample_count: usize) -> Self {
        GeneratorConfig { n, mode: Mode::Random, seed, sample_count, max_generator_count: n.max(1) + 2 }
    }

    /// Exhaustive mode needs `1 ≤ n ≤ 5`; random mode `1 ≤ n ≤ 64` and at
    /// least one subset per instance.
    pub fn validate(&self) -> Result<()> {
        match self.mode {
            Mode::Exhaustive if self.n == 0 || self.n > MAX_EXHAUSTIVE_N => Err(Error::TooLarge(self.n)),
            Mode::Random if self.n > MAX_VERTICES => Err(Error::TooManyVertices(self.n)),
            Mode::Random if self.n == 0 => Err(Error::TooLarge(0)),
            Mode::Random if self.max_generator_count == 0 => Err(Error::BadK(0)),
            _ => Ok(()),
        }
    }

    /// The universe described by this configuration.
    pub fn instances(&self) -> Result<Vec<HereditaryHypergraph>> {
        self.validate()?;
        match self.mode {
            Mode::Exhaustive => enumerate_hereditary(self.n),
            Mode::Random => Ok(random_hereditary(self).take(self.sample_count).collect()),
        }
    }
}

/// Seeded stream of random hereditary hypergraphs on `0..n`.
///
/// Each instance draws `k` uniform in `1..=max_generator_count` subsets. A
/// subset's size starts at 1 and grows by one with probability 0.55 at a
/// time (capped at `n`), so sizes are roughly geometric with mean a bit over
/// two; its members are uniform among subsets of that size. Vertices left
/// uncovered get singletons, and the list is reduced to its antichain.
pub fn random_hereditary(cfg: &GeneratorConfig) -> RandomHereditary {
    RandomHereditary {
        rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        n: cfg.n.clamp(1, MAX_VERTICES),
        max_sets: cfg.max_generator_count.max(1),
    }
}

#[derive(Clone, Debug)]
pub struct RandomHereditary {
    rng: ChaCha8Rng,
    n: usize,
    max_sets: usize,
}

impl RandomHereditary {
    /// One random subset drawn as described on [`random_hereditary`].
    pub fn random_subset(&mut self) -> VertexSet {
        let mut size = 1;
        while size < self.n && self.rng.gen_bool(0.55) {
            size += 1;
        }
        index::sample(&mut self.rng, self.n, size).into_iter().collect()
    }
}

impl Iterator for RandomHereditary {
    type Item = HereditaryHypergraph;

    fn next(&mut self) -> Option<HereditaryHypergraph> {
        let k = self.rng.gen_range(1..=self.max_sets);
        let mut sets: Vec<VertexSet> = (0..k).map(|_| self.random_subset()).collect();
        let covered = sets.iter().fold(VertexSet::EMPTY, |a, s| a.union(*s));
        sets.extend(VertexSet::full(self.n).difference(covered).iter().map(VertexSet::singleton));
        Some(HereditaryHypergraph::from_hyperedges(self.n, &sets).expect("covering by construction"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_hereditary(1).unwrap().len(), 1);
        let two = enumerate_hereditary(2).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two.contains(&HereditaryHypergraph::singletons(2).unwrap()));
        assert_eq!(enumerate_hereditary(6).err(), Some(Error::TooLarge(6)));
        assert_eq!(enumerate_hereditary(0).err(), Some(Error::TooLarge(0)));
    }

    #[test]
    fn random_stream_is_reproducible() {
        let cfg = GeneratorConfig::random(8, 7, 20);
        let a = cfg.instances().unwrap();
        let b = cfg.instances().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 20);
        let c = GeneratorConfig::random(8, 8, 20).instances().unwrap();
        assert_ne!(a, c);
    }
}
