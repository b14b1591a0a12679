//! Single-entry mutation harness for the validators: every mutation swaps
//! one table entry for a different parallel morphism, and the validators
//! must reject the result. Sampling is seeded and draws with replacement,
//! so a fixed seed yields the same mutation sequence on every run.

use crate::cat::{FinCategory, MorId, ObjId};
use crate::monoidal::{BraidingData, MonoidalData};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// Replace the result of one composition entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompMutation {
    pub f: MorId,
    pub g: MorId,
    pub new_index: usize,
}

/// All composition mutations, in canonical order.
pub fn comp_mutations(cat: &FinCategory) -> Vec<CompMutation> {
    let mut out = Vec::new();
    for f in cat.morphisms() {
        for d in cat.object_ids() {
            for g in cat.hom(f.dst, d) {
                let current = cat.comp_entry(f, g);
                for alt in 0..cat.hom_size(f.src, d) {
                    if alt != current {
                        out.push(CompMutation { f, g, new_index: alt });
                    }
                }
            }
        }
    }
    out
}

pub fn apply_comp(cat: &FinCategory, m: &CompMutation) -> FinCategory {
    cat.with_comp_entry(m.f, m.g, m.new_index)
}

/// Replace one associator component by a parallel morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocMutation {
    pub x: ObjId,
    pub y: ObjId,
    pub z: ObjId,
    pub replacement: MorId,
}

pub fn assoc_mutations(m: &MonoidalData) -> Vec<AssocMutation> {
    let cat = &m.cat;
    let mut out = Vec::new();
    for x in cat.object_ids() {
        for y in cat.object_ids() {
            for z in cat.object_ids() {
                let current = m.assoc_at(x, y, z);
                for cand in cat.hom(current.src, current.dst) {
                    if cand != current {
                        out.push(AssocMutation { x, y, z, replacement: cand });
                    }
                }
            }
        }
    }
    out
}

pub fn apply_assoc(m: &MonoidalData, mu: &AssocMutation) -> MonoidalData {
    m.with_assoc_entry(mu.x, mu.y, mu.z, mu.replacement)
}

/// Replace one braiding component by a parallel morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidMutation {
    pub x: ObjId,
    pub y: ObjId,
    pub replacement: MorId,
}

pub fn braid_mutations(b: &BraidingData) -> Vec<BraidMutation> {
    let cat = &b.base.cat;
    let mut out = Vec::new();
    for x in cat.object_ids() {
        for y in cat.object_ids() {
            let current = b.beta_at(x, y);
            for cand in cat.hom(current.src, current.dst) {
                if cand != current {
                    out.push(BraidMutation { x, y, replacement: cand });
                }
            }
        }
    }
    out
}

pub fn apply_braid(b: &BraidingData, mu: &BraidMutation) -> BraidingData {
    b.with_beta_entry(mu.x, mu.y, mu.replacement)
}

/// `count` indices into a space of size `len`, drawn with replacement from a
/// seeded deterministic generator.
pub fn seeded_sample_indices(seed: u64, len: usize, count: usize) -> Vec<usize> {
    assert!(len > 0, "mutation space is empty");
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    (0..count).map(|_| rng.gen_range(0..len)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::validate_category;
    use crate::examples::build_three_object_gv;

    #[test]
    fn every_comp_mutation_of_the_three_object_category_is_rejected() {
        let m = build_three_object_gv(5);
        let muts = comp_mutations(&m.cat);
        assert!(!muts.is_empty());
        for mu in &muts {
            let mutated = apply_comp(&m.cat, mu);
            assert!(
                !validate_category(&mutated).is_valid(),
                "mutation {:?} slipped through",
                mu
            );
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(
            seeded_sample_indices(7, 40, 10),
            seeded_sample_indices(7, 40, 10)
        );
    }
}
