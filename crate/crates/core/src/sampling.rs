//! Seeded random elements for fuzzing and property checks.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::klein::KleinElement;
use crate::torus_braid::{f2_alphabet, B2tElement, P2tElement};
use crate::word::{Alphabet, FreeWord};

/// Deterministic sampler. Same seed, same sequence on every platform.
pub struct Sampler {
    rng: ChaCha8Rng,
    pub max_word_len: usize,
    pub max_exp: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_word_len: 16,
            max_exp: 8,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A reduced word of at most `max_word_len` letters.
    pub fn free_word(&mut self, alphabet: &Arc<Alphabet>) -> FreeWord {
        let len = self.rng.gen_range(0..=self.max_word_len);
        let letters: Vec<(usize, i8)> = (0..len)
            .map(|_| {
                let g = self.rng.gen_range(0..alphabet.len());
                (g, if self.rng.gen_bool(0.5) { 1 } else { -1 })
            })
            .collect();
        FreeWord::from_letters(alphabet, &letters).expect("letters stay in range")
    }

    pub fn klein(&mut self, bound: i64) -> KleinElement {
        KleinElement::new(
            self.rng.gen_range(-bound..=bound),
            self.rng.gen_range(-bound..=bound),
        )
    }

    pub fn p2t(&mut self) -> P2tElement {
        let w = self.free_word(&f2_alphabet());
        let m = self.max_exp;
        P2tElement::new(w, self.rng.gen_range(-m..=m), self.rng.gen_range(-m..=m))
    }

    pub fn b2t(&mut self) -> B2tElement {
        let p = self.p2t();
        let sigma = self.rng.gen_bool(0.5);
        B2tElement::new(p.word, p.a_exp, p.b_exp, sigma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..20 {
            assert_eq!(a.b2t(), b.b2t());
            assert_eq!(a.klein(5), b.klein(5));
        }
    }
}
