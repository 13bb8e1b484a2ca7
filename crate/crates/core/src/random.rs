//! Seeded random streams and the Gamma / Inverse-Gamma variates used by the
//! conditional updates.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma};

/// Random stream owned by one chain or one replicate. ChaCha output is
/// platform independent, so seeded runs reproduce across machines.
pub type ChainRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> ChainRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Sub-seed for chain `index` of a run seeded with `seed`.
pub fn chain_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64 + 1)
}

/// SplitMix64 finaliser, used to spread structured keys over the seed space.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives a seed from a master seed and an ordered key.
pub fn derive_seed(master: u64, key: &[u64]) -> u64 {
    key.iter().fold(mix64(master), |acc, &k| mix64(acc ^ mix64(k)))
}

/// Gamma(shape, rate) draw. Marsaglia-Tsang squeeze with the `U^{1/shape}`
/// boost below shape 1.
///
/// Panics if `shape` or `rate` is not positive and finite.
pub fn gamma<R: Rng + ?Sized>(rng: &mut R, shape: f64, rate: f64) -> f64 {
    let g = Gamma::new(shape, 1.0).expect("gamma shape must be positive and finite");
    g.sample(rng) / rate
}

/// Inverse-Gamma(shape, scale) draw: `scale / G` with `G ~ Gamma(shape, 1)`.
pub fn inverse_gamma<R: Rng + ?Sized>(rng: &mut R, shape: f64, scale: f64) -> f64 {
    scale / gamma(rng, shape, 1.0)
}
