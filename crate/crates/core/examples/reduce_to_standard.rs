//! Scrambles the standard collection with seeded random words and searches
//! back.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sigma2_k0::lattice::Surface;
use sigma2_k0::mutation::{apply_group_word, standard_collection};
use sigma2_k0::sample;
use sigma2_k0::search::{reduce_with, SearchConfig};

fn main() -> sigma2_k0::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let std = standard_collection(Surface::Sigma2);
    for _ in 0..5 {
        let g = sample::group_word(&mut rng, 8, 4, true);
        let x = apply_group_word(&std, &g)?;
        let r = reduce_with(&x, SearchConfig::with_depth(16))?;
        println!("{x}");
        println!("  scrambled by {g}");
        println!("  reduced by   {} ({} nodes)", r.word, r.expanded);
        assert_eq!(apply_group_word(&x, &r.word)?, std);
    }
    Ok(())
}
