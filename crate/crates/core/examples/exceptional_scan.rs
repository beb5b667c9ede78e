//! Every class with `chi(e, e) = 1` in a box, grouped by rank.

use std::collections::BTreeMap;

use sigma2_k0::lattice::Surface;
use sigma2_k0::mutation::{enumerate_exceptional_classes, restriction_profile, ScanBounds};

fn main() -> sigma2_k0::Result<()> {
    let bounds = ScanBounds { rank: 6, c1: 6, chi: 40 };
    for s in Surface::ALL {
        let scan = enumerate_exceptional_classes(s, bounds)?;
        let mut by_rank: BTreeMap<i64, usize> = BTreeMap::new();
        for e in &scan.classes {
            *by_rank.entry(e.rank).or_default() += 1;
        }
        println!(
            "{s}: {} of {} classes, rank 0 solutions: {}",
            scan.classes.len(),
            scan.examined,
            scan.rank_zero.len()
        );
        println!("  by rank {by_rank:?}");
    }
    let scan = enumerate_exceptional_classes(Surface::Sigma2, ScanBounds { rank: 3, c1: 3, chi: 10 })?;
    for e in scan.classes.iter().filter(|e| e.rank > 1) {
        let p = restriction_profile(e)?;
        println!("  {e}: restricts to O_C({})^{} + O_C({})^{}", p.b, p.s, p.b + 1, e.rank - p.s);
    }
    Ok(())
}
