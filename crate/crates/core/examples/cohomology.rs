//! Line bundle cohomology on both surfaces next to Riemann-Roch.

use sigma2_k0::cohomology::line_bundle_cohomology;
use sigma2_k0::lattice::{class_of_line_bundle, PicClass, Surface};

fn main() -> sigma2_k0::Result<()> {
    for s in Surface::ALL {
        println!("{s}");
        for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 2), (-1, 3), (2, 1), (-2, -4), (-3, 1)] {
            let d = PicClass::new(s, a, b);
            let h = line_bundle_cohomology(&d);
            let chi = class_of_line_bundle(&d)?.chi;
            println!("  {d:>10}: h = ({}, {}, {}), chi = {chi}", h.h0, h.h1, h.h2);
        }
    }
    Ok(())
}
