//! `T_-1 (O, O(C+4f))` is numerically `(O, O(3C+4f))`, but that pair of line
//! bundles is not exceptional.

use sigma2_k0::cohomology::{hom_dims_line_bundles, line_bundle_cohomology};
use sigma2_k0::lattice::{class_of_line_bundle, PicClass, Surface};
use sigma2_k0::twist::{twist_on_class, Sign};

fn main() -> sigma2_k0::Result<()> {
    let s = Surface::Sigma2;
    for d in [PicClass::zero(s), PicClass::new(s, 1, 4)] {
        let e = twist_on_class(-1, Sign::Plus, &class_of_line_bundle(&d)?)?;
        println!("T_-1 O({d}) = {e}");
    }
    let d = PicClass::new(s, 3, 4);
    println!("[O(3C+4f)] = {}", class_of_line_bundle(&d)?);
    let kd = s.canonical_class().checked_add(&d)?;
    println!("K + 3C + 4f = {kd}, h0 = {}", line_bundle_cohomology(&kd).h0);
    println!("Ext^*(O(3C+4f), O) = {:?}", hom_dims_line_bundles(&d, &PicClass::zero(s))?);
    Ok(())
}
