//! Euler pairings on Sigma2: the standard Gram matrix and the sphericality of
//! the `O_C(a)`.

use sigma2_k0::lattice::{class_of_oc, euler_pairing, Surface};
use sigma2_k0::mutation::standard_collection;

fn main() -> sigma2_k0::Result<()> {
    let std = standard_collection(Surface::Sigma2);
    println!("standard collection {std}");
    for row in std.euler_matrix()? {
        println!("  {row:?}");
    }
    for a in -2..=2 {
        let alpha = class_of_oc(a)?;
        println!("O_C({a}) = {alpha}, chi(alpha, alpha) = {}", euler_pairing(&alpha, &alpha)?);
    }
    Ok(())
}
