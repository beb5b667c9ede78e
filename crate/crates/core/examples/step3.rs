//! Mutations realizing `T_0` and `T_-1` on the standard collection, up to
//! signs.

use sigma2_k0::lattice::Surface;
use sigma2_k0::mutation::{apply_group_word, standard_collection};
use sigma2_k0::twist::{Sign, TwistGenerator, TwistWord};

fn main() -> sigma2_k0::Result<()> {
    let std = standard_collection(Surface::Sigma2);
    for (word, a) in [("-s1,s2,s1", 0), ("s3,s2,-s3", -1)] {
        let by_mutation = apply_group_word(&std, &word.parse()?)?;
        let by_twist = std.apply_twist_word(&TwistWord::new(vec![TwistGenerator::Twist(a, Sign::Plus)]))?;
        println!("{word:>10}: {by_mutation}");
        println!("{:>10}: {by_twist}", format!("T_{a}"));
        println!("  equal up to signs: {}", by_mutation.eq_up_to_signs(&by_twist));
    }
    Ok(())
}
