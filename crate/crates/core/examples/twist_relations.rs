//! The K0 relations between spherical twists and `O(C)`, checked as matrices.

use sigma2_k0::twist::{word_matrix, Sign, TwistGenerator::*, TwistWord};

fn main() -> sigma2_k0::Result<()> {
    let m = |gens: Vec<_>| word_matrix(&TwistWord::new(gens));
    let a = 2;
    println!("T_{a} on K0 in the standard basis:\n{}", m(vec![Twist(a, Sign::Plus)])?);
    println!("T_a^2 = id: {}", m(vec![Twist(a, Sign::Plus); 2])?.is_identity());
    println!("T_a T_a+1 = O(C): {}", m(vec![Twist(a, Sign::Plus), Twist(a + 1, Sign::Plus)])? == m(vec![TensorOC(1)])?);
    println!(
        "O(C) T_a = T_a-2 O(C): {}",
        m(vec![TensorOC(1), Twist(a, Sign::Plus)])? == m(vec![Twist(a - 2, Sign::Plus), TensorOC(1)])?
    );
    println!(
        "T'_a = T_a+1 O(-C): {}",
        m(vec![Twist(a, Sign::Minus)])? == m(vec![Twist(a + 1, Sign::Plus), TensorOC(-1)])?
    );
    Ok(())
}
