//! Normal forms `O(mC) [T_0] (squares) [shift]` of twist words.

use sigma2_k0::json::{parse_twist_word, to_json};
use sigma2_k0::twist::{normalize, word_matrix};

fn main() -> sigma2_k0::Result<()> {
    let inputs = std::env::args().skip(1).collect::<Vec<_>>();
    let inputs = if inputs.is_empty() {
        vec![
            r#"[{"T":0},{"T":1}]"#.to_string(),
            r#"[{"T":3}]"#.to_string(),
            r#"[{"T":2},{"Ti":-1},{"OC":1},{"T":0},{"Sh":1}]"#.to_string(),
        ]
    } else {
        inputs
    };
    for json in inputs {
        let w = parse_twist_word(&json)?;
        let nf = normalize(&w)?;
        println!("{w}");
        println!("  -> {}", nf.to_word());
        println!("  {}", to_json(&nf));
        assert_eq!(word_matrix(&nf.to_word())?, word_matrix(&w)?);
    }
    Ok(())
}
