//! Every subset written uniquely as `(B - I) ∪ J` for a basis `B`, with `I`
//! internally and `J` externally active.
//!
//! ```bash
//! cargo run --example subset_decomposition
//! ```

use lintutte::fixtures;
use lintutte::tutte::{basis_activities, crapo_all};
use lintutte::Matroid;

fn main() -> lintutte::Result<()> {
    let m = Matroid::from_config(&fixtures::uniform(2, 4))?;
    for a in basis_activities(&m) {
        println!("B = {:<6} in = {:<6} ex = {}", a.basis.to_string(), a.internal.to_string(), a.external);
    }
    println!();
    for (s, t) in crapo_all(&m)? {
        println!("{:<10} = ({} - {}) ∪ {}", s.to_string(), t.basis, t.removed, t.added);
    }
    Ok(())
}
