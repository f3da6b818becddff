//! Hilbert series of the span of all products, of the piece for the whole
//! ground set, and of the pieces of lowest degree per flat.
//!
//! ```bash
//! cargo run --example hilbert_series
//! ```

use lintutte::fixtures;
use lintutte::pspace::{dim_P_top, hilbert_P, nbc_dim_check};

fn main() -> lintutte::Result<()> {
    for (name, cfg) in [("U(2,4)", fixtures::uniform(2, 4)), ("U(3,6)", fixtures::uniform(3, 6))] {
        println!("{name}");
        println!("  Hilb(P, t)     {:?}", hilbert_P(&cfg)?.coeffs());
        println!("  Hilb(P_E, t)   {:?}", dim_P_top(&cfg)?.coeffs());
        let nbc = nbc_dim_check(&cfg)?;
        println!("  lowest pieces  {:?}  = t^(n-ell) T(1+t, 0): {}", nbc.series.coeffs(), nbc.holds);
        for f in nbc.per_flat.iter().filter(|f| f.rank == 1).take(3) {
            println!("    X = {}: dim {} and {} nbc sets", f.flat, f.dim, f.nbc);
        }
    }
    Ok(())
}
