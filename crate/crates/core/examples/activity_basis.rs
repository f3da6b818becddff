//! A basis of the span of all products indexed by independent sets: the
//! products over `E - (I ∪ ex(I))`.
//!
//! ```bash
//! cargo run --example activity_basis
//! ```

use lintutte::fixtures;
use lintutte::pspace::{activity_basis, product_form, verify_activity_basis};

fn main() -> lintutte::Result<()> {
    let cfg = fixtures::u23();
    println!("forms: {}", cfg.format_forms().join(" "));
    for e in activity_basis(&cfg)? {
        let p = product_form(&cfg, e.subset);
        println!("  I = {:<8} S = {:<8} α_S = {}", e.independent.to_string(), e.subset.to_string(), p.to_string_with("x"));
    }
    let report = verify_activity_basis(&cfg)?;
    println!("{report:?}");
    let fano = verify_activity_basis(&fixtures::fano())?;
    println!("Fano: {} products, dim P = {}, basis: {}", fano.count, fano.dim_p, fano.holds());
    Ok(())
}
