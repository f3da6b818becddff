//! The Fano plane end to end: Tutte polynomial, the dimension table of the
//! span of products, and its Hilbert series.
//!
//! ```bash
//! cargo run --example fano
//! ```

use lintutte::fixtures;
use lintutte::pspace::{dim_table, hilbert_P, verify_main, H_polynomial};
use lintutte::tutte::tutte_dc;

fn main() -> lintutte::Result<()> {
    let fano = fixtures::fano();
    println!("forms: {}", fano.format_forms().join(" "));
    println!("T(x, y) = {}", tutte_dc(&fano));

    let dt = dim_table(&fano)?;
    println!("\n{:<18} {:>4}  dims for k = r(X) .. |X|", "flat X", "r(X)");
    for row in &dt.rows {
        println!("{:<18} {:>4}  {:?}", row.flat.to_string(), row.rank, row.dims);
    }
    println!("\nH(x, y) = {}", H_polynomial(&dt));
    let main = verify_main(&fano)?;
    println!("T(1 + x, y) = {}  (equal: {})", main.rhs, main.holds);
    println!("Hilb(P, t) coefficients: {:?}", hilbert_P(&fano)?.coeffs());
    Ok(())
}
