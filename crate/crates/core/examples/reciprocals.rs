//! Graded dimensions of the algebra generated by the reciprocals of the
//! forms, computed on parallel extensions and compared with the closed form.
//!
//! ```bash
//! cargo run --example reciprocals
//! ```

use lintutte::fixtures;
use lintutte::recip::{terao_series, verify_terao};

fn main() -> lintutte::Result<()> {
    let fano = fixtures::fano();
    let series = terao_series(&fano, 8)?;
    println!("Fano: Hilb(C, t) = {:?} ...", series.total.coeffs());
    for f in series.per_flat.iter().filter(|f| f.rank >= 2).take(4) {
        println!("  X = {:<16} {} nbc bases, series {:?}", f.flat.to_string(), f.nbc_bases, f.series.coeffs());
    }
    let report = verify_terao(&fano, 3)?;
    println!("dimensions through k = 3: {:?} (match: {})", report.dims, report.holds);

    let u = fixtures::uniform(2, 4);
    let report = verify_terao(&u, 5)?;
    println!("U(2,4): {:?} (match: {})", report.dims, report.holds);
    Ok(())
}
