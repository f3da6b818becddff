//! The largest `d` with all of `Sym^d` inside the span of products equals the
//! size of the smallest cocircuit.
//!
//! ```bash
//! cargo run --example spanning
//! ```

use lintutte::fixtures;
use lintutte::spanning::{h_polynomial_check, verify_spanning};
use lintutte::{Field, VectorConfig};

fn show<F: Field>(name: &str, cfg: &VectorConfig<F>) -> lintutte::Result<()> {
    let s = verify_spanning(cfg)?;
    let h = h_polynomial_check(cfg)?;
    println!(
        "{name:<8} spanned up to degree {}, smallest cocircuit {}, h(t) = {}",
        s.max_spanned_degree, s.min_cocircuit_size, h.from_hilbert
    );
    Ok(())
}

fn main() -> lintutte::Result<()> {
    show("Fano", &fixtures::fano())?;
    show("U(2,3)", &fixtures::u23())?;
    show("U(3,6)", &fixtures::uniform(3, 6))?;
    show("free(3)", &fixtures::free(3))?;
    Ok(())
}
