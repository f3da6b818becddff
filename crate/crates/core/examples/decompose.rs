//! Splits the span of all products of a configuration into pieces indexed by
//! a flat and a degree, for a configuration read from a JSON file.
//!
//! ```bash
//! cargo run --example decompose -- crates/core/fixtures/u23.json
//! ```

use lintutte::pspace::{dim_table, H_polynomial};
use lintutte::tutte::tutte_dc;
use lintutte::{parse_config, with_config};

const DEFAULT: &str = r#"{"field": {"type": "GF", "p": 3}, "vectors": [[1,0],[0,1],[1,1],[1,2],[1,1]]}"#;

fn main() -> lintutte::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEFAULT.to_string(),
    };
    let any = parse_config(&text)?;
    with_config!(&any, cfg => {
        let dt = dim_table(cfg)?;
        println!("n = {}, ell = {}", dt.n, dt.ell);
        for (x, r, k, d) in dt.cells().filter(|c| c.3 > 0) {
            println!("  X = {x:<14} r = {r}  k = {k}  degree {:>2}  dim {d}", dt.n - k);
        }
        let h = H_polynomial(&dt);
        let t = tutte_dc(cfg).shift_x(1);
        println!("H(x, y)     = {h}");
        println!("T(1 + x, y) = {t}");
        assert_eq!(h, t);
    });
    Ok(())
}
