//! Enumerates binary configurations up to coordinate change and reordering,
//! and tabulates their Tutte polynomials.
//!
//! ```bash
//! cargo run --example binary_configurations -- 4
//! ```

use std::collections::BTreeMap;

use lintutte::corpus::gf2_classes;
use lintutte::tutte::tutte_dc;
use lintutte::{with_config, AnyConfig};

fn main() -> lintutte::Result<()> {
    let max_n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let mut per_n: BTreeMap<usize, usize> = BTreeMap::new();
    for file in gf2_classes(max_n) {
        let any = AnyConfig::from_file(&file)?;
        *per_n.entry(file.vectors.len()).or_default() += 1;
        let t = with_config!(&any, cfg => tutte_dc(cfg));
        println!("n={} ell={} {:?}  T = {t}", file.vectors.len(), any.ell(), file.vectors);
    }
    println!("classes per n: {per_n:?}");
    Ok(())
}
