//! Runs every identity on seeded random configurations and on all binary
//! configurations with at most five elements.
//!
//! ```bash
//! cargo run --release --example verify_random -- 40 3
//! ```

use lintutte::corpus::{gf2_classes, random_mixed};
use lintutte::suite::{run_suite, SuiteOptions};
use lintutte::{with_config, AnyConfig, FieldSpec};

fn main() -> lintutte::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (count, seed) = (args.first().copied().unwrap_or(20) as usize, args.get(1).copied().unwrap_or(1));
    let mut files = gf2_classes(5);
    for (i, field) in [FieldSpec::Prime { p: 3 }, FieldSpec::Prime { p: 5 }, FieldSpec::Rationals].into_iter().enumerate() {
        files.extend(random_mixed(field, 7, 4, count, seed + i as u64)?);
    }
    let mut failed = 0;
    for file in &files {
        let any = AnyConfig::from_file(file)?;
        let checks = with_config!(&any, cfg => run_suite(cfg, SuiteOptions::default()));
        for c in checks.iter().filter(|c| !c.holds) {
            failed += 1;
            println!("{} on {:?}: {}", c.name, file.vectors, c.detail.as_deref().unwrap_or(""));
        }
    }
    println!("{} configurations, {failed} failed checks", files.len());
    Ok(())
}
