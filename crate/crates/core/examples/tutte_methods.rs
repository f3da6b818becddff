//! Three ways to compute a Tutte polynomial, plus the characteristic
//! polynomial and the formula for parallel extensions.
//!
//! ```bash
//! cargo run --example tutte_methods -- 6 3 7   # n, ell, seed
//! ```

use lintutte::corpus::random_fixed;
use lintutte::tutte::{char_poly, parallel_tutte_formula, tutte_activities, tutte_corank_nullity, tutte_dc};
use lintutte::{with_config, AnyConfig, Field, FieldSpec, Matroid};

fn main() -> lintutte::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, ell, seed) = (args.first().copied().unwrap_or(6), args.get(1).copied().unwrap_or(3), args.get(2).copied().unwrap_or(7));
    let file = random_fixed(FieldSpec::Prime { p: 3 }, n, ell, 1, seed as u64)?.remove(0);
    let any = AnyConfig::from_file(&file)?;
    with_config!(&any, cfg => {
        println!("forms over {}: {}", cfg.field().spec(), cfg.format_forms().join(" "));
        let m = Matroid::from_config(cfg)?;
        let dc = tutte_dc(cfg);
        println!("deletion-contraction: {dc}");
        println!("corank-nullity sum:   {}", tutte_corank_nullity(&m));
        println!("basis activities:     {}", tutte_activities(&m));
        println!("chi(lambda) = {}", char_poly(cfg).display_in("λ"));
        for mult in 2..=3 {
            let formula = parallel_tutte_formula(&dc, mult, m.rank())?;
            let direct = tutte_dc(&cfg.parallel_extension(mult)?);
            println!("{mult}-fold parallel extension: {formula}  (direct agrees: {})", formula == direct);
        }
    });
    Ok(())
}
