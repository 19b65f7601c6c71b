//! Random linear codes: how often they reach the Gilbert-Varshamov distance,
//! and how often they are optimal for the Singleton-type bound.

use num_rational::Rational64;
use subfield_metric::bounds::gv_random_experiment;
use subfield_metric::codes::{mrd_density_experiment, DEFAULT_ENUMERATION_CAP};
use subfield_metric::gf::Field;
use subfield_metric::metric::Lambda;

fn main() -> subfield_metric::Result<()> {
    let f4 = Field::new(2, 1, 2, None)?;
    let lam = Lambda::integer(2)?;
    let gv = gv_random_experiment(&f4, lam, 6, Rational64::from_integer(3), 0.42, 2000, 1, DEFAULT_ENUMERATION_CAP)?;
    println!(
        "n = 6, d = 3, k = {}: {} of {} random codes reach d (lower bound {:.4})",
        gv.k, gv.successes, gv.trials, gv.proven_lower_bound
    );

    let f16 = Field::new(2, 1, 4, None)?;
    for k in 1..=3 {
        let r = mrd_density_experiment(&f16, 4, k, lam, 500, 3, DEFAULT_ENUMERATION_CAP)?;
        println!("[4,{k}] over F_16, lambda = 2: {:.3} optimal", r.fraction);
    }
    Ok(())
}
