//! Gabidulin codes are MRD, hence optimal for every lambda >= 1.

use subfield_metric::codes::{br_distribution, LinearCode, DEFAULT_ENUMERATION_CAP};
use subfield_metric::gf::Field;
use subfield_metric::metric::{format_br_set, Lambda};

fn main() -> subfield_metric::Result<()> {
    let f = Field::new(2, 1, 4, None)?;
    let points = f.parse_vector("1,a,a^2,a^3")?;
    for k in 1..=3 {
        let code = LinearCode::gabidulin(&f, k, &points)?;
        let set = br_distribution(&code, DEFAULT_ENUMERATION_CAP, 1)?;
        println!("[4,{k}] minima {}", format_br_set(&set.minima));
        for l in ["1", "3/2", "2", "5"] {
            let lam: Lambda = l.parse()?;
            let v = code.is_mlambda_d(lam)?;
            println!(
                "  lambda = {l:<3} d = {:<4} floor((d-1)/lambda) = {} = n-k: {}",
                v.d_lambda.unwrap(),
                v.singleton_lhs,
                v.is_optimal
            );
        }
    }
    Ok(())
}
