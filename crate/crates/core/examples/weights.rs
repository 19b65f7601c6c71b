//! Base, roof and lambda weights of a few vectors over F_4.

use subfield_metric::gf::Field;
use subfield_metric::metric::{self, Lambda};

fn main() -> subfield_metric::Result<()> {
    let f = Field::new(2, 1, 2, None)?;
    let lambdas = ["1/2", "1", "3/2", "2", "5"].map(|s| s.parse::<Lambda>().unwrap());

    for text in ["1,1,1,a,a,a", "a,a,a,a^2,a^2,a^2", "0,1,1", "1,0,a"] {
        let v = f.parse_vector(text)?;
        let br = metric::br_weight(&f, &v);
        print!("({text:<17}) br = {br}  rank = {}", metric::rank_weight(&f, &v));
        for l in lambdas {
            print!("  wt_{l} = {}", br.lambda_value(l));
        }
        println!();
    }

    // the base distance alone is not a metric
    let (x, y, z) = (f.parse_vector("a")?, f.parse_vector("a^2")?, f.parse_vector("0")?);
    let d = |u: &[_], v: &[_]| metric::base_distance(&f, u, v).unwrap();
    println!(
        "d_base(a, a+1) = {} > d_base(a, 0) + d_base(0, a+1) = {}",
        d(&x, &y),
        d(&x, &z) + d(&z, &y)
    );
    Ok(())
}
