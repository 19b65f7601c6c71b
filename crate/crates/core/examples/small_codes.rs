//! BR-minimal distances and correctable error profiles of two small codes
//! over F_4.

use subfield_metric::codes::{br_distribution, Code, LinearCode, DEFAULT_ENUMERATION_CAP};
use subfield_metric::decoding::{correctable_br_profiles, guaranteed_radius};
use subfield_metric::gf::Field;
use subfield_metric::metric::{format_br_set, Lambda};

fn main() -> subfield_metric::Result<()> {
    let f = Field::new(2, 1, 2, Some(vec![1, 1, 1]))?;
    let codes = [
        ("G = (1 1 1 a a a)", vec!["1,1,1,a,a,a"]),
        ("G = (1 0 a; 0 1 a^2)", vec!["1,0,a", "0,1,a^2"]),
    ];
    for (name, rows) in codes {
        let rows = rows.iter().map(|r| f.parse_vector(r)).collect::<Result<Vec<_>, _>>()?;
        let code = LinearCode::from_generator(&f, rows)?;
        let set = br_distribution(&code, DEFAULT_ENUMERATION_CAP, 1)?;
        println!("{name}: minima {}", format_br_set(&set.minima));
        for l in ["1", "3/2", "2", "3"] {
            let lam: Lambda = l.parse()?;
            let d = set.min_lambda(lam).expect("nonzero code");
            let profiles = correctable_br_profiles(code.length(), d, lam);
            println!(
                "  lambda = {l:<3} d = {d:<3} radius = {:<3} correctable (base, roof): {}",
                guaranteed_radius(code.length(), d, lam),
                format_br_set(&profiles)
            );
        }
    }
    Ok(())
}
