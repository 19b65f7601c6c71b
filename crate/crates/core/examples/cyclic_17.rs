//! The cyclic [17,9,7] code over F_4: exhaustive BR distribution, lambda
//! distances and the restriction to F_2.

use std::time::Instant;

use subfield_metric::codes::{br_distribution, Code, LinearCode, SubfieldSubcode, DEFAULT_ENUMERATION_CAP};
use subfield_metric::gf::Field;
use subfield_metric::metric::{format_br_set, Lambda};

fn main() -> subfield_metric::Result<()> {
    let f = Field::new(2, 1, 2, Some(vec![1, 1, 1]))?;
    let g = f.parse_vector("1,a,0,a,a,a,0,a,1")?;
    let code = LinearCode::cyclic(&f, 17, &g)?;
    println!("n = {}, k = {}, |C| = {}", code.length(), code.dimension(), code.cardinality());

    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let t = Instant::now();
    let set = br_distribution(&code, DEFAULT_ENUMERATION_CAP, threads)?;
    println!("enumerated in {:?} on {threads} threads", t.elapsed());
    println!("Hamming distance {}", set.min_hamming().unwrap());
    println!("BR minima {}", format_br_set(&set.minima));
    for l in [1, 2, 3, 4] {
        let lam = Lambda::integer(l)?;
        println!("d_{l} = {}", set.min_lambda(lam).unwrap());
    }

    let sub = SubfieldSubcode::of(&code);
    println!(
        "restriction to F_2: dimension {}, distance {:?}",
        sub.dimension(),
        sub.min_hamming_distance(DEFAULT_ENUMERATION_CAP)?
    );
    Ok(())
}
