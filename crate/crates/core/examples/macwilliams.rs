//! The [17,13] MDS code over F_16: its trace-symplectic dual is small enough
//! to enumerate, and the MacWilliams identity gives the enumerator of the
//! code itself.

use num_bigint::BigUint;
use subfield_metric::codes::{trace_symplectic_dual, Code, LinearCode, DEFAULT_ENUMERATION_CAP};
use subfield_metric::enumerator::{enumerator_from_code, macwilliams_transform, minimal_br_from_enumerator};
use subfield_metric::gf::Field;
use subfield_metric::metric::format_br_set;

fn main() -> subfield_metric::Result<()> {
    let f = Field::new(2, 2, 2, Some(vec![1, 1, 0, 0, 1]))?;
    let g = f.parse_vector("1,a^12,a^2,a^12,1")?;
    let code = LinearCode::cyclic(&f, 17, &g)?;
    println!("C: n = 17, k = {}, |C| = {}", code.dimension(), code.cardinality());

    let dual = trace_symplectic_dual(&code, f.default_gamma())?;
    println!("C*: {} generators over F_2", dual.log_size());
    let w_dual = enumerator_from_code(&dual, DEFAULT_ENUMERATION_CAP, 1)?;
    println!("W_C* = {w_dual}");

    let size = BigUint::from(dual.size().unwrap());
    let w = macwilliams_transform(&w_dual, &size, f.q())?;
    println!("W_C up to Hamming weight 7 = {}", w.truncated(7));
    println!("total = {}", w.total());
    println!("minimal BR weights of C: {}", format_br_set(&minimal_br_from_enumerator(&w)));

    // the transform is an involution up to scaling
    let back = macwilliams_transform(&w, &code.cardinality(), f.q())?;
    assert_eq!(back, w_dual);
    Ok(())
}
