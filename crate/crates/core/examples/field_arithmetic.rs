//! Arithmetic in F_16 viewed as a quadratic extension of F_4.

use subfield_metric::gf::{Field, Notation};

fn main() -> subfield_metric::Result<()> {
    let f = Field::new(2, 2, 2, Some(vec![1, 1, 0, 0, 1]))?;
    let a = f.primitive_element();
    println!("{f:?}");
    println!("q = {}, q^m = {}", f.q(), f.size());

    let x = f.parse_element("a^7")?;
    let y = f.parse_element("a^12")?;
    let show = |v| f.format_element(v, Notation::Power);
    println!("a^7 + a^12 = {}", show(f.add(x, y)));
    println!("a^7 * a^12 = {}", show(f.mul(x, y)));
    println!("1 / a^7    = {}", show(f.inv(x)?));
    println!("frobenius(a) = {}", show(f.frobenius(a)));

    let sub: Vec<String> = f.subfield_elements().into_iter().map(show).collect();
    println!("F_4 inside F_16: {{{}}}", sub.join(", "));
    for e in f.elements().take(6) {
        println!(
            "{:>5}  base = {:<5}  tr = {}",
            show(e),
            f.is_base_element(e),
            f.absolute_trace(e)
        );
    }

    // every element splits as alpha * gamma + beta with alpha, beta in F_4
    let gamma = f.default_gamma();
    let (alpha, beta) = f.decompose_pair(x, gamma)?;
    println!(
        "a^7 = {} * {} + {}",
        show(alpha),
        show(gamma),
        show(beta)
    );
    assert_eq!(f.compose_pair(alpha, beta, gamma), x);
    Ok(())
}
