//! Exact lambda-ball sizes and their growth rate from the saddle-point
//! method.

use num_rational::Rational64;
use subfield_metric::metric::Lambda;
use subfield_metric::volume::{asymptotic_ball_exponent, ball_size, log_big, qary_entropy, Alphabet};

fn main() -> subfield_metric::Result<()> {
    let a = Alphabet::new(2, 2)?;
    let lam = Lambda::integer(2)?;
    for r in 0..=6 {
        println!("|B_{r}| in F_4^3 = {}", ball_size(3, Rational64::from_integer(r), lam, a));
    }

    println!();
    println!("   U      exponent   (1/n) log |B| at n = 500, 2000");
    for u in [0.25, 0.5, 0.75, 1.0] {
        let spec = asymptotic_ball_exponent(u, lam, a)?;
        let finite: Vec<String> = [500usize, 2000]
            .iter()
            .map(|&n| {
                let r = Rational64::from_integer((u * n as f64).floor() as i64);
                format!("{:.5}", log_big(&ball_size(n, r, lam, a), 4.0) / n as f64)
            })
            .collect();
        println!("{u:>5}  {:>10.5}   {}", spec.exponent, finite.join(", "));
    }

    // lambda = 1 is the Hamming metric
    let h = asymptotic_ball_exponent(0.4, Lambda::one(), a)?;
    println!("\nlambda = 1, U = 0.4: {:.6} vs entropy {:.6}", h.exponent, qary_entropy(0.4, 4));
    Ok(())
}
