//! Sweeps the size bounds over n and prints them as log_{q^m} values.
//!
//! Usage: `cargo run --example bounds_table -- [q m lambda d n_max]`

use num_rational::Rational64;
use subfield_metric::bounds::{bounds_csv, bounds_table};
use subfield_metric::metric::Lambda;
use subfield_metric::volume::Alphabet;

fn main() -> subfield_metric::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let get = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());
    let q: u64 = get(0, "4").parse().expect("q");
    let m: u32 = get(1, "2").parse().expect("m");
    let lambda: Lambda = get(2, "4").parse()?;
    let d: i64 = get(3, "7").parse().expect("d");
    let n_max: usize = get(4, "30").parse().expect("n_max");

    let rows = bounds_table(1..=n_max, Rational64::from_integer(d), lambda, Alphabet::new(q, m)?);
    print!("{}", bounds_csv(&rows));

    let below = rows
        .iter()
        .filter(|r| r.upper_bounds().iter().all(|(_, b)| r.gilbert_varshamov.raw <= b.raw))
        .count();
    eprintln!("GV below every upper bound at {below} of {} lengths", rows.len());
    Ok(())
}
