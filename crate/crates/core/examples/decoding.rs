//! Nearest-codeword decoding where the lambda metric breaks a Hamming tie,
//! and a channel simulation with only base-type errors.

use subfield_metric::codes::{LinearCode, DEFAULT_ENUMERATION_CAP};
use subfield_metric::decoding::{decode_nearest, simulate_channel, verify_unique_decoding, ChannelSpec, SyndromeDecoder};
use subfield_metric::gf::{Field, Notation};
use subfield_metric::metric::Lambda;

fn main() -> subfield_metric::Result<()> {
    let f = Field::new(2, 1, 2, Some(vec![1, 1, 1]))?;
    let code = LinearCode::from_generator(&f, vec![f.parse_vector("1,0,a")?, f.parse_vector("0,1,a^2")?])?;
    let y = f.parse_vector("0,1,1")?;

    for l in ["1", "2"] {
        let lam: Lambda = l.parse()?;
        let r = decode_nearest(&code, &y, lam, DEFAULT_ENUMERATION_CAP)?;
        println!(
            "lambda = {l}: {} at distance {}, {} minimizer(s)",
            f.format_vector(&r.codeword, Notation::Power),
            r.distance,
            r.ties
        );
        let table = SyndromeDecoder::new(&code, lam, DEFAULT_ENUMERATION_CAP)?;
        println!("  syndrome table: {} cosets, covering radius {}", table.num_cosets(), table.covering_radius());
        let check = verify_unique_decoding(&code, lam, DEFAULT_ENUMERATION_CAP)?;
        println!("  unique decoding up to {}: {}", check.radius, check.holds());
    }

    let channel = ChannelSpec::new(0.05, 0.0, 7)?;
    for l in ["1", "2"] {
        let r = simulate_channel(&code, l.parse()?, channel, 20_000, 4, DEFAULT_ENUMERATION_CAP)?;
        println!(
            "p_base = 0.05, lambda = {l}: word error rate {:.4} [{:.4}, {:.4}]",
            r.word_error_rate, r.wilson_low, r.wilson_high
        );
    }
    Ok(())
}
