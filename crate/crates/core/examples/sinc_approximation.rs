//! Monte-Carlo check of the phase-error gain E|Σ e^{jθ}/N|² against sinc²(δ).

use ris_noma::channel::{phase_error_gain_mc, sinc_sq};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>6} {:>6} {:>10} {:>10} {:>9}", "N", "δ", "MC", "sinc²", "rel err");
    for n in [4, 16, 64, 256, 1024] {
        for delta in [0.1, 0.5, 1.0, 2.0] {
            let mc = phase_error_gain_mc(n, delta, 10_000, 7)?;
            let s = sinc_sq(delta)?;
            println!("{n:>6} {delta:>6.1} {mc:>10.5} {s:>10.5} {:>8.2}%", 100.0 * (mc - s).abs() / s);
        }
    }
    Ok(())
}
