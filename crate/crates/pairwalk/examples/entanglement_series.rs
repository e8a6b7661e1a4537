//! Entanglement time series on the complete graph for several interaction
//! strengths. The two walkers start in the (product) equal superposition, so
//! every bit of entanglement is generated by the same-site phase.

use std::f64::consts::PI;

use pairwalk::graph::catalog;
use pairwalk::observables::{record_series, InitialState};
use pairwalk::walk::{InteractionScheme, WalkSpace};

fn main() -> pairwalk::Result<()> {
    let space = WalkSpace::new(catalog("k8")?);
    let steps = 200;

    println!("k8, equal superposition, {steps} steps");
    println!("{:>8} {:>10} {:>10} {:>10}", "phi", "max E", "mean E", "E(200)");
    for multiple in [0.0, 0.02, 0.1, 0.3, 0.6, 0.99] {
        let scheme = InteractionScheme::new(multiple * PI)?;
        let record = record_series(&space, scheme, &InitialState::EqualSuperposition, steps)?;
        let series = &record.entanglement;
        let max = series.iter().cloned().fold(0.0f64, f64::max);
        let mean = series.iter().sum::<f64>() / series.len() as f64;
        println!(
            "{:>7.2}pi {:>10.4} {:>10.4} {:>10.4}",
            multiple,
            max,
            mean,
            series[steps]
        );
    }

    // A coarse look at the strongest-interaction series: the oscillation
    // gathers into beat-like envelopes as phi approaches pi.
    let scheme = InteractionScheme::new(0.99 * PI)?;
    let record = record_series(&space, scheme, &InitialState::EqualSuperposition, steps)?;
    println!("\nE(t) at phi = 0.99pi, every 10th step:");
    for (t, &e) in record.entanglement.iter().enumerate().step_by(10) {
        let bar = "#".repeat((e * 12.0).round() as usize);
        println!("  t = {t:>3}  {e:>7.4}  {bar}");
    }
    Ok(())
}
