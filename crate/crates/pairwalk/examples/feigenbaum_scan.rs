//! Sweep the interaction strength and watch the frequency content of the
//! entanglement series grow: few lines at weak interaction, a dense band of
//! them toward the middle of the range.

use std::f64::consts::PI;

use pairwalk::graph::catalog;
use pairwalk::observables::InitialState;
use pairwalk::spectral::{feigenbaum_sweep, Tier};
use pairwalk::walk::WalkSpace;

fn main() -> pairwalk::Result<()> {
    let space = WalkSpace::new(catalog("q3-modified")?);
    let count = 33;
    let grid: Vec<f64> = (0..count).map(|i| PI * i as f64 / (count - 1) as f64).collect();
    let steps = 300;

    let points = feigenbaum_sweep(
        &space,
        &grid,
        steps,
        &InitialState::EqualSuperposition,
        0.4,
    )?;
    println!(
        "q3-modified, {} grid points, {} steps, {} diagram points\n",
        count,
        steps,
        points.len()
    );

    println!("{:>8}  top-tier frequency band", "phi");
    for &phi in &grid {
        let top: Vec<f64> = points
            .iter()
            .filter(|p| p.phi == phi && p.tier == Tier::Top)
            .map(|p| p.frequency)
            .collect();
        if top.is_empty() {
            println!("{:>7.3}pi  (empty)", phi / PI);
        } else {
            let lo = top.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = top.iter().cloned().fold(0.0f64, f64::max);
            // Crude strip chart over 0 .. 0.5 cycles/step.
            let mut strip = vec![b' '; 52];
            for f in &top {
                strip[(f / 0.5 * 51.0).round() as usize] = b'*';
            }
            println!(
                "{:>7.3}pi  [{}] {:.3}..{:.3}",
                phi / PI,
                String::from_utf8_lossy(&strip),
                lo,
                hi
            );
        }
    }
    Ok(())
}
