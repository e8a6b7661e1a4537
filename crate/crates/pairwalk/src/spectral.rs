//! Spectral analysis of walk time series: linear detrend, tapered cosine
//! window, normalized one-sided power spectrum, tiered prominent
//! frequencies, and the frequency-versus-interaction-strength sweep.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numeric::dft;
use crate::observables::{record_series, InitialState};
use crate::walk::{InteractionScheme, WalkSpace};

/// Minimum series length accepted by [`power_spectrum`].
pub const MIN_SPECTRUM_LEN: usize = 8;

/// A windowed-and-detrended series whose RMS falls at or below
/// `EMPTY_RMS_FACTOR * max(1, max|sample|)` is indistinguishable from
/// roundoff noise and yields an empty spectrum instead of dividing by ~0.
pub const EMPTY_RMS_FACTOR: f64 = 1e-11;

fn check_finite(series: &[f64]) -> Result<()> {
    if let Some(index) = series.iter().position(|x| !x.is_finite()) {
        return Err(Error::NonFiniteSample { index });
    }
    Ok(())
}

/// Subtracts the least-squares line `a + b t` (`t = 0, 1, ...`). The output
/// has zero mean and zero covariance with `t`.
pub fn linear_detrend(series: &[f64]) -> Result<Vec<f64>> {
    let l = series.len();
    if l < 2 {
        return Err(Error::SeriesTooShort { len: l, min: 2 });
    }
    check_finite(series)?;
    let lf = l as f64;
    let t_mean = (lf - 1.0) / 2.0;
    let x_mean = series.iter().sum::<f64>() / lf;
    let mut cov = 0.0;
    let mut var = 0.0;
    for (t, &x) in series.iter().enumerate() {
        let dt = t as f64 - t_mean;
        cov += dt * (x - x_mean);
        var += dt * dt;
    }
    let slope = cov / var;
    let intercept = x_mean - slope * t_mean;
    Ok(series
        .iter()
        .enumerate()
        .map(|(t, &x)| x - (intercept + slope * t as f64))
        .collect())
}

/// Tapered cosine (Tukey) window of the given length.
///
/// With `m = length - 1`, the window rises as a half cosine on
/// `0 <= n <= alpha m / 2`, holds 1 on the central plateau, and falls
/// symmetrically on `m (1 - alpha/2) <= n <= m`:
///
/// ```text
/// w(n) = (1 + cos(pi (2n / (alpha m) - 1))) / 2             rising lobe
/// w(n) = 1                                                  plateau
/// w(n) = (1 + cos(pi (2n / (alpha m) - 2/alpha + 1))) / 2   falling lobe
/// ```
///
/// `alpha = 0` is the rectangular window, `alpha = 1` a full cosine (Hann)
/// shape. The endpoints are zero for any `alpha > 0`.
pub fn tukey_window(length: usize, alpha: f64) -> Result<Vec<f64>> {
    if length < 2 {
        return Err(Error::SeriesTooShort {
            len: length,
            min: 2,
        });
    }
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::InvalidAlpha { alpha });
    }
    if alpha == 0.0 {
        return Ok(vec![1.0; length]);
    }
    let m = (length - 1) as f64;
    let rising_end = alpha * m / 2.0;
    let plateau_end = m * (1.0 - alpha / 2.0);
    Ok((0..length)
        .map(|n| {
            let nf = n as f64;
            if nf <= rising_end {
                0.5 * (1.0 + (std::f64::consts::PI * (2.0 * nf / (alpha * m) - 1.0)).cos())
            } else if nf <= plateau_end {
                1.0
            } else {
                0.5 * (1.0
                    + (std::f64::consts::PI * (2.0 * nf / (alpha * m) - 2.0 / alpha + 1.0)).cos())
            }
        })
        .collect())
}

/// One-sided normalized power spectrum of a real series.
///
/// Bin `k` of a length-`L` series corresponds to the frequency `k / L`
/// cycles per step, for `k = 0 ..= L/2`. The bins sum to 1 unless the
/// spectrum is empty (see [`PowerSpectrum::is_empty`]).
#[derive(Debug, Clone)]
pub struct PowerSpectrum {
    bins: Vec<f64>,
    series_len: usize,
    empty: bool,
}

impl PowerSpectrum {
    /// Normalized bin powers for `k = 0 ..= series_len / 2`.
    pub fn bins(&self) -> &[f64] {
        &self.bins
    }

    /// Length of the series the spectrum was computed from.
    pub fn series_len(&self) -> usize {
        self.series_len
    }

    /// Frequency of bin `k` in cycles per step.
    pub fn frequency(&self, k: usize) -> f64 {
        k as f64 / self.series_len as f64
    }

    /// True when the detrended, windowed series was numerically zero: all
    /// bins are zero and no frequencies are prominent.
    pub fn is_empty(&self) -> bool {
        self.empty
    }
}

/// Detrend, window, transform: the full pipeline from a raw series to its
/// normalized one-sided power spectrum.
pub fn power_spectrum(series: &[f64], alpha: f64) -> Result<PowerSpectrum> {
    let l = series.len();
    if l < MIN_SPECTRUM_LEN {
        return Err(Error::SeriesTooShort {
            len: l,
            min: MIN_SPECTRUM_LEN,
        });
    }
    let detrended = linear_detrend(series)?;
    let window = tukey_window(l, alpha)?;
    let windowed: Vec<f64> = detrended
        .iter()
        .zip(&window)
        .map(|(x, w)| x * w)
        .collect();

    let series_scale = series.iter().fold(0.0f64, |m, &x| m.max(x.abs()));
    let rms = (windowed.iter().map(|x| x * x).sum::<f64>() / l as f64).sqrt();
    if rms <= EMPTY_RMS_FACTOR * series_scale.max(1.0) {
        return Ok(PowerSpectrum {
            bins: vec![0.0; l / 2 + 1],
            series_len: l,
            empty: true,
        });
    }

    let input: Vec<Complex64> = windowed
        .iter()
        .map(|&x| Complex64::new(x, 0.0))
        .collect();
    let transform = dft(&input)?;
    let mut bins: Vec<f64> = transform[..=l / 2].iter().map(|z| z.norm_sqr()).collect();
    let total: f64 = bins.iter().sum();
    for b in &mut bins {
        *b /= total;
    }
    Ok(PowerSpectrum {
        bins,
        series_len: l,
        empty: false,
    })
}

/// Prominence tier of a spectral line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tier {
    /// Amplitude in the top 5% of all bin amplitudes.
    Top,
    /// Amplitude in the second 5%.
    Second,
}

impl Tier {
    /// 1 for the top tier, 2 for the second; the encoding used in CSV output.
    pub fn rank(&self) -> u8 {
        match self {
            Tier::Top => 1,
            Tier::Second => 2,
        }
    }
}

/// One prominent spectral line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Prominence {
    pub bin: usize,
    /// `bin / series_len`, in cycles per step.
    pub frequency: f64,
    pub tier: Tier,
}

/// Frequencies whose bin power lies in the top 5% (tier [`Tier::Top`]) or the
/// second 5% ([`Tier::Second`]) of all bin powers, DC excluded.
///
/// Thresholds use the nearest-rank percentile over the multiset of bin
/// powers (integer rank `floor(p M / 100)` into the ascending sort); values
/// tied with a threshold join the higher tier. An empty spectrum has no
/// prominent frequencies.
pub fn prominent_frequencies(spectrum: &PowerSpectrum) -> Vec<Prominence> {
    if spectrum.is_empty() {
        return Vec::new();
    }
    let values = &spectrum.bins()[1..];
    let m = values.len();
    let mut sorted: Vec<f64> = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let top_threshold = sorted[(95 * m / 100).min(m - 1)];
    let second_threshold = sorted[(90 * m / 100).min(m - 1)];

    values
        .iter()
        .enumerate()
        .filter_map(|(idx, &power)| {
            let bin = idx + 1;
            let tier = if power >= top_threshold {
                Tier::Top
            } else if power >= second_threshold {
                Tier::Second
            } else {
                return None;
            };
            Some(Prominence {
                bin,
                frequency: spectrum.frequency(bin),
                tier,
            })
        })
        .collect()
}

/// One point of a frequency-versus-interaction-strength diagram.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeigenbaumPoint {
    pub phi: f64,
    /// Cycles per step.
    pub frequency: f64,
    pub tier: Tier,
}

/// For every `phi` in the grid: evolve, record the entanglement series, and
/// collect its prominent frequencies. Points arrive ordered by grid position
/// and bin, and the whole sweep is deterministic for a fixed initial state.
///
/// Grid points run independently (in parallel); the first failing `phi` is
/// reported with its grid value.
pub fn feigenbaum_sweep(
    space: &WalkSpace,
    phi_grid: &[f64],
    steps: usize,
    initial: &InitialState,
    alpha: f64,
) -> Result<Vec<FeigenbaumPoint>> {
    if phi_grid.is_empty() {
        return Err(Error::EmptyPhiGrid);
    }
    if steps < MIN_SPECTRUM_LEN {
        return Err(Error::SeriesTooShort {
            len: steps,
            min: MIN_SPECTRUM_LEN,
        });
    }
    let per_phi: Vec<Vec<FeigenbaumPoint>> = phi_grid
        .par_iter()
        .map(|&phi| -> Result<Vec<FeigenbaumPoint>> {
            let run = || -> Result<Vec<FeigenbaumPoint>> {
                let scheme = InteractionScheme::new(phi)?;
                let record = record_series(space, scheme, initial, steps)?;
                let spectrum = power_spectrum(&record.entanglement, alpha)?;
                Ok(prominent_frequencies(&spectrum)
                    .into_iter()
                    .map(|p| FeigenbaumPoint {
                        phi,
                        frequency: p.frequency,
                        tier: p.tier,
                    })
                    .collect())
            };
            run().map_err(|e| Error::SweepPoint {
                phi,
                source: Box::new(e),
            })
        })
        .collect::<Result<_>>()?;
    Ok(per_phi.into_iter().flatten().collect())
}
