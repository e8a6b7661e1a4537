//! Exact simulation of interacting two-particle discrete-time quantum walks
//! on small graphs.
//!
//! Two coined walkers share a graph; each carries a position and a coin
//! pointing along one incident edge. Every step applies the Grover coin at
//! each occupied vertex — picking up the phase `e^{i phi}` whenever both
//! particles sit on the same vertex — and then the flip-flop shift that
//! moves each particle along its coin arc and turns the coin around. The
//! phase is the only coupling, yet it generates entanglement between the
//! walkers that this crate measures as the von Neumann entropy of one
//! particle's reduced density matrix, in bits.
//!
//! On top of the evolution kernel sit time-series observables (entanglement
//! and per-vertex occupation probabilities), a spectral pipeline (linear
//! detrend, tapered cosine window, DFT, tiered prominent frequencies), and a
//! sweep over the interaction strength that produces bifurcation-style
//! frequency diagrams.
//!
//! # Quick start
//!
//! ```
//! use pairwalk::graph::catalog;
//! use pairwalk::observables::{record_series, InitialState};
//! use pairwalk::walk::{InteractionScheme, WalkSpace};
//!
//! let space = WalkSpace::new(catalog("q3")?);
//! let scheme = InteractionScheme::new(0.3 * std::f64::consts::PI)?;
//! let record = record_series(&space, scheme, &InitialState::EqualSuperposition, 100)?;
//! assert!(record.entanglement.iter().any(|&e| e > 0.5));
//! # Ok::<(), pairwalk::Error>(())
//! ```
//!
//! # Runnable examples
//!
//! Each major capability has a self-contained example:
//!
//! - `graph_catalog` — the built-in graphs, their degrees and arc tables
//! - `entanglement_series` — entanglement time series on one graph
//! - `uniform_marginals` — exactly uniform marginals on the complete graph
//! - `spectrum_peaks` — power spectrum and prominent frequencies
//! - `feigenbaum_scan` — frequency content as the interaction strength varies
//! - `perturbation_sensitivity` — entanglement vs. probability response to a
//!   small change of the interaction strength
//! - `custom_graph` — loading a graph from the plain-text file format
//!
//! Run one with `cargo run --release --example <name>`.
//!
//! The `pairwalk` binary exposes the same pipelines as subcommands
//! (`graph`, `simulate`, `spectrum`, `feigenbaum`, `perturb`) that write
//! deterministic CSV files; see the README.

pub mod cli;
pub mod error;
pub mod graph;
pub mod numeric;
pub mod observables;
pub mod spectral;
pub mod walk;

mod plot;

pub use error::{Error, Result};
