//! Independent reference implementations (oracles) shared by the
//! integration suites. Everything here is written from the defining
//! formulas, deliberately not reusing the library's computation paths.

#![allow(dead_code)]

use num_complex::Complex64;
use pairwalk::walk::{InteractionScheme, TwoParticleState, WalkSpace};

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Definition-sum DFT with a fresh angle per (k, n) term.
pub fn naive_dft(x: &[Complex64]) -> Vec<Complex64> {
    let l = x.len() as f64;
    (0..x.len())
        .map(|k| {
            x.iter()
                .enumerate()
                .map(|(n, &xn)| {
                    let angle = -2.0 * std::f64::consts::PI * (k as f64) * (n as f64) / l;
                    xn * c(angle.cos(), angle.sin())
                })
                .sum()
        })
        .collect()
}

/// Grover coin entries straight from the definition.
fn grover_entry(d: usize, r: usize, col: usize) -> f64 {
    2.0 / d as f64 - if r == col { 1.0 } else { 0.0 }
}

/// The full dense one-step operator (coin then flip-flop shift) over the
/// `A^2`-dimensional arc-pair basis, assembled entry by entry.
pub fn dense_step_operator(space: &WalkSpace, scheme: InteractionScheme) -> Vec<Complex64> {
    let a = space.arc_count();
    let dim = a * a;
    let g = space.graph();
    let arcs = space.arcs();

    // Coin: block diagonal over position pairs.
    let mut coin = vec![c(0.0, 0.0); dim * dim];
    for i in 0..g.vertex_count() {
        for k in 0..g.vertex_count() {
            let factor = if i == k { scheme.phase() } else { c(1.0, 0.0) };
            let (di, dk) = (g.degree(i), g.degree(k));
            let (oi, ok) = (arcs.offset(i), arcs.offset(k));
            for j in 0..di {
                for l in 0..dk {
                    let row = (oi + j) * a + ok + l;
                    for jj in 0..di {
                        for ll in 0..dk {
                            let col = (oi + jj) * a + ok + ll;
                            coin[row * dim + col] =
                                factor * grover_entry(di, j, jj) * grover_entry(dk, l, ll);
                        }
                    }
                }
            }
        }
    }

    // U = S C: row x of U is row shift(x) of C, with shift reversing both arcs.
    let mut u = vec![c(0.0, 0.0); dim * dim];
    for a1 in 0..a {
        for a2 in 0..a {
            let x = a1 * a + a2;
            let sx = arcs.reverse(a1) * a + arcs.reverse(a2);
            u[x * dim..(x + 1) * dim].copy_from_slice(&coin[sx * dim..(sx + 1) * dim]);
        }
    }
    u
}

/// Dense matrix-vector product for the operator above.
pub fn dense_apply(u: &[Complex64], psi: &[Complex64]) -> Vec<Complex64> {
    let dim = psi.len();
    (0..dim)
        .map(|row| {
            psi.iter()
                .enumerate()
                .map(|(col, &x)| u[row * dim + col] * x)
                .sum()
        })
        .collect()
}

/// Partial trace over particle 2 from the fully materialized density matrix
/// `rho = psi psi^dagger`; only viable for small arc counts.
pub fn brute_force_reduced_density(state: &TwoParticleState) -> Vec<Complex64> {
    let a = state.arc_count();
    let dim = a * a;
    let psi = state.amplitudes();
    let mut rho = vec![c(0.0, 0.0); dim * dim];
    for x in 0..dim {
        for y in 0..dim {
            rho[x * dim + y] = psi[x] * psi[y].conj();
        }
    }
    let mut rho1 = vec![c(0.0, 0.0); a * a];
    for x in 0..a {
        for y in 0..a {
            let mut acc = c(0.0, 0.0);
            for m in 0..a {
                acc += rho[(x * a + m) * dim + (y * a + m)];
            }
            rho1[x * a + y] = acc;
        }
    }
    rho1
}

/// Same partial trace as a direct sum (no materialized density matrix), for
/// arc counts where the full matrix would be unreasonable.
pub fn direct_reduced_density(state: &TwoParticleState) -> Vec<Complex64> {
    let a = state.arc_count();
    let psi = state.amplitudes();
    let mut rho1 = vec![c(0.0, 0.0); a * a];
    for m in 0..a {
        for x in 0..a {
            for y in 0..a {
                rho1[x * a + y] += psi[x * a + m] * psi[y * a + m].conj();
            }
        }
    }
    rho1
}

/// Single-particle coined walk oracle over the arc basis: Grover coin per
/// vertex block (dense), then arc reversal.
pub fn single_particle_step(space: &WalkSpace, u: &mut Vec<Complex64>) {
    let g = space.graph();
    let arcs = space.arcs();
    let mut coined = vec![c(0.0, 0.0); u.len()];
    for v in 0..g.vertex_count() {
        let d = g.degree(v);
        let off = arcs.offset(v);
        for j in 0..d {
            let mut acc = c(0.0, 0.0);
            for jj in 0..d {
                acc += grover_entry(d, j, jj) * u[off + jj];
            }
            coined[off + j] = acc;
        }
    }
    let mut shifted = vec![c(0.0, 0.0); u.len()];
    for arc in 0..arcs.arc_count() {
        shifted[arcs.reverse(arc)] = coined[arc];
    }
    *u = shifted;
}

/// Characteristic polynomial coefficients by the Faddeev-LeVerrier
/// recurrence: returns `[1, c1, ..., cn]` with
/// `p(x) = x^n + c1 x^{n-1} + ... + cn`. Coefficients of a Hermitian matrix
/// are real; the imaginary residue is asserted small.
pub fn characteristic_polynomial(matrix: &[Complex64], n: usize) -> Vec<f64> {
    let mut coeffs = vec![1.0f64];
    let mut m = matrix.to_vec(); // M_1 = A
    for k in 1..=n {
        let trace: Complex64 = (0..n).map(|i| m[i * n + i]).sum();
        let ck = -trace / k as f64;
        assert!(ck.im.abs() < 1e-9, "non-real coefficient {ck}");
        coeffs.push(ck.re);
        if k == n {
            break;
        }
        // M_{k+1} = A (M_k + c_k I)
        let mut shifted = m.clone();
        for i in 0..n {
            shifted[i * n + i] += ck;
        }
        let mut next = vec![c(0.0, 0.0); n * n];
        for r in 0..n {
            for s in 0..n {
                let mut acc = c(0.0, 0.0);
                for t in 0..n {
                    acc += matrix[r * n + t] * shifted[t * n + s];
                }
                next[r * n + s] = acc;
            }
        }
        m = next;
    }
    coeffs
}

fn polynomial_value(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &ck| acc * x + ck)
}

/// All real roots of the polynomial inside [lo, hi], by sign-change scanning
/// and bisection. Needs roots separated by more than the scan step.
pub fn bracketed_roots(coeffs: &[f64], lo: f64, hi: f64, scan_points: usize) -> Vec<f64> {
    let mut roots = Vec::new();
    let step = (hi - lo) / scan_points as f64;
    let mut x_prev = lo;
    let mut f_prev = polynomial_value(coeffs, lo);
    for i in 1..=scan_points {
        let x = lo + step * i as f64;
        let f = polynomial_value(coeffs, x);
        if f_prev == 0.0 {
            roots.push(x_prev);
        } else if f_prev * f < 0.0 {
            let (mut a, mut b) = (x_prev, x);
            let mut fa = f_prev;
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                let fm = polynomial_value(coeffs, mid);
                if fa * fm <= 0.0 {
                    b = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
            }
            roots.push(0.5 * (a + b));
        }
        x_prev = x;
        f_prev = f;
    }
    roots
}

/// Max absolute difference between two complex vectors.
pub fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
