//! Probabilities, the reduced density matrix, and the von Neumann
//! entanglement entropy of a two-particle state.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::{hermitian_eigenvalues, HermitianMatrix};
use crate::walk::{self, InteractionScheme, TwoParticleState, WalkSpace};

/// Eigenvalues in `[-1e-9, 0)` are treated as roundoff zeros before the log;
/// anything below this signals a broken density matrix.
pub const EIGENVALUE_NEGATIVITY_LIMIT: f64 = -1e-9;

/// Joint position distribution: entry `(i, k)` is the probability of finding
/// particle 1 at vertex `i` and particle 2 at vertex `k`.
#[derive(Debug, Clone)]
pub struct JointProbability {
    n: usize,
    p: Vec<f64>,
}

impl JointProbability {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, k: usize) -> f64 {
        self.p[i * self.n + k]
    }

    /// Sum of all entries; 1 up to roundoff.
    pub fn total(&self) -> f64 {
        self.p.iter().sum()
    }

    /// Per-vertex distribution of particle 1 (summing out particle 2).
    pub fn marginal1(&self) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|k| self.get(i, k)).sum())
            .collect()
    }

    /// Per-vertex distribution of particle 2.
    pub fn marginal2(&self) -> Vec<f64> {
        (0..self.n)
            .map(|k| (0..self.n).map(|i| self.get(i, k)).sum())
            .collect()
    }
}

/// `P(i, k) = sum_{j, l} |amplitude(i, k, j, l)|^2` over the coin indices.
pub fn joint_probability(space: &WalkSpace, state: &TwoParticleState) -> JointProbability {
    assert_eq!(
        space.arc_count(),
        state.arc_count(),
        "state does not belong to this walk space"
    );
    let n = space.graph().vertex_count();
    let a = space.arc_count();
    let arcs = space.arcs();
    let amps = state.amplitudes();
    let mut p = vec![0.0; n * n];
    for i in 0..n {
        for a1 in arcs.arcs_of(i) {
            let row = &amps[a1 * a..(a1 + 1) * a];
            for k in 0..n {
                let mut acc = 0.0;
                for z in &row[arcs.arcs_of(k)] {
                    acc += z.norm_sqr();
                }
                p[i * n + k] += acc;
            }
        }
    }
    JointProbability { n, p }
}

/// Marginal position distributions `(P1, P2)` of the two particles.
pub fn marginal_probabilities(space: &WalkSpace, state: &TwoParticleState) -> (Vec<f64>, Vec<f64>) {
    let joint = joint_probability(space, state);
    (joint.marginal1(), joint.marginal2())
}

/// Reduced density matrix of particle 1 (position and coin), obtained by
/// tracing out particle 2:
/// `rho1[x][y] = sum_m psi[x, m] conj(psi[y, m])` over arc indices.
///
/// The result is Hermitian by construction (the upper triangle is computed
/// and mirrored), positive semi-definite, with unit trace up to roundoff.
pub fn reduced_density(state: &TwoParticleState) -> HermitianMatrix {
    let a = state.arc_count();
    let amps = state.amplitudes();
    let mut data = vec![Complex64::new(0.0, 0.0); a * a];
    for x in 0..a {
        let row_x = &amps[x * a..(x + 1) * a];
        for y in x..a {
            let row_y = &amps[y * a..(y + 1) * a];
            let mut acc = Complex64::new(0.0, 0.0);
            for (zx, zy) in row_x.iter().zip(row_y) {
                acc += zx * zy.conj();
            }
            data[x * a + y] = acc;
            data[y * a + x] = acc.conj();
        }
    }
    HermitianMatrix::new(a, data).expect("mirrored construction is exactly Hermitian")
}

/// Von Neumann entanglement entropy in bits:
/// `E = -sum_i lambda_i log2(lambda_i)` over the eigenvalues of the reduced
/// density matrix, with `0 log 0 = 0`.
///
/// Roundoff eigenvalues in `[-1e-9, 0)` are clamped to zero; anything more
/// negative propagates as [`Error::BrokenDensityMatrix`]. The result lies in
/// `[0, log2(A)]` for an `A`-arc graph.
pub fn entanglement_entropy(state: &TwoParticleState) -> Result<f64> {
    let rho = reduced_density(state);
    let eigenvalues = hermitian_eigenvalues(&rho)?;
    entropy_from_eigenvalues(&eigenvalues)
}

/// The entropy sum shared by [`entanglement_entropy`] and callers that
/// already hold the spectrum of a density matrix.
pub fn entropy_from_eigenvalues(eigenvalues: &[f64]) -> Result<f64> {
    let mut entropy = 0.0;
    for &lambda in eigenvalues {
        if lambda < EIGENVALUE_NEGATIVITY_LIMIT {
            return Err(Error::BrokenDensityMatrix {
                min_eigenvalue: lambda,
            });
        }
        if lambda > 0.0 {
            entropy -= lambda * lambda.log2();
        }
    }
    // -x log2 x < 0 for x > 1 can leave a tiny negative sum on pure states.
    Ok(entropy.max(0.0))
}

/// Which initial state a run starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitialState {
    /// The equal superposition of all position states (a product state).
    EqualSuperposition,
    /// Seeded i.i.d. uniform [0, 1) amplitudes, normalized.
    Random { seed: u64 },
}

impl InitialState {
    pub fn build(&self, space: &WalkSpace) -> TwoParticleState {
        match *self {
            InitialState::EqualSuperposition => space.equal_superposition(),
            InitialState::Random { seed } => space.random_state(seed),
        }
    }
}

/// Time series recorded along one evolution: entanglement plus both
/// per-vertex marginal distributions, each with `steps + 1` samples
/// (`t = 0 ..= steps`).
#[derive(Debug, Clone)]
pub struct SeriesRecord {
    pub entanglement: Vec<f64>,
    /// `marginal1[t][v]` = probability of particle 1 at vertex `v` after `t` steps.
    pub marginal1: Vec<Vec<f64>>,
    pub marginal2: Vec<Vec<f64>>,
}

/// Evolves an initial state for `steps` steps, recording the entanglement
/// entropy and the marginal distributions at every time including `t = 0`.
pub fn record_series(
    space: &WalkSpace,
    scheme: InteractionScheme,
    initial: &InitialState,
    steps: usize,
) -> Result<SeriesRecord> {
    let mut state = initial.build(space);
    let mut record = SeriesRecord {
        entanglement: Vec::with_capacity(steps + 1),
        marginal1: Vec::with_capacity(steps + 1),
        marginal2: Vec::with_capacity(steps + 1),
    };
    let observe = |record: &mut SeriesRecord, state: &TwoParticleState| -> Result<()> {
        record.entanglement.push(entanglement_entropy(state)?);
        let (p1, p2) = marginal_probabilities(space, state);
        record.marginal1.push(p1);
        record.marginal2.push(p2);
        Ok(())
    };
    observe(&mut record, &state)?;
    for _ in 0..steps {
        walk::step(space, scheme, &mut state);
        observe(&mut record, &state)?;
    }
    Ok(record)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;
    use crate::walk::step;
    use std::f64::consts::PI;

    #[test]
    fn equal_superposition_joint_is_uniform() {
        let space = WalkSpace::new(catalog("k8").unwrap());
        let state = space.equal_superposition();
        let joint = joint_probability(&space, &state);
        for i in 0..8 {
            for k in 0..8 {
                assert!((joint.get(i, k) - 1.0 / 64.0).abs() < 1e-14);
            }
        }
        assert!((joint.total() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn basis_state_concentrates_probability() {
        let space = WalkSpace::new(catalog("k8").unwrap());
        let a1 = space.arcs().arc_index(0, 2).unwrap();
        let a2 = space.arcs().arc_index(1, 3).unwrap();
        let state = space.basis_state(a1, a2);
        let joint = joint_probability(&space, &state);
        for i in 0..8 {
            for k in 0..8 {
                let expected = if (i, k) == (0, 1) { 1.0 } else { 0.0 };
                assert_eq!(joint.get(i, k), expected);
            }
        }
    }

    /// For the complete graph the single-particle marginals stay exactly
    /// uniform under any interaction strength, while the same-site joint
    /// probability oscillates with phi. On the arc pairs of K8 the t = 2
    /// same-site value has the closed form
    /// `(7 + 42 ((1-c)^2 + 2 c (1-c) cos(phi) + c^2)) / 3136` with `c = 45/49`:
    /// two orbit values under the vertex-permutation symmetry, not one.
    #[test]
    fn k8_marginals_uniform_but_joint_splits_into_orbits() {
        let space = WalkSpace::new(catalog("k8").unwrap());
        let scheme = InteractionScheme::new(0.5 * PI).unwrap();
        let mut state = space.equal_superposition();
        for t in 1..=60 {
            step(&space, scheme, &mut state);
            let joint = joint_probability(&space, &state);
            let p1 = joint.marginal1();
            let p2 = joint.marginal2();
            for v in 0..8 {
                assert!(
                    (p1[v] - 0.125).abs() < 1e-12 && (p2[v] - 0.125).abs() < 1e-12,
                    "marginal deviates at t = {t}"
                );
            }
            // The vertex-permutation symmetry pins every diagonal entry to a
            // single value and every off-diagonal entry to another.
            let diag = joint.get(0, 0);
            let off = joint.get(0, 1);
            for i in 0..8 {
                for k in 0..8 {
                    let expected = if i == k { diag } else { off };
                    assert!((joint.get(i, k) - expected).abs() < 1e-12);
                }
            }
            if t == 2 {
                let c = 45.0 / 49.0;
                let phi = scheme.phi();
                let orbit =
                    (1.0 - c) * (1.0 - c) + 2.0 * c * (1.0 - c) * phi.cos() + c * c;
                let expected_diag = (7.0 + 42.0 * orbit) / 3136.0;
                assert!(
                    (diag - expected_diag).abs() < 1e-13,
                    "diag {diag} vs {expected_diag}"
                );
            }
        }
    }

    /// With self-loops the complete graph keeps even the joint distribution
    /// exactly uniform under the interaction.
    #[test]
    fn k8_with_self_loops_joint_stays_uniform() {
        let space = WalkSpace::new(crate::graph::complete_graph(8, true).unwrap());
        let scheme = InteractionScheme::new(0.5 * PI).unwrap();
        let mut state = space.equal_superposition();
        for _ in 0..40 {
            step(&space, scheme, &mut state);
        }
        let joint = joint_probability(&space, &state);
        for i in 0..8 {
            for k in 0..8 {
                assert!((joint.get(i, k) - 1.0 / 64.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn marginals_sum_to_one_and_match_joint() {
        let space = WalkSpace::new(catalog("3ct2-unjoined").unwrap());
        let mut state = space.random_state(17);
        let scheme = InteractionScheme::new(1.1).unwrap();
        for _ in 0..37 {
            step(&space, scheme, &mut state);
        }
        let joint = joint_probability(&space, &state);
        let (p1, p2) = marginal_probabilities(&space, &state);
        assert_eq!(p1, joint.marginal1());
        assert_eq!(p2, joint.marginal2());
        assert!((p1.iter().sum::<f64>() - 1.0).abs() < 1e-10);
        assert!((p2.iter().sum::<f64>() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn product_state_density_is_rank_one() {
        let space = WalkSpace::new(catalog("q3").unwrap());
        let a = space.arc_count();
        // Two distinct single-particle vectors.
        let u: Vec<Complex64> = (0..a)
            .map(|i| Complex64::new(1.0 + i as f64, 0.3 * i as f64))
            .collect();
        let w: Vec<Complex64> = (0..a)
            .map(|i| Complex64::new((i as f64 * 0.7).cos(), (i as f64 * 0.3).sin()))
            .collect();
        let state = space.product_state(&u, &w).unwrap();
        let rho = reduced_density(&state);
        assert!((rho.trace() - 1.0).abs() < 1e-12);
        // rho = u u^dagger for the normalized u.
        let norm = u.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for x in 0..a {
            for y in 0..a {
                let expected = u[x] / norm * (u[y] / norm).conj();
                assert!((rho.entry(x, y) - expected).norm() < 1e-12);
            }
        }
        // Purity 1 <=> zero entropy.
        let entropy = entanglement_entropy(&state).unwrap();
        assert!(entropy.abs() < 1e-9);
    }

    #[test]
    fn bell_like_state_has_one_bit() {
        let space = WalkSpace::new(catalog("q3").unwrap());
        let a = space.arc_count();
        let inv = Complex64::new(1.0 / 2.0_f64.sqrt(), 0.0);
        let mut amps = vec![Complex64::new(0.0, 0.0); a * a];
        amps[0 * a + 1] = inv;
        amps[2 * a + 3] = inv;
        let state = TwoParticleState::from_amplitudes(&space, amps).unwrap();
        let rho = reduced_density(&state);
        let eigenvalues = hermitian_eigenvalues(&rho).unwrap();
        let positive: Vec<f64> = eigenvalues.iter().copied().filter(|l| *l > 1e-9).collect();
        assert_eq!(positive.len(), 2);
        assert!((positive[0] - 0.5).abs() < 1e-12);
        assert!((positive[1] - 0.5).abs() < 1e-12);
        let entropy = entanglement_entropy(&state).unwrap();
        assert!((entropy - 1.0).abs() < 1e-12);
    }

    #[test]
    fn entropy_rejects_broken_spectra() {
        assert!(matches!(
            entropy_from_eigenvalues(&[1.1, -1e-6]),
            Err(Error::BrokenDensityMatrix { .. })
        ));
        // Tiny negatives are clamped.
        let e = entropy_from_eigenvalues(&[1.0, -1e-12]).unwrap();
        assert_eq!(e, 0.0);
    }

    #[test]
    fn record_series_has_expected_shape() {
        let space = WalkSpace::new(catalog("q3").unwrap());
        let scheme = InteractionScheme::new(0.3 * PI).unwrap();
        let record = record_series(&space, scheme, &InitialState::EqualSuperposition, 50).unwrap();
        assert_eq!(record.entanglement.len(), 51);
        assert_eq!(record.marginal1.len(), 51);
        assert_eq!(record.marginal2.len(), 51);
        assert_eq!(record.marginal1[0].len(), 8);
        // Entanglement starts at zero (product state) and becomes positive.
        assert!(record.entanglement[0].abs() < 1e-9);
        assert!(record.entanglement.iter().any(|&e| e > 0.1));
        // Entropy bound: log2(A) with A = 24 arcs.
        let bound = (space.arc_count() as f64).log2();
        assert!(record.entanglement.iter().all(|&e| (0.0..=bound).contains(&e)));
    }

    #[test]
    fn no_entanglement_without_interaction() {
        for name in ["k8", "q3-modified"] {
            let space = WalkSpace::new(catalog(name).unwrap());
            let record = record_series(
                &space,
                InteractionScheme::non_interacting(),
                &InitialState::EqualSuperposition,
                120,
            )
            .unwrap();
            for (t, &e) in record.entanglement.iter().enumerate() {
                assert!(e <= 1e-9, "graph {name}: E({t}) = {e}");
            }
        }
    }
}
