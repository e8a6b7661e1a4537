//! Two-particle coined walk: state construction, Grover coins with the
//! phase interaction, and the flip-flop shift.
//!
//! The joint basis is the set of ordered arc pairs of the underlying graph.
//! With `A` arcs, a state holds `A * A` complex amplitudes; the pair
//! `(a1, a2)` lives at index `a1 * A + a2`, with `a1` describing particle 1.
//! Per step the coin acts blockwise on each pair of vertex coin spaces and
//! the shift reverses both arcs, so a state is never multiplied by a
//! materialized `A^2 x A^2` operator.

use std::collections::HashMap;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::graph::{ArcTable, Graph};

/// Interaction strength of the phase-perturbed Grover coin: blocks where
/// both particles sit on the same vertex pick up the factor `e^{i phi}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InteractionScheme {
    phi: f64,
}

impl InteractionScheme {
    pub fn new(phi: f64) -> Result<Self> {
        if !phi.is_finite() {
            return Err(Error::NonFinitePhase(phi));
        }
        Ok(Self { phi })
    }

    /// The non-interacting scheme (`phi = 0`), under which the two walkers
    /// evolve independently.
    pub fn non_interacting() -> Self {
        Self { phi: 0.0 }
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// `e^{i phi}`.
    pub fn phase(&self) -> Complex64 {
        Complex64::new(self.phi.cos(), self.phi.sin())
    }
}

/// A graph together with its arc table: the state space of one walk.
#[derive(Debug, Clone)]
pub struct WalkSpace {
    graph: Graph,
    arcs: ArcTable,
}

impl WalkSpace {
    pub fn new(graph: Graph) -> Self {
        let arcs = ArcTable::new(&graph);
        Self { graph, arcs }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn arcs(&self) -> &ArcTable {
        &self.arcs
    }

    /// Single-particle dimension; the joint state has the square of this.
    pub fn arc_count(&self) -> usize {
        self.arcs.arc_count()
    }

    /// The state with amplitude `1 / (N sqrt(d_i d_k))` on every basis state
    /// whose particles sit at vertices `i` and `k`. Normalized by the
    /// identity `sum_{ikjl} 1 / (N^2 d_i d_k) = 1`, so no renormalization is
    /// applied.
    pub fn equal_superposition(&self) -> TwoParticleState {
        let a = self.arc_count();
        let n = self.graph.vertex_count() as f64;
        let mut amps = Vec::with_capacity(a * a);
        for a1 in 0..a {
            let d1 = self.graph.degree(self.arcs.tail(a1)) as f64;
            for a2 in 0..a {
                let d2 = self.graph.degree(self.arcs.tail(a2)) as f64;
                amps.push(Complex64::new(1.0 / (n * (d1 * d2).sqrt()), 0.0));
            }
        }
        TwoParticleState { arc_count: a, amps }
    }

    /// A reproducible random state: every amplitude is drawn i.i.d. uniform
    /// from [0, 1) (real, nonnegative) and the vector is then divided by its
    /// 2-norm. The generator is ChaCha12 keyed by `seed`, with the standard
    /// 53-bit uniform double conversion, so identical seeds give bit-identical
    /// states on every platform.
    pub fn random_state(&self, seed: u64) -> TwoParticleState {
        let a = self.arc_count();
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let mut amps: Vec<Complex64> = (0..a * a)
            .map(|_| Complex64::new(rng.gen::<f64>(), 0.0))
            .collect();
        let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in &mut amps {
            *z /= norm;
        }
        TwoParticleState { arc_count: a, amps }
    }

    /// Product state `u1 (x) u2` from two single-particle amplitude vectors
    /// over the arcs. Each factor is normalized before taking the product.
    pub fn product_state(&self, u1: &[Complex64], u2: &[Complex64]) -> Result<TwoParticleState> {
        let a = self.arc_count();
        for (label, u) in [("first", u1), ("second", u2)] {
            if u.len() != a {
                return Err(Error::InvalidState(format!(
                    "{label} factor has length {}, expected {a}",
                    u.len()
                )));
            }
            if u.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::InvalidState(format!(
                    "{label} factor has non-finite amplitudes"
                )));
            }
        }
        let n1 = u1.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let n2 = u2.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if n1 == 0.0 || n2 == 0.0 {
            return Err(Error::InvalidState("zero-norm factor".into()));
        }
        let mut amps = Vec::with_capacity(a * a);
        for &x in u1 {
            for &y in u2 {
                amps.push(x / n1 * y / n2);
            }
        }
        Ok(TwoParticleState { arc_count: a, amps })
    }

    /// The basis state with both particles on definite arcs.
    pub fn basis_state(&self, arc1: usize, arc2: usize) -> TwoParticleState {
        let a = self.arc_count();
        assert!(arc1 < a && arc2 < a, "arc index out of range");
        let mut amps = vec![Complex64::new(0.0, 0.0); a * a];
        amps[arc1 * a + arc2] = Complex64::new(1.0, 0.0);
        TwoParticleState { arc_count: a, amps }
    }
}

/// Joint amplitude vector over ordered arc pairs.
#[derive(Debug, Clone)]
pub struct TwoParticleState {
    arc_count: usize,
    amps: Vec<Complex64>,
}

impl TwoParticleState {
    /// Wraps raw amplitudes (row-major over `(arc1, arc2)`). The vector must
    /// have length `A^2`, finite entries, and unit norm within `1e-8`.
    pub fn from_amplitudes(space: &WalkSpace, amps: Vec<Complex64>) -> Result<Self> {
        let a = space.arc_count();
        if amps.len() != a * a {
            return Err(Error::InvalidState(format!(
                "amplitude vector has length {}, expected {}",
                amps.len(),
                a * a
            )));
        }
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidState("non-finite amplitude".into()));
        }
        let norm_sqr: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > 1e-8 {
            return Err(Error::InvalidState(format!(
                "state norm^2 = {norm_sqr}, expected 1"
            )));
        }
        Ok(Self { arc_count: a, amps })
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// Amplitude on the arc pair `(a1, a2)`.
    pub fn amplitude(&self, a1: usize, a2: usize) -> Complex64 {
        self.amps[a1 * self.arc_count + a2]
    }

    /// Squared 2-norm; 1 up to roundoff for any evolved state.
    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum()
    }
}

/// The single-particle Grover coin `G(d)`, entries `2/d - delta`, as a
/// row-major `d x d` real matrix. It is symmetric, orthogonal, and fixes the
/// uniform coin vector (every row sums to 1).
pub fn grover_coin(d: usize) -> Result<Vec<f64>> {
    if d < 1 {
        return Err(Error::InvalidGraphParameter(
            "grover coin needs degree >= 1".into(),
        ));
    }
    let off = 2.0 / d as f64;
    let mut m = vec![off; d * d];
    for i in 0..d {
        m[i * d + i] = off - 1.0;
    }
    Ok(m)
}

fn check_state(space: &WalkSpace, state: &TwoParticleState) {
    assert_eq!(
        space.arc_count(),
        state.arc_count,
        "state does not belong to this walk space"
    );
}

/// Applies the joint coin in place: `G(d_i) (x) G(d_k)` on every block of
/// amplitudes with particle positions `(i, k)`, times `e^{i phi}` when
/// `i == k`.
///
/// `G(d) x = (2/d) (sum x) - x`, so each tensor factor is applied with one
/// running sum per coin line instead of a dense block product; the whole coin
/// costs O(A^2) per step.
pub fn apply_coin(space: &WalkSpace, scheme: InteractionScheme, state: &mut TwoParticleState) {
    check_state(space, state);
    let a = space.arc_count();
    let n = space.graph().vertex_count();
    let arcs = space.arcs();
    let amps = &mut state.amps;

    // Particle 2: every (row, vertex-of-particle-2) segment is contiguous.
    for row in 0..a {
        let line = &mut amps[row * a..(row + 1) * a];
        for v in 0..n {
            let seg = &mut line[arcs.arcs_of(v)];
            let two_over_d = 2.0 / seg.len() as f64;
            let total: Complex64 = seg.iter().sum();
            let pivot = total * two_over_d;
            for z in seg {
                *z = pivot - *z;
            }
        }
    }

    // Particle 1: the same reflection down the columns.
    for col in 0..a {
        for v in 0..n {
            let range = arcs.arcs_of(v);
            let two_over_d = 2.0 / range.len() as f64;
            let mut total = Complex64::new(0.0, 0.0);
            for j in range.clone() {
                total += amps[j * a + col];
            }
            let pivot = total * two_over_d;
            for j in range {
                amps[j * a + col] = pivot - amps[j * a + col];
            }
        }
    }

    // Interaction: phase the blocks where both particles share a vertex.
    let phase = scheme.phase();
    for v in 0..n {
        for row in arcs.arcs_of(v) {
            for z in &mut amps[row * a + arcs.offset(v)..row * a + arcs.offset(v + 1)] {
                *z *= phase;
            }
        }
    }
}

/// Flip-flop shift in place: the amplitude on `(a1, a2)` moves to
/// `(reverse(a1), reverse(a2))`. A pure permutation (an involution), hence
/// exactly norm-preserving.
pub fn apply_shift(space: &WalkSpace, state: &mut TwoParticleState) {
    check_state(space, state);
    let a = space.arc_count();
    let rev = space.arcs().reverse_table();
    let amps = &mut state.amps;
    for a1 in 0..a {
        for a2 in 0..a {
            let src = a1 * a + a2;
            let dst = rev[a1] * a + rev[a2];
            if src < dst {
                amps.swap(src, dst);
            }
        }
    }
}

/// One evolution step: coin, then shift.
pub fn step(space: &WalkSpace, scheme: InteractionScheme, state: &mut TwoParticleState) {
    apply_coin(space, scheme, state);
    apply_shift(space, state);
}

/// Runs `steps` steps in place, invoking `observer(t, state)` at `t = 0`
/// (before any step) and after each step.
pub fn evolve(
    space: &WalkSpace,
    scheme: InteractionScheme,
    state: &mut TwoParticleState,
    steps: usize,
    mut observer: impl FnMut(usize, &TwoParticleState),
) {
    observer(0, state);
    for t in 1..=steps {
        step(space, scheme, state);
        observer(t, state);
    }
}

/// Explicit per-vertex-pair coin blocks.
///
/// The block for positions `(i, k)` is the `d_i d_k x d_i d_k` unitary
/// `G(d_i) (x) G(d_k)`, times `e^{i phi}` when `i == k`, over the coin basis
/// ordered with particle 1's port as the major index. [`apply_coin`] never
/// builds these; they exist as the directly-inspectable form of the same
/// operator, for validation and for reference-path multiplication in tests.
#[derive(Debug, Clone)]
pub struct CoinOperator {
    // Keyed by degree pair: the block depends on (d_i, d_k) only.
    offsite: HashMap<(usize, usize), Vec<Complex64>>,
    onsite: HashMap<usize, Vec<Complex64>>,
}

impl CoinOperator {
    pub fn new(graph: &Graph, scheme: InteractionScheme) -> Self {
        let degrees: Vec<usize> = (0..graph.vertex_count()).map(|v| graph.degree(v)).collect();
        let mut offsite = HashMap::new();
        let mut onsite = HashMap::new();
        for &di in &degrees {
            for &dk in &degrees {
                offsite
                    .entry((di, dk))
                    .or_insert_with(|| kron_grover(di, dk, Complex64::new(1.0, 0.0)));
            }
            onsite
                .entry(di)
                .or_insert_with(|| kron_grover(di, di, scheme.phase()));
        }
        Self { offsite, onsite }
    }

    /// The dense block acting on the coin space of positions `(i, k)`,
    /// row-major of side `d_i * d_k`.
    pub fn block(&self, graph: &Graph, i: usize, k: usize) -> &[Complex64] {
        if i == k {
            &self.onsite[&graph.degree(i)]
        } else {
            &self.offsite[&(graph.degree(i), graph.degree(k))]
        }
    }

    /// Reference coin application: dense block-times-subvector per vertex
    /// pair. Slower than [`apply_coin`] but the same operator.
    pub fn apply(&self, space: &WalkSpace, state: &mut TwoParticleState) {
        check_state(space, state);
        let a = space.arc_count();
        let n = space.graph().vertex_count();
        let arcs = space.arcs();
        for i in 0..n {
            let ri = arcs.arcs_of(i);
            for k in 0..n {
                let rk = arcs.arcs_of(k);
                let side = ri.len() * rk.len();
                let block = self.block(space.graph(), i, k);
                let mut input = Vec::with_capacity(side);
                for a1 in ri.clone() {
                    for a2 in rk.clone() {
                        input.push(state.amps[a1 * a + a2]);
                    }
                }
                for (r, a1a2) in ri
                    .clone()
                    .flat_map(|a1| rk.clone().map(move |a2| (a1, a2)))
                    .enumerate()
                {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for (cidx, &x) in input.iter().enumerate() {
                        acc += block[r * side + cidx] * x;
                    }
                    state.amps[a1a2.0 * a + a1a2.1] = acc;
                }
            }
        }
    }
}

fn kron_grover(di: usize, dk: usize, factor: Complex64) -> Vec<Complex64> {
    let gi = grover_coin(di).expect("degree >= 1");
    let gk = grover_coin(dk).expect("degree >= 1");
    let side = di * dk;
    let mut out = vec![Complex64::new(0.0, 0.0); side * side];
    for j in 0..di {
        for l in 0..dk {
            for jj in 0..di {
                for ll in 0..dk {
                    out[(j * dk + l) * side + (jj * dk + ll)] =
                        factor * gi[j * di + jj] * gk[l * dk + ll];
                }
            }
        }
    }
    out
}
