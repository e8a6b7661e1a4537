//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the simulator library.
#[derive(Debug, Error)]
pub enum Error {
    /// A matrix with zero dimension was supplied.
    #[error("matrix must have dimension at least 1")]
    EmptyMatrix,

    /// Matrix data length does not match the declared square dimension.
    #[error("expected {expected} matrix entries, got {got}")]
    MatrixShape { expected: usize, got: usize },

    /// The matrix is not Hermitian within tolerance (also triggered by NaN).
    #[error("matrix is not Hermitian: max |m[r][c] - conj(m[c][r])| = {defect:e}")]
    NotHermitian { defect: f64 },

    /// The Jacobi eigensolver failed to reduce the off-diagonal norm.
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal {off:e})")]
    EigenNoConvergence { sweeps: usize, off: f64 },

    /// An empty series was passed where at least one sample is required.
    #[error("input series is empty")]
    EmptySeries,

    /// A series is shorter than an operation requires.
    #[error("series of length {len} is too short (minimum {min})")]
    SeriesTooShort { len: usize, min: usize },

    /// A sample in a real-valued series is NaN or infinite.
    #[error("series contains a non-finite sample at index {index}")]
    NonFiniteSample { index: usize },

    /// Tukey window shape parameter outside [0, 1].
    #[error("window parameter alpha = {alpha} is outside [0, 1]")]
    InvalidAlpha { alpha: f64 },

    /// A graph construction parameter is out of range.
    #[error("invalid graph parameter: {0}")]
    InvalidGraphParameter(String),

    /// A constructed or parsed graph violates a structural invariant.
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// An edge operation referenced an edge that does not exist.
    #[error("edge ({0}, {1}) does not exist")]
    EdgeNotFound(usize, usize),

    /// The same edge appears twice in an edge list.
    #[error("edge ({0}, {1}) listed more than once")]
    DuplicateEdge(usize, usize),

    /// Removing edges disconnected a graph that must stay connected.
    #[error("graph is disconnected after edge removal")]
    Disconnected,

    /// Removing edges left a vertex with no incident edges.
    #[error("vertex {0} has no incident edges after removal")]
    IsolatedVertex(usize),

    /// A name not present in the graph catalog.
    #[error("unknown catalog graph {0:?} (known: k8, q3, 3ct2-joined, k8-modified, q3-modified, 3ct2-unjoined)")]
    UnknownCatalog(String),

    /// A graph file could not be parsed.
    #[error("graph file parse error on line {line}: {message}")]
    GraphParse { line: usize, message: String },

    /// A series CSV file could not be parsed.
    #[error("series file parse error on line {line}: {message}")]
    SeriesParse { line: usize, message: String },

    /// The interaction phase must be a finite real number.
    #[error("interaction phase must be finite, got {0}")]
    NonFinitePhase(f64),

    /// A state vector has the wrong length or non-finite entries.
    #[error("invalid state vector: {0}")]
    InvalidState(String),

    /// A reduced density matrix produced an eigenvalue below the negativity budget.
    #[error("reduced density matrix has eigenvalue {min_eigenvalue:e} < -1e-9")]
    BrokenDensityMatrix { min_eigenvalue: f64 },

    /// A parameter sweep failed at one grid point.
    #[error("sweep failed at phi = {phi}: {source}")]
    SweepPoint {
        phi: f64,
        #[source]
        source: Box<Error>,
    },

    /// Empty phi grid passed to a sweep.
    #[error("phi grid is empty")]
    EmptyPhiGrid,

    /// The power spectrum is numerically zero (nothing to analyze).
    #[error("empty spectrum: series is indistinguishable from zero after detrend and window")]
    EmptySpectrum,

    /// Invalid command-line configuration.
    #[error("{0}")]
    InvalidConfig(String),

    /// I/O failure while reading or writing data files.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
