use thiserror::Error;

/// Errors surfaced by the curve, pants-graph, projection and holonomy layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum TopoError {
    #[error("surface S({genus},{punctures}) is unsupported: {reason}")]
    UnsupportedSurface {
        genus: u32,
        punctures: u32,
        reason: String,
    },

    #[error("operands live on different surfaces: S({0},{1}) vs S({2},{3})")]
    SurfaceMismatch(u32, u32, u32, u32),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("invalid multicurve: {0}")]
    InvalidMulticurve(String),

    #[error("invalid pants decomposition: {0}")]
    InvalidPants(String),

    #[error("subsurface is not usable here: {0}")]
    BadSubsurface(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("search budget exhausted after {expanded} node expansions")]
    BudgetExhausted { expanded: usize },

    #[error("candidate cap {cap} exhausted during {context}")]
    CapExhausted { cap: u32, context: String },

    #[error("numeric range error: {0}")]
    NumericRange(String),

    #[error("holonomy construction failed: {0}")]
    Holonomy(String),

    #[error("triangulation move rejected: {0}")]
    MoveRejected(String),

    #[error("model assembly failed: {0}")]
    Assembly(String),

    #[error("operation not supported: {0}")]
    NotSupported(String),

    #[error("io error: {0}")]
    Io(String),

    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, TopoError>;
