use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// `j·s = 1` for some multiple `j` of the argument.
    #[error("pole: {multiple}·s = 1 at s = {argument}")]
    Pole { multiple: u32, argument: f64 },

    /// The defining series does not converge (s ≤ 1).
    #[error("series diverges at s = {0}; the oracle needs s > 1")]
    Divergent(f64),

    /// No exact closed form is known at this integer argument.
    #[error("no exact closed form at s = {0}")]
    NoClosedForm(i64),

    /// A Laurent probe point coincides with another pole of the function.
    #[error("probe point s = {point} collides with the pole at 1/{other_k}")]
    PoleCollision { point: f64, other_k: u32 },

    /// A sign could not be certified above the numerical error budget.
    #[error("inconclusive: |value| = {value:e} is within 10x the error budget {budget:e}")]
    Inconclusive { value: f64, budget: f64 },

    /// Too few inputs were supplied for a Bell polynomial evaluation.
    #[error("need at least {needed} inputs, got {got}")]
    ShortInput { needed: usize, got: usize },
}
