//! Common shape of verification outcomes.

/// Anything that ends in a pass/fail verdict with human-readable diagnostics.
pub trait Verdict {
    fn passed(&self) -> bool;

    /// Diagnostic lines explaining the outcome (residuals, certificates, notes).
    fn diagnostics(&self) -> Vec<String>;
}
