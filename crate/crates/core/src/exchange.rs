//! Exchange operators.
