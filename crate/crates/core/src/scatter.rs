//! Scattering operators and the transmission solver.
