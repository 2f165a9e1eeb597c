//! Dirichlet-to-Neumann operators and Steklov spectral machinery.
