//! Exact Laplacian coefficients of graphs and the limit-theorem diagnostics
//! built on top of them.
//!
//! The coefficients `c(G, k)` are the unsigned coefficients of
//! `∏(x + λ_i)` where `λ_i` runs over the Laplacian spectrum of `G`. Because
//! that polynomial has only real nonpositive roots, the normalized
//! coefficients form a distribution with mean `Σ 1/(1+λ_i)` and variance
//! `Σ λ_i/(1+λ_i)^2`; once the variance diverges along a graph family the
//! coefficients obey central and local limit theorems.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph`] | graphs, named families, combinators, random generators, edge-list I/O |
//! | [`charpoly`] | exact integer Laplacian matrices, characteristic polynomials, combinatorial oracles |
//! | [`spectra`] | Jacobi eigensolver, closed-form family spectra, join/cone transforms, bounds |
//! | [`stats`] | mean/variance, normalized probabilities, CLT/LLT/Poisson distances |
//! | [`report`] | diagnostics rows, size-ladder sweeps and the verification corpus |

pub mod charpoly;
pub mod error;
pub mod graph;
pub mod report;
pub mod spectra;
pub mod stats;

pub use charpoly::{Coefficients, IntMatrix};
pub use spectra::Spectrum;
pub use stats::{LimitStats, ProbabilityVector};
pub use error::{Error, Result};
pub use graph::{Family, FamilySpec, Graph};


