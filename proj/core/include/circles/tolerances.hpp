#pragma once

// All numeric tolerances used across the library, in one place.
namespace circles::tol {

// Algebraic identities that hold exactly up to rounding (determinants,
// discriminants, cocycle sums).
inline constexpr double kAlgebraic = 1e-12;

// Composed numerical paths: isometry invariance, transformed-circle
// comparisons, anything that chains several operations.
inline constexpr double kNumeric = 1e-9;

// Quantization grid for canonical dedup keys. Curvature-bounded packings
// separate distinct circles far beyond this scale.
inline constexpr double kDedupGrid = 1e-7;

// Geometric tangency / disjointness decisions.
inline constexpr double kTangency = 1e-9;

// Residual bound for the Descartes relations.
inline constexpr double kDescartes = 1e-9;

// Involution check on flagged group generators (g^2 = id).
inline constexpr double kInvolution = 1e-10;

}  // namespace circles::tol
