#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace geophase {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Every numerical tolerance used by the library lives here, so a single
// struct can be threaded through from the CLI config down to the kernels.
struct Tolerances {
  // state validation
  double hermiticity = 1e-12;     // max |rho_mn - conj(rho_nm)|
  double trace_unit = 1e-12;      // |tr(rho) - 1|
  double eigenvalue_floor = -1e-10; // smallest admissible density eigenvalue
  double bloch_norm_slack = 1e-10;  // |p| may exceed 1 by at most this

  // eigensolver
  double jacobi_offdiag = 1e-14;  // off-diagonal Frobenius norm target
  int jacobi_max_sweeps = 100;
  double gap_tol = 1e-9;          // below this gap a frame is flagged degenerate

  // branch tracking / gauge fixing
  double overlap_min = 0.5;       // smaller matched overlap => BranchAmbiguity

  // phase engine
  double phase_tol = 1e-6;        // grid-halving stop criterion, radians
  int max_levels = 12;            // halving levels before NoConvergence
  double weight_floor = 1e-12;    // branches below this initial weight are dropped
  double visibility_floor = 1e-12; // |sum| below this => DegenerateState

  // quadrature
  double quad_tol = 1e-8;         // componentwise node-doubling stop criterion
  int quad_nodes_max = 1024;

  // analytic two-level eigensystem
  double analytic_denominator_min = 1e-14;
  double kernel_degenerate_floor = 1e-14; // |F| below this at cos(theta)=0 is degenerate

  // oracles
  double expm_tol = 1e-12;
  double fock_convergence = 1e-8; // entrywise change when n_max is raised by 2
  int fock_dim_cap = 4096;

  // commuting-coupling check
  double commutator_tol = 1e-10;

  // testing hook: when nonzero, the phase engine multiplies every sampled
  // eigenvector by a pseudo-random unit phase before branch matching.
  // Results must not change (gauge invariance); used by robustness checks.
  std::uint64_t gauge_noise_seed = 0;
};

// (-pi, pi] principal value.
inline double wrap_angle(double x) {
  double r = std::fmod(x + pi, two_pi);
  if (r <= 0.0) r += two_pi;
  return r - pi;
}

// distance on the circle
inline double circular_distance(double a, double b) {
  return std::abs(wrap_angle(a - b));
}

} // namespace geophase
