#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "geophase/rng.hpp"
#include "geophase/trajectory.hpp"

namespace geophase {

struct TrajectoryGrid {
  double t_start = 0.0;
  double t_end = 0.0;
  int n_steps = 256;
  enum class Scheme { Uniform, AdaptiveHalving } scheme = Scheme::AdaptiveHalving;
};

inline void validate(const TrajectoryGrid& g) {
  if (!(g.t_end > g.t_start)) throw Error("TrajectoryGrid: t_end must exceed t_start");
  if (g.n_steps < 8) throw Error("TrajectoryGrid: need at least 8 steps");
}

// Output of the mixed-state phase functional.  `phase` is the principal
// value in (-pi, pi]; `raw_unwrapped` follows the argument of the weighted
// overlap sum continuously along the path, so a full 2*pi winding is
// distinguishable from zero.
struct PhaseResult {
  double phase = 0.0;
  double raw_unwrapped = 0.0;
  std::vector<double> weights_initial;
  std::vector<double> weights_final;
  double visibility = 0.0;
  int grid_levels = 0;
  double final_delta = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

// Weighted Pancharatnam sum over branches of a matched frame sequence.
// For branch k the parallel-transport factor e^{-int <psi|dpsi>} equals the
// conjugate of the normalized ordered overlap product; the combination with
// the endpoint overlap <psi_k(0)|psi_k(T)> is exactly gauge invariant at any
// resolution.
struct PhaseAccumulator {
  explicit PhaseAccumulator(EigenFrame first, const Tolerances& tol)
      : tol_(&tol), first_(std::move(first)), prev_(first_) {
    const std::size_t d = first_.dim();
    active_.assign(d, false);
    prod_.assign(d, Cplx{1.0, 0.0});
    bool any = false;
    for (std::size_t k = 0; k < d; ++k) {
      active_[k] = first_.values[k] > tol.weight_floor;
      any = any || active_[k];
    }
    if (!any)
      throw DegenerateStateError("geometric_phase: all initial weights below weight_floor");
    last_sum_ = partial_sum(first_);
    unwrapped_ = std::arg(last_sum_);
  }

  void push(EigenFrame frame) {
    auto m = match_frames(prev_, frame);
    if (m.min_overlap < tol_->overlap_min && !prev_.degenerate && !frame.degenerate)
      throw BranchAmbiguityError("geometric_phase: branch overlap " +
                                 std::to_string(m.min_overlap) + " near t=" +
                                 std::to_string(frame.time) + " (grid too coarse)");
    apply_perm(frame, m.perm);
    for (std::size_t k = 0; k < frame.dim(); ++k) {
      if (!active_[k]) continue;
      const Cplx o = inner(prev_.vectors[k], frame.vectors[k]);
      const double mag = std::abs(o);
      if (mag > 0.0) prod_[k] *= o / mag;
    }
    prev_ = std::move(frame);
    const Cplx s = partial_sum(prev_);
    if (std::abs(s) > 0.0 && std::abs(last_sum_) > 0.0)
      unwrapped_ += wrap_angle(std::arg(s) - std::arg(last_sum_));
    if (std::abs(s) > 0.0) last_sum_ = s;
  }

  PhaseResult finish() const {
    const Cplx s = partial_sum(prev_);
    if (std::abs(s) < tol_->visibility_floor)
      throw DegenerateStateError("geometric_phase: overlap sum has vanishing modulus");
    PhaseResult r;
    r.phase = std::arg(s);
    r.raw_unwrapped = unwrapped_;
    r.visibility = std::abs(s);
    r.weights_initial = first_.values;
    r.weights_final = prev_.values;
    return r;
  }

private:
  Cplx partial_sum(const EigenFrame& cur) const {
    Cplx s{0.0, 0.0};
    for (std::size_t k = 0; k < cur.dim(); ++k) {
      if (!active_[k]) continue;
      const double w = first_.values[k] * cur.values[k];
      if (w <= 0.0) continue;
      s += std::sqrt(w) * inner(first_.vectors[k], cur.vectors[k]) * std::conj(prod_[k]);
    }
    return s;
  }

  const Tolerances* tol_;
  EigenFrame first_;
  EigenFrame prev_;
  std::vector<bool> active_;
  std::vector<Cplx> prod_;
  Cplx last_sum_{1.0, 0.0};
  double unwrapped_ = 0.0;
};

inline void add_gauge_noise(EigenFrame& f, std::uint64_t seed, std::uint64_t frame_index) {
  for (std::size_t k = 0; k < f.dim(); ++k) {
    const double a = two_pi * rng::uniform01(seed, frame_index * 16 + k);
    const Cplx ph = std::polar(1.0, a);
    for (Cplx& z : f.vectors[k]) z *= ph;
  }
}

template <class RhoFn>
PhaseResult phase_single_level(RhoFn&& rho_of_t, double t0, double t1, int n,
                               const Tolerances& tol) {
  const double dt = (t1 - t0) / n;
  auto frame_at = [&](int i) {
    const double t = (i == n) ? t1 : t0 + i * dt;
    EigenFrame f = eig_hermitian(rho_of_t(t), tol);
    f.time = t;
    if (tol.gauge_noise_seed != 0)
      add_gauge_noise(f, tol.gauge_noise_seed, static_cast<std::uint64_t>(i));
    return f;
  };
  PhaseAccumulator acc(frame_at(0), tol);
  for (int i = 1; i <= n; ++i) acc.push(frame_at(i));
  return acc.finish();
}

// Phase of an already-sampled matched/unmatched frame sequence; used by
// gauge-invariance tests that inject frames directly.
inline PhaseResult phase_from_frames(const std::vector<EigenFrame>& frames,
                                     const Tolerances& tol = {}) {
  if (frames.size() < 2) throw Error("phase_from_frames: need at least two frames");
  PhaseAccumulator acc(frames.front(), tol);
  for (std::size_t i = 1; i < frames.size(); ++i) acc.push(frames[i]);
  return acc.finish();
}

} // namespace detail

// Mixed-state geometric phase of a non-unitary evolution, evaluated on a
// time-sampled density-matrix source.  The trajectory is resampled at twice
// the resolution until the phase moves by less than tol.phase_tol between
// levels (AdaptiveHalving) or evaluated once (Uniform).
template <class RhoFn>
PhaseResult geometric_phase(RhoFn&& rho_of_t, const TrajectoryGrid& grid,
                            const Tolerances& tol = {}) {
  validate(grid);
  if (grid.scheme == TrajectoryGrid::Scheme::Uniform) {
    PhaseResult r =
        detail::phase_single_level(rho_of_t, grid.t_start, grid.t_end, grid.n_steps, tol);
    r.grid_levels = 1;
    return r;
  }

  PhaseResult prev;
  for (int level = 0; level <= tol.max_levels; ++level) {
    const int n = grid.n_steps << level;
    PhaseResult cur =
        detail::phase_single_level(rho_of_t, grid.t_start, grid.t_end, n, tol);
    cur.grid_levels = level + 1;
    if (level > 0) {
      cur.final_delta = circular_distance(cur.phase, prev.phase);
      if (cur.final_delta < tol.phase_tol) return cur;
    }
    prev = std::move(cur);
  }
  throw NoConvergenceError("geometric_phase: phase delta " +
                           std::to_string(prev.final_delta) + " after " +
                           std::to_string(tol.max_levels) + " halving levels");
}

} // namespace geophase
