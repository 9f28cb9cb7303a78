#pragma once

#include <string>
#include <vector>

#include "geophase/eigen.hpp"

namespace geophase {

enum class GaugeTag { Raw, ParallelTransport };

// Time-ordered eigen-frames of a density-matrix path.  After matching,
// index k refers to the same physical branch in every frame (branches are
// followed by eigenvector overlap, not by eigenvalue order, so they survive
// value crossings).
struct EigenTrajectory {
  std::vector<EigenFrame> frames;
  GaugeTag gauge = GaugeTag::Raw;
};

inline EigenTrajectory make_trajectory(std::vector<EigenFrame> frames) {
  for (std::size_t i = 0; i + 1 < frames.size(); ++i)
    if (!(frames[i].time < frames[i + 1].time))
      throw Error("make_trajectory: grid must be strictly increasing");
  return EigenTrajectory{std::move(frames), GaugeTag::Raw};
}

namespace detail {

// Greedy global assignment maximizing matched |<psi_k(i)|psi_l(i+1)>|.
// Returns perm with perm[k] = branch of `next` assigned to branch k of `prev`
// and the smallest matched overlap magnitude.
struct BranchMatch {
  std::vector<std::size_t> perm;
  double min_overlap = 1.0;
};

inline BranchMatch match_frames(const EigenFrame& prev, const EigenFrame& next) {
  const std::size_t d = prev.dim();
  std::vector<std::vector<double>> mag(d, std::vector<double>(d));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l)
      mag[k][l] = std::abs(inner(prev.vectors[k], next.vectors[l]));

  BranchMatch m;
  m.perm.assign(d, d);
  std::vector<bool> row_used(d, false), col_used(d, false);
  for (std::size_t step = 0; step < d; ++step) {
    double best = -1.0;
    std::size_t bk = 0, bl = 0;
    for (std::size_t k = 0; k < d; ++k) {
      if (row_used[k]) continue;
      for (std::size_t l = 0; l < d; ++l) {
        if (col_used[l]) continue;
        if (mag[k][l] > best) {
          best = mag[k][l];
          bk = k;
          bl = l;
        }
      }
    }
    m.perm[bk] = bl;
    row_used[bk] = true;
    col_used[bl] = true;
    m.min_overlap = std::min(m.min_overlap, best);
  }
  return m;
}

inline void apply_perm(EigenFrame& f, const std::vector<std::size_t>& perm) {
  EigenFrame g = f;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    g.values[k] = f.values[perm[k]];
    g.vectors[k] = f.vectors[perm[k]];
  }
  f.values = std::move(g.values);
  f.vectors = std::move(g.vectors);
}

} // namespace detail

// Reorders every frame so branch k follows one continuous eigenvector family.
// Throws BranchAmbiguity when two non-degenerate consecutive frames cannot be
// matched with overlap >= tol.overlap_min (grid too coarse).
inline void match_branches(EigenTrajectory& traj, const Tolerances& tol = {}) {
  for (std::size_t i = 0; i + 1 < traj.frames.size(); ++i) {
    auto m = detail::match_frames(traj.frames[i], traj.frames[i + 1]);
    if (m.min_overlap < tol.overlap_min && !traj.frames[i].degenerate &&
        !traj.frames[i + 1].degenerate)
      throw BranchAmbiguityError("match_branches: overlap " + std::to_string(m.min_overlap) +
                                 " between t=" + std::to_string(traj.frames[i].time) + " and t=" +
                                 std::to_string(traj.frames[i + 1].time));
    detail::apply_perm(traj.frames[i + 1], m.perm);
  }
}

// Parallel-transport gauge: after matching, each eigenvector is rephased so
// that <psi_k(t_i)|psi_k(t_{i+1})> is real and positive for every i, k.
inline EigenTrajectory gauge_fix(EigenTrajectory traj, const Tolerances& tol = {}) {
  match_branches(traj, tol);
  for (std::size_t i = 0; i + 1 < traj.frames.size(); ++i) {
    EigenFrame& next = traj.frames[i + 1];
    for (std::size_t k = 0; k < next.dim(); ++k) {
      const Cplx o = inner(traj.frames[i].vectors[k], next.vectors[k]);
      const double mag = std::abs(o);
      if (mag == 0.0) continue; // exactly orthogonal flip inside a degenerate plateau
      const Cplx ph = std::conj(o) / mag;
      for (Cplx& z : next.vectors[k]) z *= ph;
    }
  }
  traj.gauge = GaugeTag::ParallelTransport;
  return traj;
}

// Normalized ordered product  prod_i <psi_k(t_i)|psi_k(t_{i+1})> / |...| ,
// the discrete parallel-transport factor of branch k.  Requires a
// branch-matched trajectory; the value is invariant under rephasing of any
// interior eigenvector.
inline Cplx pancharatnam_product(const EigenTrajectory& traj, std::size_t branch) {
  if (traj.frames.empty() || branch >= traj.frames.front().dim())
    throw DimensionMismatchError("pancharatnam_product: invalid branch");
  Cplx prod{1.0, 0.0};
  for (std::size_t i = 0; i + 1 < traj.frames.size(); ++i) {
    const Cplx o = inner(traj.frames[i].vectors[branch], traj.frames[i + 1].vectors[branch]);
    const double mag = std::abs(o);
    if (mag == 0.0) continue;
    prod *= o / mag;
  }
  return prod;
}

} // namespace geophase
