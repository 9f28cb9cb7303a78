#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "geophase/matrix.hpp"

namespace geophase {

// Spectrum of one Hermitian matrix at one instant.  Values are sorted
// descending; vectors[k] belongs to values[k].  A frame whose smallest
// adjacent eigenvalue gap falls below gap_tol carries the degenerate flag,
// which relaxes branch matching downstream.
struct EigenFrame {
  std::vector<double> values;
  std::vector<std::vector<Cplx>> vectors;
  double time = 0.0;
  double min_gap = 0.0;
  bool degenerate = false;

  std::size_t dim() const { return values.size(); }
};

namespace detail {

inline EigenFrame eig2_closed_form(const CMatrix& m) {
  const double a = m(0, 0).real();
  const double b = m(1, 1).real();
  const Cplx c = m(0, 1);
  const double ac = std::abs(c);
  const double d = 0.5 * (a - b);
  const double r = std::hypot(d, ac);

  EigenFrame f;
  f.values = {0.5 * (a + b) + r, 0.5 * (a + b) - r};
  if (ac == 0.0) {
    // already diagonal; keep a deterministic basis ordering
    if (a >= b)
      f.vectors = {{Cplx{1, 0}, Cplx{0, 0}}, {Cplx{0, 0}, Cplx{1, 0}}};
    else
      f.vectors = {{Cplx{0, 0}, Cplx{1, 0}}, {Cplx{1, 0}, Cplx{0, 0}}};
  } else {
    // avoid cancellation: pick the component that does not vanish
    std::vector<Cplx> v1(2);
    if (d >= 0.0) {
      v1 = {Cplx{d + r, 0.0}, std::conj(c)};
    } else {
      v1 = {c, Cplx{r - d, 0.0}};
    }
    const double n1 = vec_norm(v1);
    v1[0] /= n1;
    v1[1] /= n1;
    const std::vector<Cplx> v2 = {-std::conj(v1[1]), std::conj(v1[0])};
    f.vectors = {v1, v2};
  }
  return f;
}

// one cyclic-Jacobi similarity update zeroing element (p, q)
inline void jacobi_rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
  const Cplx apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Cplx phase = apq / mag;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (app - aqq) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double cth = 1.0 / std::sqrt(1.0 + t * t);
  const double sth = t * cth;

  // columns p, q mix through the unitary [[c, -s*phase],[s*conj(phase), c]]
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Cplx aip = a(i, p);
    const Cplx aiq = a(i, q);
    a(i, p) = cth * aip + sth * std::conj(phase) * aiq;
    a(i, q) = -sth * phase * aip + cth * aiq;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Cplx apj = a(p, j);
    const Cplx aqj = a(q, j);
    a(p, j) = cth * apj + sth * phase * aqj;
    a(q, j) = -sth * std::conj(phase) * apj + cth * aqj;
  }
  a(p, q) = Cplx{0.0, 0.0};
  a(q, p) = Cplx{0.0, 0.0};
  a(p, p) = Cplx{a(p, p).real(), 0.0};
  a(q, q) = Cplx{a(q, q).real(), 0.0};

  for (std::size_t i = 0; i < n; ++i) {
    const Cplx vip = v(i, p);
    const Cplx viq = v(i, q);
    v(i, p) = cth * vip + sth * std::conj(phase) * viq;
    v(i, q) = -sth * phase * vip + cth * viq;
  }
}

inline double offdiag_norm(const CMatrix& a) {
  double s = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

inline EigenFrame eig_jacobi(const CMatrix& m, const Tolerances& tol) {
  const std::size_t n = m.dim();
  CMatrix a = m;
  CMatrix v = CMatrix::identity(n);
  const double target = tol.jacobi_offdiag * std::max(1.0, m.frobenius_norm());

  int sweep = 0;
  while (offdiag_norm(a) > target) {
    if (++sweep > tol.jacobi_max_sweeps)
      throw NoConvergenceError("eig_hermitian: Jacobi sweeps exhausted");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }

  EigenFrame f;
  f.values.resize(n);
  f.vectors.assign(n, std::vector<Cplx>(n));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return diag[x] > diag[y]; });
  for (std::size_t k = 0; k < n; ++k) {
    f.values[k] = diag[order[k]];
    for (std::size_t i = 0; i < n; ++i) f.vectors[k][i] = v(i, order[k]);
  }
  return f;
}

inline void finish_frame(EigenFrame& f, const Tolerances& tol) {
  if (f.dim() < 2) {
    f.min_gap = std::numeric_limits<double>::infinity();
    f.degenerate = false;
    return;
  }
  double g = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < f.dim(); ++k)
    g = std::min(g, std::abs(f.values[k] - f.values[k + 1]));
  f.min_gap = g;
  f.degenerate = g < tol.gap_tol;
}

} // namespace detail

// Exact spectral decomposition of a small Hermitian matrix: closed
// trigonometric form for dim 2, cyclic Jacobi for dims up to 8.
inline EigenFrame eig_hermitian(const CMatrix& m, const Tolerances& tol = {}) {
  const std::size_t n = m.dim();
  if (n == 0 || n > 8)
    throw DimensionMismatchError("eig_hermitian: dimension must be in [1, 8]");
  if (!m.all_finite()) throw UnphysicalStateError("eig_hermitian: non-finite entry");
  const double hd = m.hermiticity_defect();
  if (hd > tol.hermiticity)
    throw NonHermitianError("eig_hermitian: hermiticity defect " + std::to_string(hd));

  EigenFrame f;
  if (n == 1) {
    f.values = {m(0, 0).real()};
    f.vectors = {{Cplx{1.0, 0.0}}};
  } else if (n == 2) {
    f = detail::eig2_closed_form(m);
  } else {
    f = detail::eig_jacobi(m, tol);
  }
  detail::finish_frame(f, tol);
  return f;
}

// Density-matrix entry point: additionally enforces positivity.
inline EigenFrame eig_hermitian(const DensityMatrix& m, const Tolerances& tol = {}) {
  EigenFrame f = eig_hermitian(m.mat(), tol);
  if (f.values.back() < tol.eigenvalue_floor)
    throw UnphysicalStateError("eig_hermitian: negative eigenvalue " +
                               std::to_string(f.values.back()));
  return f;
}

// Sum_k eps_k |psi_k><psi_k|, for reconstruction checks.
inline CMatrix reconstruct(const EigenFrame& f) {
  const std::size_t n = f.dim();
  CMatrix m(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) += f.values[k] * f.vectors[k][i] * std::conj(f.vectors[k][j]);
  return m;
}

} // namespace geophase
