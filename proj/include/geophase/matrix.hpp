#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "geophase/config.hpp"
#include "geophase/errors.hpp"

namespace geophase {

using Cplx = std::complex<double>;

inline bool is_finite(Cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Dense square complex matrix, row-major.  Sized for few-level systems and
// the truncated-Fock oracles; not meant for large-scale linear algebra.
class CMatrix {
public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, Cplx{0.0, 0.0}) {}

  static CMatrix identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return dim_; }

  Cplx& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const Cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  CMatrix adjoint() const {
    CMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
  }

  Cplx trace() const {
    Cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const Cplx& z : a_) m = std::max(m, std::abs(z));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const Cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
  }

  // max_ij |a_ij - conj(a_ji)|
  double hermiticity_defect() const {
    double d = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
  }

  bool all_finite() const {
    for (const Cplx& z : a_)
      if (!is_finite(z)) return false;
    return true;
  }

  CMatrix& operator+=(const CMatrix& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  CMatrix& operator-=(const CMatrix& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  CMatrix& operator*=(Cplx s) {
    for (Cplx& z : a_) z *= s;
    return *this;
  }

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(Cplx s, CMatrix a) { return a *= s; }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    const std::size_t n = a.dim_;
    CMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Cplx aik = a(i, k);
        if (aik == Cplx{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  std::vector<Cplx> apply(const std::vector<Cplx>& v) const {
    std::vector<Cplx> out(dim_, Cplx{0.0, 0.0});
    for (std::size_t i = 0; i < dim_; ++i) {
      Cplx s{0.0, 0.0};
      for (std::size_t j = 0; j < dim_; ++j) s += (*this)(i, j) * v[j];
      out[i] = s;
    }
    return out;
  }

private:
  std::size_t dim_ = 0;
  std::vector<Cplx> a_;
};

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  CMatrix c(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Cplx aij = a(i, j);
      if (aij == Cplx{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) c(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return c;
}

inline Cplx inner(const std::vector<Cplx>& u, const std::vector<Cplx>& v) {
  Cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

inline double vec_norm(const std::vector<Cplx>& v) {
  double s = 0.0;
  for (const Cplx& z : v) s += std::norm(z);
  return std::sqrt(s);
}

// Hermitian unit-trace state of a small open system.  Positivity is checked
// where the spectrum is actually computed (see eig_hermitian).
class DensityMatrix {
public:
  DensityMatrix(CMatrix m, const Tolerances& tol = {}) : m_(std::move(m)) {
    if (m_.dim() == 0) throw DimensionMismatchError("DensityMatrix: empty matrix");
    if (!m_.all_finite()) throw UnphysicalStateError("DensityMatrix: non-finite entry");
    const double hd = m_.hermiticity_defect();
    if (hd > tol.hermiticity)
      throw NonHermitianError("DensityMatrix: hermiticity defect " + std::to_string(hd));
    const Cplx tr = m_.trace();
    if (std::abs(tr - Cplx{1.0, 0.0}) > tol.trace_unit)
      throw UnphysicalStateError("DensityMatrix: trace deviates from one");
  }

  std::size_t dim() const { return m_.dim(); }
  const CMatrix& mat() const { return m_; }
  const Cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  double purity() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) s += std::norm(m_(i, j));
    return s;
  }

private:
  CMatrix m_;
};

} // namespace geophase
