#pragma once

#include <cmath>

#include "geophase/matrix.hpp"

namespace geophase {

// Polarization vector p with rho = (I + p.sigma)/2.
struct BlochVector {
  double px = 0.0;
  double py = 0.0;
  double pz = 0.0;

  double norm() const { return std::sqrt(px * px + py * py + pz * pz); }

  BlochVector& operator+=(const BlochVector& o) {
    px += o.px;
    py += o.py;
    pz += o.pz;
    return *this;
  }
  BlochVector& operator*=(double s) {
    px *= s;
    py *= s;
    pz *= s;
    return *this;
  }
  friend BlochVector operator+(BlochVector a, const BlochVector& b) { return a += b; }
  friend BlochVector operator*(double s, BlochVector a) { return a *= s; }
  friend BlochVector operator-(const BlochVector& a, const BlochVector& b) {
    return {a.px - b.px, a.py - b.py, a.pz - b.pz};
  }
};

inline double max_component_distance(const BlochVector& a, const BlochVector& b) {
  return std::max({std::abs(a.px - b.px), std::abs(a.py - b.py), std::abs(a.pz - b.pz)});
}

inline BlochVector bloch_from_density(const DensityMatrix& m) {
  if (m.dim() != 2)
    throw DimensionMismatchError("bloch_from_density: need a two-level state");
  BlochVector p;
  p.px = 2.0 * m(0, 1).real();
  p.py = -2.0 * m(0, 1).imag();
  p.pz = (m(0, 0) - m(1, 1)).real();
  return p;
}

inline DensityMatrix density_from_bloch(const BlochVector& p, const Tolerances& tol = {}) {
  if (!(p.norm() <= 1.0 + tol.bloch_norm_slack))
    throw UnphysicalStateError("density_from_bloch: |p| > 1");
  CMatrix m(2);
  m(0, 0) = 0.5 * (1.0 + p.pz);
  m(1, 1) = 0.5 * (1.0 - p.pz);
  m(0, 1) = 0.5 * Cplx{p.px, -p.py};
  m(1, 0) = 0.5 * Cplx{p.px, p.py};
  return DensityMatrix(std::move(m), tol);
}

} // namespace geophase
