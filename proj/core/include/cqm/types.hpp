#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace cqm {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;
using CVec3 = std::array<cplx, 3>;

inline double norm(const Vec3& v) { return std::hypot(v[0], v[1], v[2]); }

inline double norm(const CVec3& v) {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

}  // namespace cqm
