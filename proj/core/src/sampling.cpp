#include "cqm/sampling.hpp"

#include <cmath>
#include <numbers>

#include "cqm/error.hpp"

namespace cqm {

SampleCloud make_cloud(const CloudSpec& spec) {
  if (!(spec.r_min > 0.0) || !(spec.r_max > spec.r_min)) {
    throw Error(ErrorKind::kCloud, "cloud radial range must satisfy 0 < r_min < r_max");
  }
  if (!(spec.axis_margin >= 0.0) || spec.axis_margin >= 0.5 * std::numbers::pi) {
    throw Error(ErrorKind::kCloud, "axis margin must lie in [0, pi/2)");
  }
  const CounterRng rng(spec.seed, spec.stream);
  constexpr double kGolden = 0.6180339887498948482;
  const double offset = rng.uniform(0);
  const double cos_max = std::cos(spec.axis_margin);

  SampleCloud cloud;
  cloud.seed = spec.seed;
  cloud.r_min = spec.r_min;
  cloud.r_max = spec.r_max;
  cloud.axis_margin = spec.axis_margin;
  cloud.points.reserve(spec.count);
  for (std::size_t k = 0; k < spec.count; ++k) {
    double frac = offset + static_cast<double>(k + 1) * kGolden;
    frac -= std::floor(frac);
    const double r = spec.r_min + (spec.r_max - spec.r_min) * frac;
    const std::uint64_t base = 1 + 3 * static_cast<std::uint64_t>(k);
    const double cos_theta = cos_max * (2.0 * rng.uniform(base) - 1.0);
    const double phi = 2.0 * std::numbers::pi * rng.uniform(base + 1);
    const double t = spec.t_max * rng.uniform(base + 2);
    const double sin_theta = std::sqrt((1.0 - cos_theta) * (1.0 + cos_theta));
    SamplePoint p;
    p.x = {r * sin_theta * std::cos(phi), r * sin_theta * std::sin(phi), r * cos_theta};
    p.t = t;
    cloud.points.push_back(p);
  }
  return cloud;
}

std::uint64_t stream_id(System system, const QuantumNumbers& qn) {
  std::uint64_t h = system == System::kHydrogen ? 0x48ULL : 0x4f48ULL;
  for (const int v : {qn.n, qn.l, qn.k}) {
    h = CounterRng::mix(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(v) + 1024));
  }
  return h;
}

CloudSpec cloud_spec_for(const Eigenstate& state, std::size_t count, std::uint64_t seed) {
  CloudSpec spec;
  spec.count = count;
  spec.seed = seed;
  spec.stream = stream_id(state.system, state.qn);
  const double a = state.length_scale();
  if (state.system == System::kHydrogen) {
    spec.r_min = 0.05 * state.qn.n * a;
    spec.r_max = 12.0 * state.qn.n * a;
  } else {
    spec.r_min = 0.05 * a;
    spec.r_max = 3.0 * a * std::sqrt(2.0 * state.qn.n + state.qn.l + 1.5);
  }
  spec.axis_margin = 0.05;
  spec.t_max = 2.0 * std::numbers::pi * state.scales.constants.hbar / std::abs(state.energy);
  return spec;
}

SampleCloud cloud_for(const Eigenstate& state, std::size_t count, std::uint64_t seed) {
  return make_cloud(cloud_spec_for(state, count, seed));
}

}  // namespace cqm
