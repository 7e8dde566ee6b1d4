#pragma once

#include <cstdint>
#include <vector>

#include "cqm/eigenstates.hpp"
#include "cqm/types.hpp"

namespace cqm {

// Counter-based generator: the k-th draw of a stream is a pure function of
// (seed, stream, k), so clouds are reproducible on every platform.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

  std::uint64_t bits(std::uint64_t counter) const { return mix(key_ + counter * 0x9e3779b97f4a7c15ULL); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t key_;
};

struct SamplePoint {
  Vec3 x{};
  double t = 0.0;
};

struct CloudSpec {
  std::size_t count = 200;
  std::uint64_t seed = 42;
  std::uint64_t stream = 0;
  double r_min = 0.05;
  double r_max = 12.0;
  double axis_margin = 0.05;  // rad
  double t_max = 1.0;
};

struct SampleCloud {
  std::vector<SamplePoint> points;
  std::uint64_t seed = 0;
  double r_min = 0.0;
  double r_max = 0.0;
  double axis_margin = 0.0;
};

// Radii follow a randomly shifted golden-ratio sequence on [r_min, r_max];
// directions are uniform on the sphere minus the polar caps; t is uniform
// on [0, t_max).
SampleCloud make_cloud(const CloudSpec& spec);

// Stream id derived from a state label, so each state gets its own cloud.
std::uint64_t stream_id(System system, const QuantumNumbers& qn);

// Cloud covering the state's support: r in [0.05, 12] n a0 for hydrogen,
// [0.05, 3 sqrt(2 n_r + l + 3/2)] b for the oscillator; t over one period.
CloudSpec cloud_spec_for(const Eigenstate& state, std::size_t count, std::uint64_t seed);
SampleCloud cloud_for(const Eigenstate& state, std::size_t count, std::uint64_t seed);

}  // namespace cqm
