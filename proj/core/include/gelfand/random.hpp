#pragma once

#include <cstdint>
#include <string_view>

#include "gelfand/sobolev.hpp"

namespace gelfand {

/// Counter-style SplitMix64 generator; identical output on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [-1, 1).
  double uniform_pm1() { return 2.0 * uniform() - 1.0; }

 private:
  std::uint64_t state_;
};

std::uint64_t fnv1a64(std::string_view text);

/// Per-trial seed derived from (master seed, named stream, trial index);
/// trials are independent of execution order and of the total trial count.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

/// Complex values with real/imaginary parts uniform in [-1, 1).
GroupFunction random_group_function(const GroupPtr& group, std::uint64_t seed);

/// One random complex value per double coset.
BiInvariantFunction random_bi_invariant_function(const CosetSpacePtr& space, std::uint64_t seed);

/// Random admissible mollifier: support is a random union of classes
/// containing D_0, positive values there, normalized to unit integral.
MollifierFunction random_mollifier(const CosetSpacePtr& space, std::uint64_t seed);

}  // namespace gelfand
