#include "gelfand/random.hpp"

namespace gelfand {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
  SplitMix64 rng(master ^ (stream * 0x9E3779B97F4A7C15ULL) ^ (index * 0xD6E8FEB86659FD93ULL));
  return rng.next();
}

GroupFunction random_group_function(const GroupPtr& group, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Complex> values(group->order());
  for (Complex& v : values) {
    const double re = rng.uniform_pm1();
    const double im = rng.uniform_pm1();
    v = Complex(re, im);
  }
  return {group, std::move(values)};
}

BiInvariantFunction random_bi_invariant_function(const CosetSpacePtr& space, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Complex> values(space->class_count());
  for (Complex& v : values) {
    const double re = rng.uniform_pm1();
    const double im = rng.uniform_pm1();
    v = Complex(re, im);
  }
  return {space, std::move(values)};
}

MollifierFunction random_mollifier(const CosetSpacePtr& space, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::size_t d1 = space->class_count();
  std::vector<double> raw(d1, 0.0);
  raw[0] = 0.5 + 0.5 * rng.uniform();  // eta(e) != 0
  for (std::size_t c = 1; c < d1; ++c) {
    if (rng.next() & 1) raw[c] = 0.5 + 0.5 * rng.uniform();
  }
  double integral = 0.0;
  for (std::uint32_t c = 0; c < d1; ++c) integral += space->class_weight(c) * raw[c];
  std::vector<Complex> values(d1);
  for (std::uint32_t c = 0; c < d1; ++c) values[c] = Complex(raw[c] / integral, 0.0);
  return MollifierFunction(BiInvariantFunction(space, std::move(values)));
}

}  // namespace gelfand
