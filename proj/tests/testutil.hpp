#pragma once

#include "p4geo/rational.hpp"

#include <cstdint>

namespace p4geo::testutil {

// Small deterministic generator for the property checks; fixed seed so
// failures reproduce.
class Lcg {
public:
  explicit Lcg(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return state_ >> 17;
  }

  long long in_range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long long max_num, long long max_den) {
    long long n = in_range(-max_num, max_num);
    long long d = in_range(1, max_den);
    return Rational(Int(n), Int(d));
  }

private:
  std::uint64_t state_;
};

}  // namespace p4geo::testutil
