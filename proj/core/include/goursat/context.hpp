#pragma once

#include <cstdint>
#include <random>

#include "goursat/numeric.hpp"

namespace goursat {

// Deterministic source of sample data for the numeric rank pre-pass.
// Never global: every operation that samples receives one explicitly.
class SampleSource {
 public:
  explicit SampleSource(std::uint64_t seed) : rng_(seed) {}

  // Rational with |numerator| <= 97 and 1 <= denominator <= 97.
  Rational small_rational(bool nonzero = false) {
    std::uniform_int_distribution<long> num(-97, 97);
    std::uniform_int_distribution<long> den(1, 97);
    long p = num(rng_);
    while (nonzero && p == 0) p = num(rng_);
    Rational q(p, den(rng_));
    q.canonicalize();
    return q;
  }

  long uniform(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng_);
  }

  double uniform_real(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng_);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct Options {
  unsigned max_attempts = 10;  // rank-confirmation resampling budget
};

// Bundled per-run state threaded through the geometric pipeline.
struct Ctx {
  explicit Ctx(std::uint64_t seed, Options o = {}) : rng(seed), opts(o), seed(seed) {}
  SampleSource rng;
  Options opts;
  std::uint64_t seed;
};

}  // namespace goursat
