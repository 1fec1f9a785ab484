#ifndef PAGECAST_RNG_HPP
#define PAGECAST_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace pagecast {

// SplitMix64 (Steele, Lea, Flood 2014). Fixed output sequence for a given
// seed on every platform; splits and synthetic logs depend on this staying
// bit-stable, so keep the constants and the sampling helpers below frozen.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n). Modulo bias is negligible for the n used here and
  // keeps the sequence trivially reproducible.
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  bool next_bernoulli(double p) { return next_double() < p; }

  // Trials until success; integer-only apart from the probability compare.
  std::uint64_t next_geometric(double p) {
    if (p >= 1.0)
      return 0;
    std::uint64_t k = 0;
    while (!next_bernoulli(p))
      ++k;
    return k;
  }

  template <typename T> void shuffle(std::vector<T> &items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

private:
  std::uint64_t state_;
};

// Cumulative table for Zipf-distributed draws: P(i) proportional to
// 1/(i+1)^s over i in [0, n). s = 0 degenerates to uniform.
class ZipfSampler {
public:
  ZipfSampler(std::size_t n, double exponent) : cumulative_(n) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      total += 1.0 / pow_positive(static_cast<double>(i + 1), exponent);
      cumulative_[i] = total;
    }
    for (auto &c : cumulative_)
      c /= total;
  }

  std::size_t sample(Rng &rng) const {
    double u = rng.next_double();
    std::size_t lo = 0, hi = cumulative_.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (cumulative_[mid] <= u)
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo;
  }

private:
  static double pow_positive(double base, double exp) {
    if (exp == 0.0)
      return 1.0;
    return std::pow(base, exp);
  }

  std::vector<double> cumulative_;
};

} // namespace pagecast

#endif
