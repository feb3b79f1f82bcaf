#include "dsg/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace dsg {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

std::uint64_t RngStream::next_u64() {
  ctr_ += kGolden;
  return mix64(key_ ^ mix64(ctr_));
}

double RngStream::uniform() {
  // 52 random bits plus a half-ulp offset keeps the value strictly inside
  // (0, 1), so log() of it is always finite.
  return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
}

std::uint64_t RngStream::uniform_index(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: n must be positive");
  return next_u64() % n;
}

double RngStream::gaussian(double std) {
  if (std < 0) throw std::invalid_argument("gaussian: negative std");
  if (std == 0) return 0.0;
  double u1 = uniform();
  double u2 = uniform();
  return std * std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double RngStream::laplace(double b) {
  if (b < 0) throw std::invalid_argument("laplace: negative scale");
  if (b == 0) return 0.0;
  double u = uniform() - 0.5;
  double sign = u < 0 ? -1.0 : 1.0;
  return -b * sign * std::log1p(-2.0 * std::fabs(u));
}

long long RngStream::sym_geometric(double gamma) {
  if (!(gamma > 1.0))
    throw std::invalid_argument("sym_geometric: gamma must exceed 1");
  // Difference of two iid geometric counts with failure probability 1/gamma
  // has exactly the target pmf.
  double log_q = -std::log(gamma);
  auto failures = [&]() -> long long {
    double u = uniform();
    return static_cast<long long>(std::floor(std::log(u) / log_q));
  };
  return failures() - failures();
}

std::uint64_t RngRoot::derive_key(std::span<const std::uint64_t> path) const {
  std::uint64_t k = mix64(seed_ ^ kGolden);
  for (std::uint64_t e : path) {
    k = mix64(k + kGolden * (e + 1));
  }
  return k;
}

}  // namespace dsg
