#ifndef DSG_RNG_HPP
#define DSG_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <span>

namespace dsg {

// Keyed counter-based generator. Every noise draw in the library comes from a
// stream addressed by a (seed, path) pair, so replaying a protocol with the
// same seed reproduces every sample bit for bit, and two algorithms handed the
// same path sequence see identical noise.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64();

  // Uniform on the open interval (0, 1).
  double uniform();

  // Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);

  // One draw from N(0, std^2); std == 0 returns exactly 0.
  double gaussian(double std);

  // One draw from Lap(b); b == 0 returns exactly 0.
  double laplace(double b);

  // Symmetric geometric with pmf (gamma-1)/(gamma+1) * gamma^{-|k|}, gamma > 1.
  long long sym_geometric(double gamma);

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

// Derives independent streams from a root seed and an integer path, e.g.
// {domain, run, round, node}.
class RngRoot {
 public:
  explicit RngRoot(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t derive_key(std::span<const std::uint64_t> path) const;

  RngStream stream(std::initializer_list<std::uint64_t> path) const {
    return RngStream(derive_key({path.begin(), path.size()}));
  }
  RngStream stream(std::span<const std::uint64_t> path) const {
    return RngStream(derive_key(path));
  }

 private:
  std::uint64_t seed_;
};

// Stream path domains. Algorithms that must share noise (the MWU oracle and
// the load-based core) use the same domain; everything else gets its own.
namespace stream_domain {
inline constexpr std::uint64_t kCoreNoise = 1;    // per-round peel counts
inline constexpr std::uint64_t kPeelNoise = 2;    // peeling subroutine
inline constexpr std::uint64_t kCurator = 3;      // curator-side draws
inline constexpr std::uint64_t kDegreeNoise = 4;  // directed cross degrees
inline constexpr std::uint64_t kPureNoise = 5;    // geometric degree noise
inline constexpr std::uint64_t kValueNoise = 6;   // density-value Laplace
inline constexpr std::uint64_t kSelect = 7;       // repetition wrapper
inline constexpr std::uint64_t kGenerator = 8;    // graph generators
inline constexpr std::uint64_t kTrial = 9;        // per-trial roots
}  // namespace stream_domain

}  // namespace dsg

#endif  // DSG_RNG_HPP
