#ifndef SENSKIT_COMMON_HPP
#define SENSKIT_COMMON_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace senskit {

/// Error taxonomy shared by the C++ and C surfaces. The numeric values
/// double as process exit codes for the CLI.
enum class ErrorCode : int {
  ok = 0,
  invalid_argument = 2,  // bad config, bad parameters, schema violations
  degenerate = 3,        // numerical degeneracy (constant sample, zero spread, ...)
  io = 4,                // file system / parsing failures
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail_invalid(const std::string& msg) {
  throw Error(ErrorCode::invalid_argument, msg);
}
[[noreturn]] inline void fail_degenerate(const std::string& msg) {
  throw Error(ErrorCode::degenerate, msg);
}
[[noreturn]] inline void fail_io(const std::string& msg) {
  throw Error(ErrorCode::io, msg);
}

/// Closed interval [a, b].
struct Interval {
  double a = 0.0;
  double b = 1.0;
  double length() const { return b - a; }
  bool contains(double x) const { return x >= a && x <= b; }
  bool operator==(const Interval& o) const { return a == o.a && b == o.b; }
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seeded random stream. Streams derived from one master seed with distinct
/// stream ids are independent for practical purposes, which is what the
/// deterministic parallel scheduling relies on.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(splitmix64(seed)) {}

  static RngStream derived(std::uint64_t master, std::uint64_t stream) {
    return RngStream(splitmix64(master ^ splitmix64(stream + 0x51ed2701)));
  }

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform draw strictly inside (0, 1); safe to feed to quantile functions.
  double uniform01() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Lemire-style rejection-free enough for our n << 2^64.
    return static_cast<std::uint64_t>(uniform01() * static_cast<double>(n)) % n;
  }

 private:
  std::mt19937_64 gen_;
};

/// Fisher-Yates shuffle driven by an explicit stream.
template <typename T>
void shuffle(std::vector<T>& v, RngStream& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(v[i - 1], v[j]);
  }
}

/// Runs fn(i) for i in [0, count). Results must be written to per-index
/// slots so the outcome is independent of scheduling.
void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& fn);

/// Unbiased (n-1) sample variance.
double sample_variance(const std::vector<double>& v);

/// Population (1/n) variance; used for bandwidth standardization.
double population_variance(const std::vector<double>& v);

}  // namespace senskit

#endif  // SENSKIT_COMMON_HPP
