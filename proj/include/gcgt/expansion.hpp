#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gcgt/graph.hpp"

namespace gcgt {

/// Non-negative reduced fraction num/den with den > 0.
class Rational {
 public:
  Rational() = default;
  Rational(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) noexcept {
    __extension__ using Wide = unsigned __int128;
    return static_cast<Wide>(a.num_) * b.den_ < static_cast<Wide>(b.num_) * a.den_;
  }

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

/// Result of an expansion computation for sets of size <= floor(beta * n).
///
/// In exact mode alpha is min |dA| / |A| over every eligible nonempty A and
/// witness attains it. In sampled mode alpha is the minimum over the sets
/// that were tried, so it is only an upper bound on the true constant.
struct ExpansionCertificate {
  double beta = 0.5;
  Rational alpha;
  std::optional<VertexSet> witness;
  bool exact = true;
};

/// Largest eligible set size floor(beta * n).
std::size_t max_eligible_size(std::size_t n, double beta);

/// Exact for n <= 24 (full subset scan), sampled otherwise. Throws
/// ParameterError if beta is outside (0, 1/2] or beta * n < 1.
ExpansionCertificate certify_expansion(const Graph& g, double beta,
                                       std::size_t samples = 200000, std::uint64_t seed = 1);

inline constexpr std::size_t kExactExpansionMaxVertices = 24;

}  // namespace gcgt
