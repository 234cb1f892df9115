#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "opprank/rootdata.hpp"

namespace opprank {

using BigInt = boost::multiprecision::cpp_int;

/// Z-linear combination of Weyl characters Ch V(lambda), keyed by dominant
/// weights in lexicographic order. Zero coefficients are never stored.
class FormalCharacter {
 public:
  using Terms = std::map<Weight, std::int64_t>;

  explicit FormalCharacter(RootSystemSpec system) : system_(system) {}
  static FormalCharacter single(const RootSystem& rs, const Weight& lambda, std::int64_t coeff = 1);

  const RootSystemSpec& system() const { return system_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::int64_t coefficient(const Weight& lambda) const;

  /// Adds coeff * Ch V(lambda); lambda must be dominant.
  void add(const Weight& lambda, std::int64_t coeff);

  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

 private:
  RootSystemSpec system_;
  Terms terms_;
};

std::string to_string(const FormalCharacter& x);

/// Product formula prod_{alpha>0} <lambda+rho, alpha^vee> / <rho, alpha^vee>.
BigInt weyl_dim(const RootSystem& rs, const Weight& lambda);

/// chi(mu) = sign * Ch V(dominant); absent when mu + rho lies on a wall.
struct NormalizedChi {
  int sign = 1;
  Weight dominant;
};
std::optional<NormalizedChi> normalize_chi(const RootSystem& rs, const Weight& mu);

/// a + c * b.
FormalCharacter char_combine(const FormalCharacter& a, std::int64_t c, const FormalCharacter& b);
BigInt char_dim(const RootSystem& rs, const FormalCharacter& x);

/// Accumulates coeff * chi(mu) into x after dot-action normalization.
void add_chi(const RootSystem& rs, FormalCharacter& x, const Weight& mu, std::int64_t coeff);

}  // namespace opprank
