#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opprank/characters.hpp"
#include "opprank/rootdata.hpp"
#include "opprank/weylgroup.hpp"

namespace opprank {

bool is_prime(std::int64_t n);
/// Exponent of p in n (n != 0).
int p_adic_valuation(std::int64_t n, std::int64_t p);

/// -sum_{alpha>0} sum_{0<mp<<lambda+rho,alpha^vee>} v_p(mp) chi(lambda - mp alpha).
FormalCharacter jantzen_sum(const RootSystem& rs, const Weight& lambda, int p);

enum class ResolutionStatus { Simple, ChainResolved, Unresolved };
std::string to_string(ResolutionStatus s);

struct ChainLink {
  Weight weight;
  FormalCharacter jantzen_sum;
};

/// Outcome of resolving Ch L(lambda) by descending the Jantzen sums.
struct Resolution {
  ResolutionStatus status = ResolutionStatus::Unresolved;
  Weight weight;
  int p = 0;
  std::optional<FormalCharacter> simple_char;
  /// chain[0] is lambda itself; for a resolved chain, chain[i].jantzen_sum
  /// equals the simple character of chain[i+1].
  std::vector<ChainLink> chain;
  std::optional<BigInt> dim;

  bool resolved() const { return status != ResolutionStatus::Unresolved; }
  /// Number of radical links below lambda.
  std::size_t depth() const { return chain.empty() ? 0 : chain.size() - 1; }
};

inline constexpr int kDefaultDepthLimit = 16;

Resolution resolve_simple(const RootSystem& rs, const Weight& lambda, int p, int depth_limit = kDefaultDepthLimit);

/// The unique maximal key of x under the dominance order, if there is one.
std::optional<Weight> unique_maximal_weight(const RootSystem& rs, const FormalCharacter& x);

/// Diagram-automorphism orbits on the nodes of the overlying system. Orbit k
/// (1-based, ordered by smallest member) is node k of the twisted index set.
struct TwistData {
  std::vector<std::vector<int>> orbits;
  int order = 1;
};

/// Validates that `orbits` partitions 1..l and is the orbit partition of a
/// Cartan-preserving permutation. Throws ConfigError otherwise.
TwistData make_twist(const RootSystem& rs, std::vector<std::vector<int>> orbits);
/// "1,5;2,4;3" ('/' also separates orbits).
std::vector<std::vector<int>> parse_orbits(const std::string& text);

struct OppositeWeightSpec {
  TypeSet cotype;
  int p = 2;
  int t = 1;
  std::optional<TwistData> twist;
};

/// Untwisted: (q-1) on nodes outside J. Twisted: (q0-1) on nodes outside J*,
/// with q = q0^e and J* the union of the orbits listed in J.
Weight lambda_opp(const RootSystem& rs, const OppositeWeightSpec& spec);

/// Monomials of the given degree in nvars variables with exponents <= p-1.
BigInt truncated_poly_dim(int nvars, int p, int degree);

BigInt steinberg_rank_power(const BigInt& rank_at_p, int t);

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt ipow(const BigInt& base, unsigned exponent);

}  // namespace opprank
