#include "opprank/jantzen.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "opprank/error.hpp"

namespace opprank {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int p_adic_valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw ConfigError("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

FormalCharacter jantzen_sum(const RootSystem& rs, const Weight& lambda, int p) {
  rs.check_weight(lambda);
  if (!lambda.is_dominant()) throw ConfigError("Jantzen sum needs a dominant weight, got " + to_string(lambda));
  if (!is_prime(p)) throw ConfigError(std::to_string(p) + " is not prime");
  FormalCharacter sum(rs.spec());
  const Weight shifted = lambda + rs.rho();
  for (const Root& alpha : rs.positive_roots()) {
    const std::int64_t bound = rs.pairing(shifted, alpha);
    const Weight alpha_w = rs.root_in_weight_basis(alpha);
    for (int m = 1; static_cast<std::int64_t>(m) * p < bound; ++m) {
      const int mp = m * p;
      add_chi(rs, sum, lambda - mp * alpha_w, -p_adic_valuation(mp, p));
    }
  }
  return sum;
}

std::string to_string(ResolutionStatus s) {
  switch (s) {
    case ResolutionStatus::Simple: return "Simple";
    case ResolutionStatus::ChainResolved: return "ChainResolved";
    case ResolutionStatus::Unresolved: return "Unresolved";
  }
  return "Unresolved";
}

std::optional<Weight> unique_maximal_weight(const RootSystem& rs, const FormalCharacter& x) {
  std::vector<Weight> maximal;
  for (const auto& [w, c] : x.terms()) {
    const bool dominated = std::any_of(x.terms().begin(), x.terms().end(), [&](const auto& other) {
      return other.first != w && rs.dominates(other.first, w);
    });
    if (!dominated) maximal.push_back(w);
  }
  if (maximal.size() != 1) return std::nullopt;
  return maximal.front();
}

Resolution resolve_simple(const RootSystem& rs, const Weight& lambda, int p, int depth_limit) {
  if (depth_limit < 0) throw ConfigError("depth limit must be non-negative");
  Resolution res;
  res.weight = lambda;
  res.p = p;
  FormalCharacter sum = jantzen_sum(rs, lambda, p);
  res.chain.push_back({lambda, sum});
  if (sum.is_zero()) {
    res.status = ResolutionStatus::Simple;
    res.simple_char = FormalCharacter::single(rs, lambda);
    res.dim = weyl_dim(rs, lambda);
    return res;
  }
  res.status = ResolutionStatus::Unresolved;
  if (depth_limit == 0) return res;
  const auto top = unique_maximal_weight(rs, sum);
  if (!top) return res;
  Resolution below = resolve_simple(rs, *top, p, depth_limit - 1);
  if (!below.resolved() || !(*below.simple_char == sum)) return res;

  res.status = ResolutionStatus::ChainResolved;
  res.simple_char = char_combine(FormalCharacter::single(rs, lambda), -1, sum);
  res.chain.insert(res.chain.end(), below.chain.begin(), below.chain.end());
  res.dim = char_dim(rs, *res.simple_char);
  return res;
}

// ---------------------------------------------------------------- twists

std::vector<std::vector<int>> parse_orbits(const std::string& text) {
  std::vector<std::vector<int>> orbits;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), '/', ';');
  std::stringstream ss(normalized);
  std::string part;
  while (std::getline(ss, part, ';')) {
    const TypeSet nodes = parse_type_set(part);
    if (nodes.empty()) throw ConfigError("empty orbit in '" + text + "'");
    orbits.push_back(nodes.nodes());
  }
  return orbits;
}

TwistData make_twist(const RootSystem& rs, std::vector<std::vector<int>> orbits) {
  const int n = static_cast<int>(rs.rank());
  std::vector<int> owner(static_cast<std::size_t>(n + 1), -1);
  for (auto& orbit : orbits) std::sort(orbit.begin(), orbit.end());
  std::sort(orbits.begin(), orbits.end());
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    for (int node : orbits[k]) {
      if (node < 1 || node > n) throw ConfigError("orbit node " + std::to_string(node) + " out of range");
      if (owner[static_cast<std::size_t>(node)] != -1) throw ConfigError("orbits overlap at node " + std::to_string(node));
      owner[static_cast<std::size_t>(node)] = static_cast<int>(k);
    }
  }
  for (int i = 1; i <= n; ++i)
    if (owner[static_cast<std::size_t>(i)] == -1) throw ConfigError("orbits do not cover node " + std::to_string(i));

  // Search the Cartan automorphisms for one whose cycles are exactly the orbits.
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        ok = rs.cartan(static_cast<std::size_t>(perm[i]), static_cast<std::size_t>(perm[j])) ==
             rs.cartan(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    if (!ok) continue;
    int order = 1;
    for (int i = 0; i < n && ok; ++i) {
      int len = 0;
      int j = i;
      do {
        if (owner[static_cast<std::size_t>(j + 1)] != owner[static_cast<std::size_t>(i + 1)]) ok = false;
        j = perm[static_cast<std::size_t>(j)];
        ++len;
      } while (j != i && ok);
      if (!ok) break;
      if (static_cast<std::size_t>(len) != orbits[static_cast<std::size_t>(owner[static_cast<std::size_t>(i + 1)])].size()) ok = false;
      order = std::lcm(order, len);
    }
    if (ok) return TwistData{orbits, order};
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw ConfigError("orbit partition is not induced by a diagram automorphism of " + rs.name());
}

Weight lambda_opp(const RootSystem& rs, const OppositeWeightSpec& spec) {
  if (!is_prime(spec.p)) throw ConfigError(std::to_string(spec.p) + " is not prime");
  if (spec.t < 1) throw ConfigError("exponent t must be at least 1");
  Weight w(rs.rank());
  if (!spec.twist) {
    spec.cotype.check(rs.rank());
    const int q = static_cast<int>(ipow(BigInt(spec.p), static_cast<unsigned>(spec.t)));
    for (int i = 1; i <= static_cast<int>(rs.rank()); ++i)
      if (!spec.cotype.contains(i)) w[static_cast<std::size_t>(i - 1)] = q - 1;
    return w;
  }
  const TwistData& tw = *spec.twist;
  if (spec.t % tw.order != 0) {
    throw ConfigError("q = p^" + std::to_string(spec.t) + " is not a power q0^" + std::to_string(tw.order));
  }
  spec.cotype.check(tw.orbits.size());
  const int q0 = static_cast<int>(ipow(BigInt(spec.p), static_cast<unsigned>(spec.t / tw.order)));
  for (std::size_t k = 0; k < tw.orbits.size(); ++k) {
    if (spec.cotype.contains(static_cast<int>(k + 1))) continue;
    for (int node : tw.orbits[k]) w[static_cast<std::size_t>(node - 1)] = q0 - 1;
  }
  return w;
}

// ---------------------------------------------------------------- counting

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt ipow(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

BigInt truncated_poly_dim(int nvars, int p, int degree) {
  if (nvars < 1) throw ConfigError("truncated_poly_dim needs at least one variable");
  if (degree < 0) throw ConfigError("truncated_poly_dim needs a non-negative degree");
  BigInt total = 0;
  for (int j = 0; j <= nvars && static_cast<std::int64_t>(j) * p <= degree; ++j) {
    BigInt term = binomial(nvars, j) * binomial(degree - static_cast<std::int64_t>(j) * p + nvars - 1, nvars - 1);
    total += (j % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

BigInt steinberg_rank_power(const BigInt& rank_at_p, int t) {
  if (t < 1) throw ConfigError("Steinberg exponent must be at least 1");
  return ipow(rank_at_p, static_cast<unsigned>(t));
}

}  // namespace opprank
