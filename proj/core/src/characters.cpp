#include "opprank/characters.hpp"

#include <sstream>

#include "opprank/error.hpp"

namespace opprank {

FormalCharacter FormalCharacter::single(const RootSystem& rs, const Weight& lambda, std::int64_t coeff) {
  FormalCharacter x(rs.spec());
  rs.check_weight(lambda);
  x.add(lambda, coeff);
  return x;
}

std::int64_t FormalCharacter::coefficient(const Weight& lambda) const {
  const auto it = terms_.find(lambda);
  return it == terms_.end() ? 0 : it->second;
}

void FormalCharacter::add(const Weight& lambda, std::int64_t coeff) {
  if (!lambda.is_dominant()) throw ConfigError("formal character key " + to_string(lambda) + " is not dominant");
  if (static_cast<int>(lambda.size()) != system_.rank) throw ConfigError("formal character key has wrong rank");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string to_string(const FormalCharacter& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    if (!first || c < 0) os << (c < 0 ? (first ? "-" : " - ") : " + ");
    const auto mag = c < 0 ? -c : c;
    if (mag != 1) os << mag << '*';
    os << "chi" << to_string(w);
    first = false;
  }
  return os.str();
}

BigInt weyl_dim(const RootSystem& rs, const Weight& lambda) {
  rs.check_weight(lambda);
  if (!lambda.is_dominant()) throw ConfigError("weyl_dim needs a dominant weight, got " + to_string(lambda));
  const Weight shifted = lambda + rs.rho();
  BigInt num = 1;
  BigInt den = 1;
  for (const Root& alpha : rs.positive_roots()) {
    num *= rs.pairing(shifted, alpha);
    den *= alpha.coroot_height();
  }
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(num, den, quotient, remainder);
  if (remainder != 0) throw ConsistencyError("Weyl dimension quotient is not integral");
  return quotient;
}

std::optional<NormalizedChi> normalize_chi(const RootSystem& rs, const Weight& mu) {
  rs.check_weight(mu);
  // Same descent as longest_word; each step lowers the number of positive
  // roots with negative pairing against mu + rho.
  Weight nu = mu + rs.rho();
  int sign = 1;
  for (;;) {
    std::size_t node = rs.rank();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (nu[i] < 0) {
        node = i;
        break;
      }
    }
    if (node == rs.rank()) break;
    nu -= nu[node] * rs.simple_root_weight(node);
    sign = -sign;
  }
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (nu[i] == 0) return std::nullopt;
  return NormalizedChi{sign, nu - rs.rho()};
}

FormalCharacter char_combine(const FormalCharacter& a, std::int64_t c, const FormalCharacter& b) {
  if (!(a.system() == b.system())) {
    throw ConfigError("cannot combine characters of " + to_string(a.system()) + " and " + to_string(b.system()));
  }
  FormalCharacter out = a;
  for (const auto& [w, k] : b.terms()) out.add(w, c * k);
  return out;
}

BigInt char_dim(const RootSystem& rs, const FormalCharacter& x) {
  BigInt total = 0;
  for (const auto& [w, c] : x.terms()) total += BigInt(c) * weyl_dim(rs, w);
  return total;
}

void add_chi(const RootSystem& rs, FormalCharacter& x, const Weight& mu, std::int64_t coeff) {
  if (const auto n = normalize_chi(rs, mu)) x.add(n->dominant, n->sign * coeff);
}

}  // namespace opprank
