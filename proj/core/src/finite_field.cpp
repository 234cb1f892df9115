#include "opprank/finite_field.hpp"

#include <string>

#include "opprank/error.hpp"

namespace opprank {

namespace {

// Conway polynomials, little-endian.
std::vector<int> conway_modulus(int p, int t) {
  if (t == 1) return {0, 1};
  if (p == 2 && t == 2) return {1, 1, 1};
  if (p == 2 && t == 3) return {1, 1, 0, 1};
  if (p == 2 && t == 4) return {1, 1, 0, 0, 1};
  if (p == 3 && t == 2) return {2, 2, 1};
  throw UnsupportedError("no modulus for GF(" + std::to_string(p) + "^" + std::to_string(t) + ")");
}

bool prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> to_digits(int v, int p, int t) {
  std::vector<int> d(static_cast<std::size_t>(t));
  for (int k = 0; k < t; ++k) {
    d[static_cast<std::size_t>(k)] = v % p;
    v /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

// Remainder of a by monic b over F_p.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lead = a.back() % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] = ((a[shift + k] - lead * b[k]) % p + p) % p;
    a.pop_back();
  }
  return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<int>& poly, int p) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1 || poly.back() != 1) return false;
  for (int d = 1; d <= deg / 2; ++d) {
    int count = 1;
    for (int k = 0; k < d; ++k) count *= p;
    for (int c = 0; c < count; ++c) {
      std::vector<int> divisor = to_digits(c, p, d);
      divisor.push_back(1);
      const auto r = poly_mod(poly, divisor, p);
      bool zero = true;
      for (int x : r) zero = zero && x == 0;
      if (zero) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(int p, int t) : p_(p), t_(t), q_(1) {
  if (!prime(p) || t < 1) throw UnsupportedError("GF(p^t) needs a prime p and t >= 1");
  for (int k = 0; k < t; ++k) {
    q_ *= p;
    if (q_ > kMaxOrder) throw UnsupportedError("field order exceeds " + std::to_string(kMaxOrder));
  }
  modulus_ = conway_modulus(p, t);
  if (!is_irreducible_mod_p(modulus_, p)) throw ConsistencyError("field modulus is reducible");

  for (int a = 0; a < q_; ++a) {
    const auto da = to_digits(a, p, t);
    std::vector<int> dn(da.size());
    for (std::size_t k = 0; k < da.size(); ++k) dn[k] = (p - da[k]) % p;
    neg_[static_cast<std::size_t>(a)] = static_cast<FieldElem>(from_digits(dn, p));
    for (int b = 0; b < q_; ++b) {
      const auto db = to_digits(b, p, t);
      std::vector<int> sum(da.size());
      for (std::size_t k = 0; k < da.size(); ++k) sum[k] = (da[k] + db[k]) % p;
      add_[static_cast<std::size_t>(a * kMaxOrder + b)] = static_cast<FieldElem>(from_digits(sum, p));
      std::vector<int> prod(2 * static_cast<std::size_t>(t) - 1, 0);
      for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
      auto r = t == 1 ? prod : poly_mod(prod, modulus_, p);
      r.resize(static_cast<std::size_t>(t), 0);
      mul_[static_cast<std::size_t>(a * kMaxOrder + b)] = static_cast<FieldElem>(from_digits(r, p));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul(static_cast<FieldElem>(a), static_cast<FieldElem>(b)) == 1) inv_[static_cast<std::size_t>(a)] = static_cast<FieldElem>(b);
}

FiniteField FiniteField::of_order(int q) {
  for (int p = 2; p <= q; ++p) {
    if (!prime(p) || q % p != 0) continue;
    int t = 0;
    int r = q;
    while (r % p == 0) {
      r /= p;
      ++t;
    }
    if (r != 1) break;
    return FiniteField(p, t);
  }
  throw UnsupportedError(std::to_string(q) + " is not a prime power");
}

FieldElem FiniteField::pow(FieldElem a, unsigned e) const {
  FieldElem r = 1;
  while (e) {
    if (e & 1u) r = mul(r, a);
    a = mul(a, a);
    e >>= 1u;
  }
  return r;
}

}  // namespace opprank
