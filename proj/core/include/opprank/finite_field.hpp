#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace opprank {

using FieldElem = std::uint8_t;

/// GF(q), q = p^t <= 16, as lookup tables. Elements are encoded as integers
/// sum c_k p^k from their polynomial coefficients (little-endian in p).
class FiniteField {
 public:
  static constexpr int kMaxOrder = 16;

  FiniteField(int p, int t);
  /// Throws UnsupportedError unless q is a prime power <= 16.
  static FiniteField of_order(int q);

  int characteristic() const { return p_; }
  int degree() const { return t_; }
  int order() const { return q_; }
  /// Monic modulus, coefficients little-endian (size t + 1).
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElem add(FieldElem a, FieldElem b) const { return add_[a * kMaxOrder + b]; }
  FieldElem sub(FieldElem a, FieldElem b) const { return add_[a * kMaxOrder + neg_[b]]; }
  FieldElem mul(FieldElem a, FieldElem b) const { return mul_[a * kMaxOrder + b]; }
  FieldElem neg(FieldElem a) const { return neg_[a]; }
  /// a != 0.
  FieldElem inv(FieldElem a) const { return inv_[a]; }
  FieldElem pow(FieldElem a, unsigned e) const;
  FieldElem frobenius(FieldElem a) const { return pow(a, static_cast<unsigned>(p_)); }

 private:
  int p_;
  int t_;
  int q_;
  std::vector<int> modulus_;
  std::array<FieldElem, kMaxOrder * kMaxOrder> add_{};
  std::array<FieldElem, kMaxOrder * kMaxOrder> mul_{};
  std::array<FieldElem, kMaxOrder> neg_{};
  std::array<FieldElem, kMaxOrder> inv_{};
};

/// True when the monic polynomial (little-endian coefficients mod p) has no
/// monic factor of degree 1..deg/2.
bool is_irreducible_mod_p(const std::vector<int>& poly, int p);

}  // namespace opprank
