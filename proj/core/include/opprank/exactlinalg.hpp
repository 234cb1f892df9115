#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "opprank/characters.hpp"
#include "opprank/finitegeom.hpp"

namespace opprank {

/// Dense matrix over F_p with residues in [0, p).
class MatrixModP {
 public:
  MatrixModP(std::uint32_t p, std::size_t nrows, std::size_t ncols);
  static MatrixModP from_incidence(const IncidenceMatrix& m, std::uint32_t p);
  static MatrixModP identity(std::uint32_t p, std::size_t n);

  std::uint32_t prime() const { return p_; }
  std::size_t nrows() const { return nrows_; }
  std::size_t ncols() const { return ncols_; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return data_[i * ncols_ + j]; }
  /// Stores value mod p.
  void set(std::size_t i, std::size_t j, std::int64_t value);
  MatrixModP transposed() const;

 private:
  std::uint32_t p_;
  std::size_t nrows_;
  std::size_t ncols_;
  std::vector<std::uint32_t> data_;
};

/// Rank by Gaussian elimination; dispatches to the packed path when p = 2.
std::size_t rank_mod_p(const MatrixModP& m);
/// Residue elimination, any prime.
std::size_t rank_mod_p_generic(const MatrixModP& m);
/// Rows packed into 64-bit words, XOR elimination. Requires p = 2.
std::size_t rank_mod2_packed(const MatrixModP& m);

/// Square arbitrary-precision integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}
  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  bool is_zero() const;
  bool is_symmetric() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  /// M - c I.
  IntMatrix shifted(const BigInt& c) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> data_;
};

/// A A^T over the integers.
IntMatrix gram(const IncidenceMatrix& m);
/// Rank over Q (fraction-free Bareiss elimination).
std::size_t rank_over_rationals(const IntMatrix& m);

inline constexpr std::size_t kMaxSpectralSize = 200;

struct EigenPowerCheck {
  bool ok = false;
  /// Exponents a with q^a an eigenvalue, ascending.
  std::vector<int> exponents;
  /// M itself was needed as a factor (0 is an eigenvalue).
  bool zero_eigenvalue = false;
};

/// Greedily multiplies factors (M - q^a I), a = 0..max_exp, then M, keeping
/// each one that lowers the rank of the running product. ok iff the product
/// reaches zero. Throws UnsupportedError above kMaxSpectralSize.
EigenPowerCheck check_eigen_powers(const IntMatrix& m, std::int64_t q, int max_exp);

}  // namespace opprank
