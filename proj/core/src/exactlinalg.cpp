#include "opprank/exactlinalg.hpp"

#include <bit>
#include <utility>

#include "opprank/error.hpp"

namespace opprank {

MatrixModP::MatrixModP(std::uint32_t p, std::size_t nrows, std::size_t ncols)
    : p_(p), nrows_(nrows), ncols_(ncols), data_(nrows * ncols, 0) {
  if (p < 2) throw ConfigError("modulus must be a prime");
}

MatrixModP MatrixModP::from_incidence(const IncidenceMatrix& m, std::uint32_t p) {
  MatrixModP out(p, m.nrows, m.ncols);
  for (std::size_t k = 0; k < m.entries.size(); ++k) out.data_[k] = m.entries[k] % p;
  return out;
}

MatrixModP MatrixModP::identity(std::uint32_t p, std::size_t n) {
  MatrixModP out(p, n, n);
  for (std::size_t i = 0; i < n; ++i) out.data_[i * n + i] = 1;
  return out;
}

void MatrixModP::set(std::size_t i, std::size_t j, std::int64_t value) {
  const auto p = static_cast<std::int64_t>(p_);
  data_[i * ncols_ + j] = static_cast<std::uint32_t>(((value % p) + p) % p);
}

MatrixModP MatrixModP::transposed() const {
  MatrixModP t(p_, ncols_, nrows_);
  for (std::size_t i = 0; i < nrows_; ++i)
    for (std::size_t j = 0; j < ncols_; ++j) t.data_[j * nrows_ + i] = at(i, j);
  return t;
}

std::size_t rank_mod_p(const MatrixModP& m) { return m.prime() == 2 ? rank_mod2_packed(m) : rank_mod_p_generic(m); }

std::size_t rank_mod_p_generic(const MatrixModP& m) {
  const std::uint64_t p = m.prime();
  const std::size_t rows = m.nrows();
  const std::size_t cols = m.ncols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m.at(i, j);

  auto inverse = [p](std::uint64_t x) {
    // x^(p-2) mod p.
    std::uint64_t r = 1;
    std::uint64_t e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t k = c; k < cols; ++k) std::swap(a[piv * cols + k], a[rank * cols + k]);
    const std::uint64_t inv = inverse(a[rank * cols + c]);
    for (std::size_t k = c; k < cols; ++k) a[rank * cols + k] = a[rank * cols + k] * inv % p;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t f = a[r * cols + c];
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k) a[r * cols + k] = (a[r * cols + k] + (p - f) * a[rank * cols + k]) % p;
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod2_packed(const MatrixModP& m) {
  if (m.prime() != 2) throw ConfigError("packed elimination needs p = 2");
  const std::size_t rows = m.nrows();
  const std::size_t words = (m.ncols() + 63) / 64;
  std::vector<std::uint64_t> bits(rows * words, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < m.ncols(); ++j)
      if (m.at(i, j)) bits[i * words + j / 64] |= std::uint64_t{1} << (j % 64);

  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.ncols() && rank < rows; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t piv = rank;
    while (piv < rows && !(bits[piv * words + w] & mask)) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t k = w; k < words; ++k) std::swap(bits[piv * words + k], bits[rank * words + k]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (!(bits[r * words + w] & mask)) continue;
      for (std::size_t k = w; k < words; ++k) bits[r * words + k] ^= bits[rank * words + k];
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------- integer matrices

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.size() != b.size()) throw ConfigError("matrix size mismatch");
  const std::size_t n = a.size();
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix IntMatrix::shifted(const BigInt& c) const {
  IntMatrix m = *this;
  for (std::size_t i = 0; i < n_; ++i) m(i, i) -= c;
  return m;
}

IntMatrix gram(const IncidenceMatrix& m) {
  if (m.nrows != m.ncols) throw ConfigError("Gram check expects a square incidence matrix");
  const std::size_t n = m.nrows;
  IntMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < m.ncols; ++k) s += m.at(i, k) * m.at(j, k);
      g(i, j) = s;
      g(j, i) = s;
    }
  return g;
}

std::size_t rank_over_rationals(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<BigInt> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != rank)
      for (std::size_t k = 0; k < n; ++k) std::swap(a[piv * n + k], a[rank * n + k]);
    const BigInt pivot = a[rank * n + c];
    for (std::size_t r = rank + 1; r < n; ++r) {
      const BigInt f = a[r * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] = (pivot * a[r * n + k] - f * a[rank * n + k]) / prev;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

EigenPowerCheck check_eigen_powers(const IntMatrix& m, std::int64_t q, int max_exp) {
  if (m.size() > kMaxSpectralSize) {
    throw UnsupportedError("spectral check limited to " + std::to_string(kMaxSpectralSize) + " rows");
  }
  if (q < 2) throw ConfigError("q must be at least 2");
  EigenPowerCheck result;
  IntMatrix product = IntMatrix::identity(m.size());
  std::size_t rank = m.size();
  auto try_factor = [&](const IntMatrix& factor) {
    if (rank == 0) return false;
    IntMatrix next = product * factor;
    const std::size_t r = rank_over_rationals(next);
    if (r >= rank) return false;
    product = std::move(next);
    rank = r;
    return true;
  };
  BigInt power = 1;
  for (int a = 0; a <= max_exp; ++a) {
    if (try_factor(m.shifted(power))) result.exponents.push_back(a);
    power *= q;
  }
  result.zero_eigenvalue = try_factor(m);
  result.ok = product.is_zero();
  return result;
}

}  // namespace opprank
