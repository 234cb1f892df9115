#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace opprank {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family family_from_letter(char c);

struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

/// Parses names such as "E6" or "A3". Throws ConfigError on bad syntax or an
/// inadmissible (family, rank) pair.
RootSystemSpec parse_root_system(std::string_view name);
std::string to_string(const RootSystemSpec& spec);
/// Classical ranks are capped at kMaxRank.
inline constexpr int kMaxRank = 32;
bool is_admissible(const RootSystemSpec& spec);

/// Integral weight, coordinates in the fundamental-weight basis.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, 0) {}
  explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<int> coords) : coords_(coords) {}

  static Weight fundamental(std::size_t rank, int node);

  std::size_t size() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }

  bool is_dominant() const;
  bool is_zero() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(int k, Weight a);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords_ <=> b.coords_; }

 private:
  std::vector<int> coords_;
};

std::string to_string(const Weight& w);
/// Accepts "3,0,1" or "[3,0,1]".
Weight parse_weight(std::string_view text);

struct Root {
  std::vector<int> simple_coords;
  std::vector<int> coroot_coords;

  int height() const;
  int coroot_height() const;
  friend bool operator==(const Root&, const Root&) = default;
};

/// Immutable root datum of a connected crystallographic root system.
///
/// Cartan convention: cartan(i, j) = <alpha_j, alpha_i^vee>, indices 0-based.
/// Node numbering is Bourbaki except for E6, which uses the chain
/// 1-2-3-5-6 with node 4 attached to node 3 (Bourbaki 1,3,4,5,6 / 2).
class RootSystem {
 public:
  explicit RootSystem(RootSystemSpec spec);

  const RootSystemSpec& spec() const { return spec_; }
  std::size_t rank() const { return static_cast<std::size_t>(spec_.rank); }
  std::string name() const { return to_string(spec_); }

  int cartan(std::size_t i, std::size_t j) const { return cartan_[i * rank() + j]; }
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }

  /// Sorted by height, then lexicographically on simple-root coordinates.
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const Root& simple_root(std::size_t i) const { return positive_roots_[i]; }
  const Root& highest_root() const { return positive_roots_.back(); }

  Weight rho() const { return Weight(std::vector<int>(rank(), 1)); }
  Weight zero_weight() const { return Weight(rank()); }

  /// <lambda, alpha^vee>.
  std::int64_t pairing(const Weight& lambda, const Root& alpha) const;
  Weight root_in_weight_basis(const Root& alpha) const;
  /// alpha_i in the omega basis: the i-th Cartan column.
  const Weight& simple_root_weight(std::size_t i) const { return simple_root_weights_[i]; }

  /// Number of positive roots whose support lies in the given 0-based node mask.
  std::size_t count_roots_supported_on(const std::vector<bool>& nodes) const;

  /// Expresses an omega-basis weight in the simple-root basis. Returns false
  /// when the coordinates are not integral.
  bool to_root_basis(const Weight& w, std::vector<std::int64_t>& out) const;

  /// mu >= nu in the dominance order: mu - nu is a non-negative integer
  /// combination of simple roots.
  bool dominates(const Weight& mu, const Weight& nu) const;

  void check_weight(const Weight& w) const;

 private:
  void build_cartan();
  void build_symmetrizer();
  void build_positive_roots();

  RootSystemSpec spec_;
  std::vector<int> cartan_;
  std::vector<int> symmetrizer_;
  std::vector<Root> positive_roots_;
  std::vector<Weight> simple_root_weights_;
  // Inverse Cartan matrix scaled to integers: inverse = inv_num_ / inv_den_.
  std::vector<std::int64_t> inv_num_;
  std::int64_t inv_den_ = 1;
};

/// |R+| for the classical table; used by tests and as a construction check.
std::size_t classical_positive_root_count(const RootSystemSpec& spec);

}  // namespace opprank
