#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "opprank/rootdata.hpp"

namespace opprank {

/// Sorted, duplicate-free set of 1-based Dynkin nodes.
class TypeSet {
 public:
  TypeSet() = default;
  TypeSet(std::initializer_list<int> nodes);
  explicit TypeSet(std::vector<int> nodes);

  static TypeSet all(std::size_t rank);

  const std::vector<int>& nodes() const { return nodes_; }
  bool contains(int node) const;
  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  TypeSet complement(std::size_t rank) const;
  /// 0-based membership mask of length rank.
  std::vector<bool> mask(std::size_t rank) const;
  void check(std::size_t rank) const;

  friend bool operator==(const TypeSet&, const TypeSet&) = default;

 private:
  std::vector<int> nodes_;
};

/// "[1,3]", "[]".
std::string to_string(const TypeSet& set);
/// Accepts "[1,3]", "1,3", "{1,3}", "" or "[]".
TypeSet parse_type_set(std::string_view text);

/// A word s_{a_1} s_{a_2} ... s_{a_k} in the simple reflections (1-based letters).
/// As a map on weights the last letter is applied first.
struct WeylWord {
  std::vector<int> letters;

  std::size_t length() const { return letters.size(); }
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

/// lambda - <lambda, alpha_i^vee> alpha_i. Node is 1-based.
Weight reflect_simple(const RootSystem& rs, int node, const Weight& lambda);
Weight apply_word(const RootSystem& rs, const WeylWord& w, const Weight& lambda);
WeylWord concatenate(const WeylWord& a, const WeylWord& b);

/// Elements are compared through their action on rho and every omega_i.
bool same_element(const RootSystem& rs, const WeylWord& a, const WeylWord& b);

/// Number of positive roots sent to negative roots.
std::size_t inversion_count(const RootSystem& rs, const WeylWord& w);

/// Longest element of W_J (J = I gives w0, J empty gives the identity),
/// found by descent from -rho, smallest admissible node first.
WeylWord longest_word(const RootSystem& rs, const TypeSet& nodes);

/// w* with w0 = w* w_J, as a reduced word.
WeylWord w_star(const RootSystem& rs, const TypeSet& cotype);

/// The permutation sigma of {1..l} with -w0(alpha_i) = alpha_sigma(i); index 0 unused.
std::vector<int> opposition_involution(const RootSystem& rs);
TypeSet opposite_type(const RootSystem& rs, const TypeSet& nodes);

}  // namespace opprank
