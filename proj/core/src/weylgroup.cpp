#include "opprank/weylgroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "opprank/error.hpp"

namespace opprank {

TypeSet::TypeSet(std::initializer_list<int> nodes) : TypeSet(std::vector<int>(nodes)) {}

TypeSet::TypeSet(std::vector<int> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
}

TypeSet TypeSet::all(std::size_t rank) {
  std::vector<int> v(rank);
  for (std::size_t i = 0; i < rank; ++i) v[i] = static_cast<int>(i + 1);
  return TypeSet(std::move(v));
}

bool TypeSet::contains(int node) const { return std::binary_search(nodes_.begin(), nodes_.end(), node); }

TypeSet TypeSet::complement(std::size_t rank) const {
  std::vector<int> v;
  for (int i = 1; i <= static_cast<int>(rank); ++i)
    if (!contains(i)) v.push_back(i);
  return TypeSet(std::move(v));
}

std::vector<bool> TypeSet::mask(std::size_t rank) const {
  check(rank);
  std::vector<bool> m(rank, false);
  for (int i : nodes_) m[static_cast<std::size_t>(i - 1)] = true;
  return m;
}

void TypeSet::check(std::size_t rank) const {
  for (int i : nodes_)
    if (i < 1 || i > static_cast<int>(rank))
      throw ConfigError("node " + std::to_string(i) + " outside 1.." + std::to_string(rank));
}

std::string to_string(const TypeSet& set) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < set.nodes().size(); ++i) {
    if (i) os << ',';
    os << set.nodes()[i];
  }
  os << ']';
  return os.str();
}

TypeSet parse_type_set(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '[' && c != ']' && c != '{' && c != '}') s.push_back(c);
  std::vector<int> nodes;
  if (s.empty()) return TypeSet();
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = std::min(s.find(',', start), s.size());
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + end, v);
    if (ec != std::errc() || ptr != s.data() + end) throw ConfigError("bad type set '" + std::string(text) + "'");
    nodes.push_back(v);
    start = end + 1;
  }
  return TypeSet(std::move(nodes));
}

Weight reflect_simple(const RootSystem& rs, int node, const Weight& lambda) {
  if (node < 1 || node > static_cast<int>(rs.rank()))
    throw ConfigError("reflection index " + std::to_string(node) + " out of range");
  rs.check_weight(lambda);
  const std::size_t i = static_cast<std::size_t>(node - 1);
  const int k = lambda[i];
  Weight out = lambda;
  if (k != 0) out -= k * rs.simple_root_weight(i);
  return out;
}

Weight apply_word(const RootSystem& rs, const WeylWord& w, const Weight& lambda) {
  Weight out = lambda;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = reflect_simple(rs, *it, out);
  return out;
}

WeylWord concatenate(const WeylWord& a, const WeylWord& b) {
  WeylWord w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

bool same_element(const RootSystem& rs, const WeylWord& a, const WeylWord& b) {
  if (apply_word(rs, a, rs.rho()) != apply_word(rs, b, rs.rho())) return false;
  for (std::size_t i = 1; i <= rs.rank(); ++i) {
    const Weight w = Weight::fundamental(rs.rank(), static_cast<int>(i));
    if (apply_word(rs, a, w) != apply_word(rs, b, w)) return false;
  }
  return true;
}

std::size_t inversion_count(const RootSystem& rs, const WeylWord& w) {
  // w(alpha) < 0 iff <w^{-1}(rho), alpha^vee> < 0; w^{-1} is the reversed word.
  WeylWord inv{std::vector<int>(w.letters.rbegin(), w.letters.rend())};
  const Weight image = apply_word(rs, inv, rs.rho());
  return static_cast<std::size_t>(std::count_if(rs.positive_roots().begin(), rs.positive_roots().end(),
                                                [&](const Root& a) { return rs.pairing(image, a) < 0; }));
}

namespace {

// Descends from `start` using reflections in `allowed` until every allowed
// coordinate is non-negative. Returns the letters in the order applied.
std::vector<int> descend(const RootSystem& rs, Weight start, const std::vector<bool>& allowed) {
  std::vector<int> applied;
  for (;;) {
    int node = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (allowed[i] && start[i] < 0) {
        node = static_cast<int>(i + 1);
        break;
      }
    }
    if (node == 0) return applied;
    start = reflect_simple(rs, node, start);
    applied.push_back(node);
  }
}

}  // namespace

WeylWord longest_word(const RootSystem& rs, const TypeSet& nodes) {
  // u = s_{i_k} ... s_{i_1} maps -rho into the J-dominant chamber, so u = w_J;
  // w_J is an involution, hence also s_{i_1} ... s_{i_k}.
  return WeylWord{descend(rs, -rs.rho(), nodes.mask(rs.rank()))};
}

WeylWord w_star(const RootSystem& rs, const TypeSet& cotype) {
  const WeylWord w0 = longest_word(rs, TypeSet::all(rs.rank()));
  const WeylWord wj = longest_word(rs, cotype);
  // nu = w*(rho) is regular; descending nu back to rho with letters
  // i_1..i_k gives nu = s_{i_1} ... s_{i_k}(rho), a reduced word for w*.
  const Weight nu = apply_word(rs, w0, apply_word(rs, wj, rs.rho()));
  return WeylWord{descend(rs, nu, std::vector<bool>(rs.rank(), true))};
}

std::vector<int> opposition_involution(const RootSystem& rs) {
  const std::size_t n = rs.rank();
  const WeylWord w0 = longest_word(rs, TypeSet::all(n));
  std::vector<int> sigma(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    const Weight image = -apply_word(rs, w0, Weight::fundamental(n, static_cast<int>(i)));
    for (std::size_t j = 1; j <= n; ++j) {
      if (image == Weight::fundamental(n, static_cast<int>(j))) sigma[i] = static_cast<int>(j);
    }
    if (sigma[i] == 0) throw ConsistencyError("-w0 does not permute the fundamental weights");
  }
  return sigma;
}

TypeSet opposite_type(const RootSystem& rs, const TypeSet& nodes) {
  nodes.check(rs.rank());
  const auto sigma = opposition_involution(rs);
  std::vector<int> out;
  for (int i : nodes.nodes()) out.push_back(sigma[static_cast<std::size_t>(i)]);
  return TypeSet(std::move(out));
}

}  // namespace opprank
