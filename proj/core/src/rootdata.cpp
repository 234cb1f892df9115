#include "opprank/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "opprank/error.hpp"

namespace opprank {

char family_letter(Family f) {
  static constexpr char kLetters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
  return kLetters[static_cast<int>(f)];
}

Family family_from_letter(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
  }
  throw ConfigError(std::string("unknown root system family '") + c + "'");
}

bool is_admissible(const RootSystemSpec& spec) {
  const int r = spec.rank;
  if (r < 1 || r > kMaxRank) return false;
  switch (spec.family) {
    case Family::A: return true;
    case Family::B:
    case Family::C: return r >= 2;
    case Family::D: return r >= 3;
    case Family::E: return r >= 6;
    case Family::F: return r == 4;
    case Family::G: return r == 2;
  }
  return false;
}

RootSystemSpec parse_root_system(std::string_view name) {
  if (name.size() < 2) throw ConfigError("root system name too short: '" + std::string(name) + "'");
  RootSystemSpec spec;
  spec.family = family_from_letter(name[0]);
  const auto digits = name.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), spec.rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ConfigError("bad root system rank in '" + std::string(name) + "'");
  }
  if (!is_admissible(spec)) {
    throw ConfigError("inadmissible root system " + std::string(name));
  }
  return spec;
}

std::string to_string(const RootSystemSpec& spec) {
  return std::string(1, family_letter(spec.family)) + std::to_string(spec.rank);
}

std::size_t classical_positive_root_count(const RootSystemSpec& spec) {
  const std::size_t l = static_cast<std::size_t>(spec.rank);
  switch (spec.family) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
    case Family::E: return l == 6 ? 36 : l == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

// ---------------------------------------------------------------- Weight

Weight Weight::fundamental(std::size_t rank, int node) {
  Weight w(rank);
  w[static_cast<std::size_t>(node - 1)] = 1;
  return w;
}

bool Weight::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.size() != size()) throw ConfigError("weight dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.size() != size()) throw ConfigError("weight dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight operator-(Weight a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

Weight operator*(int k, Weight a) {
  for (auto& c : a.coords_) c *= k;
  return a;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ']';
  return os.str();
}

Weight parse_weight(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c)); }),
          s.end());
  if (s.empty()) throw ConfigError("empty weight");
  std::vector<int> coords;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = std::min(s.find(',', start), s.size());
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + end, value);
    if (ec != std::errc() || ptr != s.data() + end) {
      throw ConfigError("bad weight coordinate in '" + std::string(text) + "'");
    }
    coords.push_back(value);
    start = end + 1;
  }
  return Weight(std::move(coords));
}

// ---------------------------------------------------------------- Root

int Root::height() const { return std::accumulate(simple_coords.begin(), simple_coords.end(), 0); }

int Root::coroot_height() const { return std::accumulate(coroot_coords.begin(), coroot_coords.end(), 0); }

// ---------------------------------------------------------------- RootSystem

RootSystem::RootSystem(RootSystemSpec spec) : spec_(spec) {
  if (!is_admissible(spec_)) throw ConfigError("inadmissible root system " + to_string(spec_));
  build_cartan();
  build_symmetrizer();
  build_positive_roots();
  if (positive_roots_.size() != classical_positive_root_count(spec_)) {
    throw ConsistencyError("positive root enumeration disagrees with the classical count for " + name());
  }
}

void RootSystem::build_cartan() {
  const std::size_t n = rank();
  cartan_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) cartan_[i * n + i] = 2;
  // Simple edges as 1-based node pairs; multiple bonds patched below.
  auto edge = [&](int a, int b) {
    cartan_[(a - 1) * n + (b - 1)] = -1;
    cartan_[(b - 1) * n + (a - 1)] = -1;
  };
  // set(i, j, v): <alpha_j, alpha_i^vee> = v, 1-based.
  auto set = [&](int i, int j, int v) { cartan_[(i - 1) * n + (j - 1)] = v; };
  const int l = spec_.rank;
  switch (spec_.family) {
    case Family::A:
      for (int i = 1; i < l; ++i) edge(i, i + 1);
      break;
    case Family::B:
      // alpha_l short.
      for (int i = 1; i < l; ++i) edge(i, i + 1);
      set(l, l - 1, -2);
      break;
    case Family::C:
      // alpha_l long.
      for (int i = 1; i < l; ++i) edge(i, i + 1);
      set(l - 1, l, -2);
      break;
    case Family::D:
      for (int i = 1; i < l - 1; ++i) edge(i, i + 1);
      edge(l - 2, l);
      break;
    case Family::E:
      if (l == 6) {
        edge(1, 2);
        edge(2, 3);
        edge(3, 5);
        edge(5, 6);
        edge(3, 4);
      } else {
        edge(1, 3);
        for (int i = 3; i < l; ++i) edge(i, i + 1);
        edge(2, 4);
      }
      break;
    case Family::F:
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
      edge(1, 2);
      edge(2, 3);
      edge(3, 4);
      set(3, 2, -2);
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long.
      edge(1, 2);
      set(1, 2, -3);
      break;
  }
}

void RootSystem::build_symmetrizer() {
  const std::size_t n = rank();
  std::vector<long> d(n, 0);
  d[0] = 6;
  // Breadth-first over the Dynkin diagram: d_i * a_ij = d_j * a_ji.
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t i = queue[head];
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || cartan(i, j) == 0 || d[j] != 0) continue;
      const long num = d[i] * cartan(i, j);
      if (num % cartan(j, i) != 0) throw ConsistencyError("Cartan matrix not symmetrizable");
      d[j] = num / cartan(j, i);
      queue.push_back(j);
    }
  }
  long g = 0;
  for (long v : d) g = std::gcd(g, v);
  symmetrizer_.resize(n);
  for (std::size_t i = 0; i < n; ++i) symmetrizer_[i] = static_cast<int>(d[i] / g);
}

void RootSystem::build_positive_roots() {
  const std::size_t n = rank();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> level;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    level.push_back(e);
    seen.insert(e);
  }
  std::vector<std::vector<int>> all = level;
  while (!level.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : level) {
      for (std::size_t i = 0; i < n; ++i) {
        // alpha_i-string through beta: beta - r alpha_i ... beta + s alpha_i, r - s = <beta, alpha_i^vee>.
        int r = 0;
        std::vector<int> down = beta;
        while (down[i] > 0) {
          --down[i];
          if (!seen.count(down)) break;
          ++r;
        }
        int pair = 0;
        for (std::size_t j = 0; j < n; ++j) pair += beta[j] * cartan(i, j);
        if (r - pair > 0) {
          std::vector<int> up = beta;
          ++up[i];
          if (!seen.count(up)) next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    for (const auto& v : level) {
      seen.insert(v);
      all.push_back(v);
    }
  }

  positive_roots_.clear();
  for (const auto& c : all) {
    Root root;
    root.simple_coords = c;
    // (alpha, alpha) / 2 with (alpha_i, alpha_j) = d_i a_ij.
    long norm2 = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) norm2 += static_cast<long>(c[i]) * c[j] * symmetrizer_[i] * cartan(i, j);
    if (norm2 % 2 != 0) throw ConsistencyError("odd root norm");
    const long d_alpha = norm2 / 2;
    root.coroot_coords.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const long num = static_cast<long>(c[i]) * symmetrizer_[i];
      if (num % d_alpha != 0) throw ConsistencyError("non-integral coroot coordinate");
      root.coroot_coords[i] = static_cast<int>(num / d_alpha);
    }
    positive_roots_.push_back(std::move(root));
  }
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.simple_coords > b.simple_coords;
  });

  simple_root_weights_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    Weight w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = cartan(k, i);
    simple_root_weights_.push_back(std::move(w));
  }

  // Exact inverse of the Cartan matrix for root-basis conversion.
  using boost::multiprecision::cpp_rational;
  std::vector<cpp_rational> a(n * 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * 2 * n + j] = cartan(i, j);
    a[i * 2 * n + n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (a[piv * 2 * n + col] == 0) ++piv;
    if (piv != col)
      for (std::size_t k = 0; k < 2 * n; ++k) std::swap(a[piv * 2 * n + k], a[col * 2 * n + k]);
    const cpp_rational inv = 1 / a[col * 2 * n + col];
    for (std::size_t k = 0; k < 2 * n; ++k) a[col * 2 * n + k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * 2 * n + col] == 0) continue;
      const cpp_rational f = a[r * 2 * n + col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r * 2 * n + k] -= f * a[col * 2 * n + k];
    }
  }
  boost::multiprecision::cpp_int den = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto dd = boost::multiprecision::denominator(a[i * 2 * n + n + j]);
      den = boost::multiprecision::lcm(den, dd);
    }
  inv_den_ = static_cast<std::int64_t>(den);
  inv_num_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const cpp_rational scaled = a[i * 2 * n + n + j] * den;
      inv_num_[i * n + j] = static_cast<std::int64_t>(boost::multiprecision::numerator(scaled));
    }
}

void RootSystem::check_weight(const Weight& w) const {
  if (w.size() != rank()) {
    throw ConfigError("weight " + to_string(w) + " has " + std::to_string(w.size()) + " coordinates; " + name() +
                      " needs " + std::to_string(rank()));
  }
}

std::int64_t RootSystem::pairing(const Weight& lambda, const Root& alpha) const {
  check_weight(lambda);
  if (alpha.coroot_coords.size() != rank()) throw ConfigError("root dimension mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank(); ++i) s += static_cast<std::int64_t>(lambda[i]) * alpha.coroot_coords[i];
  return s;
}

Weight RootSystem::root_in_weight_basis(const Root& alpha) const {
  Weight w(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    int s = 0;
    for (std::size_t j = 0; j < rank(); ++j) s += cartan(i, j) * alpha.simple_coords[j];
    w[i] = s;
  }
  return w;
}

std::size_t RootSystem::count_roots_supported_on(const std::vector<bool>& nodes) const {
  return static_cast<std::size_t>(std::count_if(positive_roots_.begin(), positive_roots_.end(), [&](const Root& r) {
    for (std::size_t i = 0; i < rank(); ++i)
      if (r.simple_coords[i] != 0 && !nodes[i]) return false;
    return true;
  }));
}

bool RootSystem::to_root_basis(const Weight& w, std::vector<std::int64_t>& out) const {
  check_weight(w);
  const std::size_t n = rank();
  out.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += inv_num_[i * n + j] * w[j];
    if (s % inv_den_ != 0) return false;
    out[i] = s / inv_den_;
  }
  return true;
}

bool RootSystem::dominates(const Weight& mu, const Weight& nu) const {
  std::vector<std::int64_t> c;
  if (!to_root_basis(mu - nu, c)) return false;
  return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v >= 0; });
}

}  // namespace opprank
