#include "opprank/finitegeom.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "opprank/error.hpp"
#include "opprank/jantzen.hpp"

namespace opprank {

// ---------------------------------------------------------------- linear algebra over GF(q)

std::vector<int> Subspace::pivots() const {
  std::vector<int> out;
  for (int r = 0; r < dim; ++r) {
    int c = 0;
    while (c < ambient && at(r, c) == 0) ++c;
    out.push_back(c);
  }
  return out;
}

int row_reduce(const FiniteField& f, std::vector<FieldElem>& rows, int nrows, int ncols) {
  auto at = [&](int r, int c) -> FieldElem& { return rows[static_cast<std::size_t>(r * ncols + c)]; };
  int rank = 0;
  for (int c = 0; c < ncols && rank < nrows; ++c) {
    int piv = rank;
    while (piv < nrows && at(piv, c) == 0) ++piv;
    if (piv == nrows) continue;
    if (piv != rank)
      for (int k = 0; k < ncols; ++k) std::swap(at(piv, k), at(rank, k));
    const FieldElem inv = f.inv(at(rank, c));
    for (int k = c; k < ncols; ++k) at(rank, k) = f.mul(at(rank, k), inv);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || at(r, c) == 0) continue;
      const FieldElem factor = at(r, c);
      for (int k = c; k < ncols; ++k) at(r, k) = f.sub(at(r, k), f.mul(factor, at(rank, k)));
    }
    ++rank;
  }
  return rank;
}

Subspace span(const FiniteField& f, std::vector<FieldElem> rows, int nrows, int ncols) {
  const int rank = row_reduce(f, rows, nrows, ncols);
  rows.resize(static_cast<std::size_t>(rank * ncols));
  return Subspace{rank, ncols, std::move(rows)};
}

bool contains(const FiniteField& f, const Subspace& big, const Subspace& small) {
  const auto piv = big.pivots();
  std::vector<FieldElem> v(static_cast<std::size_t>(big.ambient));
  for (int r = 0; r < small.dim; ++r) {
    for (int c = 0; c < small.ambient; ++c) v[static_cast<std::size_t>(c)] = small.at(r, c);
    for (int k = 0; k < big.dim; ++k) {
      const FieldElem coeff = v[static_cast<std::size_t>(piv[static_cast<std::size_t>(k)])];
      if (coeff == 0) continue;
      for (int c = 0; c < big.ambient; ++c)
        v[static_cast<std::size_t>(c)] = f.sub(v[static_cast<std::size_t>(c)], f.mul(coeff, big.at(k, c)));
    }
    if (std::any_of(v.begin(), v.end(), [](FieldElem e) { return e != 0; })) return false;
  }
  return true;
}

int intersection_dim(const FiniteField& f, const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw ConfigError("subspaces live in different ambient spaces");
  std::vector<FieldElem> stacked = a.rows;
  stacked.insert(stacked.end(), b.rows.begin(), b.rows.end());
  const int rank = row_reduce(f, stacked, a.dim + b.dim, a.ambient);
  return a.dim + b.dim - rank;
}

std::vector<Subspace> enumerate_subspaces(const FiniteField& f, int n, int d) {
  std::vector<Subspace> out;
  if (d < 0 || d > n) return out;
  const int q = f.order();
  std::vector<int> pivots(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) pivots[static_cast<std::size_t>(i)] = i;
  for (;;) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::size_t> free;
    for (int r = 0; r < d; ++r)
      for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(static_cast<std::size_t>(r * n + c));
    std::vector<FieldElem> base(static_cast<std::size_t>(d * n), 0);
    for (int r = 0; r < d; ++r) base[static_cast<std::size_t>(r * n + pivots[static_cast<std::size_t>(r)])] = 1;
    std::vector<int> digits(free.size(), 0);
    for (;;) {
      std::vector<FieldElem> rows = base;
      for (std::size_t k = 0; k < free.size(); ++k) rows[free[k]] = static_cast<FieldElem>(digits[k]);
      out.push_back(Subspace{d, n, std::move(rows)});
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
      if (k == digits.size()) break;
    }
    // Next pivot combination.
    int i = d - 1;
    while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - d + i) --i;
    if (i < 0) break;
    ++pivots[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- forms

FieldElem PolarForm::bilinear(const FiniteField& f, const FieldElem* x, const FieldElem* y) const {
  FieldElem s = 0;
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      const FieldElem g = gram[static_cast<std::size_t>(i * dim + j)];
      if (g != 0 && y[j] != 0) s = f.add(s, f.mul(f.mul(x[i], g), y[j]));
    }
  }
  return s;
}

FieldElem PolarForm::quadratic_value(const FiniteField& f, const FieldElem* x) const {
  if (quadratic.empty()) return 0;
  FieldElem s = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      const FieldElem c = quadratic[static_cast<std::size_t>(i * dim + j)];
      if (c != 0) s = f.add(s, f.mul(c, f.mul(x[i], x[j])));
    }
  return s;
}

PolarForm standard_form(const FiniteField& f, Family family, int rank) {
  PolarForm form;
  form.family = family;
  const int l = rank;
  switch (family) {
    case Family::C: form.dim = 2 * l; break;
    case Family::D: form.dim = 2 * l; break;
    case Family::B: form.dim = 2 * l + 1; break;
    default: throw UnsupportedError("no polar form for this family");
  }
  const int n = form.dim;
  form.gram.assign(static_cast<std::size_t>(n * n), 0);
  auto g = [&](int i, int j) -> FieldElem& { return form.gram[static_cast<std::size_t>(i * n + j)]; };
  if (family == Family::C) {
    // <x, y> = sum x_i y_{l+i} - x_{l+i} y_i.
    for (int i = 0; i < l; ++i) {
      g(i, l + i) = 1;
      g(l + i, i) = f.neg(1);
    }
    return form;
  }
  // Q(x) = sum x_i x_{l+i} (+ x_{2l}^2 for B).
  form.quadratic.assign(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < l; ++i) {
    form.quadratic[static_cast<std::size_t>(i * n + l + i)] = 1;
    g(i, l + i) = 1;
    g(l + i, i) = 1;
  }
  if (family == Family::B) {
    form.quadratic[static_cast<std::size_t>(2 * l * n + 2 * l)] = 1;
    g(2 * l, 2 * l) = f.add(1, 1);
  }
  return form;
}

// ---------------------------------------------------------------- problems

std::optional<std::string> geometry_unsupported_reason(const RootSystemSpec& system, int q, const TypeSet& cotype) {
  if (!is_admissible(system)) return "inadmissible root system";
  try {
    (void)FiniteField::of_order(q);
  } catch (const UnsupportedError& e) {
    return std::string("field: ") + e.what();
  }
  for (int i : cotype.nodes())
    if (i < 1 || i > system.rank) return "cotype node out of range";
  switch (system.family) {
    case Family::A: return std::nullopt;
    case Family::B:
      if (q % 2 == 0) return "type B quadric geometry needs odd characteristic";
      [[fallthrough]];
    case Family::C:
    case Family::D: {
      const TypeSet points = TypeSet{1}.complement(static_cast<std::size_t>(system.rank));
      if (!(cotype == points)) return "only singular points (cotype I\\{1}) are enumerated for types B, C, D";
      return std::nullopt;
    }
    default: return "no concrete geometry for exceptional type " + to_string(system);
  }
}

GeometryProblem::GeometryProblem(RootSystemSpec system, int q, TypeSet cotype)
    : rs_(system), field_(FiniteField::of_order(q)), cotype_(std::move(cotype)) {
  if (auto reason = geometry_unsupported_reason(system, q, cotype_)) throw UnsupportedError(*reason);
  opposite_ = opposite_type(rs_, cotype_);
  w_star_length_ = w_star(rs_, cotype_).length();
  const int l = system.rank;
  switch (system.family) {
    case Family::A: ambient_ = l + 1; break;
    default:
      form_ = standard_form(field_, system.family, l);
      ambient_ = form_->dim;
  }
  for (const TypeSet& c : {cotype_, opposite_}) {
    if (expected_object_count(c) > kMaxObjects) {
      throw UnsupportedError("object count " + expected_object_count(c).str() + " exceeds the cap of " +
                             std::to_string(kMaxObjects));
    }
  }
}

std::vector<int> GeometryProblem::flag_dims(const TypeSet& cotype) const {
  if (form_) return {1};
  return cotype.complement(rs_.rank()).nodes();
}

BigInt GeometryProblem::row_sum_target() const { return ipow(BigInt(field_.order()), static_cast<unsigned>(w_star_length_)); }

namespace {

BigInt gaussian_binomial(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipow(BigInt(q), static_cast<unsigned>(n - i)) - 1;
    den *= ipow(BigInt(q), static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

}  // namespace

BigInt GeometryProblem::expected_object_count(const TypeSet& cotype) const {
  const int q = field_.order();
  const int l = rs_.spec().rank;
  const BigInt Q(q);
  switch (rs_.spec().family) {
    case Family::A: {
      BigInt count = 1;
      int prev = 0;
      for (int d : flag_dims(cotype)) {
        count *= gaussian_binomial(ambient_ - prev, d - prev, q);
        prev = d;
      }
      return count;
    }
    case Family::B:
    case Family::C: return (ipow(Q, static_cast<unsigned>(2 * l)) - 1) / (q - 1);
    case Family::D:
      return (ipow(Q, static_cast<unsigned>(l - 1)) + 1) * (ipow(Q, static_cast<unsigned>(l)) - 1) / (q - 1);
    default: return 0;
  }
}

std::vector<GeomObject> enumerate_objects(const GeometryProblem& problem, const TypeSet& cotype) {
  if (!(cotype == problem.cotype()) && !(cotype == problem.opposite_cotype())) {
    throw ConfigError("cotype " + to_string(cotype) + " is not part of this problem");
  }
  const FiniteField& f = problem.field();
  const int n = problem.ambient_dim();
  std::vector<GeomObject> out;
  if (problem.form()) {
    const PolarForm& form = *problem.form();
    for (Subspace& pt : enumerate_subspaces(f, n, 1)) {
      if (form.quadratic_value(f, pt.rows.data()) == 0) out.push_back(GeomObject{{std::move(pt)}});
    }
  } else {
    const auto dims = problem.flag_dims(cotype);
    out.push_back(GeomObject{});
    for (int d : dims) {
      const auto candidates = enumerate_subspaces(f, n, d);
      std::vector<GeomObject> next;
      for (const GeomObject& flag : out) {
        for (const Subspace& w : candidates) {
          if (flag.parts.empty() || contains(f, w, flag.parts.back())) {
            GeomObject g = flag;
            g.parts.push_back(w);
            next.push_back(std::move(g));
          }
        }
      }
      out = std::move(next);
    }
    std::sort(out.begin(), out.end());
  }
  if (BigInt(out.size()) != problem.expected_object_count(cotype)) {
    throw ConsistencyError("enumerated " + std::to_string(out.size()) + " objects, expected " +
                           problem.expected_object_count(cotype).str());
  }
  return out;
}

bool is_opposite(const GeometryProblem& problem, const GeomObject& x, const GeomObject& y) {
  const FiniteField& f = problem.field();
  if (problem.form()) {
    if (x.parts.size() != 1 || y.parts.size() != 1 || x.parts[0].dim != 1 || y.parts[0].dim != 1) {
      throw ConfigError("polar oppositeness compares two points");
    }
    return problem.form()->bilinear(f, x.parts[0].rows.data(), y.parts[0].rows.data()) != 0;
  }
  const std::size_t m = x.parts.size();
  if (y.parts.size() != m) throw ConfigError("flags of mismatched types");
  const int n = problem.ambient_dim();
  for (std::size_t j = 0; j < m; ++j) {
    const Subspace& u = x.parts[j];
    const Subspace& w = y.parts[m - 1 - j];
    if (u.dim + w.dim != n) throw ConfigError("flags of mismatched types");
    if (intersection_dim(f, u, w) != 0) return false;
  }
  return true;
}

IncidenceMatrix IncidenceMatrix::transposed() const {
  IncidenceMatrix t;
  t.system = system;
  t.q = q;
  t.row_cotype = col_cotype;
  t.col_cotype = row_cotype;
  t.nrows = ncols;
  t.ncols = nrows;
  t.entries.resize(entries.size());
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) t.entries[j * nrows + i] = at(i, j);
  t.row_labels = col_labels;
  t.col_labels = row_labels;
  return t;
}

void check_row_sums(const IncidenceMatrix& m, const BigInt& target) {
  if (m.nrows != m.ncols) throw ConsistencyError("oppositeness matrix is not square");
  std::vector<std::uint64_t> col(m.ncols, 0);
  for (std::size_t i = 0; i < m.nrows; ++i) {
    std::uint64_t row = 0;
    for (std::size_t j = 0; j < m.ncols; ++j) {
      row += m.at(i, j);
      col[j] += m.at(i, j);
    }
    if (BigInt(row) != target)
      throw ConsistencyError("row " + std::to_string(i) + " sums to " + std::to_string(row) + ", expected " + target.str());
  }
  for (std::size_t j = 0; j < m.ncols; ++j)
    if (BigInt(col[j]) != target)
      throw ConsistencyError("column " + std::to_string(j) + " sums to " + std::to_string(col[j]) + ", expected " +
                             target.str());
}

IncidenceMatrix build_incidence(const GeometryProblem& problem) {
  IncidenceMatrix m;
  m.system = problem.root_system().spec();
  m.q = problem.field().order();
  m.row_cotype = problem.cotype();
  m.col_cotype = problem.opposite_cotype();
  m.row_labels = enumerate_objects(problem, m.row_cotype);
  m.col_labels = enumerate_objects(problem, m.col_cotype);
  m.nrows = m.row_labels.size();
  m.ncols = m.col_labels.size();
  m.entries.assign(m.nrows * m.ncols, 0);

  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = 0; j < m.ncols; ++j)
        m.entries[i * m.ncols + j] = is_opposite(problem, m.row_labels[i], m.col_labels[j]) ? 1 : 0;
  };
  const std::size_t workers =
      m.nrows * m.ncols < (1u << 16) ? 1 : std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (workers == 1) {
    fill(0, m.nrows);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t block = (m.nrows + workers - 1) / workers;
    for (std::size_t b = 0; b < m.nrows; b += block) pool.emplace_back(fill, b, std::min(m.nrows, b + block));
  }
  check_row_sums(m, problem.row_sum_target());
  return m;
}

// ---------------------------------------------------------------- file formats

namespace {
constexpr const char* kMatrixMagic = "%%OppositenessMatrix v1";
}

void write_matrix(std::ostream& os, const IncidenceMatrix& m) {
  os << kMatrixMagic << '\n';
  os << family_letter(m.system.family) << ' ' << m.system.rank << ' ' << m.q << ' ' << to_string(m.row_cotype) << ' '
     << to_string(m.col_cotype) << ' ' << m.nrows << ' ' << m.ncols << '\n';
  std::string line(m.ncols, '0');
  for (std::size_t i = 0; i < m.nrows; ++i) {
    for (std::size_t j = 0; j < m.ncols; ++j) line[j] = m.at(i, j) ? '1' : '0';
    os << line << '\n';
  }
}

IncidenceMatrix read_matrix(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kMatrixMagic) throw ConfigError("missing %%OppositenessMatrix v1 header");
  if (!std::getline(is, line)) throw ConfigError("truncated matrix header");
  std::istringstream hs(line);
  std::string family;
  std::string row_cotype;
  std::string col_cotype;
  IncidenceMatrix m;
  if (!(hs >> family >> m.system.rank >> m.q >> row_cotype >> col_cotype >> m.nrows >> m.ncols) || family.size() != 1) {
    throw ConfigError("malformed matrix header line: '" + line + "'");
  }
  m.system.family = family_from_letter(family[0]);
  if (!is_admissible(m.system)) throw ConfigError("matrix header names an inadmissible root system");
  m.row_cotype = parse_type_set(row_cotype);
  m.col_cotype = parse_type_set(col_cotype);
  m.entries.resize(m.nrows * m.ncols);
  for (std::size_t i = 0; i < m.nrows; ++i) {
    if (!std::getline(is, line) || line.size() != m.ncols) {
      throw ConfigError("matrix row " + std::to_string(i) + " missing or of wrong length");
    }
    for (std::size_t j = 0; j < m.ncols; ++j) {
      if (line[j] != '0' && line[j] != '1') throw ConfigError("matrix entries must be 0 or 1");
      m.entries[i * m.ncols + j] = line[j] == '1' ? 1 : 0;
    }
  }
  return m;
}

std::string format_object(const GeomObject& x) {
  if (x.parts.empty()) return "-";
  std::ostringstream os;
  for (std::size_t k = 0; k < x.parts.size(); ++k) {
    if (k) os << " | ";
    const Subspace& s = x.parts[k];
    for (int r = 0; r < s.dim; ++r) {
      if (r) os << ';';
      for (int c = 0; c < s.ambient; ++c) {
        if (c) os << ',';
        os << static_cast<int>(s.at(r, c));
      }
    }
  }
  return os.str();
}

void write_labels(std::ostream& os, const std::vector<GeomObject>& labels) {
  for (const auto& x : labels) os << format_object(x) << '\n';
}

}  // namespace opprank
