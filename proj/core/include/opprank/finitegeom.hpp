#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "opprank/characters.hpp"
#include "opprank/finite_field.hpp"
#include "opprank/rootdata.hpp"
#include "opprank/weylgroup.hpp"

namespace opprank {

/// Subspace of GF(q)^n held as its reduced row echelon basis, so equal
/// subspaces have equal representations.
struct Subspace {
  int dim = 0;
  int ambient = 0;
  std::vector<FieldElem> rows;  // dim x ambient, row-major

  FieldElem at(int r, int c) const { return rows[static_cast<std::size_t>(r * ambient + c)]; }
  std::vector<int> pivots() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;
};

/// Row-reduces `rows` (nrows x ncols, row-major) in place; returns the rank.
/// The first `rank` rows hold the reduced echelon form afterwards.
int row_reduce(const FiniteField& f, std::vector<FieldElem>& rows, int nrows, int ncols);
Subspace span(const FiniteField& f, std::vector<FieldElem> rows, int nrows, int ncols);
bool contains(const FiniteField& f, const Subspace& big, const Subspace& small);
int intersection_dim(const FiniteField& f, const Subspace& a, const Subspace& b);

/// Every d-dimensional subspace of GF(q)^n in lexicographic order.
std::vector<Subspace> enumerate_subspaces(const FiniteField& f, int n, int d);

/// A building object: a flag of subspaces with increasing dimension. Singular
/// points of a polar space are flags of length one.
struct GeomObject {
  std::vector<Subspace> parts;

  friend bool operator==(const GeomObject&, const GeomObject&) = default;
  friend auto operator<=>(const GeomObject&, const GeomObject&) = default;
};

/// Polar form of the standard split classical space.
struct PolarForm {
  Family family = Family::C;
  int dim = 0;
  /// Gram matrix of the bilinear (polar) form, dim x dim.
  std::vector<FieldElem> gram;
  /// Upper-triangular coefficients of the quadratic form; empty for type C.
  std::vector<FieldElem> quadratic;

  FieldElem bilinear(const FiniteField& f, const FieldElem* x, const FieldElem* y) const;
  FieldElem quadratic_value(const FiniteField& f, const FieldElem* x) const;
};

PolarForm standard_form(const FiniteField& f, Family family, int rank);

inline constexpr std::size_t kMaxObjects = 100000;

class GeometryProblem {
 public:
  /// Throws UnsupportedError for families, cotypes or fields not covered.
  GeometryProblem(RootSystemSpec system, int q, TypeSet cotype);

  const RootSystem& root_system() const { return rs_; }
  const FiniteField& field() const { return field_; }
  const TypeSet& cotype() const { return cotype_; }
  const TypeSet& opposite_cotype() const { return opposite_; }
  const std::optional<PolarForm>& form() const { return form_; }
  int ambient_dim() const { return ambient_; }
  /// Dimensions of the flag components for objects of the given cotype (type A),
  /// or {1} for polar points.
  std::vector<int> flag_dims(const TypeSet& cotype) const;

  std::size_t w_star_length() const { return w_star_length_; }
  BigInt row_sum_target() const;
  BigInt expected_object_count(const TypeSet& cotype) const;

 private:
  RootSystem rs_;
  FiniteField field_;
  TypeSet cotype_;
  TypeSet opposite_;
  std::optional<PolarForm> form_;
  int ambient_ = 0;
  std::size_t w_star_length_ = 0;
};

/// Why a (system, cotype, q) triple has no concrete geometry; nullopt when supported.
std::optional<std::string> geometry_unsupported_reason(const RootSystemSpec& system, int q, const TypeSet& cotype);

std::vector<GeomObject> enumerate_objects(const GeometryProblem& problem, const TypeSet& cotype);
bool is_opposite(const GeometryProblem& problem, const GeomObject& x, const GeomObject& y);

/// 0/1 oppositeness matrix, rows of cotype J, columns of the opposite cotype.
struct IncidenceMatrix {
  RootSystemSpec system;
  int q = 0;
  TypeSet row_cotype;
  TypeSet col_cotype;
  std::size_t nrows = 0;
  std::size_t ncols = 0;
  std::vector<std::uint8_t> entries;
  std::vector<GeomObject> row_labels;
  std::vector<GeomObject> col_labels;

  std::uint8_t at(std::size_t i, std::size_t j) const { return entries[i * ncols + j]; }
  IncidenceMatrix transposed() const;
};

/// Builds the matrix and checks every row and column sum equals q^{l(w*)};
/// throws ConsistencyError otherwise.
IncidenceMatrix build_incidence(const GeometryProblem& problem);
void check_row_sums(const IncidenceMatrix& m, const BigInt& target);

/// `%%OppositenessMatrix v1` text format.
void write_matrix(std::ostream& os, const IncidenceMatrix& m);
IncidenceMatrix read_matrix(std::istream& is);
/// One object per line: rows joined by ';', entries by ',', flag parts by " | ".
void write_labels(std::ostream& os, const std::vector<GeomObject>& labels);
std::string format_object(const GeomObject& x);

}  // namespace opprank
