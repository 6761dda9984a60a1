#include "lcklab/lie_algebra.hpp"

#include <set>
#include <sstream>

#include "lcklab/error.hpp"

namespace lcklab {

StructureConstants::StructureConstants(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty() || !seen.insert(l).second)
      throw Error(ErrorCode::BadParameters, "basis labels must be distinct and nonempty");
  }
  const std::size_t n = labels_.size();
  table_.resize(n * (n > 0 ? n - 1 : 0) / 2);
}

std::size_t StructureConstants::pair_index(std::size_t i, std::size_t j) const {
  // i < j; rows of the strict upper triangle
  const std::size_t n = dim();
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::size_t StructureConstants::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw Error(ErrorCode::BadParameters, "unknown basis label '" + label + "'");
}

void StructureConstants::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  const std::size_t n = dim();
  if (i >= n || j >= n || value.size() != n) throw Error(ErrorCode::DimensionMismatch, "set_bracket");
  if (i == j) {
    if (!is_zero(value)) throw Error(ErrorCode::BadParameters, "[e_i, e_i] must vanish");
    return;
  }
  const bool flip = i > j;
  auto& slot = table_[flip ? pair_index(j, i) : pair_index(i, j)];
  slot.clear();
  for (std::size_t k = 0; k < n; ++k) {
    if (value[k] != 0) slot.push_back({k, flip ? Rational(-value[k]) : value[k]});
  }
}

void StructureConstants::set_bracket(const std::string& a, const std::string& b, const Vector& value) {
  set_bracket(index_of(a), index_of(b), value);
}

std::vector<Term> StructureConstants::bracket_terms(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  if (i < j) return table_[pair_index(i, j)];
  std::vector<Term> t = table_[pair_index(j, i)];
  for (auto& term : t) term.coeff = -term.coeff;
  return t;
}

Vector StructureConstants::bracket_basis(std::size_t i, std::size_t j) const {
  Vector v = zero_vector(dim());
  for (const auto& t : bracket_terms(i, j)) v[t.index] = t.coeff;
  return v;
}

Vector StructureConstants::bracket(std::span<const Rational> u, std::span<const Rational> v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n) throw Error(ErrorCode::DimensionMismatch, "bracket");
  Vector r = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& terms = table_[pair_index(i, j)];
      if (terms.empty()) continue;
      const Rational w = u[i] * v[j] - u[j] * v[i];
      if (w == 0) continue;
      for (const auto& t : terms) r[t.index] += w * t.coeff;
    }
  }
  return r;
}

std::vector<JacobiViolation> jacobi_violations(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  std::vector<JacobiViolation> out;
  auto bracket_with_basis = [&](const Vector& x, std::size_t k) {
    return sc.bracket(x, unit_vector(n, k));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector r = bracket_with_basis(sc.bracket_basis(i, j), k) + bracket_with_basis(sc.bracket_basis(j, k), i) +
                   bracket_with_basis(sc.bracket_basis(k, i), j);
        if (!is_zero(r)) out.push_back({i, j, k, std::move(r)});
      }
  return out;
}

// ---------------------------------------------------------------------------

LieAlgebra::LieAlgebra(StructureConstants sc) : sc_(std::move(sc)) {
  const auto bad = jacobi_violations(sc_);
  if (!bad.empty()) {
    const auto& v = bad.front();
    std::ostringstream os;
    os << bad.size() << " failing triple(s), first (" << sc_.labels()[v.i] << ", " << sc_.labels()[v.j] << ", "
       << sc_.labels()[v.k] << ")";
    throw Error(ErrorCode::JacobiViolation, os.str());
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  return LieAlgebra(StructureConstants(std::move(labels)));
}

Vector LieAlgebra::bracket(std::span<const Rational> u, std::span<const Rational> v) const {
  return sc_.bracket(u, v);
}

Vector bracket(const LieAlgebra& g, std::span<const Rational> u, std::span<const Rational> v) {
  return g.bracket(u, v);
}

Matrix ad_matrix(const LieAlgebra& g, std::span<const Rational> u) {
  const std::size_t n = g.dim();
  if (u.size() != n) throw Error(ErrorCode::DimensionMismatch, "ad_matrix");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : g.bracket_terms(i, j)) m(t.index, j) += u[i] * t.coeff;
  }
  return m;
}

bool is_unimodular(const LieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (ad_matrix(g, unit_vector(g.dim(), i)).trace() != 0) return false;
  return true;
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vector> out;
  for (const auto& u : a.basis())
    for (const auto& v : b.basis()) {
      Vector w = g.bracket(u, v);
      if (!is_zero(w)) out.push_back(std::move(w));
    }
  return Subspace::span(g.dim(), out);
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  std::vector<Subspace> series{Subspace::full(g.dim())};
  while (true) {
    Subspace next = bracket_span(g, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const Subspace all = Subspace::full(g.dim());
  std::vector<Subspace> series{all};
  while (true) {
    Subspace next = bracket_span(g, all, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

Subspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix stacked;
  for (std::size_t i = 0; i < n; ++i) stacked = stacked.stacked(ad_matrix(g, unit_vector(n, i)));
  if (n == 0) return Subspace(0);
  return kernel_basis(stacked);
}

Subspace derived_subalgebra(const LieAlgebra& g) {
  const Subspace all = Subspace::full(g.dim());
  return bracket_span(g, all, all);
}

bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().dim() == 0; }
bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().dim() == 0; }
bool is_abelian(const LieAlgebra& g) { return derived_subalgebra(g).dim() == 0; }

Matrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_matrix(g, unit_vector(n, i)));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = (ads[i] * ads[j]).trace();
      k(j, i) = k(i, j);
    }
  return k;
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p, std::vector<std::string> labels) {
  const std::size_t n = g.dim();
  if (p.rows() != n || p.cols() != n) throw Error(ErrorCode::DimensionMismatch, "change_basis");
  const auto pinv = inverse(p);
  if (!pinv) throw Error(ErrorCode::BadParameters, "change_basis needs an invertible matrix");
  if (labels.empty()) labels = g.labels();
  StructureConstants sc(std::move(labels));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector fa = p.column(a), fb = p.column(b);
      sc.set_bracket(a, b, *pinv * g.bracket(fa, fb));
    }
  return LieAlgebra(std::move(sc));
}

LieAlgebra restrict_to(const LieAlgebra& g, const std::vector<Vector>& basis) {
  const std::size_t m = basis.size();
  const Matrix coords = Matrix::from_columns(basis, g.dim());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("f" + std::to_string(i + 1));
  StructureConstants sc(std::move(labels));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Vector w = g.bracket(basis[a], basis[b]);
      const auto x = solve(coords, w);
      if (!x) throw Error(ErrorCode::BadParameters, "restrict_to: span is not a subalgebra");
      sc.set_bracket(a, b, *x);
    }
  return LieAlgebra(std::move(sc));
}

}  // namespace lcklab
