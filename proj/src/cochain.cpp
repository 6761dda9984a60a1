#include "lcklab/cochain.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "lcklab/error.hpp"
#include "lcklab/kernels.hpp"

namespace lcklab {

namespace {

void combinations(std::size_t n, std::size_t p, std::size_t start, Monomial& cur, std::vector<Monomial>& out) {
  if (cur.size() == p) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (p - cur.size()) <= n; ++i) {
    cur.push_back(i);
    combinations(n, p, i + 1, cur, out);
    cur.pop_back();
  }
}

// Sorts in place; returns 0 for a repeated index, otherwise the permutation sign.
int sort_with_sign(Monomial& m) {
  int s = 1;
  for (std::size_t i = 1; i < m.size(); ++i) {
    for (std::size_t j = i; j > 0 && m[j - 1] >= m[j]; --j) {
      if (m[j - 1] == m[j]) return 0;
      std::swap(m[j - 1], m[j]);
      s = -s;
    }
  }
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i - 1] == m[i]) return 0;
  return s;
}

bool closed_one_form(const LieAlgebra& g, const Cochain& theta) {
  if (theta.degree() != 1) throw Error(ErrorCode::ArityMismatch, "Lee form must be a 1-form");
  if (theta.dim() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "Lee form dimension");
  if (g.dim() < 2) return true;
  return ce_d(g, theta).is_zero();
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t n, std::size_t p) {
  if (n > 64) throw Error(ErrorCode::DimensionMismatch, "monomial bases support dim <= 64");
  if (p <= n) {
    Monomial cur;
    combinations(n, p, 0, cur, monomials_);
  }
  lookup_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) lookup_.emplace(mask(monomials_[i]), i);
}

std::uint64_t MonomialBasis::mask(const Monomial& m) {
  std::uint64_t b = 0;
  for (auto i : m) b |= std::uint64_t{1} << i;
  return b;
}

std::size_t MonomialBasis::index(const Monomial& m) const { return lookup_.at(mask(m)); }

// ---------------------------------------------------------------------------

Cochain::Cochain(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {
  if (degree > dim) throw Error(ErrorCode::DegreeOverflow, "cochain degree exceeds dimension");
}

Cochain Cochain::scalar(std::size_t dim, const Rational& c) {
  Cochain w(dim, 0);
  w.add_term({}, c);
  return w;
}

Cochain Cochain::dual(std::size_t dim, std::size_t i) {
  Cochain w(dim, 1);
  w.add_term({i}, 1);
  return w;
}

Cochain Cochain::one_form(std::span<const Rational> coords) {
  Cochain w(coords.size(), 1);
  for (std::size_t i = 0; i < coords.size(); ++i) w.add_term({i}, coords[i]);
  return w;
}

Cochain Cochain::from_vector(std::size_t dim, std::size_t degree, std::span<const Rational> coords) {
  const MonomialBasis basis(dim, degree);
  if (coords.size() != basis.size()) throw Error(ErrorCode::DimensionMismatch, "Cochain::from_vector");
  Cochain w(dim, degree);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coords[i] != 0) w.terms_.emplace(basis[i], coords[i]);
  return w;
}

Rational Cochain::coeff(const Monomial& sorted) const {
  const auto it = terms_.find(sorted);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Cochain::add_term(Monomial indices, const Rational& c) {
  if (indices.size() != degree_) throw Error(ErrorCode::ArityMismatch, "term degree differs from cochain degree");
  for (auto i : indices)
    if (i >= dim_) throw Error(ErrorCode::DimensionMismatch, "term index out of range");
  const int s = sort_with_sign(indices);
  if (s == 0 || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(indices), 0);
  it->second += s > 0 ? c : Rational(-c);
  if (it->second == 0) terms_.erase(it);
}

Vector Cochain::to_vector() const {
  const MonomialBasis basis(dim_, degree_);
  Vector v = zero_vector(basis.size());
  for (const auto& [m, c] : terms_) v[basis.index(m)] = c;
  return v;
}

Vector Cochain::as_covector() const {
  if (degree_ != 1) throw Error(ErrorCode::ArityMismatch, "as_covector needs a 1-form");
  return to_vector();
}

Cochain Cochain::operator+(const Cochain& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_) throw Error(ErrorCode::DimensionMismatch, "cochain sum");
  Cochain r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Cochain Cochain::operator-(const Cochain& o) const { return *this + (-o); }

Cochain Cochain::operator-() const {
  Cochain r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Cochain operator*(const Rational& s, const Cochain& w) {
  Cochain r(w.dim_, w.degree_);
  if (s == 0) return r;
  for (const auto& [m, c] : w.terms_) r.terms_.emplace(m, s * c);
  return r;
}

std::string format_cochain(const Cochain& c, const std::vector<std::string>& labels) {
  std::vector<std::string> names;
  std::set<std::string> lowered;
  for (const auto& l : labels) {
    std::string s = l;
    for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    names.push_back(s);
    lowered.insert(s);
  }
  if (lowered.size() != labels.size()) {
    names.clear();
    for (const auto& l : labels) names.push_back(l + "*");
  }

  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, coeff] : c.terms()) {
    const bool neg = coeff < 0;
    const Rational a = neg ? Rational(-coeff) : coeff;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (a != 1 || m.empty()) os << to_string(a) << (m.empty() ? "" : " ");
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "^" : "") << names.at(m[i]);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Rational eval(const Cochain& w, const std::vector<Vector>& vs) {
  const std::size_t p = w.degree();
  if (vs.size() != p) throw Error(ErrorCode::ArityMismatch, "eval needs exactly degree(ω) vectors");
  for (const auto& v : vs)
    if (v.size() != w.dim()) throw Error(ErrorCode::DimensionMismatch, "eval vector length");
  Rational total = 0;
  for (const auto& [m, c] : w.terms()) {
    Matrix minor(p, p);
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b < p; ++b) minor(a, b) = vs[b][m[a]];
    total += c * determinant(minor);
  }
  return total;
}

Rational eval_basis(const Cochain& w, const Monomial& unsorted_indices) {
  Monomial m = unsorted_indices;
  if (m.size() != w.degree()) throw Error(ErrorCode::ArityMismatch, "eval_basis arity");
  const int s = sort_with_sign(m);
  if (s == 0) return 0;
  const Rational c = w.coeff(m);
  return s > 0 ? c : Rational(-c);
}

Cochain wedge(const Cochain& a, const Cochain& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "wedge");
  if (a.degree() + b.degree() > a.dim()) throw Error(ErrorCode::DegreeOverflow, "wedge degree exceeds dimension");
  Cochain r(a.dim(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial joined = ma;
      joined.insert(joined.end(), mb.begin(), mb.end());
      r.add_term(std::move(joined), ca * cb);
    }
  }
  return r;
}

Cochain interior(std::span<const Rational> v, const Cochain& w) {
  if (v.size() != w.dim()) throw Error(ErrorCode::DimensionMismatch, "interior");
  if (w.degree() == 0) throw Error(ErrorCode::ArityMismatch, "interior of a 0-form");
  Cochain r(w.dim(), w.degree() - 1);
  for (const auto& [m, c] : w.terms()) {
    for (std::size_t a = 0; a < m.size(); ++a) {
      if (v[m[a]] == 0) continue;
      Monomial rest = m;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(a));
      const Rational val = v[m[a]] * c;
      r.add_term(std::move(rest), a % 2 == 0 ? val : Rational(-val));
    }
  }
  return r;
}

Cochain ce_d(const LieAlgebra& g, const Cochain& w) {
  const std::size_t n = g.dim();
  if (w.dim() != n) throw Error(ErrorCode::DimensionMismatch, "ce_d");
  const std::size_t p = w.degree();
  if (p >= n) throw Error(ErrorCode::DegreeOverflow, "ce_d needs degree < dim");

  Cochain out(n, p + 1);
  if (w.is_zero()) return out;
  const MonomialBasis targets(n, p + 1);
  for (const auto& k : targets.monomials()) {
    Rational value = 0;
    for (std::size_t a = 0; a < k.size(); ++a) {
      for (std::size_t b = a + 1; b < k.size(); ++b) {
        Monomial rest;
        for (std::size_t c = 0; c < k.size(); ++c)
          if (c != a && c != b) rest.push_back(k[c]);
        const int outer = (a + b) % 2 == 0 ? 1 : -1;
        for (const auto& t : g.bracket_terms(k[a], k[b])) {
          Monomial args{t.index};
          args.insert(args.end(), rest.begin(), rest.end());
          const Rational wv = eval_basis(w, args);
          if (wv != 0) value += outer * t.coeff * wv;
        }
      }
    }
    if (value != 0) out.add_term(k, value);
  }
  return out;
}

Cochain twisted_d(const LieAlgebra& g, const Cochain& theta, const Cochain& w) {
  if (!closed_one_form(g, theta)) throw Error(ErrorCode::LeeFormNotClosed, "d_θ needs dθ = 0");
  return ce_d(g, w) - wedge(theta, w);
}

std::vector<std::size_t> twisted_cohomology_dims(const LieAlgebra& g, const Cochain& theta) {
  if (!closed_one_form(g, theta)) throw Error(ErrorCode::LeeFormNotClosed, "twisted cohomology needs dθ = 0");
  const std::size_t n = g.dim();
  std::vector<std::size_t> ranks(n + 1, 0);  // ranks[p] = rank of d_θ on Λ^p
  for (std::size_t p = 0; p < n; ++p) ranks[p] = rank(twisted_differential_matrix(g, theta, p));
  std::vector<std::size_t> dims(n + 1);
  for (std::size_t p = 0; p <= n; ++p) {
    const std::size_t chains = MonomialBasis(n, p).size();
    dims[p] = chains - ranks[p] - (p > 0 ? ranks[p - 1] : 0);
  }
  return dims;
}

std::size_t twisted_cohomology_dim(const LieAlgebra& g, const Cochain& theta, std::size_t p) {
  if (!closed_one_form(g, theta)) throw Error(ErrorCode::LeeFormNotClosed, "twisted cohomology needs dθ = 0");
  const std::size_t n = g.dim();
  if (p > n) return 0;
  const std::size_t chains = MonomialBasis(n, p).size();
  const std::size_t kernel = chains - (p < n ? rank(twisted_differential_matrix(g, theta, p)) : 0);
  const std::size_t image = p > 0 ? rank(twisted_differential_matrix(g, theta, p - 1)) : 0;
  return kernel - image;
}

std::optional<Cochain> solve_potential(const LieAlgebra& g, const Cochain& theta, const Cochain& omega) {
  if (!closed_one_form(g, theta)) throw Error(ErrorCode::LeeFormNotClosed, "solve_potential needs dθ = 0");
  if (omega.degree() != 2) throw Error(ErrorCode::ArityMismatch, "solve_potential needs a 2-form");
  if (g.dim() > 2 && !twisted_d(g, theta, omega).is_zero())
    throw Error(ErrorCode::NotTwistedClosed, "Ω is not d_θ-closed");
  const Matrix d1 = twisted_differential_matrix(g, theta, 1);
  const auto psi = solve(d1, omega.to_vector());
  if (!psi) return std::nullopt;
  return Cochain::one_form(*psi);
}

Subspace closed_one_forms(const LieAlgebra& g) {
  return kernel_basis(twisted_differential_matrix(g, Cochain(g.dim(), 1), 1));
}

Matrix skew_matrix(const Cochain& omega) {
  if (omega.degree() != 2) throw Error(ErrorCode::ArityMismatch, "skew_matrix needs a 2-form");
  const std::size_t n = omega.dim();
  Matrix s(n, n);
  for (const auto& [m, c] : omega.terms()) {
    s(m[0], m[1]) = c;
    s(m[1], m[0]) = -c;
  }
  return s;
}

}  // namespace lcklab
