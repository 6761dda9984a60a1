#pragma once
// Seeded generators and brute-force oracles shared by the unit, property and
// acceptance tests. The oracles deliberately avoid the library's sparse
// fast paths: differentials come from determinant evaluation on basis
// vectors, connections from the raw Koszul sum.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lcklab/catalog.hpp"
#include "lcklab/error.hpp"
#include "lcklab/classify.hpp"
#include "lcklab/hermitian.hpp"

namespace lcklab::testing {

using Rng = std::mt19937_64;

/// Code of the lcklab::Error thrown by f, or nullopt when nothing is thrown.
template <class F>
std::optional<ErrorCode> thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline CatalogEntry entry(const std::string& key) { return build(CatalogKey::parse(key)); }

/// Sum of c_i * e^{i...} from basis labels, e.g. form(g, {{"X","Y"}}) = x∧y.
inline Cochain form(const LieAlgebra& g, const std::vector<std::vector<std::string>>& monos,
                    const std::vector<Rational>& coeffs = {}) {
  Cochain c(g.dim(), monos.empty() ? 0 : monos.front().size());
  for (std::size_t t = 0; t < monos.size(); ++t) {
    Monomial m;
    for (const auto& l : monos[t]) m.push_back(g.index_of(l));
    c.add_term(m, coeffs.empty() ? Rational(1) : coeffs[t]);
  }
  return c;
}

/// GMP's two-argument constructor does not reduce; this one does.
inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational small_rational(Rng& rng, int height = 3) {
  std::uniform_int_distribution<int> num(-height, height), den(1, 3);
  return frac(num(rng), den(rng));
}

inline Vector random_vector(Rng& rng, std::size_t n, int height = 3) {
  Vector v(n);
  for (auto& x : v) x = small_rational(rng, height);
  return v;
}

inline Cochain random_cochain(Rng& rng, std::size_t n, std::size_t p, double density = 0.6) {
  const MonomialBasis basis(n, p);
  std::bernoulli_distribution keep(density);
  Vector c = zero_vector(basis.size());
  for (auto& x : c)
    if (keep(rng)) x = small_rational(rng);
  return Cochain::from_vector(n, p, c);
}

inline Matrix random_invertible(Rng& rng, std::size_t n) {
  while (true) {
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = small_rational(rng, 2);
    if (determinant(p) != 0) return p;
  }
}

/// Two-step nilpotent: the last k basis vectors are central and every other
/// bracket lands in their span, so Jacobi holds automatically.
inline LieAlgebra random_two_step(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  StructureConstants sc(labels);
  for (std::size_t i = 0; i + k < n; ++i)
    for (std::size_t j = i + 1; j + k < n; ++j) {
      Vector v = zero_vector(n);
      for (std::size_t c = n - k; c < n; ++c) v[c] = small_rational(rng, 2);
      sc.set_bracket(i, j, v);
    }
  return LieAlgebra(std::move(sc));
}

/// R^m ⋊ R with [W, X_i] = Σ_j A(j, i) X_j for a random A.
inline LieAlgebra random_semidirect(Rng& rng, std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("X" + std::to_string(i + 1));
  labels.push_back("W");
  StructureConstants sc(labels);
  for (std::size_t i = 0; i < m; ++i) {
    Vector v = zero_vector(m + 1);
    for (std::size_t j = 0; j < m; ++j) v[j] = small_rational(rng, 2);
    sc.set_bracket(m, i, v);
  }
  return LieAlgebra(std::move(sc));
}

inline LieAlgebra random_catalog_presentation(Rng& rng) {
  static const std::vector<std::string> keys{"surface(2)", "surface(3)", "surface(4)", "surface(5)",
                                             "surface(6)", "heisenberg_type(2)", "prop4_family(7ii)",
                                             "prop4_family(6)"};
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  const LieAlgebra g = build(CatalogKey::parse(keys[pick(rng)])).algebra;
  return change_basis(g, random_invertible(rng, g.dim()));
}

/// Mixed family of Jacobi-valid algebras of dimension 3..6.
inline LieAlgebra random_algebra(Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  switch (kind(rng)) {
    case 0: {
      std::uniform_int_distribution<std::size_t> n(3, 6);
      const std::size_t dim = n(rng);
      std::uniform_int_distribution<std::size_t> k(1, dim - 2);
      return random_two_step(rng, dim, k(rng));
    }
    case 1: {
      std::uniform_int_distribution<std::size_t> m(2, 5);
      return random_semidirect(rng, m(rng));
    }
    default:
      return random_catalog_presentation(rng);
  }
}

inline Cochain random_closed_one_form(Rng& rng, const LieAlgebra& g) {
  const Subspace closed = closed_one_forms(g);
  Vector c = zero_vector(g.dim());
  for (const auto& b : closed.basis()) c = c + small_rational(rng) * b;
  return Cochain::one_form(c);
}

// ---------------------------------------------------------------------------
// Oracles

/// dω on basis tuples straight from the coboundary formula, with every
/// evaluation done by determinants on explicit vectors.
inline Cochain oracle_d(const LieAlgebra& g, const Cochain& w) {
  const std::size_t n = g.dim(), p = w.degree();
  Cochain out(n, p + 1);
  const MonomialBasis targets(n, p + 1);
  for (const auto& k : targets.monomials()) {
    std::vector<Vector> xs;
    for (auto i : k) xs.push_back(unit_vector(n, i));
    Rational total = 0;
    for (std::size_t a = 0; a <= p; ++a)
      for (std::size_t b = a + 1; b <= p; ++b) {
        std::vector<Vector> args{g.bracket(xs[a], xs[b])};
        for (std::size_t c = 0; c <= p; ++c)
          if (c != a && c != b) args.push_back(xs[c]);
        const Rational v = eval(w, args);
        total += (a + b) % 2 == 0 ? v : Rational(-v);
      }
    if (total != 0) out.add_term(k, total);
  }
  return out;
}

/// Dense matrix of the oracle d on Λ^p, columns in lexicographic order.
inline Matrix oracle_d_matrix(const LieAlgebra& g, std::size_t p) {
  const std::size_t n = g.dim();
  const MonomialBasis src(n, p), dst(n, p + 1);
  Matrix m(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    Cochain e(n, p);
    e.add_term(src[c], 1);
    const Vector col = oracle_d(g, e).to_vector();
    for (std::size_t r = 0; r < dst.size(); ++r) m(r, c) = col[r];
  }
  return m;
}

/// Untwisted Chevalley-Eilenberg Betti numbers by brute-force ranks.
inline std::vector<std::size_t> oracle_betti(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<std::size_t> ranks(n + 1, 0), out(n + 1);
  for (std::size_t p = 0; p < n; ++p) ranks[p] = rank(oracle_d_matrix(g, p));
  for (std::size_t p = 0; p <= n; ++p)
    out[p] = MonomialBasis(n, p).size() - ranks[p] - (p ? ranks[p - 1] : 0);
  return out;
}

/// 2h(∇_u v, z) for basis u, v, z, straight from the Koszul sum.
inline Rational oracle_koszul(const LieAlgebra& g, const Matrix& h, const Vector& u, const Vector& v,
                              const Vector& z) {
  auto hh = [&](const Vector& a, const Vector& b) { return dot(a, h * b); };
  return hh(g.bracket(u, v), z) - hh(g.bracket(v, z), u) + hh(g.bracket(z, u), v);
}

/// ∇ξ = 0 iff 2h(∇_u ξ, z) vanishes on every basis pair.
inline bool oracle_parallel(const LieAlgebra& g, const Matrix& h, const Vector& xi) {
  const std::size_t n = g.dim();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t z = 0; z < n; ++z)
      if (oracle_koszul(g, h, unit_vector(n, u), xi, unit_vector(n, z)) != 0) return false;
  return true;
}

/// Every alternating product of evaluations: the shuffle expansion of
/// (α∧β)(v_1..v_{p+q}) without going through wedge().
inline Rational oracle_wedge_eval(const Cochain& a, const Cochain& b, const std::vector<Vector>& vs) {
  const std::size_t p = a.degree(), q = b.degree();
  std::vector<int> pick(p + q, 0);
  std::fill(pick.begin() + static_cast<std::ptrdiff_t>(q), pick.end(), 1);  // 1 marks a slot for α
  Rational total = 0;
  do {
    std::vector<Vector> va, vb;
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < p + q; ++i)
      if (pick[i]) {
        va.push_back(vs[i]);
        order.push_back(i);
      }
    for (std::size_t i = 0; i < p + q; ++i)
      if (!pick[i]) {
        vb.push_back(vs[i]);
        order.push_back(i);
      }
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = i + 1; j < order.size(); ++j)
        if (order[i] > order[j]) ++inversions;
    const Rational term = eval(a, va) * eval(b, vb);
    total += inversions % 2 == 0 ? term : Rational(-term);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return total;
}

}  // namespace lcklab::testing
