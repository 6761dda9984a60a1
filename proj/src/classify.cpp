#include "lcklab/classify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "lcklab/error.hpp"

namespace lcklab {

namespace {

struct TagName {
  ClassTag tag;
  const char* name;
};

constexpr TagName kTagNames[] = {
    {ClassTag::Prop3Rotation, "Prop3-rotation"},
    {ClassTag::Prop3Hyperbolic, "Prop3-hyperbolic"},
    {ClassTag::Prop4_3i, "Prop4-3i"},
    {ClassTag::Prop4_3ii, "Prop4-3ii"},
    {ClassTag::Prop4_4, "Prop4-4"},
    {ClassTag::Prop4_5, "Prop4-5"},
    {ClassTag::Prop4_6, "Prop4-6"},
    {ClassTag::Prop4_7i, "Prop4-7i"},
    {ClassTag::Prop4_7ii, "Prop4-7ii"},
    {ClassTag::Prop4_8, "Prop4-8"},
    {ClassTag::ReductiveCompact, "Reductive-compact"},
    {ClassTag::ReductiveSplit, "Reductive-split"},
    {ClassTag::Abelian, "Abelian"},
    {ClassTag::OutsideCatalog, "OutsideCatalog"},
    {ClassTag::NotUnimodular, "NotUnimodular"},
};

// Multisets of basis indices of size < n, as sorted words.
void words(std::size_t n, std::size_t len, std::size_t start, std::vector<std::size_t>& cur,
           std::vector<std::vector<std::size_t>>& out) {
  out.push_back(cur);
  if (cur.size() == len) return;
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    words(n, len, i, cur, out);
    cur.pop_back();
  }
}

// Coordinates of v in the RREF basis of s (v must lie in s).
Vector coordinates(const Subspace& s, std::span<const Rational> v) {
  const auto x = solve(Matrix::from_columns(s.basis(), s.ambient_dim()), v);
  if (!x) throw Error(ErrorCode::BadParameters, "vector outside subspace");
  return *x;
}

Vector first_outside(const Subspace& s) {
  for (std::size_t i = 0; i < s.ambient_dim(); ++i) {
    Vector e = unit_vector(s.ambient_dim(), i);
    if (!s.contains(e)) return e;
  }
  throw Error(ErrorCode::BadParameters, "subspace is everything");
}

std::size_t centralizer_dim_in(const LieAlgebra& g, const Subspace& s, std::span<const Rational> x) {
  // dim {y in s : [x, y] = 0}
  std::vector<Vector> images;
  for (const auto& b : s.basis()) images.push_back(g.bracket(x, b));
  return s.dim() - rank(Matrix::from_columns(images, g.dim()));
}

ClassLabel classify_solvable(const LieAlgebra& g) {
  ClassLabel out;
  const Subspace n = nilradical(g);
  if (n.dim() != 3) {
    out.tag = ClassTag::OutsideCatalog;
    out.note = "nilradical has dimension " + std::to_string(n.dim());
    return out;
  }
  const Vector w = first_outside(n);
  const Matrix m = restricted_ad(g, w, n);
  const bool n_abelian = bracket_span(g, n, n).dim() == 0;

  if (!n_abelian) {
    if (derived_subalgebra(g) != n) {
      out.tag = ClassTag::OutsideCatalog;
      out.note = "nilradical is Heisenberg but differs from [g,g]";
      return out;
    }
    const LieAlgebra nn = restrict_to(g, n.basis());
    const Subspace zn = center(nn);  // in n-coordinates, dimension 1
    // Basis (z, c1, c2) of n adapted to the center; the quotient action is the lower block.
    std::vector<Vector> cols{zn.basis().front()};
    for (std::size_t i = 0; i < 3 && cols.size() < 3; ++i) {
      Vector e = unit_vector(3, i);
      std::vector<Vector> trial = cols;
      trial.push_back(e);
      if (Subspace::span(3, trial).dim() == trial.size()) cols.push_back(e);
    }
    const Matrix p = Matrix::from_columns(cols, 3);
    const Matrix adapted = *inverse(p) * m * p;
    const Matrix induced{{adapted(1, 1), adapted(1, 2)}, {adapted(2, 1), adapted(2, 2)}};
    out.char_poly = characteristic_polynomial(induced);
    const Rational q = out.char_poly[0];
    out.scale_invariant = Rational(sign(q));
    if (out.char_poly[1] != 0 || q == 0) {
      out.tag = ClassTag::OutsideCatalog;
      out.note = "induced action is not of the form t^2 + q with q != 0";
      return out;
    }
    // Normalize W so that q = ±1.
    out.char_poly = {Rational(sign(q)), 0, 1};
    out.tag = q > 0 ? ClassTag::Prop3Rotation : ClassTag::Prop3Hyperbolic;
    return out;
  }

  out.char_poly = characteristic_polynomial(m);
  if (out.char_poly[2] != 0) throw Error(ErrorCode::BadParameters, "unimodular algebra with trace(ad_W|N) != 0");
  const Rational p = out.char_poly[1], r = out.char_poly[0];
  if (r == 0) {
    out.scale_invariant = Rational(sign(p));
    if (p < 0) out.tag = ClassTag::Prop4_4;
    else if (p > 0) out.tag = ClassTag::Prop4_5;
    else out.tag = ClassTag::OutsideCatalog;
    return out;
  }
  out.scale_invariant = Rational(p * p * p / (r * r));
  const Rational disc = -4 * p * p * p - 27 * r * r;
  if (disc > 0) out.tag = ClassTag::Prop4_6;
  else if (disc < 0) out.tag = ClassTag::Prop4_8;
  else out.tag = minimal_polynomial_degree(m) == 2 ? ClassTag::Prop4_7i : ClassTag::Prop4_7ii;
  return out;
}

}  // namespace

const char* to_string(ClassTag tag) {
  for (const auto& t : kTagNames)
    if (t.tag == tag) return t.name;
  return "?";
}

std::optional<ClassTag> parse_class_tag(std::string_view text) {
  for (const auto& t : kTagNames)
    if (text == t.name) return t.tag;
  return std::nullopt;
}

bool is_prop4(ClassTag tag) {
  switch (tag) {
    case ClassTag::Prop4_3i:
    case ClassTag::Prop4_3ii:
    case ClassTag::Prop4_4:
    case ClassTag::Prop4_5:
    case ClassTag::Prop4_6:
    case ClassTag::Prop4_7i:
    case ClassTag::Prop4_7ii:
    case ClassTag::Prop4_8:
      return true;
    default:
      return false;
  }
}

Matrix restricted_ad(const LieAlgebra& g, std::span<const Rational> w, const Subspace& s) {
  std::vector<Vector> cols;
  for (const auto& b : s.basis()) cols.push_back(coordinates(s, g.bracket(w, b)));
  return Matrix::from_columns(cols, s.dim());
}

std::array<std::size_t, 3> inertia(const Matrix& s0) {
  if (!s0.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "inertia");
  Matrix s = s0;
  const std::size_t n = s.rows();
  std::array<std::size_t, 3> out{0, 0, 0};
  // Symmetric elimination: each step peels off one diagonal entry by congruence.
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && s(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // every remaining diagonal entry is zero; use an off-diagonal pair
      std::size_t a = n, b = n;
      for (std::size_t i = 0; i < n && a == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!done[i] && !done[j] && s(i, j) != 0) {
            a = i;
            b = j;
            break;
          }
      if (a == n) break;
      // e_a <- e_a + e_b gives s(a,a) = 2 s(a,b) != 0
      for (std::size_t k = 0; k < n; ++k) s(a, k) += s(b, k);
      for (std::size_t k = 0; k < n; ++k) s(k, a) += s(k, b);
      piv = a;
    }
    const Rational d = s(piv, piv);
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == piv || s(i, piv) == 0) continue;
      const Rational f = s(i, piv) / d;
      for (std::size_t k = 0; k < n; ++k) s(i, k) -= f * s(piv, k);
      for (std::size_t k = 0; k < n; ++k) s(k, i) -= f * s(k, piv);
    }
    done[piv] = true;
    ++out[d > 0 ? 0 : 1];
  }
  out[2] = n - out[0] - out[1];
  return out;
}

Subspace nilradical(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  if (!is_solvable(g)) throw Error(ErrorCode::BadParameters, "nilradical needs a solvable algebra");
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_matrix(g, unit_vector(n, i)));

  std::vector<std::vector<std::size_t>> ws;
  std::vector<std::size_t> cur;
  if (n > 0) words(n, n - 1, 0, cur, ws);
  Matrix functionals(ws.size(), n);
  for (std::size_t r = 0; r < ws.size(); ++r) {
    Matrix prod = Matrix::identity(n);
    for (auto b : ws[r]) prod = prod * ads[b];
    for (std::size_t i = 0; i < n; ++i) functionals(r, i) = (prod * ads[i]).trace();
  }
  const Subspace nil = n == 0 ? Subspace(0) : kernel_basis(functionals);

  // verify: contains [g,g] (hence an ideal) and is nilpotent
  if (!nil.contains(derived_subalgebra(g)) || (nil.dim() > 0 && !is_nilpotent(restrict_to(g, nil.basis()))))
    throw Error(ErrorCode::BadParameters, "nilradical verification failed");
  return nil;
}

ClassLabel classify4(const LieAlgebra& g) {
  if (g.dim() != 4) throw Error(ErrorCode::WrongDimension, "classify4 needs dim 4");
  ClassLabel out;
  if (!is_unimodular(g)) {
    out.tag = ClassTag::NotUnimodular;
    return out;
  }
  if (!is_solvable(g)) {
    const Subspace z = center(g);
    const Subspace s = derived_subalgebra(g);
    if (z.dim() != 1 || s.dim() != 3 || (z + s).dim() != 4) {
      out.tag = ClassTag::OutsideCatalog;
      out.note = "not of the form R + s";
      return out;
    }
    const Matrix b = Matrix::from_columns(s.basis(), 4);
    const Matrix ks = b.transpose() * killing_form(g) * b;
    out.killing_inertia = inertia(ks);
    const auto& in = *out.killing_inertia;
    if (in[1] == 3) out.tag = ClassTag::ReductiveCompact;
    else if (in[2] == 0) out.tag = ClassTag::ReductiveSplit;
    else out.tag = ClassTag::OutsideCatalog;
    return out;
  }
  if (is_nilpotent(g)) {
    std::vector<std::size_t> dims;
    for (const auto& c : lower_central_series(g)) dims.push_back(c.dim());
    if (dims == std::vector<std::size_t>{4, 0}) {
      out.tag = ClassTag::Abelian;
    } else if (dims == std::vector<std::size_t>{4, 1, 0}) {
      out.tag = ClassTag::Prop4_3ii;
      out.char_poly = {0, 0, 0, 1};
    } else if (dims == std::vector<std::size_t>{4, 2, 1, 0}) {
      out.tag = ClassTag::Prop4_3i;
      out.char_poly = {0, 0, 0, 1};
    } else {
      out.tag = ClassTag::OutsideCatalog;
    }
    return out;
  }
  return classify_solvable(g);
}

Polynomial double_root_polynomial(DoubleRootQuery q) {
  return {Rational(-1), Rational(q.n), Rational(-q.m), Rational(1)};
}

std::optional<Rational> double_root_test(DoubleRootQuery q) {
  const Polynomial phi = double_root_polynomial(q);
  const Polynomial g = poly_gcd(phi, derivative(phi));
  switch (degree(g)) {
    case 1:
      return Rational(-g[0]);
    case 2:  // (t - a)², a triple root of Φ
      return Rational(-g[1] / 2);
    default:
      return std::nullopt;
  }
}

NumericDoubleRoot double_root_numeric_oracle(DoubleRootQuery q) {
  using C = std::complex<double>;
  const double m = static_cast<double>(q.m), n = static_cast<double>(q.n);
  auto f = [&](C t) { return ((t - m) * t + n) * t - 1.0; };
  C roots[3] = {C(0.4, 0.9), C(0.4, 0.9) * C(0.4, 0.9), C(0.4, 0.9) * C(0.4, 0.9) * C(0.4, 0.9)};
  for (int it = 0; it < 2000; ++it) {
    double shift = 0;
    for (int i = 0; i < 3; ++i) {
      C denom = 1;
      for (int j = 0; j < 3; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      const C step = f(roots[i]) / denom;
      roots[i] -= step;
      shift = std::max(shift, std::abs(step));
    }
    if (shift < 1e-14) break;
  }
  NumericDoubleRoot out;
  double best = std::numeric_limits<double>::infinity();
  C mid;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(roots[i] - roots[j]) < best) {
        best = std::abs(roots[i] - roots[j]);
        mid = (roots[i] + roots[j]) / 2.0;
      }
  const double scale = 1.0 + std::abs(mid);
  if (best > 1e-3 * scale || std::abs(mid.imag()) > 1e-3 * scale) return out;
  out.near_double = true;
  const long c = std::lround(mid.real());
  // exact confirmation: Φ(c) = Φ'(c) = 0 over the integers
  const __int128 cc = c;
  const __int128 phi = ((cc - q.m) * cc + q.n) * cc - 1;
  const __int128 dphi = (3 * cc - 2 * static_cast<__int128>(q.m)) * cc + q.n;
  if (phi == 0 && dphi == 0) out.confirmed = c;
  return out;
}

const char* to_string(Lattice l) {
  switch (l) {
    case Lattice::Yes:
      return "yes";
    case Lattice::No:
      return "no";
    case Lattice::NotApplicable:
      return "not-applicable";
  }
  return "?";
}

LatticeVerdict lattice_verdict(ClassTag tag) {
  switch (tag) {
    case ClassTag::Prop3Rotation:
      return {Lattice::Yes, "admits a lattice (secondary Kodaira surface)"};
    case ClassTag::Prop3Hyperbolic:
      return {Lattice::Yes, "admits a lattice (Inoue surface of type S+)"};
    case ClassTag::Prop4_3i:
    case ClassTag::Prop4_4:
    case ClassTag::Prop4_6:
      return {Lattice::Yes, "admits a lattice (compact solvmanifold)"};
    case ClassTag::Prop4_3ii:
      return {Lattice::Yes, "admits a lattice (Kodaira surface)"};
    case ClassTag::Prop4_5:
      return {Lattice::Yes, "admits a lattice (hyperelliptic surface)"};
    case ClassTag::Prop4_8:
      return {Lattice::Yes, "admits a lattice for suitable a, b (Inoue surface of type S0)"};
    case ClassTag::Prop4_7i:
    case ClassTag::Prop4_7ii:
      return {Lattice::No,
              "no lattice: a lattice Z^3 x Z needs A in SL(3,Z) whose characteristic polynomial "
              "t^3 - m t^2 + n t - 1 has a real double root, forcing it to be 1 or -1, "
              "incompatible with eigenvalues -2a, a, a for a != 0"};
    case ClassTag::ReductiveCompact:
      return {Lattice::Yes, "admits a lattice (Hopf surface)"};
    case ClassTag::ReductiveSplit:
      return {Lattice::Yes, "admits a lattice (properly elliptic surface)"};
    case ClassTag::Abelian:
      return {Lattice::NotApplicable, "outside the recorded table (a lattice trivially exists)"};
    case ClassTag::OutsideCatalog:
    case ClassTag::NotUnimodular:
      return {Lattice::NotApplicable, "outside the recorded table"};
  }
  return {};
}

bool is_reductive(const LieAlgebra& g) {
  const Subspace z = center(g), s = derived_subalgebra(g);
  if ((z + s).dim() != g.dim() || z.dim() + s.dim() != g.dim()) return false;
  if (s.dim() == 0) return true;
  const Matrix b = Matrix::from_columns(s.basis(), g.dim());
  return determinant(b.transpose() * killing_form(g) * b) != 0;
}

std::optional<bool> reductive_lck_criterion(const LieAlgebra& g) {
  if (!is_reductive(g)) return std::nullopt;
  const Subspace z = center(g), s = derived_subalgebra(g);
  if (s.dim() == 0) return false;
  // rank of s: minimal centralizer dimension, attained on a generic element;
  // a few deterministic integer combinations are enough to hit it.
  std::size_t rk = s.dim();
  for (long seed = 1; seed <= 6; ++seed) {
    Vector x = zero_vector(g.dim());
    long coeff = seed;
    for (const auto& b : s.basis()) {
      x = x + Rational(coeff) * b;
      coeff = (coeff * 7 + 3) % 11 - 5;
    }
    rk = std::min(rk, centralizer_dim_in(g, s, x));
  }
  return z.dim() == 1 && rk == 1;
}

}  // namespace lcklab
