#include "lcklab/search.hpp"

#include <omp.h>

#include <atomic>
#include <functional>
#include <sstream>

#include "lcklab/error.hpp"

namespace lcklab {

namespace {

// Rows: pairs i < j; columns: Λ² monomials; entry of (JᵀSJ - S)(i,j).
Matrix invariance_equations(const Matrix& J) {
  const std::size_t n = J.rows();
  const MonomialBasis lam2(n, 2);
  Matrix eq(lam2.size(), lam2.size());
  for (std::size_t c = 0; c < lam2.size(); ++c) {
    Cochain unit(n, 2);
    unit.add_term(lam2[c], 1);
    const Matrix s = skew_matrix(unit);
    const Matrix diff = J.transpose() * s * J - s;
    for (std::size_t r = 0; r < lam2.size(); ++r) eq(r, c) = diff(lam2[r][0], lam2[r][1]);
  }
  return eq;
}

struct PointResult {
  bool found = false;
  Cochain omega;
  Cochain theta;
};

PointResult try_point(const LieAlgebra& g, const Matrix& J, const Matrix& inv, const Cochain& theta,
                      const std::vector<Rational>& sample) {
  const std::size_t n = g.dim();
  PointResult out;
  const Matrix eqs = twisted_differential_matrix(g, theta, 2, Execution::Serial).stacked(inv);
  const Subspace ker = kernel_basis(eqs);
  const std::size_t k = ker.dim();
  if (k == 0) return out;

  // keep the number of combinations bounded on large kernels
  std::size_t s = sample.size();
  auto combos = [&](std::size_t base) {
    double c = 1;
    for (std::size_t i = 0; i < k; ++i) c *= static_cast<double>(base);
    return c;
  };
  while (s > 2 && combos(s) > 50000) --s;

  std::vector<std::size_t> digit(k, 0);
  const std::size_t lam2 = MonomialBasis(n, 2).size();
  while (true) {
    // advance (last kernel vector fastest); the all-zero start is skipped
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < s) break;
      digit[pos] = 0;
      if (pos == 0) return out;
    }
    Vector coords = zero_vector(lam2);
    for (std::size_t i = 0; i < k; ++i)
      if (sample[digit[i]] != 0) coords = coords + sample[digit[i]] * ker.basis()[i];
    if (is_zero(coords)) continue;
    const Cochain omega = Cochain::from_vector(n, 2, coords);
    const Matrix sk = skew_matrix(omega);
    if (determinant(sk) == 0) continue;
    const Matrix h = sk * J;
    if (!h.is_symmetric() || !is_positive_definite(h)) continue;
    out.found = true;
    out.omega = omega;
    out.theta = theta;
    return out;
  }
}

}  // namespace

std::vector<Rational> GridSpec::values() const {
  std::vector<Rational> v;
  for (Rational x = lo; x <= hi; x += step) v.push_back(x);
  return v;
}

std::string GridSpec::to_string() const {
  return lcklab::to_string(lo) + ":" + lcklab::to_string(hi) + ":" + lcklab::to_string(step);
}

GridSpec GridSpec::parse(std::string_view text) {
  std::vector<std::string> parts;
  std::stringstream ss{std::string(text)};
  std::string p;
  while (std::getline(ss, p, ':')) parts.push_back(p);
  if (parts.size() != 3) throw Error(ErrorCode::ParseError, "grid must be lo:hi:step");
  GridSpec g;
  Rational* slots[] = {&g.lo, &g.hi, &g.step};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto q = parse_rational(parts[i]);
    if (!q) throw Error(ErrorCode::ParseError, "grid bound '" + parts[i] + "' is not a rational");
    *slots[i] = *q;
  }
  if (g.step <= 0 || g.lo > g.hi) throw Error(ErrorCode::ParseError, "grid needs step > 0 and lo <= hi");
  if ((g.hi - g.lo) / g.step > 1000) throw Error(ErrorCode::ParseError, "grid has more than 1000 points per axis");
  return g;
}

std::string SearchResult::summary() const {
  std::ostringstream os;
  if (witness) {
    os << "witness found (J candidate " << witness->j_index << ")";
  } else {
    os << kNoWitness << "; grid " << grid.to_string() << " over " << closed_forms_dim
       << " closed 1-form coordinate(s), " << theta_points << " nonzero θ per J, " << j_candidates
       << " integrable J candidate(s)";
    if (j_rejected) os << ", " << j_rejected << " non-integrable skipped";
  }
  return os.str();
}

std::vector<Matrix> coordinate_complex_structures(std::size_t n) {
  if (n % 2 != 0) throw Error(ErrorCode::OddDimension, "complex structures need even dimension");
  if (n > 8) throw Error(ErrorCode::BadParameters, "coordinate candidates are limited to dim <= 8");
  std::vector<Matrix> out;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> used(n, false);
  // perfect matchings in lexicographic order, then sign patterns
  std::function<void()> rec = [&] {
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i]) {
        first = i;
        break;
      }
    if (first == n) {
      const std::size_t m = pairs.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        Matrix j(n, n);
        for (std::size_t p = 0; p < m; ++p) {
          const Rational s = (mask >> (m - 1 - p)) & 1 ? -1 : 1;
          const auto [a, b] = pairs[p];
          j(b, a) = s;   // J e_a = s e_b
          j(a, b) = -s;  // J e_b = -s e_a
        }
        out.push_back(std::move(j));
      }
      return;
    }
    used[first] = true;
    for (std::size_t j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      pairs.emplace_back(first, j);
      rec();
      pairs.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  rec();
  return out;
}

SearchResult lck_search(const LieAlgebra& g, const std::optional<Matrix>& J, const SearchOptions& opts) {
  const std::size_t n = g.dim();
  if (n % 2 != 0) throw Error(ErrorCode::OddDimension, "l.c.K. search needs even dimension");
  SearchResult res;
  res.grid = opts.grid;

  std::vector<Matrix> candidates;
  for (auto& c : J ? std::vector<Matrix>{*J} : coordinate_complex_structures(n)) {
    if (c.rows() != n || c.cols() != n) throw Error(ErrorCode::DimensionMismatch, "J size");
    if (c * c == -Matrix::identity(n) && is_integrable(g, c))
      candidates.push_back(std::move(c));
    else
      ++res.j_rejected;
  }
  res.j_candidates = candidates.size();

  const Subspace closed = closed_one_forms(g);
  const std::size_t k = closed.dim();
  res.closed_forms_dim = k;
  const std::vector<Rational> values = opts.grid.values();
  std::size_t per_j = 1;
  for (std::size_t i = 0; i < k; ++i) per_j *= values.size();
  // the all-zero θ is one grid point; it is skipped below
  std::size_t zero_index = per_j;
  {
    std::size_t idx = 0;
    bool has_zero = true;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t pos = values.size();
      for (std::size_t v = 0; v < values.size(); ++v)
        if (values[v] == 0) pos = v;
      if (pos == values.size()) has_zero = false;
      idx = idx * values.size() + pos;
    }
    if (has_zero && k > 0) zero_index = idx;
  }
  res.theta_points = per_j - (zero_index < per_j ? 1 : 0);
  if (k == 0 || candidates.empty()) return res;

  std::vector<Matrix> inv;
  for (const auto& c : candidates) inv.push_back(invariance_equations(c));

  auto theta_at = [&](std::size_t t) {
    Vector coeff = zero_vector(n);
    std::vector<std::size_t> digits(k);
    for (std::size_t i = k; i-- > 0;) {
      digits[i] = t % values.size();
      t /= values.size();
    }
    for (std::size_t i = 0; i < k; ++i) coeff = coeff + values[digits[i]] * closed.basis()[i];
    return Cochain::one_form(coeff);
  };

  const std::size_t total = per_j * candidates.size();
  std::size_t best = total;
  PointResult best_point;
  auto visit = [&](std::size_t idx) -> PointResult {
    const std::size_t jc = idx / per_j, t = idx % per_j;
    if (t == zero_index) return {};
    return try_point(g, candidates[jc], inv[jc], theta_at(t), opts.sample);
  };

  if (opts.exec == Execution::Serial) {
    for (std::size_t idx = 0; idx < total; ++idx) {
      PointResult r = visit(idx);
      if (r.found) {
        best = idx;
        best_point = std::move(r);
        break;
      }
    }
  } else {
    std::atomic<std::size_t> bound{total};
    const int threads = thread_limit() > 0 ? thread_limit() : omp_get_max_threads();
    const auto count = static_cast<std::ptrdiff_t>(total);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      if (idx >= bound.load()) continue;
      PointResult r = visit(idx);
      if (!r.found) continue;
#pragma omp critical(lcklab_search_best)
      {
        if (idx < best) {
          best = idx;
          best_point = std::move(r);
          bound.store(idx);
        }
      }
    }
  }

  if (best < total) {
    const std::size_t jc = best / per_j;
    res.witness = LckWitness{best_point.omega, best_point.theta, candidates[jc], jc};
  }
  return res;
}

}  // namespace lcklab
