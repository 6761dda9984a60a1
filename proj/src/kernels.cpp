#include "lcklab/kernels.hpp"

#include <omp.h>

#include "lcklab/error.hpp"

namespace lcklab {

namespace {

// Fills row `r` (monomial k of degree p+1) of the d_θ matrix.
void assemble_row(const LieAlgebra& g, const Vector& theta, const MonomialBasis& cols, const Monomial& k,
                  Matrix& out, std::size_t r) {
  const std::size_t q = k.size();
  Monomial rest, target;
  rest.reserve(q);
  target.reserve(q);

  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = a + 1; b < q; ++b) {
      const auto terms = g.bracket_terms(k[a], k[b]);
      if (terms.empty()) continue;
      rest.clear();
      for (std::size_t c = 0; c < q; ++c)
        if (c != a && c != b) rest.push_back(k[c]);
      const bool outer_neg = (a + b) % 2 == 1;
      for (const auto& t : terms) {
        std::size_t pos = 0;
        bool repeated = false;
        for (auto x : rest) {
          if (x == t.index) repeated = true;
          if (x < t.index) ++pos;
        }
        if (repeated) continue;
        target = rest;
        target.insert(target.begin() + static_cast<std::ptrdiff_t>(pos), t.index);
        auto& cell = out(r, cols.index(target));
        if (outer_neg != (pos % 2 == 1))
          cell -= t.coeff;
        else
          cell += t.coeff;
      }
    }
  }

  for (std::size_t a = 0; a < q; ++a) {
    const Rational& th = theta[k[a]];
    if (th == 0) continue;
    target.clear();
    for (std::size_t c = 0; c < q; ++c)
      if (c != a) target.push_back(k[c]);
    auto& cell = out(r, cols.index(target));
    if (a % 2 == 0)
      cell -= th;
    else
      cell += th;
  }
}

}  // namespace

Matrix twisted_differential_matrix(const LieAlgebra& g, const Cochain& theta, std::size_t p, Execution exec) {
  const std::size_t n = g.dim();
  if (theta.dim() != n || theta.degree() != 1) throw Error(ErrorCode::DimensionMismatch, "Lee form shape");
  if (p > n) throw Error(ErrorCode::DegreeOverflow, "d_θ matrix degree exceeds dimension");
  const MonomialBasis cols(n, p);
  const MonomialBasis rows(n, p + 1);
  const Vector th = theta.as_covector();
  Matrix out(rows.size(), cols.size());
  const auto count = static_cast<std::ptrdiff_t>(rows.size());

  if (exec == Execution::Serial) {
    for (std::ptrdiff_t r = 0; r < count; ++r) assemble_row(g, th, cols, rows[r], out, r);
    return out;
  }
  const int threads = thread_limit() > 0 ? thread_limit() : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (std::ptrdiff_t r = 0; r < count; ++r) assemble_row(g, th, cols, rows[r], out, r);
  return out;
}

}  // namespace lcklab
