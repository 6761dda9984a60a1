#pragma once

#include <cstddef>

#include "lcklab/cochain.hpp"

namespace lcklab {

enum class Execution { Serial, Parallel };

/// Matrix of d_θ : Λ^p → Λ^{p+1} in lexicographic monomial bases
/// (rows index Λ^{p+1}, columns Λ^p). Rows are independent, so the parallel
/// path splits them across OpenMP threads; both paths produce identical
/// matrices.
Matrix twisted_differential_matrix(const LieAlgebra& g, const Cochain& theta, std::size_t p,
                                   Execution exec = Execution::Parallel);

/// Worker bound for every OpenMP region in the library. Zero means the
/// OpenMP default.
void set_thread_limit(int threads);
int thread_limit();
/// Reads LCK_LAB_THREADS; ignores unset or malformed values.
void configure_threads_from_env();

}  // namespace lcklab
