// Serial vs OpenMP timings for the two parallel kernels: d_θ matrix assembly
// and the l.c.K. grid search.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "lcklab/catalog.hpp"
#include "lcklab/search.hpp"

using namespace lcklab;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

// printf pads bytes, not characters; θ and Λ are two bytes each
std::string pad(std::string s, std::size_t width) {
  std::size_t chars = 0;
  for (unsigned char c : s) chars += (c & 0xC0) != 0x80;
  if (chars < width) s.append(width - chars, ' ');
  return s;
}

void row(const std::string& what, double serial, double parallel, bool same) {
  std::printf("%s serial %9.4f s   parallel %9.4f s   speedup %5.2fx   %s\n", pad(what, 44).c_str(), serial, parallel,
              serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  configure_threads_from_env();
  for (int n : {3, 4, 5, 6}) {
    const CatalogEntry e = build(CatalogKey::parse("heisenberg_type(" + std::to_string(n) + ")"));
    const std::size_t p = e.algebra.dim() / 2;
    Matrix a, b;
    const double ts = seconds([&] { a = twisted_differential_matrix(e.algebra, *e.theta, p, Execution::Serial); }, 3);
    const double tp = seconds([&] { b = twisted_differential_matrix(e.algebra, *e.theta, p, Execution::Parallel); }, 3);
    row("d_θ on Λ^" + std::to_string(p) + ", dim " + std::to_string(e.algebra.dim()), ts, tp, a == b);
  }

  // misses scan the whole grid, so they show the search kernel at full load
  const std::pair<const char*, const char*> searches[] = {
      {"inoue_splus_Jq(1)", "-10:10:1/8"}, {"surface(3)", "-10:10:1/8"}, {"heisenberg_type(3)", "-1:1:1/2"}};
  for (const auto& [key, grid] : searches) {
    const CatalogEntry e = build(CatalogKey::parse(key));
    const auto J = e.J ? std::optional<Matrix>(e.J->matrix()) : std::nullopt;
    SearchOptions so, po;
    so.grid = po.grid = GridSpec::parse(grid);
    so.exec = Execution::Serial;
    SearchResult a, b;
    const double ts = seconds([&] { a = lck_search(e.algebra, J, so); }, 1);
    const double tp = seconds([&] { b = lck_search(e.algebra, J, po); }, 1);
    const bool same = a.witness.has_value() == b.witness.has_value() &&
                      (!a.witness || (a.witness->omega == b.witness->omega && a.witness->theta == b.witness->theta));
    row(std::string("search ") + key + " " + grid + (a.witness ? " (hit)" : " (miss)"), ts, tp, same);
  }
  return 0;
}
