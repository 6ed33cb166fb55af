// Serial vs OpenMP timings for the data-parallel kernels.
#include "smt/multicone.hpp"
#include "smt/straightening.hpp"
#include "smt/typea.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

namespace {

double seconds(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, const std::function<std::size_t()>& serial, const std::function<std::size_t()>& parallel) {
  std::size_t a = 0, b = 0;
  const double ts = seconds([&] { a = serial(); });
  const double tp = seconds([&] { b = parallel(); });
  std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name, ts, tp, ts / tp,
              a == b ? "same" : "DIFFERENT");
}

}  // namespace

int main() {
  using namespace smt;
  std::printf("threads: %d\n", omp_get_max_threads());

  const ReferenceShape ref{{2, 3, 1}};
  const Multidegree md{{2, 2, 1}};
  report("enumerate_standard l=4", [&] { return enumerate_standard_serial(md, ReferenceShape{{2, 3, 1}}, 4).size(); },
         [&] { return enumerate_standard(md, ReferenceShape{{2, 3, 1}}, 4).size(); });

  report("hilbert_table l=3 total<=4", [&] { return hilbert_table_serial(ref, 3, 4).size(); },
         [&] { return hilbert_table(ref, 3, 4).size(); });

  const auto tabs = enumerate_standard(Multidegree{{1, 1, 1}}, ref, 3);
  std::vector<std::vector<Row>> rows;
  for (const auto& t : tabs) rows.push_back(t.rows);
  const auto points = random_matrices(4, 400, 7);
  report("evaluation_matrix 400x64", [&] { return evaluation_matrix_serial(rows, points).size(); },
         [&] { return evaluation_matrix(rows, points).size(); });
  return 0;
}
