// Times the serial reference path of each sweep kernel against the OpenMP
// path on a few representative instances and reports the speedup. The two
// paths must agree exactly; this also asserts that.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "omp_shim.hpp"
#include "twtie/families.hpp"
#include "twtie/linkage.hpp"
#include "twtie/separators.hpp"

using namespace twtie;

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* kernel, const char* instance, double serial_ms,
         double parallel_ms) {
  std::printf("%-22s %-18s %10.1f ms %10.1f ms %8.2fx\n", kernel, instance,
              serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", omp_get_max_threads());
  std::printf("%-22s %-18s %13s %13s %9s\n", "kernel", "instance", "serial",
              "parallel", "speedup");

  {
    Graph g = psi(4, 2);  // 12 vertices
    int ks = 0, kp = 0;
    double ts = time_ms(
        [&] { ks = sep_number(g, Rational(1, 2), false, 16, Exec::Serial).k; });
    double tp = time_ms([&] {
      kp = sep_number(g, Rational(1, 2), false, 16, Exec::Parallel).k;
    });
    if (ks != kp) {
      std::fprintf(stderr, "sep_number mismatch: %d vs %d\n", ks, kp);
      return 1;
    }
    row("sep_number(1/2)", "psi:4,2", ts, tp);
  }
  {
    Graph g = gnp(10, Rational(1, 2), 7);
    LinkednessResult rs, rp;
    double ts = time_ms([&] { rs = linkedness(g, 10, Exec::Serial); });
    double tp = time_ms([&] { rp = linkedness(g, 10, Exec::Parallel); });
    if (rs.k != rp.k || !(rs.witness == rp.witness)) {
      std::fprintf(stderr, "linkedness mismatch\n");
      return 1;
    }
    row("linkedness", "gnp:10,1/2,seed=7", ts, tp);
  }
  {
    Graph g = complete_bipartite(6, 3);
    WellLinkedResult rs, rp;
    double ts = time_ms([&] { rs = well_linked_number(g, 9, Exec::Serial); });
    double tp = time_ms([&] { rp = well_linked_number(g, 9, Exec::Parallel); });
    if (rs.size != rp.size || !(rs.witness == rp.witness)) {
      std::fprintf(stderr, "well_linked_number mismatch\n");
      return 1;
    }
    row("well_linked_number", "K_{6,3}", ts, tp);
  }
  return 0;
}
