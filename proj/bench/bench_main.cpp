// Compares the OpenMP subset-sweep kernels against the serial reference
// implementations on growing inputs.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ztop/belts.hpp"
#include "ztop/catalog.hpp"
#include "ztop/subset_betti.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ztop;
using Clock = std::chrono::steady_clock;

static double secs(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <class F>
static double time_best_of(int reps, F&& f) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    f();
    auto t1 = Clock::now();
    best = std::min(best, secs(t0, t1));
  }
  return best;
}

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled (serial build)\n");
#endif

  std::printf("\nbigraded Betti sweep (2^m subsets)\n");
  std::printf("%-14s %3s %12s %12s %8s\n", "polytope", "m", "serial[s]", "parallel[s]", "speedup");
  std::vector<std::pair<std::string, SimplePolytope>> cases;
  cases.emplace_back("as3", as3());
  cases.emplace_back("barrel:5", barrel(5));
  cases.emplace_back("pe3", pe3());
  cases.emplace_back("barrel:7", barrel(7));
  cases.emplace_back("antiprism:4", ideal_from_antiprism(4));
  for (auto& [name, P] : cases) {
    BettiTable A, B;
    double ts = time_best_of(reps, [&] { A = bigraded_betti_serial(P); });
    double tp = time_best_of(reps, [&] { B = bigraded_betti(P); });
    bool same = A.total == B.total && A.beta == B.beta;
    std::printf("%-14s %3d %12.4f %12.4f %7.2fx %s\n", name.c_str(), P.m, ts, tp, ts / tp,
                same ? "" : "MISMATCH");
  }

  std::printf("\nbelt enumeration (all k up to m)\n");
  std::printf("%-14s %3s %12s %12s %8s\n", "polytope", "m", "serial[s]", "parallel[s]", "speedup");
  std::vector<std::pair<std::string, SimplePolytope>> bcases;
  bcases.emplace_back("barrel:5", barrel(5));
  bcases.emplace_back("pe3", pe3());
  bcases.emplace_back("c60(k<=6)", c60());
  for (auto& [name, P] : bcases) {
    int kmax = P.m > 20 ? 6 : P.m;
    double ts = time_best_of(reps, [&] {
      for (int k = 3; k <= kmax; ++k) enumerate_belts_serial(P, k);
    });
    double tp = time_best_of(reps, [&] {
      for (int k = 3; k <= kmax; ++k) enumerate_belts(P, k);
    });
    std::printf("%-14s %3d %12.4f %12.4f %7.2fx\n", name.c_str(), P.m, ts, tp, ts / tp);
  }
  return 0;
}
