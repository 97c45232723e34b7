// Serial reference against the OpenMP sweep for grid inventories.
//
//   bench_kernels [k n grid reps]     defaults: 2 5 0,1,2 3

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

#include "hyperstab/enumeration.hpp"

using namespace hyperstab;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int k = 2, n = 5, reps = 3;
  std::string grid_text = "0,1,2";
  if (argc > 2) {
    k = std::stoi(argv[1]);
    n = std::stoi(argv[2]);
  }
  if (argc > 3) grid_text = argv[3];
  if (argc > 4) reps = std::stoi(argv[4]);
  std::vector<std::int64_t> grid;
  std::stringstream ss(grid_text);
  for (std::string item; std::getline(ss, item, ',');) grid.push_back(std::stoll(item));

  enumerate::Inventory serial, parallel;
  const double ts = best_of(reps, [&] { serial = enumerate::enumerate_regular_subdivisions_serial(k, n, grid); });
  std::printf("Delta(%d,%d) grid %s: %zu subdivisions\n", k, n, grid_text.c_str(), serial.entries.size());
  std::printf("%-10s %8s %10s %8s\n", "variant", "threads", "seconds", "speedup");
  std::printf("%-10s %8d %10.3f %8.2f\n", "serial", 1, ts, 1.0);
  // Powers of two below the thread limit, then the limit itself.
  const int max_threads = omp_get_max_threads();
  std::vector<int> counts;
  for (int t = 1; t < max_threads; t *= 2) counts.push_back(t);
  counts.push_back(max_threads);
  for (int t : counts) {
    omp_set_num_threads(t);
    const double tp = best_of(reps, [&] { parallel = enumerate::enumerate_regular_subdivisions(k, n, grid); });
    bool same = parallel.entries.size() == serial.entries.size();
    for (std::size_t i = 0; same && i < serial.entries.size(); ++i) {
      same = parallel.entries[i].subdivision == serial.entries[i].subdivision &&
             parallel.entries[i].witness.values == serial.entries[i].witness.values;
    }
    std::printf("%-10s %8d %10.3f %8.2f%s\n", "openmp", t, tp, ts / tp, same ? "" : "  MISMATCH");
    if (!same) return 1;
  }
  return 0;
}
