// Benchmark of the parallel search kernels against their serial reference
// implementations; verifies the outputs are identical while timing both.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "lattangle/classify.hpp"
#include "lattangle/uniteq.hpp"

using namespace lattangle;

namespace {

template <typename F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    long searchOrder = 60, relBound = 30;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--search-order") searchOrder = std::stol(argv[i + 1]);
        else if (flag == "--relation-bound") relBound = std::stol(argv[i + 1]);
        else {
            fprintf(stderr, "usage: bench_search [--search-order N] [--relation-bound N]\n");
            return 2;
        }
    }
    printf("threads: %d\n", omp_get_max_threads());

    {
        UnitRelation rel = UnitRelation::linear({1, 1, 1, 1});
        std::vector<SolutionRecord> par, ser;
        double tp = timed([&] { par = brute_solve(rel, relBound, true); });
        double ts = timed([&] { ser = brute_solve_serial(rel, relBound); });
        bool same = par == ser;
        printf("unit relation (4 terms, bound %ld): %zu solutions\n"
               "  parallel %.3fs, serial %.3fs, speedup %.2fx, identical: %s\n",
               relBound, par.size(), tp, ts, ts / tp, same ? "yes" : "NO");
        if (!same) return 1;
    }

    {
        std::vector<Case4Solution> par, ser;
        double tp = timed([&] { par = search_case4(divisors(searchOrder), true); });
        double ts = timed([&] { ser = search_case4_serial(divisors(searchOrder)); });
        bool same = par.size() == ser.size();
        for (size_t i = 0; same && i < par.size(); ++i)
            same = par[i] == ser[i] && par[i].cls == ser[i].cls;
        printf("4-tuple search (orders dividing %ld): %zu solutions\n"
               "  parallel %.3fs, serial %.3fs, speedup %.2fx, identical: %s\n",
               searchOrder, par.size(), tp, ts, ts / tp, same ? "yes" : "NO");
        if (!same) return 1;
    }
    return 0;
}
