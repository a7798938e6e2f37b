// Compares the serial strand scan against the OpenMP kernel on a few
// mid-sized complexes and prints the speedups. Results must be identical;
// the benchmark aborts otherwise.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "cyclekit/builders.hpp"
#include "cyclekit/strand.hpp"

using namespace cyclekit;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

void bench(const std::string& name, const Complex& E, int margin) {
    const Exponents hi = certified_box(E, margin);
    const auto t0 = Clock::now();
    const BoxScan serial = scan_box_serial(E, hi);
    const auto t1 = Clock::now();
    const BoxScan parallel = scan_box_parallel(E, hi);
    const auto t2 = Clock::now();
    if (serial.ranks != parallel.ranks) {
        std::fprintf(stderr, "MISMATCH in %s\n", name.c_str());
        std::exit(1);
    }
    const double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::printf("%-28s %10lld strands  serial %8.3fs  parallel %8.3fs  speedup %5.2fx\n",
                name.c_str(), static_cast<long long>(serial.strand_count()), ts, tp,
                tp > 0 ? ts / tp : 0.0);
}

}  // namespace

int main() {
    bench("taylor 6 gens / 4 vars",
          taylor_resolution(MonomialIdeal(
              4, {{2, 1, 0, 0}, {0, 2, 1, 0}, {0, 0, 2, 1}, {1, 0, 0, 2}, {1, 1, 1, 0}, {0, 1, 1, 1}})),
          3);
    bench("taylor 5 gens / 3 vars",
          taylor_resolution(MonomialIdeal(3, {{3, 1, 0}, {0, 3, 1}, {1, 0, 3}, {2, 2, 0}, {0, 2, 2}})),
          4);
    bench("koszul 5 powers",
          koszul({Term(Rational(1), {2, 0, 0, 0, 0}), Term(Rational(1), {0, 2, 0, 0, 0}),
                  Term(Rational(1), {0, 0, 2, 0, 0}), Term(Rational(1), {0, 0, 0, 2, 0}),
                  Term(Rational(1), {0, 0, 0, 0, 2})},
                 5),
          2);
    return 0;
}
