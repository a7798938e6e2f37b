#include <doctest.h>

#include "cyclekit/builders.hpp"
#include "cyclekit/strand.hpp"

using namespace cyclekit;

namespace {

Term term(int n, std::vector<int> e, int num) {
    if (static_cast<int>(e.size()) != n) throw DimensionError("bad term literal");
    return Term(Rational(num), Exponents(e.begin(), e.end()));
}

void check_scans_agree(const Complex& E, int margin) {
    const Exponents hi = certified_box(E, margin);
    const BoxScan serial = scan_box_serial(E, hi);
    const BoxScan parallel = scan_box_parallel(E, hi);
    REQUIRE(serial.levels == parallel.levels);
    REQUIRE(serial.hi == parallel.hi);
    CHECK(serial.ranks == parallel.ranks);
}

}  // namespace

TEST_CASE("parallel scans reproduce the serial reference") {
    check_scans_agree(koszul({term(2, {2, 0}, 1), term(2, {1, 1}, 1), term(2, {0, 2}, 1)}, 2), 2);
    check_scans_agree(
        taylor_resolution(MonomialIdeal(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}})), 2);
    check_scans_agree(taylor_resolution(MonomialIdeal(3, {{2, 1, 0}, {0, 2, 1}, {1, 0, 2}, {1, 1, 1}})), 3);
    check_scans_agree(
        koszul({term(3, {1, 0, 0}, 2), term(3, {0, 1, 0}, -1), term(3, {0, 0, 1}, 3), term(3, {1, 1, 1}, 1)}, 3),
        2);
}
