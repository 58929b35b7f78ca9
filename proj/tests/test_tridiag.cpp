#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cam/tridiag.hpp"
#include "oracles.hpp"

namespace {

std::mt19937_64 rng(987654321);

cam::TridiagMatrix random_matrix(std::size_t n) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    cam::TridiagMatrix m;
    m.diag.resize(n);
    m.offdiag.resize(n - 1);
    for (auto& d : m.diag) d = u(rng);
    for (auto& e : m.offdiag) e = u(rng);
    return m;
}

std::vector<double> dense_of(const cam::TridiagMatrix& m) {
    const std::size_t n = m.size();
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) a[i * n + i] = m.diag[i];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        a[i * n + i + 1] = m.offdiag[i];
        a[(i + 1) * n + i] = m.offdiag[i];
    }
    return a;
}

double norm_of(const cam::TridiagMatrix& m) {
    double s = 0.0;
    for (double d : m.diag) s = std::max(s, std::fabs(d));
    for (double e : m.offdiag) s = std::max(s, std::fabs(e));
    return s;
}

}  // namespace

TEST_CASE("second difference stencil of size five") {
    // diag 0, offdiag 1: eigenvalues 2 cos(pi j / 6).
    cam::TridiagMatrix m;
    m.diag.assign(5, 0.0);
    m.offdiag.assign(4, 1.0);
    const auto ev = cam::eigenvalues(m);
    const double expected[] = {-std::sqrt(3.0), -1.0, 0.0, 1.0, std::sqrt(3.0)};
    REQUIRE(ev.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(std::fabs(ev[i] - expected[i]) < 1e-13);
}

TEST_CASE("agrees with a dense reference on random matrices") {
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % 200);
        const cam::TridiagMatrix m = random_matrix(n);
        const auto mine = cam::eigenvalues(m);
        const auto ref = oracle::jacobi_eigenvalues(dense_of(m), n);
        REQUIRE(mine.size() == n);
        const double tol = 1e-12 * std::max(1.0, norm_of(m));
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::fabs(mine[i] - ref[i]) < tol);
    }
}

TEST_CASE("ascending order and multiplicity bookkeeping") {
    for (int rep = 0; rep < 20; ++rep) {
        const cam::TridiagMatrix m = random_matrix(64);
        const auto ev = cam::eigenvalues(m);
        for (std::size_t i = 0; i + 1 < ev.size(); ++i) CHECK(ev[i] <= ev[i + 1]);
    }
}

TEST_CASE("splitting on zero off-diagonals") {
    // Exact zero couplings decouple the blocks; eigenvalues are the union.
    cam::TridiagMatrix m;
    m.diag = {3.0, -1.0, 2.0, 2.0, -5.0};
    m.offdiag = {0.0, 1.0, 0.0, 0.0};
    const auto ev = cam::eigenvalues(m);
    // Block {3}, block {-1,2} with coupling 1, singletons {2}, {-5}.
    const double mid = std::sqrt(1.0 * 1.0 + 1.5 * 1.5);
    std::vector<double> expected = {3.0, 0.5 - mid, 0.5 + mid, 2.0, -5.0};
    std::sort(expected.begin(), expected.end());
    REQUIRE(ev.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(std::fabs(ev[i] - expected[i]) < 1e-13);
}

TEST_CASE("sturm counts match the spectrum") {
    for (int rep = 0; rep < 25; ++rep) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng() % 120);
        const cam::TridiagMatrix m = random_matrix(n);
        const auto ev = cam::eigenvalues(m);
        std::uniform_real_distribution<double> u(-5.0, 5.0);
        for (int probe = 0; probe < 8; ++probe) {
            const double x = u(rng);
            std::size_t expected = 0;
            for (double v : ev)
                if (v < x) ++expected;
            CHECK(cam::count_below(m, x) == expected);
        }
        // counts at eigenvalues themselves (strictly-below semantics)
        CHECK(cam::count_below(m, ev.front()) == 0);
        CHECK(cam::count_below(m, ev.back() + 1e-9) == n);
    }
}

TEST_CASE("size one") {
    cam::TridiagMatrix m;
    m.diag = {4.25};
    const auto ev = cam::eigenvalues(m);
    REQUIRE(ev.size() == 1);
    CHECK(ev[0] == 4.25);
    CHECK(cam::count_below(m, 4.25) == 0);
    CHECK(cam::count_below(m, 4.26) == 1);
}
