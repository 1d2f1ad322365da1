#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fanoec/matrix.hpp"

using namespace fanoec;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
    return m;
}

// Laplace cofactor expansion, used as an independent determinant oracle.
Int cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                sub.at(i - 1, cc++) = m.at(i, k);
            }
        }
        Int term = m.at(0, j) * cofactor_det(sub);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

bool divisibility_chain(const IntMatrix& s) {
    std::size_t n = std::min(s.rows(), s.cols());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (s.at(i, i) == 0 && s.at(i + 1, i + 1) != 0) return false;
        if (s.at(i, i) != 0 && s.at(i + 1, i + 1) % s.at(i, i) != 0) return false;
    }
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j)
            if (i != j && s.at(i, j) != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("smith normal form of the identity") {
    auto d = smith_normal_form(IntMatrix::identity(3));
    CHECK(d.s == IntMatrix::identity(3));
    CHECK(d.u * IntMatrix::identity(3) * d.v == d.s);
    CHECK(d.rank() == 3);
}

TEST_CASE("smith normal form diagonal (2,4)") {
    // d1 = gcd of entries = 2, d1*d2 = |det| = 8, hence diagonal (2, 4)
    auto a = IntMatrix::from_rows<int>({{2, 4}, {6, 8}});
    auto d = smith_normal_form(a);
    CHECK(d.s.at(0, 0) == 2);
    CHECK(d.s.at(1, 1) == 4);
    CHECK(d.u * a * d.v == d.s);
    CHECK(abs(determinant(d.u)) == 1);
    CHECK(abs(determinant(d.v)) == 1);
}

TEST_CASE("smith normal form reconstruction property") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> sz(1, 6);
        IntMatrix a = random_matrix(rng, sz(rng), sz(rng));
        auto d = smith_normal_form(a);
        CHECK(d.u * a * d.v == d.s);
        CHECK(divisibility_chain(d.s));
        CHECK(abs(determinant(d.u)) == 1);
        CHECK(abs(determinant(d.v)) == 1);
    }
}

TEST_CASE("kernel of identity is empty") {
    auto k = kernel_basis(IntMatrix::identity(4));
    CHECK(k.cols() == 0);
    CHECK(k.rows() == 4);
}

TEST_CASE("kernel of [[1,1]]") {
    auto k = kernel_basis(IntMatrix::from_rows<int>({{1, 1}}));
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(1, 0) == -1);
}

TEST_CASE("kernel basis is saturated") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> sz(1, 4);
        IntMatrix a = random_matrix(rng, sz(rng), sz(rng) + 1, -3, 3);
        IntMatrix k = kernel_basis(a);
        // every small integer kernel vector must be an integer combination of
        // the basis columns
        const std::size_t c = a.cols();
        std::vector<Int> v(c, Int(-2));
        for (;;) {
            bool in_kernel = true;
            for (std::size_t i = 0; i < a.rows() && in_kernel; ++i) {
                Int s = 0;
                for (std::size_t j = 0; j < c; ++j) s += a.at(i, j) * v[j];
                if (s != 0) in_kernel = false;
            }
            if (in_kernel) {
                bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
                if (!zero) {
                    auto y = solve_rational(k, v);
                    REQUIRE(y.has_value());
                    for (const Rat& q : *y) CHECK(is_integral(q));
                }
            }
            std::size_t p = 0;
            while (p < c && v[p] == 2) v[p++] = -2;
            if (p == c) break;
            v[p] += 1;
        }
    }
}

TEST_CASE("maximal minors of 2x2 identity") {
    auto m = maximal_minors(IntMatrix::identity(2));
    REQUIRE(m.size() == 1);
    CHECK(m[0] == 1);
}

TEST_CASE("maximal minors of the projective plane ray matrix") {
    auto b = IntMatrix::from_rows<int>({{1, 0}, {0, 1}, {-1, -1}});
    auto m = maximal_minors(b);
    REQUIRE(m.size() == 3);
    for (const Int& x : m) CHECK((x == 1 || x == -1));
}

TEST_CASE("maximal minors agree with cofactor expansion") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> rs(1, 6);
        std::size_t c = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        std::size_t r = std::max(c, rs(rng));
        IntMatrix a = random_matrix(rng, r, c, -5, 5);
        auto fast = maximal_minors(a);

        std::vector<Int> slow;
        std::vector<std::size_t> idx(c);
        for (std::size_t i = 0; i < c; ++i) idx[i] = i;
        for (;;) {
            IntMatrix sub(c, c);
            for (std::size_t i = 0; i < c; ++i)
                for (std::size_t j = 0; j < c; ++j) sub.at(i, j) = a.at(idx[i], j);
            slow.push_back(cofactor_det(sub));
            std::size_t i = c;
            while (i > 0 && idx[i - 1] == r - c + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < c; ++j) idx[j] = idx[j - 1] + 1;
        }
        std::sort(slow.begin(), slow.end());
        CHECK(fast == slow);
    }
}

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> sz(1, 6);
        std::size_t n = sz(rng);
        IntMatrix a = random_matrix(rng, n, n);
        CHECK(determinant(a) == cofactor_det(a));
    }
}

TEST_CASE("unimodular inverse roundtrip") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        // build a random unimodular matrix from elementary operations
        std::size_t n = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
        IntMatrix m = IntMatrix::identity(n);
        std::uniform_int_distribution<int> q(-3, 3);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int ops = 0; ops < 12; ++ops) {
            std::size_t i = pick(rng), j = pick(rng);
            if (i == j) continue;
            detail::add_row(m, i, j, Int(q(rng)));
        }
        IntMatrix inv = unimodular_inverse(m);
        CHECK(m * inv == IntMatrix::identity(n));
    }
}

TEST_CASE("solve_rational recovers solutions") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
        IntMatrix a = random_matrix(rng, n, n);
        if (determinant(a) == 0) continue;
        std::vector<Int> x0(n);
        std::uniform_int_distribution<int> d(-4, 4);
        for (auto& v : x0) v = d(rng);
        std::vector<Int> b(n, Int(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b[i] += a.at(i, j) * x0[j];
        auto x = solve_rational(a, b);
        REQUIRE(x.has_value());
        for (std::size_t i = 0; i < n; ++i) CHECK((*x)[i] == Rat(x0[i]));
    }
}
