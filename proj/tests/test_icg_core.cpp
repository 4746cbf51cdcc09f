#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <numeric>
#include <random>

#include "icg/icg_core.hpp"
#include "icg/numtheory.hpp"

using namespace icg;

namespace {

ErrorKind kind_of(auto&& thunk) {
    try {
        thunk();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an icg::Error");
    return ErrorKind::InvalidArgument;
}

using Ints = std::vector<std::int64_t>;

}  // namespace

TEST_SUITE("icg_core") {

TEST_CASE("validate") {
    const auto spec = validate(10, {1});
    CHECK(spec.n() == 10);
    CHECK(Ints(spec.divisor_set().begin(), spec.divisor_set().end()) == Ints{1});

    const auto messy = validate(12, {6, 1, 6, 4});
    CHECK(Ints(messy.divisor_set().begin(), messy.divisor_set().end()) == Ints{1, 4, 6});

    CHECK(kind_of([] { validate(10, {3}); }) == ErrorKind::NonDivisor);
    CHECK(kind_of([] { validate(10, {10}); }) == ErrorKind::ImproperDivisor);
    CHECK(kind_of([] { validate(10, {0}); }) == ErrorKind::ImproperDivisor);
    CHECK(kind_of([] { validate(10, {-2}); }) == ErrorKind::ImproperDivisor);
    CHECK(kind_of([] { validate(10, {20}); }) == ErrorKind::NonDivisor);
    CHECK(kind_of([] { validate(10, {}); }) == ErrorKind::EmptyDivisorSet);
    CHECK(kind_of([] { validate(1, {1}); }) == ErrorKind::ModulusTooSmall);
}

TEST_CASE("gcd_class") {
    CHECK(gcd_class(10, 5).members == Ints{5});
    CHECK(gcd_class(10, 2).members == Ints{2, 4, 6, 8});
    CHECK(gcd_class(10, 1).members == Ints{1, 3, 7, 9});
    CHECK(kind_of([] { gcd_class(10, 3); }) == ErrorKind::NonDivisor);
}

TEST_CASE("gcd classes partition 1..n-1") {
    for (std::int64_t n = 2; n <= 500; ++n) {
        std::vector<int> seen(static_cast<std::size_t>(n), 0);
        for (const auto d : proper_divisors(n)) {
            const auto cls = gcd_class(n, d);
            REQUIRE(static_cast<std::int64_t>(cls.members.size()) == euler_phi(n / d));
            for (const auto k : cls.members) ++seen[static_cast<std::size_t>(k)];
        }
        for (std::int64_t k = 1; k < n; ++k) REQUIRE(seen[static_cast<std::size_t>(k)] == 1);
    }
}

TEST_CASE("symbol_set and degree") {
    CHECK(symbol_set(validate(10, {1})) == Ints{1, 3, 7, 9});
    CHECK(symbol_set(validate(10, {1, 2})) == Ints{1, 2, 3, 4, 6, 7, 8, 9});
    CHECK(symbol_set(validate(4, {2})) == Ints{2});

    CHECK(degree(validate(10, {1})) == 4);
    CHECK(degree(validate(15, {1, 5})) == 10);
    for (int k = 1; k <= 10; ++k) CHECK(degree(validate(std::int64_t{1} << k, {1})) == (std::int64_t{1} << (k - 1)));

    for (std::int64_t n = 2; n <= 60; ++n) {
        for (const auto& spec : enumerate_specs(n, false)) {
            const auto s = symbol_set(spec);
            REQUIRE(static_cast<std::int64_t>(s.size()) == degree(spec));
            for (const auto k : s) REQUIRE(std::binary_search(s.begin(), s.end(), n - k));
        }
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(validate(10, {1})));
    CHECK_FALSE(is_connected(validate(12, {2, 4})));
    CHECK(is_connected(validate(12, {2, 3})));
}

TEST_CASE("enumerate_specs") {
    CHECK(enumerate_specs(10, false).size() == 7);
    // subsets of {1,2,5} with gcd 1: everything containing 1, plus {2,5}
    CHECK(enumerate_specs(10).size() == 5);
    CHECK(enumerate_specs(7).size() == 1);
}

TEST_CASE("adjacency_spectrum examples") {
    const auto x9 = adjacency_spectrum(validate(9, {1}));
    CHECK(Ints(x9.values().begin(), x9.values().end()) == Ints{6, 0, 0, -3, 0, 0, -3, 0, 0});

    for (int k = 1; k <= 8; ++k) {
        const std::int64_t n = std::int64_t{1} << k;
        const auto lambda = adjacency_spectrum(validate(n, {1}));
        Multiset expected{{n / 2, 1}, {0, n - 2}, {-n / 2, 1}};
        CHECK(lambda.multiset() == normalize(expected));
    }
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 97}) {
        CHECK(adjacency_spectrum(validate(p, {1})).multiset() == normalize({{p - 1, 1}, {-1, p - 1}}));
    }
}

TEST_CASE("adjacency spectrum sums to zero with lambda_0 = degree") {
    for (std::int64_t n = 2; n <= 60; ++n) {
        for (const auto& spec : enumerate_specs(n, false)) {
            const auto lambda = adjacency_spectrum(spec);
            REQUIRE(lambda.sum() == 0);
            REQUIRE(lambda[0] == degree(spec));
        }
    }
}

TEST_CASE("adjacency spectrum agrees with a numeric eigensolve") {
    for (std::int64_t n = 2; n <= 40; ++n) {
        for (const auto& spec : enumerate_specs(n)) {
            const auto a = adjacency_matrix(spec);
            Eigen::MatrixXd dense(n, n);
            for (std::int64_t i = 0; i < n; ++i)
                for (std::int64_t j = 0; j < n; ++j) dense(i, j) = static_cast<double>(a(i, j));
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
            std::vector<double> numeric(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
            const auto exact = adjacency_spectrum(spec);
            std::vector<std::int64_t> sorted(exact.values().begin(), exact.values().end());
            std::sort(sorted.begin(), sorted.end());
            std::sort(numeric.begin(), numeric.end());
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                REQUIRE(std::abs(numeric[i] - static_cast<double>(sorted[i])) < 1e-6);
            }
        }
    }
}

TEST_CASE("adjacency_matrix") {
    const auto c4 = adjacency_matrix(validate(4, {1}));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(c4(i, j) == ((i + 1) % 4 == j || (j + 1) % 4 == i ? 1 : 0));

    const auto a10 = adjacency_matrix(validate(10, {1}));
    CHECK(Ints(a10.row(0).begin(), a10.row(0).end()) == Ints{0, 1, 0, 1, 0, 0, 0, 1, 0, 1});

    const auto k7 = adjacency_matrix(validate(7, {1}));
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) CHECK(k7(i, j) == (i == j ? 0 : 1));

    CHECK(kind_of([] { adjacency_matrix(validate(1000, {1})); }) == ErrorKind::CapExceeded);
    CHECK(adjacency_matrix(validate(1000, {1}), 1000).order() == 1000);

    for (std::int64_t n = 2; n <= 30; ++n) {
        for (const auto& spec : enumerate_specs(n, false)) {
            const auto a = adjacency_matrix(spec);
            REQUIRE(a.symmetric());
            for (std::size_t i = 0; i < a.order(); ++i) {
                REQUIRE(a(i, i) == 0);
                for (std::size_t j = 0; j < a.order(); ++j) REQUIRE(a(i, j) == a(0, (j + a.order() - i) % a.order()));
            }
        }
    }
}

TEST_CASE("nullity of the unitary Cayley graph is n - rad(n)") {
    for (std::int64_t n = 2; n <= 200; ++n) {
        REQUIRE(adjacency_spectrum(validate(n, {1})).multiplicity(0) == n - radical(n));
    }
}

TEST_CASE("recognize_integral_symbol") {
    const Ints units{1, 3, 7, 9};
    CHECK(recognize_integral_symbol(10, units) == Ints{1});
    const Ints partial{1, 9};
    CHECK_FALSE(recognize_integral_symbol(10, partial).has_value());
    const Ints six{2, 3, 4};
    CHECK(recognize_integral_symbol(6, six) == Ints{2, 3});
    const Ints asym{1, 3};
    CHECK(kind_of([&] { recognize_integral_symbol(10, asym); }) == ErrorKind::AsymmetricSymbol);
    const Ints empty{};
    CHECK_FALSE(recognize_integral_symbol(10, empty).has_value());

    // Round trip over every divisor set, and random symmetric sets agree with
    // a direct check of "union of gcd classes".
    std::mt19937 rng(7);
    for (std::int64_t n = 2; n <= 60; ++n) {
        for (const auto& spec : enumerate_specs(n, false)) {
            const auto d = recognize_integral_symbol(n, symbol_set(spec));
            REQUIRE(d.has_value());
            REQUIRE(*d == Ints(spec.divisor_set().begin(), spec.divisor_set().end()));
        }
        for (int trial = 0; trial < 20; ++trial) {
            Ints s;
            for (std::int64_t k = 1; 2 * k <= n; ++k) {
                if (rng() % 2) {
                    s.push_back(k);
                    if (n - k != k) s.push_back(n - k);
                }
            }
            std::sort(s.begin(), s.end());
            bool is_union = !s.empty();
            for (const auto k : s) {
                for (const auto m : gcd_class(n, std::gcd(k, n)).members) {
                    is_union = is_union && std::binary_search(s.begin(), s.end(), m);
                }
            }
            REQUIRE(recognize_integral_symbol(n, s).has_value() == is_union);
        }
    }
}

}  // TEST_SUITE
