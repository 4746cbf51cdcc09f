#include <doctest.h>

#include "icg/distance_spectra.hpp"
#include "icg/oracle.hpp"

using namespace icg;

namespace {

const std::int64_t kX10Distances[10][10] = {
    {0, 1, 2, 1, 2, 3, 2, 1, 2, 1}, {1, 0, 1, 2, 1, 2, 3, 2, 1, 2}, {2, 1, 0, 1, 2, 1, 2, 3, 2, 1},
    {1, 2, 1, 0, 1, 2, 1, 2, 3, 2}, {2, 1, 2, 1, 0, 1, 2, 1, 2, 3}, {3, 2, 1, 2, 1, 0, 1, 2, 1, 2},
    {2, 3, 2, 1, 2, 1, 0, 1, 2, 1}, {1, 2, 3, 2, 1, 2, 1, 0, 1, 2}, {2, 1, 2, 3, 2, 1, 2, 1, 0, 1},
    {1, 2, 1, 2, 3, 2, 1, 2, 1, 0},
};

DenseIntMatrix x10_distances() {
    DenseIntMatrix m(10);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) m(i, j) = kX10Distances[i][j];
    return m;
}

ErrorKind kind_of(auto&& thunk) {
    try {
        thunk();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an icg::Error");
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("full_distance_matrix") {
    CHECK(oracle::full_distance_matrix(IcgSpec(10, {1})) == x10_distances());

    const auto k7 = oracle::full_distance_matrix(IcgSpec(7, {1}));
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) CHECK(k7(i, j) == (i == j ? 0 : 1));

    const auto m8 = oracle::full_distance_matrix(IcgSpec(8, {1}));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) CHECK(m8(i, j) <= 2);

    CHECK(kind_of([] { oracle::full_distance_matrix(IcgSpec(12, {2, 4})); }) == ErrorKind::Disconnected);
    CHECK(kind_of([] { oracle::full_distance_matrix(IcgSpec(300, {1})); }) == ErrorKind::CapExceeded);
}

TEST_CASE("verify_circulant") {
    CHECK(oracle::verify_circulant(x10_distances()));
    DenseIntMatrix identity(6);
    for (std::size_t i = 0; i < 6; ++i) identity(i, i) = 1;
    CHECK(oracle::verify_circulant(identity));
    auto perturbed = x10_distances();
    perturbed(3, 7) += 1;
    CHECK_FALSE(oracle::verify_circulant(perturbed));
}

TEST_CASE("verify_spectrum_by_moments") {
    const auto m = x10_distances();
    const auto ok = oracle::verify_spectrum_by_moments(m, {{15, 1}, {1, 1}, {0, 4}, {-4, 4}});
    CHECK(ok.matched);
    CHECK(ok.checked_moments == 10);
    CHECK_FALSE(ok.first_mismatch.has_value());

    const auto k5 = oracle::full_distance_matrix(IcgSpec(5, {1}));
    CHECK(oracle::verify_spectrum_by_moments(k5, {{4, 1}, {-1, 4}}).matched);

    const auto bad = oracle::verify_spectrum_by_moments(m, {{15, 1}, {1, 1}, {0, 4}, {-4, 3}, {-5, 1}});
    CHECK_FALSE(bad.matched);
    REQUIRE(bad.first_mismatch.has_value());
    CHECK(bad.first_mismatch->order <= 10);
    // first power sum: trace 0 vs 15 + 1 - 12 - 5
    CHECK(bad.first_mismatch->order == 1);
    CHECK(bad.first_mismatch->trace == "0");
    CHECK(bad.first_mismatch->predicted == "-1");

    // {1, 1, -2} matches K_3's first two power sums and differs at the third.
    DenseIntMatrix c3(3, 1);
    for (std::size_t i = 0; i < 3; ++i) c3(i, i) = 0;  // K_3: spectrum {2, -1, -1}
    CHECK(oracle::verify_spectrum_by_moments(c3, {{2, 1}, {-1, 2}}).matched);
    const auto r = oracle::verify_spectrum_by_moments(c3, {{1, 1}, {1, 1}, {-2, 1}});  // sum 0, squares 6
    CHECK_FALSE(r.matched);
    CHECK(r.first_mismatch->order == 3);

    CHECK(kind_of([&] { oracle::verify_spectrum_by_moments(m, {{15, 1}}); }) == ErrorKind::MultiplicityMismatch);
    CHECK(kind_of([&] { oracle::verify_spectrum_by_moments(m, {{0, 10}}, 5); }) == ErrorKind::CapExceeded);
}

TEST_CASE("moment check on a non-symmetric matrix") {
    // upper triangular, eigenvalues on the diagonal
    DenseIntMatrix t(3);
    t(0, 0) = 2;
    t(0, 1) = 5;
    t(1, 1) = -1;
    t(1, 2) = 7;
    t(2, 2) = 3;
    CHECK(oracle::verify_spectrum_by_moments(t, {{3, 1}, {2, 1}, {-1, 1}}).matched);
    CHECK_FALSE(oracle::verify_spectrum_by_moments(t, {{3, 1}, {1, 1}, {0, 1}}).matched);
}

TEST_CASE("pairwise_distance_sum") {
    CHECK(oracle::pairwise_distance_sum(x10_distances()) == 75);
    CHECK(oracle::pairwise_distance_sum(oracle::full_distance_matrix(IcgSpec(11, {1}))) == 55);
    CHECK(oracle::pairwise_distance_sum(oracle::full_distance_matrix(IcgSpec(8, {1}))) == 40);
}

TEST_CASE("brute_common_neighbors") {
    CHECK(oracle::brute_common_neighbors(IcgSpec(9, {1}), 0, 3) == 6);
    CHECK(oracle::brute_common_neighbors(IcgSpec(10, {1}), 0, 5) == 0);
    CHECK(oracle::brute_common_neighbors(IcgSpec(13, {1}), 0, 1) == 11);
    CHECK(kind_of([] { oracle::brute_common_neighbors(IcgSpec(9, {1}), 4, 4); }) == ErrorKind::SameVertex);
}

TEST_CASE("exponential sums") {
    CHECK(std::abs(oracle::ramanujan_sum_exponential(5, 10).real() + 4.0) < 1e-9);
    CHECK(std::abs(oracle::unity_sum_exponential(3, 7)) < 1e-9);
    CHECK(std::abs(oracle::unity_sum_exponential(14, 7).real() - 7.0) < 1e-9);
}

}  // TEST_SUITE
