#pragma once

// Brute-force cross-checks that share no code path with the formula side:
// dense BFS distance matrices built straight from the gcd(a - b, n) in D
// rule, exact power-sum comparison of spectra, and the complex exponential
// definitions of c(r, n) and s(r, n).
//
// Power sums: if tr(M^k) = sum_i v_i^k for k = 1..n then by Newton's
// identities M and diag(v) share a characteristic polynomial, so the
// eigenvalue multisets agree. All traces are computed in GMP integers.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "icg/icg_core.hpp"
#include "icg/matrix.hpp"
#include "icg/spectrum.hpp"

namespace icg::oracle {

struct MomentMismatch {
    int order;
    std::string trace;      // tr(M^order), decimal
    std::string predicted;  // sum value^order * multiplicity, decimal
};

struct VerificationReport {
    bool matched = false;
    int checked_moments = 0;
    std::optional<MomentMismatch> first_mismatch;
};

/// All-pairs BFS distances. Throws Disconnected, CapExceeded.
DenseIntMatrix full_distance_matrix(const IcgSpec& spec, std::int64_t cap = kDefaultOracleCap);

/// M[i][j] == M[0][(j - i) mod n] everywhere.
bool verify_circulant(const DenseIntMatrix& m);

/// Compares tr(M^k) with the predicted power sums for k = 1..n, stopping at
/// the first mismatch. Throws MultiplicityMismatch if the multiplicities do
/// not add up to the order of M, CapExceeded if the order exceeds cap.
VerificationReport verify_spectrum_by_moments(const DenseIntMatrix& m, const Multiset& predicted,
                                              std::int64_t cap = kDefaultOracleCap);

/// Sum over i < j of M[i][j].
std::int64_t pairwise_distance_sum(const DenseIntMatrix& m);

/// |N(a) intersect N(b)| in ICG_n(D). Throws SameVertex when a == b.
std::int64_t brute_common_neighbors(const IcgSpec& spec, std::int64_t a, std::int64_t b);

/// sum over units a mod n of exp(2 pi i a r / n).
std::complex<double> ramanujan_sum_exponential(std::int64_t r, std::int64_t n);

/// sum_{i=0}^{n-1} exp(2 pi i i r / n).
std::complex<double> unity_sum_exponential(std::int64_t r, std::int64_t n);

}  // namespace icg::oracle
