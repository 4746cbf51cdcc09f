#include "icg/oracle.hpp"

#include <gmpxx.h>

#include "icg/error.hpp"
#include "icg/numtheory.hpp"

#include <complex>
#include <deque>
#include <numbers>
#include <numeric>
#include <vector>

namespace icg::oracle {

namespace {

using BigMatrix = std::vector<mpz_class>;  // row-major, order n

void require_within_cap(std::size_t order, std::int64_t cap) {
    if (static_cast<std::int64_t>(order) > cap) {
        fail(ErrorKind::CapExceeded, "order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
    }
}

// out = lhs * m, with m holding machine integers.
void multiply(const BigMatrix& lhs, const DenseIntMatrix& m, BigMatrix& out) {
    const std::size_t n = m.order();
    for (auto& v : out) v = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            const mpz_srcptr a = lhs[i * n + l].get_mpz_t();
            if (mpz_sgn(a) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const std::int64_t b = m(l, j);
                if (b > 0) {
                    mpz_addmul_ui(out[i * n + j].get_mpz_t(), a, static_cast<unsigned long>(b));
                } else if (b < 0) {
                    mpz_submul_ui(out[i * n + j].get_mpz_t(), a, static_cast<unsigned long>(-b));
                }
            }
        }
    }
}

mpz_class trace(const BigMatrix& p, std::size_t n) {
    mpz_class t = 0;
    for (std::size_t i = 0; i < n; ++i) t += p[i * n + i];
    return t;
}

// sum_ij a_ij b_ij, i.e. tr(A B^T).
mpz_class frobenius(const BigMatrix& a, const BigMatrix& b) {
    mpz_class t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(t.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    return t;
}

// tr(M^k) for k = 1..n (index k - 1).
std::vector<mpz_class> power_traces(const DenseIntMatrix& m) {
    const std::size_t n = m.order();
    std::vector<mpz_class> traces(n);
    BigMatrix current(n * n);
    for (std::size_t i = 0; i < n * n; ++i) current[i] = static_cast<long>(m(i / n, i % n));
    BigMatrix next(n * n);

    if (!m.symmetric()) {
        for (std::size_t k = 1; k <= n; ++k) {
            traces[k - 1] = trace(current, n);
            if (k == n) break;
            multiply(current, m, next);
            std::swap(current, next);
        }
        return traces;
    }

    // Symmetric powers: tr(M^{2a}) = <M^a, M^a>, tr(M^{2a+1}) = <M^a, M^{a+1}>.
    traces[0] = trace(current, n);
    for (std::size_t a = 1; 2 * a <= n; ++a) {
        traces[2 * a - 1] = frobenius(current, current);
        if (2 * a + 1 > n) break;
        multiply(current, m, next);
        traces[2 * a] = frobenius(current, next);
        std::swap(current, next);
    }
    return traces;
}

std::vector<std::vector<std::size_t>> adjacency_lists(const IcgSpec& spec) {
    const std::int64_t n = spec.n();
    std::vector<std::vector<std::size_t>> adj(static_cast<std::size_t>(n));
    for (std::int64_t a = 0; a < n; ++a) {
        for (std::int64_t b = 0; b < n; ++b) {
            if (a != b && spec.contains(std::gcd(a - b, n))) adj[static_cast<std::size_t>(a)].push_back(static_cast<std::size_t>(b));
        }
    }
    return adj;
}

bool adjacent(const IcgSpec& spec, std::int64_t a, std::int64_t b) {
    return a != b && spec.contains(std::gcd(a - b, spec.n()));
}

}  // namespace

DenseIntMatrix full_distance_matrix(const IcgSpec& spec, std::int64_t cap) {
    const auto n = static_cast<std::size_t>(spec.n());
    require_within_cap(n, cap);
    const auto adj = adjacency_lists(spec);
    DenseIntMatrix dist(n, -1);
    for (std::size_t source = 0; source < n; ++source) {
        std::deque<std::size_t> queue{source};
        dist(source, source) = 0;
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            for (const std::size_t w : adj[v]) {
                if (dist(source, w) < 0) {
                    dist(source, w) = dist(source, v) + 1;
                    queue.push_back(w);
                }
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (dist(source, v) < 0) {
                fail(ErrorKind::Disconnected, "vertex " + std::to_string(v) + " unreachable from " + std::to_string(source));
            }
        }
    }
    return dist;
}

bool verify_circulant(const DenseIntMatrix& m) {
    const std::size_t n = m.order();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m(i, j) != m(0, (j + n - i) % n)) return false;
    return true;
}

VerificationReport verify_spectrum_by_moments(const DenseIntMatrix& m, const Multiset& predicted, std::int64_t cap) {
    const std::size_t n = m.order();
    if (total_multiplicity(predicted) != static_cast<std::int64_t>(n)) {
        fail(ErrorKind::MultiplicityMismatch, "multiplicities sum to " + std::to_string(total_multiplicity(predicted)) +
                                                  ", matrix order is " + std::to_string(n));
    }
    require_within_cap(n, cap);

    const auto traces = power_traces(m);
    VerificationReport report;
    std::vector<mpz_class> powers;
    for (const auto& entry : predicted) powers.emplace_back(static_cast<long>(entry.value));
    for (std::size_t k = 1; k <= n; ++k) {
        mpz_class expected = 0;
        for (std::size_t i = 0; i < predicted.size(); ++i) {
            expected += powers[i] * static_cast<long>(predicted[i].multiplicity);
            powers[i] *= static_cast<long>(predicted[i].value);
        }
        report.checked_moments = static_cast<int>(k);
        if (expected != traces[k - 1]) {
            report.first_mismatch = MomentMismatch{static_cast<int>(k), traces[k - 1].get_str(), expected.get_str()};
            return report;
        }
    }
    report.matched = true;
    return report;
}

std::int64_t pairwise_distance_sum(const DenseIntMatrix& m) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = i + 1; j < m.order(); ++j) total = checked_add(total, m(i, j));
    return total;
}

std::int64_t brute_common_neighbors(const IcgSpec& spec, std::int64_t a, std::int64_t b) {
    const std::int64_t n = spec.n();
    if (a < 0 || a >= n || b < 0 || b >= n) fail(ErrorKind::InvalidArgument, "vertex outside Z_" + std::to_string(n));
    if (a == b) fail(ErrorKind::SameVertex, "vertices must differ, both are " + std::to_string(a));
    std::int64_t count = 0;
    for (std::int64_t c = 0; c < n; ++c) {
        if (adjacent(spec, a, c) && adjacent(spec, b, c)) ++count;
    }
    return count;
}

std::complex<double> ramanujan_sum_exponential(std::int64_t r, std::int64_t n) {
    std::complex<double> total = 0.0;
    for (std::int64_t a = 1; a <= n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>((a * r) % n) / static_cast<double>(n);
        total += std::polar(1.0, angle);
    }
    return total;
}

std::complex<double> unity_sum_exponential(std::int64_t r, std::int64_t n) {
    std::complex<double> total = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>((i * r) % n) / static_cast<double>(n);
        total += std::polar(1.0, angle);
    }
    return total;
}

}  // namespace icg::oracle
