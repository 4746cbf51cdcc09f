#pragma once

// Distance structure of a connected ICG_n(D).
//
// The distance from 0 to a vertex v depends only on gcd(v, n): multiplying a
// shortest path by a unit mod n preserves every step's gcd with n. So the
// proper divisors of n split into classes D^(p) (distance p), and the
// circulant distance matrix has eigenvalues
//
//     mu_r = sum_p p * sum_{d in D^(p)} c(r, n/d),     r = 0..n-1,
//
// all of them integers. distance_classes() checks the gcd-constancy on the
// BFS result instead of assuming it.

#include <cstdint>
#include <map>
#include <vector>

#include "icg/icg_core.hpp"
#include "icg/spectrum.hpp"

namespace icg {

class DistanceDecomposition {
public:
    DistanceDecomposition(IcgSpec spec, std::map<std::int64_t, int> class_distance);

    const IcgSpec& spec() const noexcept { return spec_; }
    /// Proper divisor d of n -> distance from 0 to any member of G_n(d).
    const std::map<std::int64_t, int>& class_distance() const noexcept { return class_distance_; }
    int distance_of_class(std::int64_t d) const;
    int diameter() const noexcept { return diameter_; }

    /// D^(p): divisors whose gcd class sits at distance p, ascending.
    std::vector<std::int64_t> divisors_at(int p) const;

private:
    IcgSpec spec_;
    std::map<std::int64_t, int> class_distance_;
    int diameter_ = 0;
};

struct FirstRow {
    std::vector<std::int64_t> entries;  // a_0 .. a_{n-1}
};

/// Throws Disconnected if gcd(D) != 1, ClassInconsistency if BFS distances
/// are not constant on some gcd class.
DistanceDecomposition distance_classes(const IcgSpec& spec);

FirstRow distance_first_row(const IcgSpec& spec);
FirstRow distance_first_row(const DistanceDecomposition& decomposition);

IndexedSpectrum distance_spectrum(const IcgSpec& spec);
IndexedSpectrum distance_spectrum(const DistanceDecomposition& decomposition);

/// Sum of |mu_r|.
std::int64_t distance_energy(const IcgSpec& spec);

int diameter(const IcgSpec& spec);

/// Sum of distances over unordered vertex pairs, n * mu_0 / 2.
std::int64_t wiener_index(const IcgSpec& spec);

/// mu_0, the common row sum of the distance matrix.
std::int64_t spectral_radius(const IcgSpec& spec);

}  // namespace icg
