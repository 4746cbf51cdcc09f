#include "icg/distance_spectra.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

#include "icg/numtheory.hpp"

namespace icg {

DistanceDecomposition::DistanceDecomposition(IcgSpec spec, std::map<std::int64_t, int> class_distance)
    : spec_(std::move(spec)), class_distance_(std::move(class_distance)) {
    for (const auto& [d, p] : class_distance_) diameter_ = std::max(diameter_, p);
}

int DistanceDecomposition::distance_of_class(std::int64_t d) const {
    const auto it = class_distance_.find(d);
    if (it == class_distance_.end()) {
        fail(ErrorKind::NonDivisor, std::to_string(d) + " is not a proper divisor of " + std::to_string(spec_.n()));
    }
    return it->second;
}

std::vector<std::int64_t> DistanceDecomposition::divisors_at(int p) const {
    std::vector<std::int64_t> out;
    for (const auto& [d, dist] : class_distance_) {
        if (dist == p) out.push_back(d);
    }
    return out;
}

DistanceDecomposition distance_classes(const IcgSpec& spec) {
    if (!is_connected(spec)) fail(ErrorKind::Disconnected, "gcd of the divisor set is not 1");
    const std::int64_t n = spec.n();
    const auto symbol = symbol_set(spec);

    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::deque<std::int64_t> queue{0};
    dist[0] = 0;
    while (!queue.empty()) {
        const std::int64_t v = queue.front();
        queue.pop_front();
        for (const std::int64_t s : symbol) {
            const auto w = static_cast<std::size_t>((v + s) % n);
            if (dist[w] < 0) {
                dist[w] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(static_cast<std::int64_t>(w));
            }
        }
    }

    std::map<std::int64_t, int> class_distance;
    for (std::int64_t v = 1; v < n; ++v) {
        const int d_v = dist[static_cast<std::size_t>(v)];
        if (d_v < 0) fail(ErrorKind::Disconnected, "vertex " + std::to_string(v) + " unreachable from 0");
        const std::int64_t g = std::gcd(v, n);
        const auto [it, inserted] = class_distance.emplace(g, d_v);
        if (!inserted && it->second != d_v) {
            fail(ErrorKind::ClassInconsistency, "gcd class " + std::to_string(g) + " of ICG_" + std::to_string(n) +
                                                    " holds distances " + std::to_string(it->second) + " and " +
                                                    std::to_string(d_v));
        }
    }
    return DistanceDecomposition(spec, std::move(class_distance));
}

FirstRow distance_first_row(const DistanceDecomposition& decomposition) {
    const std::int64_t n = decomposition.spec().n();
    FirstRow row;
    row.entries.assign(static_cast<std::size_t>(n), 0);
    for (std::int64_t j = 1; j < n; ++j) {
        row.entries[static_cast<std::size_t>(j)] = decomposition.distance_of_class(std::gcd(j, n));
    }
    return row;
}

FirstRow distance_first_row(const IcgSpec& spec) { return distance_first_row(distance_classes(spec)); }

IndexedSpectrum distance_spectrum(const DistanceDecomposition& decomposition) {
    const std::int64_t n = decomposition.spec().n();
    const DivisorTable table(n);
    std::vector<std::int64_t> values(static_cast<std::size_t>(n), 0);
    for (std::int64_t r = 0; r < n; ++r) {
        std::int64_t mu = 0;
        for (const auto& [d, p] : decomposition.class_distance()) {
            mu = checked_add(mu, checked_mul(p, table.ramanujan(r, n / d)));
        }
        values[static_cast<std::size_t>(r)] = mu;
    }
    return IndexedSpectrum(std::move(values));
}

IndexedSpectrum distance_spectrum(const IcgSpec& spec) { return distance_spectrum(distance_classes(spec)); }

std::int64_t distance_energy(const IcgSpec& spec) { return distance_spectrum(spec).energy(); }

int diameter(const IcgSpec& spec) { return distance_classes(spec).diameter(); }

std::int64_t wiener_index(const IcgSpec& spec) {
    const auto mu = distance_spectrum(spec);
    return checked_mul(spec.n(), mu[0]) / 2;
}

std::int64_t spectral_radius(const IcgSpec& spec) {
    const auto mu = distance_spectrum(spec);
    for (const std::int64_t v : mu.values()) {
        if (v > mu[0] || -v > mu[0]) throw std::logic_error("mu_0 is not the dominant distance eigenvalue");
    }
    return mu[0];
}

}  // namespace icg
