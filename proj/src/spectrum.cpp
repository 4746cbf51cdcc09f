#include "icg/spectrum.hpp"

#include <algorithm>

#include "icg/numtheory.hpp"

namespace icg {

Multiset normalize(Multiset table) {
    std::sort(table.begin(), table.end(),
              [](const ValueMultiplicity& a, const ValueMultiplicity& b) { return a.value > b.value; });
    Multiset out;
    for (const auto& entry : table) {
        if (entry.multiplicity == 0) continue;
        if (!out.empty() && out.back().value == entry.value) {
            out.back().multiplicity += entry.multiplicity;
        } else {
            out.push_back(entry);
        }
    }
    return out;
}

std::int64_t total_multiplicity(const Multiset& table) {
    std::int64_t total = 0;
    for (const auto& entry : table) total = checked_add(total, entry.multiplicity);
    return total;
}

IndexedSpectrum::IndexedSpectrum(std::vector<std::int64_t> values) : values_(std::move(values)) {
    Multiset table;
    table.reserve(values_.size());
    for (const std::int64_t v : values_) table.push_back({v, 1});
    multiset_ = normalize(std::move(table));
}

std::int64_t IndexedSpectrum::sum() const {
    std::int64_t total = 0;
    for (const std::int64_t v : values_) total = checked_add(total, v);
    return total;
}

std::int64_t IndexedSpectrum::energy() const {
    std::int64_t total = 0;
    for (const std::int64_t v : values_) total = checked_add(total, v < 0 ? checked_sub(0, v) : v);
    return total;
}

std::int64_t IndexedSpectrum::multiplicity(std::int64_t value) const {
    for (const auto& entry : multiset_) {
        if (entry.value == value) return entry.multiplicity;
    }
    return 0;
}

}  // namespace icg
