#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace icg {

struct ValueMultiplicity {
    std::int64_t value;
    std::int64_t multiplicity;

    friend bool operator==(const ValueMultiplicity&, const ValueMultiplicity&) = default;
};

/// Eigenvalue multiset, sorted by descending value, no repeated values.
using Multiset = std::vector<ValueMultiplicity>;

/// Sorts descending and merges equal values; drops zero multiplicities.
Multiset normalize(Multiset table);

std::int64_t total_multiplicity(const Multiset& table);

// Integer eigenvalues of a circulant matrix indexed by r = 0..n-1, where the
// r-th value is the eigenvalue on the character k -> w_n^{rk}. The sorted
// multiset is derived once at construction; the object is immutable.
class IndexedSpectrum {
public:
    IndexedSpectrum() = default;
    explicit IndexedSpectrum(std::vector<std::int64_t> values);

    std::size_t size() const noexcept { return values_.size(); }
    std::int64_t operator[](std::size_t r) const { return values_[r]; }
    std::span<const std::int64_t> values() const noexcept { return values_; }
    const Multiset& multiset() const noexcept { return multiset_; }

    std::int64_t sum() const;
    /// Sum of absolute values.
    std::int64_t energy() const;
    std::int64_t multiplicity(std::int64_t value) const;

    /// Same eigenvalue multiset (index order ignored).
    bool cospectral_with(const IndexedSpectrum& other) const { return multiset_ == other.multiset_; }

    friend bool operator==(const IndexedSpectrum& a, const IndexedSpectrum& b) { return a.values_ == b.values_; }

private:
    std::vector<std::int64_t> values_;
    Multiset multiset_;
};

}  // namespace icg
