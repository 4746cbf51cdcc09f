#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace icg {

/// Square row-major integer matrix, used for adjacency and distance matrices.
class DenseIntMatrix {
public:
    DenseIntMatrix() = default;
    explicit DenseIntMatrix(std::size_t order, std::int64_t fill = 0)
        : order_(order), entries_(order * order, fill) {}

    std::size_t order() const noexcept { return order_; }

    std::int64_t& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

    std::span<const std::int64_t> row(std::size_t i) const {
        return std::span<const std::int64_t>(entries_).subspan(i * order_, order_);
    }

    bool symmetric() const {
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = i + 1; j < order_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    friend bool operator==(const DenseIntMatrix&, const DenseIntMatrix&) = default;

private:
    std::size_t order_ = 0;
    std::vector<std::int64_t> entries_;
};

/// Largest order for which dense matrices are built.
inline constexpr std::int64_t kDefaultOracleCap = 256;

}  // namespace icg
