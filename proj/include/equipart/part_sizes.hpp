#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace equipart {

using Int = std::int64_t;

/// Part sizes n_1..n_l of a complete multipartite graph K_{n_1,...,n_l}.
///
/// Order is preserved; it fixes vertex labelling and witness indices.
/// Construction validates l >= 1, every n_i >= 1, and that the total
/// vertex count fits in Int.
class PartSizes {
public:
    explicit PartSizes(std::vector<Int> sizes);
    PartSizes(std::initializer_list<Int> sizes);

    std::size_t count() const noexcept { return sizes_.size(); }
    Int operator[](std::size_t i) const { return sizes_[i]; }
    Int total() const noexcept { return total_; }
    Int smallest() const noexcept { return smallest_; }

    std::span<const Int> view() const noexcept { return sizes_; }
    const std::vector<Int>& values() const noexcept { return sizes_; }

    auto begin() const noexcept { return sizes_.begin(); }
    auto end() const noexcept { return sizes_.end(); }

    friend bool operator==(const PartSizes&, const PartSizes&) = default;

private:
    std::vector<Int> sizes_;
    Int total_ = 0;
    Int smallest_ = 0;
};

} // namespace equipart
