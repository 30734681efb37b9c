#include "equipart/part_sizes.hpp"

#include <limits>
#include <string>

#include "equipart/error.hpp"

namespace equipart {

PartSizes::PartSizes(std::vector<Int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) {
        throw InvalidArgument("part list is empty");
    }
    smallest_ = sizes_.front();
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        const Int n = sizes_[i];
        if (n < 1) {
            throw InvalidArgument("part " + std::to_string(i) + " has size " + std::to_string(n) +
                                  "; sizes must be positive");
        }
        if (total_ > std::numeric_limits<Int>::max() - n) {
            throw InvalidArgument("total vertex count overflows");
        }
        total_ += n;
        if (n < smallest_) smallest_ = n;
    }
}

PartSizes::PartSizes(std::initializer_list<Int> sizes) : PartSizes(std::vector<Int>(sizes)) {}

} // namespace equipart
