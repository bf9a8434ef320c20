#include "tlab/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace tlab {

bool is_valid_partition(const Partition& p) {
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i] <= 0) return false;
        if (i > 0 && p.parts[i] > p.parts[i - 1]) return false;
    }
    return true;
}

void validate_partition(const Partition& p) {
    if (!is_valid_partition(p))
        throw std::invalid_argument("partition parts must be weakly decreasing and positive");
}

bool contains(const Partition& p, const Partition& q) {
    if (q.rows() > p.rows()) {
        // extra rows of q must be zero, but parts are positive
        return false;
    }
    for (int i = 1; i <= q.rows(); ++i)
        if (q.at(i) > p.at(i)) return false;
    return true;
}

Partition conjugate(const Partition& p) {
    std::vector<int> out;
    if (p.parts.empty()) return Partition{};
    out.resize(static_cast<size_t>(p.parts[0]), 0);
    for (int part : p.parts)
        for (int j = 0; j < part; ++j) out[static_cast<size_t>(j)] += 1;
    return Partition{std::move(out)};
}

Partition normalized_partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    Partition p{std::move(parts)};
    validate_partition(p);
    return p;
}

bool partition_less(const Partition& a, const Partition& b) {
    return a.parts < b.parts;
}

}  // namespace tlab
