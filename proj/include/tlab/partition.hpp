#pragma once

#include <vector>

namespace tlab {

// Integer partition: weakly decreasing, strictly positive parts.
// The empty partition is `{}`.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {}

    int rows() const { return static_cast<int>(parts.size()); }

    // Part at 1-based index i; zero beyond the last part.
    int at(int i) const {
        return (i >= 1 && i <= rows()) ? parts[static_cast<size_t>(i - 1)] : 0;
    }

    long long size() const {
        long long s = 0;
        for (int p : parts) s += p;
        return s;
    }

    bool empty() const { return parts.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;
};

bool is_valid_partition(const Partition& p);
void validate_partition(const Partition& p);

// True iff q fits inside p row by row.
bool contains(const Partition& p, const Partition& q);

Partition conjugate(const Partition& p);

// Drops trailing zero parts; rejects negative or interior-zero parts.
Partition normalized_partition(std::vector<int> parts);

bool partition_less(const Partition& a, const Partition& b);

}  // namespace tlab
