#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

/// Integer partition with weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;
    int rows() const { return static_cast<int>(parts.size()); }
    int part(int i) const { // 1-based, zero beyond the last row
        return (i >= 1 && i <= rows()) ? parts[static_cast<size_t>(i - 1)] : 0;
    }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    std::string to_string() const; // "[3 1 1]"
};

/// All partitions of n (optionally with at most max_rows rows), listed with
/// the largest first part first.
std::vector<Partition> partitions_of(int n, int max_rows = -1);

/// Number of standard Young tableaux of the given shape, by the hook-length
/// product.
std::int64_t standard_tableaux_count(const Partition& shape);

/// Sum over partitions of n with at most d rows of the squared tableau
/// count; the rank a faithful-on-its-image symmetry of local dimension d
/// must reach at tensor power n.
std::int64_t predicted_image_dim(int n, int d);

/// Diagram with at most k rows and first-minus-last row difference at most
/// m - k (the last row read as 0 when absent).
bool is_km_diagram(const Partition& shape, int k, int m);

} // namespace hecke
