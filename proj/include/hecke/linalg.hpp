#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hecke/rational_scalar.hpp"

namespace hecke {

inline bool field_is_zero(const Rational& x) { return x == 0; }
inline bool field_is_zero(const QuadExt& x) { return x.is_zero(); }

/// Exact rank by Gaussian elimination over a field; rows are consumed.
template <class F>
int dense_rank(std::vector<std::vector<F>> m) {
    if (m.empty()) return 0;
    const size_t cols = m[0].size();
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t pivot = row;
        while (pivot < m.size() && field_is_zero(m[pivot][col])) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        for (size_t r = row + 1; r < m.size(); ++r) {
            if (field_is_zero(m[r][col])) continue;
            F f = m[r][col] / m[row][col];
            for (size_t c = col; c < cols; ++c) m[r][c] = m[r][c] - f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

/// Symmetric elimination without row exchanges.  Returns the pivot sequence;
/// stops early at a zero pivot (the matrix is then not positive definite).
/// All pivots positive and as many pivots as rows is the Sylvester test.
std::vector<Rational> symmetric_pivots(std::vector<std::vector<Rational>> m);

/// Incremental exact row reduction for sparse rows over Q(sqrt(q0)); tracks
/// the dimension of the span of the rows fed in.
class SparseRowReducer {
public:
    /// Reduce the row against the current pivots; returns true (and keeps a
    /// new pivot) when the row enlarges the span.
    bool add_row(std::map<std::uint64_t, QuadExt> row);
    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    std::map<std::uint64_t, std::map<std::uint64_t, QuadExt>> pivots_; // leading col -> row
};

} // namespace hecke
