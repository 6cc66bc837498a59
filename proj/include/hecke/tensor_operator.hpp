#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hecke/rational_scalar.hpp"

namespace hecke {

using MIndex = std::uint64_t;

/// Encode digits (0-based, first tensor factor most significant) as a base-d
/// multi-index.
MIndex mindex_encode(const std::vector<int>& digits, int d);
std::vector<int> mindex_decode(MIndex idx, int d, int n);
MIndex mindex_pow(int d, int n); // d^n

/// Sparse exact linear map from the col_pow-th to the row_pow-th tensor
/// power of a d-dimensional space.  Stored column-major with no zero
/// entries; equality is structural.
class TensorOperator {
public:
    TensorOperator(int d, int row_pow, int col_pow);

    static TensorOperator identity(int d, int n);
    /// Diagonal projector onto the span of the basis vectors whose digits
    /// all satisfy keep[digit].
    static TensorOperator diagonal_projector(int d, int n, const std::vector<bool>& keep);

    int dim() const { return d_; }
    int row_pow() const { return row_pow_; }
    int col_pow() const { return col_pow_; }
    MIndex rows() const { return mindex_pow(d_, row_pow_); }
    MIndex cols() const { return mindex_pow(d_, col_pow_); }

    bool is_zero() const { return cols_.empty(); }
    std::size_t nnz() const;
    const std::map<MIndex, std::map<MIndex, RationalScalar>>& columns() const { return cols_; }
    RationalScalar entry(MIndex row, MIndex col) const;
    void add_entry(MIndex row, MIndex col, const RationalScalar& c);

    TensorOperator operator+(const TensorOperator& o) const;
    TensorOperator operator-(const TensorOperator& o) const;
    TensorOperator operator-() const;
    TensorOperator operator*(const RationalScalar& c) const;
    bool operator==(const TensorOperator& o) const;
    bool operator!=(const TensorOperator& o) const { return !(*this == o); }

    /// Formal transpose; the adjoint in the real regime where mu is real.
    TensorOperator transpose() const;

    std::string to_string() const;

private:
    int d_, row_pow_, col_pow_;
    std::map<MIndex, std::map<MIndex, RationalScalar>> cols_;
};

/// compose(a, b) = a after b; requires matching inner powers.
TensorOperator compose(const TensorOperator& a, const TensorOperator& b);
/// Kronecker product respecting both row and column powers.
TensorOperator tensor(const TensorOperator& a, const TensorOperator& b);
/// 1^{(left)} (x) op (x) 1^{(right)}.
TensorOperator pad_operator(const TensorOperator& op, int left, int right);

inline TensorOperator operator*(const RationalScalar& c, const TensorOperator& op) {
    return op * c;
}

/// Sparse exact vector in the n-th tensor power.
class TensorVector {
public:
    TensorVector(int d, int n) : d_(d), n_(n) {}

    int dim() const { return d_; }
    int power() const { return n_; }
    const std::map<MIndex, RationalScalar>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    RationalScalar entry(MIndex idx) const;
    void add_entry(MIndex idx, const RationalScalar& c);

    TensorVector operator+(const TensorVector& o) const;
    TensorVector operator-(const TensorVector& o) const;
    TensorVector operator*(const RationalScalar& c) const;
    bool operator==(const TensorVector& o) const;

    /// The map from the 0-th power: column operator with a single column.
    TensorOperator as_column() const;
    /// Its formal adjoint (row form, real regime).
    TensorOperator as_row() const;

    /// <*this, *this> with mu treated as real: sum of squared coefficients.
    RationalScalar norm_squared() const;

    std::string to_string() const;

private:
    int d_, n_;
    std::map<MIndex, RationalScalar> entries_;
};

TensorVector apply(const TensorOperator& op, const TensorVector& v);

} // namespace hecke
