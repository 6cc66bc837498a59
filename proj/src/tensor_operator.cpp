#include "hecke/tensor_operator.hpp"

#include <sstream>

namespace hecke {

MIndex mindex_encode(const std::vector<int>& digits, int d) {
    MIndex idx = 0;
    for (int v : digits) {
        if (v < 0 || v >= d) throw ShapeMismatch("multi-index digit out of range");
        idx = idx * static_cast<MIndex>(d) + static_cast<MIndex>(v);
    }
    return idx;
}

std::vector<int> mindex_decode(MIndex idx, int d, int n) {
    std::vector<int> digits(static_cast<size_t>(n), 0);
    for (int pos = n - 1; pos >= 0; --pos) {
        digits[static_cast<size_t>(pos)] = static_cast<int>(idx % static_cast<MIndex>(d));
        idx /= static_cast<MIndex>(d);
    }
    if (idx != 0) throw ShapeMismatch("multi-index out of range");
    return digits;
}

MIndex mindex_pow(int d, int n) {
    MIndex out = 1;
    for (int k = 0; k < n; ++k) out *= static_cast<MIndex>(d);
    return out;
}

// ---------------------------------------------------------------------------
// TensorOperator

TensorOperator::TensorOperator(int d, int row_pow, int col_pow)
    : d_(d), row_pow_(row_pow), col_pow_(col_pow) {
    if (d < 1 || row_pow < 0 || col_pow < 0) throw ShapeMismatch("bad operator shape");
}

TensorOperator TensorOperator::identity(int d, int n) {
    TensorOperator out(d, n, n);
    for (MIndex i = 0, e = mindex_pow(d, n); i < e; ++i)
        out.cols_[i].emplace(i, RationalScalar::one());
    return out;
}

TensorOperator TensorOperator::diagonal_projector(int d, int n, const std::vector<bool>& keep) {
    if (static_cast<int>(keep.size()) != d) throw ShapeMismatch("projector mask size");
    TensorOperator out(d, n, n);
    for (MIndex i = 0, e = mindex_pow(d, n); i < e; ++i) {
        bool ok = true;
        for (int v : mindex_decode(i, d, n))
            if (!keep[static_cast<size_t>(v)]) {
                ok = false;
                break;
            }
        if (ok) out.cols_[i].emplace(i, RationalScalar::one());
    }
    return out;
}

std::size_t TensorOperator::nnz() const {
    std::size_t total = 0;
    for (const auto& [c, col] : cols_) total += col.size();
    return total;
}

RationalScalar TensorOperator::entry(MIndex row, MIndex col) const {
    auto it = cols_.find(col);
    if (it == cols_.end()) return RationalScalar::zero();
    auto it2 = it->second.find(row);
    return it2 == it->second.end() ? RationalScalar::zero() : it2->second;
}

void TensorOperator::add_entry(MIndex row, MIndex col, const RationalScalar& c) {
    if (row >= rows() || col >= cols()) throw ShapeMismatch("entry outside operator shape");
    if (c.is_zero()) return;
    auto& column = cols_[col];
    auto it = column.find(row);
    if (it == column.end()) {
        column.emplace(row, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) {
            column.erase(it);
            if (column.empty()) cols_.erase(col);
        }
    }
}

TensorOperator TensorOperator::operator+(const TensorOperator& o) const {
    if (d_ != o.d_ || row_pow_ != o.row_pow_ || col_pow_ != o.col_pow_)
        throw ShapeMismatch("operator sum");
    TensorOperator out = *this;
    for (const auto& [c, col] : o.cols_)
        for (const auto& [r, v] : col) out.add_entry(r, c, v);
    return out;
}

TensorOperator TensorOperator::operator-(const TensorOperator& o) const {
    if (d_ != o.d_ || row_pow_ != o.row_pow_ || col_pow_ != o.col_pow_)
        throw ShapeMismatch("operator difference");
    TensorOperator out = *this;
    for (const auto& [c, col] : o.cols_)
        for (const auto& [r, v] : col) out.add_entry(r, c, -v);
    return out;
}

TensorOperator TensorOperator::operator-() const {
    TensorOperator out(d_, row_pow_, col_pow_);
    for (const auto& [c, col] : cols_)
        for (const auto& [r, v] : col) out.cols_[c].emplace(r, -v);
    return out;
}

TensorOperator TensorOperator::operator*(const RationalScalar& c) const {
    TensorOperator out(d_, row_pow_, col_pow_);
    if (c.is_zero()) return out;
    for (const auto& [j, col] : cols_)
        for (const auto& [r, v] : col) out.cols_[j].emplace(r, v * c);
    return out;
}

bool TensorOperator::operator==(const TensorOperator& o) const {
    return d_ == o.d_ && row_pow_ == o.row_pow_ && col_pow_ == o.col_pow_ && cols_ == o.cols_;
}

TensorOperator TensorOperator::transpose() const {
    TensorOperator out(d_, col_pow_, row_pow_);
    for (const auto& [c, col] : cols_)
        for (const auto& [r, v] : col) out.cols_[r].emplace(c, v);
    return out;
}

std::string TensorOperator::to_string() const {
    std::ostringstream os;
    os << "operator(d=" << d_ << ", " << col_pow_ << " -> " << row_pow_ << ", nnz=" << nnz()
       << ")";
    return os.str();
}

TensorOperator compose(const TensorOperator& a, const TensorOperator& b) {
    if (a.dim() != b.dim() || a.col_pow() != b.row_pow())
        throw ShapeMismatch("operator composition " + a.to_string() + " after " + b.to_string());
    TensorOperator out(a.dim(), a.row_pow(), b.col_pow());
    for (const auto& [j, bcol] : b.columns()) {
        for (const auto& [k, bv] : bcol) {
            auto it = a.columns().find(k);
            if (it == a.columns().end()) continue;
            for (const auto& [i, av] : it->second) out.add_entry(i, j, av * bv);
        }
    }
    return out;
}

TensorOperator tensor(const TensorOperator& a, const TensorOperator& b) {
    if (a.dim() != b.dim()) throw ShapeMismatch("tensor product of different local dimensions");
    TensorOperator out(a.dim(), a.row_pow() + b.row_pow(), a.col_pow() + b.col_pow());
    const MIndex brows = b.rows(), bcols = b.cols();
    for (const auto& [ca, cola] : a.columns())
        for (const auto& [ra, va] : cola)
            for (const auto& [cb, colb] : b.columns())
                for (const auto& [rb, vb] : colb)
                    out.add_entry(ra * brows + rb, ca * bcols + cb, va * vb);
    return out;
}

TensorOperator pad_operator(const TensorOperator& op, int left, int right) {
    if (left < 0 || right < 0) throw ShapeMismatch("negative padding");
    TensorOperator out(op.dim(), op.row_pow() + left + right, op.col_pow() + left + right);
    const MIndex rrows = mindex_pow(op.dim(), right);
    const MIndex lcount = mindex_pow(op.dim(), left);
    const MIndex oprows = op.rows(), opcols = op.cols();
    for (const auto& [c, col] : op.columns())
        for (const auto& [r, v] : col)
            for (MIndex l = 0; l < lcount; ++l)
                for (MIndex rt = 0; rt < rrows; ++rt)
                    out.add_entry((l * oprows + r) * rrows + rt, (l * opcols + c) * rrows + rt,
                                  v);
    return out;
}

// ---------------------------------------------------------------------------
// TensorVector

RationalScalar TensorVector::entry(MIndex idx) const {
    auto it = entries_.find(idx);
    return it == entries_.end() ? RationalScalar::zero() : it->second;
}

void TensorVector::add_entry(MIndex idx, const RationalScalar& c) {
    if (idx >= mindex_pow(d_, n_)) throw ShapeMismatch("vector entry outside shape");
    if (c.is_zero()) return;
    auto it = entries_.find(idx);
    if (it == entries_.end()) {
        entries_.emplace(idx, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

TensorVector TensorVector::operator+(const TensorVector& o) const {
    if (d_ != o.d_ || n_ != o.n_) throw ShapeMismatch("vector sum");
    TensorVector out = *this;
    for (const auto& [i, c] : o.entries_) out.add_entry(i, c);
    return out;
}

TensorVector TensorVector::operator-(const TensorVector& o) const {
    if (d_ != o.d_ || n_ != o.n_) throw ShapeMismatch("vector difference");
    TensorVector out = *this;
    for (const auto& [i, c] : o.entries_) out.add_entry(i, -c);
    return out;
}

TensorVector TensorVector::operator*(const RationalScalar& c) const {
    TensorVector out(d_, n_);
    if (c.is_zero()) return out;
    for (const auto& [i, v] : entries_) out.entries_.emplace(i, v * c);
    return out;
}

bool TensorVector::operator==(const TensorVector& o) const {
    return d_ == o.d_ && n_ == o.n_ && entries_ == o.entries_;
}

TensorOperator TensorVector::as_column() const {
    TensorOperator out(d_, n_, 0);
    for (const auto& [i, c] : entries_) out.add_entry(i, 0, c);
    return out;
}

TensorOperator TensorVector::as_row() const { return as_column().transpose(); }

RationalScalar TensorVector::norm_squared() const {
    RationalScalar acc = RationalScalar::zero();
    for (const auto& [i, c] : entries_) acc += c * c;
    return acc;
}

std::string TensorVector::to_string() const {
    std::ostringstream os;
    os << "vector(d=" << d_ << ", power=" << n_ << ", nnz=" << entries_.size() << ")";
    return os.str();
}

TensorVector apply(const TensorOperator& op, const TensorVector& v) {
    if (op.dim() != v.dim() || op.col_pow() != v.power())
        throw ShapeMismatch("operator applied to vector of wrong power");
    TensorVector out(op.dim(), op.row_pow());
    for (const auto& [i, c] : v.entries()) {
        auto it = op.columns().find(i);
        if (it == op.columns().end()) continue;
        for (const auto& [r, a] : it->second) out.add_entry(r, a * c);
    }
    return out;
}

} // namespace hecke
