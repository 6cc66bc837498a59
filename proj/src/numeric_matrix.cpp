#include "hecke/numeric_matrix.hpp"

#include <algorithm>

namespace hecke {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
    if (cols != o.rows) throw ShapeMismatch("complex matrix product");
    ComplexMatrix out(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const std::complex<double> v = at(i, k);
            if (v == std::complex<double>(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < o.cols; ++j) out.at(i, j) += v * o.at(k, j);
        }
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw ShapeMismatch("complex matrix sum");
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] += o.a[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw ShapeMismatch("complex matrix difference");
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] -= o.a[i];
    return out;
}

ComplexMatrix ComplexMatrix::scaled(std::complex<double> f) const {
    ComplexMatrix out = *this;
    for (auto& v : out.a) v *= f;
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(j, i) = std::conj(at(i, j));
    return out;
}

double ComplexMatrix::max_abs() const {
    double worst = 0.0;
    for (const auto& v : a) worst = std::max(worst, std::abs(v));
    return worst;
}

ComplexMatrix to_complex(const TensorOperator& op, std::complex<double> mu0,
                         double pole_tolerance) {
    ComplexMatrix m(static_cast<std::size_t>(op.rows()), static_cast<std::size_t>(op.cols()));
    for (const auto& [c, col] : op.columns())
        for (const auto& [r, v] : col)
            m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                v.eval_complex(mu0, pole_tolerance);
    return m;
}

} // namespace hecke
