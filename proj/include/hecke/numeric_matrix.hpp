#pragma once

#include <complex>
#include <vector>

#include "hecke/tensor_operator.hpp"

namespace hecke {

/// Small dense complex matrix for the floating verification paths.
struct ComplexMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::complex<double>> a;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    std::complex<double>& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const std::complex<double>& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static ComplexMatrix identity(std::size_t n);

    ComplexMatrix operator*(const ComplexMatrix& o) const;
    ComplexMatrix operator+(const ComplexMatrix& o) const;
    ComplexMatrix operator-(const ComplexMatrix& o) const;
    ComplexMatrix scaled(std::complex<double> f) const;
    ComplexMatrix adjoint() const;

    double max_abs() const;
};

/// Evaluate every entry at a complex mu0.
ComplexMatrix to_complex(const TensorOperator& op, std::complex<double> mu0,
                         double pole_tolerance = 1e-12);

} // namespace hecke
