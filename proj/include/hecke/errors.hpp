#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& what) : Error("pole at evaluation point: " + what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error("index out of range: " + what) {}
};

struct OrderMismatch : Error {
    explicit OrderMismatch(const std::string& what) : Error("order mismatch: " + what) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error("shape mismatch: " + what) {}
};

struct ToleranceExceeded : Error {
    explicit ToleranceExceeded(const std::string& what) : Error("tolerance exceeded: " + what) {}
};

struct NotSupportedSpectrum : Error {
    explicit NotSupportedSpectrum(const std::string& what) : Error("unsupported spectrum: " + what) {}
};

struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& what) : Error("unknown suite: " + what) {}
};

struct InvalidGrid : Error {
    explicit InvalidGrid(const std::string& what) : Error("invalid grid: " + what) {}
};

} // namespace hecke
