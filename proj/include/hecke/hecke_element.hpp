#pragma once

#include <map>
#include <string>

#include "hecke/permutation.hpp"
#include "hecke/rational_scalar.hpp"

namespace hecke {

/// Element of the order-n algebra with quadratic relation
/// g_i^2 = (q-1) g_i + q, stored on the permutation-indexed basis with
/// rational-function coefficients and no stored zeros.
class HeckeElement {
public:
    explicit HeckeElement(int order) : order_(order) {
        if (order < 1) throw Error("algebra order must be >= 1");
    }

    static HeckeElement zero(int order) { return HeckeElement(order); }
    static HeckeElement unit(int order);
    static HeckeElement basis(const Permutation& p, RationalScalar c = RationalScalar::one());
    /// T_{s_i}; requires 1 <= i <= order-1.
    static HeckeElement generator(int order, int i);
    /// e_i = (1 + g_i)/(q + 1).
    static HeckeElement idempotent_e(int order, int i);
    /// g_i^{-1} = q^{-1} g_i + (q^{-1} - 1).
    static HeckeElement generator_inverse(int order, int i);

    int order() const { return order_; }
    const std::map<Permutation, RationalScalar>& terms() const { return terms_; }
    int term_count() const { return static_cast<int>(terms_.size()); }
    RationalScalar coefficient(const Permutation& p) const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Permutation& p, const RationalScalar& c);

    HeckeElement operator+(const HeckeElement& o) const;
    HeckeElement operator-(const HeckeElement& o) const;
    HeckeElement operator-() const;
    HeckeElement operator*(const RationalScalar& c) const;
    HeckeElement& operator+=(const HeckeElement& o);

    bool operator==(const HeckeElement& o) const {
        return order_ == o.order_ && terms_ == o.terms_;
    }
    bool operator!=(const HeckeElement& o) const { return !(*this == o); }

    /// g_i * (*this), by the length dichotomy on basis words.
    HeckeElement left_mul_generator(int i) const;
    /// (*this) * g_i.
    HeckeElement right_mul_generator(int i) const;

    /// Image under the shift monomorphism g_i -> g_{i+1}; order grows by one.
    HeckeElement shift() const;
    /// Same element viewed at a larger order (generators unchanged).
    HeckeElement embed(int m) const;

    /// Antimultiplicative conjugate-linear involution fixing the e_i.
    HeckeElement star(StarMode mode) const;
    /// Algebra automorphism g_i -> q - 1 - g_i.
    HeckeElement alpha_dual() const;

    std::string to_string() const;

private:
    int order_;
    std::map<Permutation, RationalScalar> terms_;
};

/// Product in the order-n algebra; the left factor is expanded along the
/// canonical reduced word of each of its basis terms.
HeckeElement multiply(const HeckeElement& a, const HeckeElement& b);

inline HeckeElement operator*(const RationalScalar& c, const HeckeElement& x) { return x * c; }

} // namespace hecke
