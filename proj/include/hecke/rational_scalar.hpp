#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hecke/errors.hpp"

namespace hecke {

using Rational = mpq_class;

/// Which *-involution is in force: q real (mu formally real) or |q| = 1
/// (conjugation sends mu to mu^{-1}).
enum class StarMode { RealRegime, UnitCircleRegime };

/// Laurent polynomial in mu with rational coefficients, stored as a sparse
/// exponent -> coefficient map with no zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly{}; }
    static LaurentPoly one() { return monomial(0, Rational(1)); }
    static LaurentPoly monomial(int exponent, const Rational& c);

    bool is_zero() const { return coeff_.empty(); }
    int lowest_exponent() const;  // throws on zero polynomial
    int highest_exponent() const; // throws on zero polynomial
    const std::map<int, Rational>& terms() const { return coeff_; }
    Rational coefficient(int exponent) const;

    void add_term(int exponent, const Rational& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return coeff_ == o.coeff_; }

    /// Multiply by the monomial c * mu^e.
    LaurentPoly shifted(int e, const Rational& c) const;

    /// Substitute mu -> mu^{-1}.
    LaurentPoly invert_variable() const;

    Rational eval_rational(const Rational& mu0) const; // throws PoleAtPoint for mu0 = 0 with negative exponents
    std::complex<double> eval_complex(const std::complex<double>& mu0) const;

    std::string to_string() const;

private:
    std::map<int, Rational> coeff_;
};

/// Element of the exact quadratic extension Q(sqrt(base)): value a + b*sqrt(base).
/// When base is a perfect rational square the root is folded into `a` at
/// construction time and `b` stays zero, so arithmetic is always a field.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), base_(0) {}
    QuadExt(Rational a, Rational b, Rational base);

    static QuadExt from_rational(const Rational& a, const Rational& base) {
        return QuadExt(a, Rational(0), base);
    }
    /// sqrt(base) itself (folded to a rational when base is a perfect square).
    static QuadExt root(const Rational& base);

    const Rational& rational_part() const { return a_; }
    const Rational& root_part() const { return b_; }
    const Rational& base() const { return base_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool operator==(const QuadExt& o) const;

    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator/(const QuadExt& o) const; // throws PoleAtPoint on zero divisor
    QuadExt operator-() const;

    QuadExt inverse() const;

    /// Exact rational value; throws if the irrational part is nonzero.
    Rational as_rational() const;

    double to_double() const;
    std::string to_string() const;

private:
    Rational a_, b_, base_;
    void check_base(const QuadExt& o) const;
};

/// Exact rational function in mu over Q, with q identified with mu^2.
///
/// Canonical form: numerator/denominator reduced (their gcd, after clearing
/// mu powers, is 1), denominator an ordinary polynomial with lowest exponent
/// zero and lowest-degree coefficient exactly 1. Equality of canonical forms
/// is structural equality.
class RationalScalar {
public:
    RationalScalar() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}
    RationalScalar(int v) : RationalScalar(Rational(v)) {}
    RationalScalar(const Rational& v);
    RationalScalar(LaurentPoly num, LaurentPoly den); // canonicalizes; throws on zero denominator

    static RationalScalar zero() { return RationalScalar(); }
    static RationalScalar one() { return RationalScalar(1); }
    /// mu^k
    static RationalScalar mu(int k = 1);
    /// q^k = mu^{2k}
    static RationalScalar q(int k = 1);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    RationalScalar operator+(const RationalScalar& o) const;
    RationalScalar operator-(const RationalScalar& o) const;
    RationalScalar operator*(const RationalScalar& o) const;
    RationalScalar operator/(const RationalScalar& o) const; // throws on division by zero
    RationalScalar operator-() const;
    RationalScalar& operator+=(const RationalScalar& o) { return *this = *this + o; }
    RationalScalar& operator-=(const RationalScalar& o) { return *this = *this - o; }
    RationalScalar& operator*=(const RationalScalar& o) { return *this = *this * o; }

    bool operator==(const RationalScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalScalar& o) const { return !(*this == o); }

    RationalScalar inverse() const;
    RationalScalar pow(int k) const;

    /// Scalar half of the standard involution: identity for the real regime,
    /// mu -> mu^{-1} on the unit circle.
    RationalScalar conjugate(StarMode mode) const;

    /// Exact value at a rational point mu0.
    Rational eval_rational(const Rational& mu0) const;

    /// Floating value at a complex point; a denominator with modulus below
    /// `pole_tolerance` raises PoleAtPoint.
    std::complex<double> eval_complex(const std::complex<double>& mu0,
                                      double pole_tolerance = 1e-12) const;

    /// Exact value at mu = +sqrt(q0), as an element of Q(sqrt(q0)).
    QuadExt eval_sqrt_q(const Rational& q0) const;

    std::string to_string() const;

private:
    LaurentPoly num_, den_;
    void canonicalize();
};

inline RationalScalar operator*(const Rational& c, const RationalScalar& s) {
    return RationalScalar(c) * s;
}

/// 1 + q + ... + q^{n-1}; rejects n < 1.
RationalScalar q_integer(int n);
/// n!_q = product of q_integer(k), k = 1..n; rejects n < 1.
RationalScalar q_factorial(int n);
/// q-integer/-factorial with q replaced by 1/q.
RationalScalar q_integer_inv(int n);
RationalScalar q_factorial_inv(int n);
/// Ladder value q^d (q - 1) / (q^d - 1), d != 0, in canonical form.
RationalScalar lambda_ladder(int d);

/// If q0 = (p/r)^2 for integers p, r, returns p/r (the positive root).
bool rational_sqrt(const Rational& q0, Rational& root);

std::string rational_to_string(const Rational& v);
Rational rational_from_string(const std::string& s);

} // namespace hecke
