#include "hecke/rational_scalar.hpp"

#include <cassert>
#include <sstream>

namespace hecke {

namespace {

Rational rational_pow(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    if (x == 0) {
        if (e > 0) return Rational(0);
        throw PoleAtPoint("0 raised to a negative power");
    }
    mpz_class num = x.get_num(), den = x.get_den();
    unsigned long a = static_cast<unsigned long>(e > 0 ? e : -e);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), a);
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), a);
    Rational r(pn, pd);
    r.canonicalize();
    if (e < 0) return Rational(1) / r;
    return r;
}

// Dense ordinary-polynomial helpers used by canonicalization.  A dense poly
// is a coefficient vector p[i] = coeff of mu^i with no leading zeros.
using Dense = std::vector<Rational>;

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense(const LaurentPoly& p, int& shift) {
    shift = p.lowest_exponent();
    Dense out(static_cast<size_t>(p.highest_exponent() - shift) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) out[static_cast<size_t>(e - shift)] = c;
    return out;
}

LaurentPoly from_dense(const Dense& p, int shift) {
    LaurentPoly out;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) out.add_term(static_cast<int>(i) + shift, p[i]);
    return out;
}

// Remainder of a by b; b nonzero.
Dense poly_mod(Dense a, const Dense& b) {
    assert(!b.empty());
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Exact quotient a / b; remainder must vanish.
Dense poly_div_exact(Dense a, const Dense& b) {
    assert(!b.empty());
    Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
        if (a.empty()) break;
    }
    assert(a.empty() && "exact polynomial division left a remainder");
    return q;
}

Dense poly_gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Dense r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
        if (!b.empty()) {
            // keep remainders monic to limit coefficient growth
            Rational lead = b.back();
            for (auto& c : b) c /= lead;
        }
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

} // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& c) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
}

int LaurentPoly::lowest_exponent() const {
    if (coeff_.empty()) throw Error("lowest_exponent of zero polynomial");
    return coeff_.begin()->first;
}

int LaurentPoly::highest_exponent() const {
    if (coeff_.empty()) throw Error("highest_exponent of zero polynomial");
    return coeff_.rbegin()->first;
}

Rational LaurentPoly::coefficient(int exponent) const {
    auto it = coeff_.find(exponent);
    return it == coeff_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const Rational& c) {
    if (c == 0) return;
    auto it = coeff_.find(exponent);
    if (it == coeff_.end()) {
        coeff_.emplace(exponent, c);
    } else {
        it->second += c;
        if (it->second == 0) coeff_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.coeff_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.coeff_) out.add_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : coeff_)
        for (const auto& [e2, c2] : o.coeff_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeff_) out.coeff_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::shifted(int e, const Rational& c) const {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [e1, c1] : coeff_) out.coeff_.emplace(e1 + e, c1 * c);
    return out;
}

LaurentPoly LaurentPoly::invert_variable() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeff_) out.coeff_.emplace(-e, c);
    return out;
}

Rational LaurentPoly::eval_rational(const Rational& mu0) const {
    Rational acc(0);
    for (const auto& [e, c] : coeff_) acc += c * rational_pow(mu0, e);
    return acc;
}

std::complex<double> LaurentPoly::eval_complex(const std::complex<double>& mu0) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : coeff_) acc += c.get_d() * std::pow(mu0, e);
    return acc;
}

std::string LaurentPoly::to_string() const {
    if (coeff_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeff_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string mon;
        if (e == 1) mon = "mu";
        else if (e != 0) mon = "mu^" + std::to_string(e);
        if (mon.empty()) os << a;
        else if (a == 1) os << mon;
        else os << a << "*" << mon;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// QuadExt

QuadExt::QuadExt(Rational a, Rational b, Rational base)
    : a_(std::move(a)), b_(std::move(b)), base_(std::move(base)) {
    if (b_ != 0) {
        Rational r;
        if (rational_sqrt(base_, r)) {
            a_ += b_ * r;
            b_ = 0;
        }
    }
}

QuadExt QuadExt::root(const Rational& base) { return QuadExt(Rational(0), Rational(1), base); }

void QuadExt::check_base(const QuadExt& o) const {
    if (b_ != 0 && o.b_ != 0 && base_ != o.base_)
        throw Error("QuadExt base mismatch");
}

bool QuadExt::operator==(const QuadExt& o) const {
    check_base(o);
    return a_ == o.a_ && b_ == o.b_;
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    check_base(o);
    return QuadExt(a_ + o.a_, b_ + o.b_, b_ != 0 ? base_ : o.base_);
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
    check_base(o);
    return QuadExt(a_ - o.a_, b_ - o.b_, b_ != 0 ? base_ : o.base_);
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
    check_base(o);
    const Rational& base = b_ != 0 ? base_ : o.base_;
    return QuadExt(a_ * o.a_ + b_ * o.b_ * base, a_ * o.b_ + b_ * o.a_, base);
}

QuadExt QuadExt::operator/(const QuadExt& o) const { return *this * o.inverse(); }

QuadExt QuadExt::operator-() const { return QuadExt(-a_, -b_, base_); }

QuadExt QuadExt::inverse() const {
    if (b_ == 0) {
        if (a_ == 0) throw PoleAtPoint("QuadExt division by zero");
        return QuadExt(Rational(1) / a_, Rational(0), base_);
    }
    Rational norm = a_ * a_ - b_ * b_ * base_;
    if (norm == 0) throw PoleAtPoint("QuadExt division by zero norm");
    return QuadExt(a_ / norm, -b_ / norm, base_);
}

Rational QuadExt::as_rational() const {
    if (b_ != 0) throw Error("QuadExt value has a nonzero irrational part");
    return a_;
}

double QuadExt::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(base_.get_d());
}

std::string QuadExt::to_string() const {
    if (b_ == 0) return rational_to_string(a_);
    std::ostringstream os;
    os << rational_to_string(a_) << " + " << rational_to_string(b_) << "*sqrt("
       << rational_to_string(base_) << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// RationalScalar

RationalScalar::RationalScalar(const Rational& v) : den_(LaurentPoly::one()) {
    Rational c = v;
    c.canonicalize();
    if (c != 0) num_ = LaurentPoly::monomial(0, c);
}

RationalScalar::RationalScalar(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("zero denominator");
    canonicalize();
}

RationalScalar RationalScalar::mu(int k) { return RationalScalar(LaurentPoly::monomial(k, 1), LaurentPoly::one()); }

RationalScalar RationalScalar::q(int k) { return mu(2 * k); }

bool RationalScalar::is_one() const { return *this == one(); }

void RationalScalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    int sn = 0, sd = 0;
    Dense n = to_dense(num_, sn);
    Dense d = to_dense(den_, sd);
    Dense g = poly_gcd(n, d);
    if (g.size() > 1) {
        n = poly_div_exact(std::move(n), g);
        d = poly_div_exact(std::move(d), g);
    }
    // denominator: lowest exponent 0, lowest-degree coefficient 1
    Rational c = d.front();
    assert(c != 0);
    for (auto& x : n) x /= c;
    for (auto& x : d) x /= c;
    num_ = from_dense(n, sn - sd);
    den_ = from_dense(d, 0);
}

RationalScalar RationalScalar::operator+(const RationalScalar& o) const {
    return RationalScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalScalar RationalScalar::operator-(const RationalScalar& o) const {
    return RationalScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalScalar RationalScalar::operator*(const RationalScalar& o) const {
    return RationalScalar(num_ * o.num_, den_ * o.den_);
}

RationalScalar RationalScalar::operator/(const RationalScalar& o) const {
    if (o.is_zero()) throw Error("division by zero scalar");
    return RationalScalar(num_ * o.den_, den_ * o.num_);
}

RationalScalar RationalScalar::operator-() const {
    RationalScalar out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalScalar RationalScalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero scalar");
    return RationalScalar(den_, num_);
}

RationalScalar RationalScalar::pow(int k) const {
    if (k == 0) return one();
    RationalScalar base = k > 0 ? *this : inverse();
    RationalScalar acc = one();
    for (int i = 0, e = k > 0 ? k : -k; i < e; ++i) acc = acc * base;
    return acc;
}

RationalScalar RationalScalar::conjugate(StarMode mode) const {
    if (mode == StarMode::RealRegime) return *this;
    return RationalScalar(num_.invert_variable(), den_.invert_variable());
}

Rational RationalScalar::eval_rational(const Rational& mu0) const {
    Rational d = den_.eval_rational(mu0);
    if (d == 0) throw PoleAtPoint("denominator vanishes at mu0 = " + rational_to_string(mu0));
    if (mu0 == 0 && !num_.is_zero() && num_.lowest_exponent() < 0)
        throw PoleAtPoint("negative mu power at mu0 = 0");
    return num_.eval_rational(mu0) / d;
}

std::complex<double> RationalScalar::eval_complex(const std::complex<double>& mu0,
                                                  double pole_tolerance) const {
    std::complex<double> d = den_.eval_complex(mu0);
    if (std::abs(d) < pole_tolerance) throw PoleAtPoint("denominator below pole tolerance");
    if (!num_.is_zero() && num_.lowest_exponent() < 0 && std::abs(mu0) < pole_tolerance)
        throw PoleAtPoint("negative mu power near mu0 = 0");
    return num_.eval_complex(mu0) / d;
}

namespace {
QuadExt eval_poly_sqrt_q(const LaurentPoly& p, const Rational& q0) {
    if (q0 <= 0) throw Error("eval_sqrt_q requires q0 > 0");
    Rational even(0), odd(0);
    for (const auto& [e, c] : p.terms()) {
        if (e % 2 == 0) even += c * rational_pow(q0, e / 2);
        else odd += c * rational_pow(q0, (e - 1) / 2);
    }
    return QuadExt(even, odd, q0);
}
} // namespace

QuadExt RationalScalar::eval_sqrt_q(const Rational& q0) const {
    QuadExt d = eval_poly_sqrt_q(den_, q0);
    if (d.is_zero()) throw PoleAtPoint("denominator vanishes at q = " + rational_to_string(q0));
    return eval_poly_sqrt_q(num_, q0) / d;
}

std::string RationalScalar::to_string() const {
    if (den_ == LaurentPoly::one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// q-combinatorics in the scalar field

RationalScalar q_integer(int n) {
    if (n < 1) throw Error("q_integer requires n >= 1");
    LaurentPoly p;
    for (int k = 0; k < n; ++k) p.add_term(2 * k, 1);
    return RationalScalar(std::move(p), LaurentPoly::one());
}

RationalScalar q_factorial(int n) {
    if (n < 1) throw Error("q_factorial requires n >= 1");
    RationalScalar acc = RationalScalar::one();
    for (int k = 2; k <= n; ++k) acc = acc * q_integer(k);
    return acc;
}

RationalScalar q_integer_inv(int n) {
    if (n < 1) throw Error("q_integer_inv requires n >= 1");
    LaurentPoly p;
    for (int k = 0; k < n; ++k) p.add_term(-2 * k, 1);
    return RationalScalar(std::move(p), LaurentPoly::one());
}

RationalScalar q_factorial_inv(int n) {
    if (n < 1) throw Error("q_factorial_inv requires n >= 1");
    RationalScalar acc = RationalScalar::one();
    for (int k = 2; k <= n; ++k) acc = acc * q_integer_inv(k);
    return acc;
}

RationalScalar lambda_ladder(int d) {
    if (d == 0) throw Error("lambda_ladder is undefined at d = 0");
    LaurentPoly num = LaurentPoly::monomial(2 * d + 2, 1) + LaurentPoly::monomial(2 * d, -1);
    LaurentPoly den = LaurentPoly::monomial(2 * d, 1) + LaurentPoly::monomial(0, -1);
    return RationalScalar(std::move(num), std::move(den));
}

bool rational_sqrt(const Rational& q0, Rational& root) {
    if (q0 < 0) return false;
    if (q0 == 0) {
        root = 0;
        return true;
    }
    mpz_class num = q0.get_num(), den = q0.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

std::string rational_to_string(const Rational& v) { return v.get_str(); }

Rational rational_from_string(const std::string& s) {
    Rational v;
    if (v.set_str(s, 10) != 0) throw Error("cannot parse rational: " + s);
    v.canonicalize();
    return v;
}

} // namespace hecke
