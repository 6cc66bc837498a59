#include "hecke/hecke_element.hpp"

#include <sstream>

namespace hecke {

HeckeElement HeckeElement::unit(int order) {
    HeckeElement e(order);
    e.add_term(Permutation(order), RationalScalar::one());
    return e;
}

HeckeElement HeckeElement::basis(const Permutation& p, RationalScalar c) {
    HeckeElement e(p.order());
    e.add_term(p, c);
    return e;
}

HeckeElement HeckeElement::generator(int order, int i) {
    if (i < 1 || i > order - 1) throw IndexOutOfRange("generator index " + std::to_string(i));
    return basis(Permutation(order).swap_values(i));
}

HeckeElement HeckeElement::idempotent_e(int order, int i) {
    RationalScalar inv = (RationalScalar::q() + RationalScalar::one()).inverse();
    return (unit(order) + generator(order, i)) * inv;
}

HeckeElement HeckeElement::generator_inverse(int order, int i) {
    RationalScalar qinv = RationalScalar::q(-1);
    return generator(order, i) * qinv + unit(order) * (qinv - RationalScalar::one());
}

RationalScalar HeckeElement::coefficient(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? RationalScalar::zero() : it->second;
}

void HeckeElement::add_term(const Permutation& p, const RationalScalar& c) {
    if (p.order() != order_) throw OrderMismatch("term order");
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
    if (order_ != o.order_) throw OrderMismatch("sum of elements");
    HeckeElement out = *this;
    for (const auto& [p, c] : o.terms_) out.add_term(p, c);
    return out;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
    if (order_ != o.order_) throw OrderMismatch("sum of elements");
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
    if (order_ != o.order_) throw OrderMismatch("difference of elements");
    HeckeElement out = *this;
    for (const auto& [p, c] : o.terms_) out.add_term(p, -c);
    return out;
}

HeckeElement HeckeElement::operator-() const {
    HeckeElement out(order_);
    for (const auto& [p, c] : terms_) out.terms_.emplace(p, -c);
    return out;
}

HeckeElement HeckeElement::operator*(const RationalScalar& c) const {
    HeckeElement out(order_);
    if (c.is_zero()) return out;
    for (const auto& [p, x] : terms_) out.terms_.emplace(p, x * c);
    return out;
}

HeckeElement HeckeElement::left_mul_generator(int i) const {
    if (i < 1 || i > order_ - 1) throw IndexOutOfRange("generator index " + std::to_string(i));
    static const RationalScalar qs = RationalScalar::q();
    static const RationalScalar qm1 = RationalScalar::q() - RationalScalar::one();
    HeckeElement out(order_);
    for (const auto& [p, c] : terms_) {
        if (p.left_multiplication_lengthens(i)) {
            out.add_term(p.swap_values(i), c);
        } else {
            out.add_term(p, qm1 * c);
            out.add_term(p.swap_values(i), qs * c);
        }
    }
    return out;
}

HeckeElement HeckeElement::right_mul_generator(int i) const {
    if (i < 1 || i > order_ - 1) throw IndexOutOfRange("generator index " + std::to_string(i));
    static const RationalScalar qs = RationalScalar::q();
    static const RationalScalar qm1 = RationalScalar::q() - RationalScalar::one();
    HeckeElement out(order_);
    for (const auto& [p, c] : terms_) {
        if (p.right_multiplication_lengthens(i)) {
            out.add_term(p.swap_positions(i), c);
        } else {
            out.add_term(p, qm1 * c);
            out.add_term(p.swap_positions(i), qs * c);
        }
    }
    return out;
}

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) {
    if (a.order() != b.order()) throw OrderMismatch("product of elements");
    const WordTable& table = word_table(a.order());
    HeckeElement out(a.order());
    for (const auto& [p, c] : a.terms()) {
        const auto& word = table.word_of(p);
        HeckeElement acc = b;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            acc = acc.left_mul_generator(*it);
        out += acc * c;
    }
    return out;
}

HeckeElement HeckeElement::shift() const {
    HeckeElement out(order_ + 1);
    const WordTable& table = word_table(order_);
    for (const auto& [p, c] : terms_) {
        const auto& word = table.word_of(p);
        std::vector<int> shifted;
        shifted.reserve(word.size());
        for (int g : word) shifted.push_back(g + 1);
        out.add_term(permutation_from_word(shifted, order_ + 1), c);
    }
    return out;
}

HeckeElement HeckeElement::embed(int m) const {
    if (m < order_) throw OrderMismatch("embed target below element order");
    HeckeElement out(m);
    for (const auto& [p, c] : terms_) out.add_term(p.embed(m), c);
    return out;
}

HeckeElement HeckeElement::star(StarMode mode) const {
    HeckeElement out(order_);
    if (mode == StarMode::RealRegime) {
        // generators selfadjoint, so T_w* = T_{w^{-1}}
        for (const auto& [p, c] : terms_) out.add_term(p.inverse(), c);
        return out;
    }
    // |q| = 1: g* = g^{-1}, extended antimultiplicatively along the
    // canonical reduced word, with scalar conjugation mu -> mu^{-1}.
    const WordTable& table = word_table(order_);
    for (const auto& [p, c] : terms_) {
        const auto& word = table.word_of(p);
        HeckeElement acc = unit(order_);
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            RationalScalar qinv = RationalScalar::q(-1);
            acc = acc.right_mul_generator(*it) * qinv +
                  acc * (qinv - RationalScalar::one());
        }
        out += acc * c.conjugate(StarMode::UnitCircleRegime);
    }
    return out;
}

HeckeElement HeckeElement::alpha_dual() const {
    const WordTable& table = word_table(order_);
    static const RationalScalar qm1 = RationalScalar::q() - RationalScalar::one();
    HeckeElement out(order_);
    for (const auto& [p, c] : terms_) {
        HeckeElement acc = unit(order_);
        for (int g : table.word_of(p))
            acc = acc * qm1 - acc.right_mul_generator(g);
        out += acc * c;
    }
    return out;
}

std::string HeckeElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        os << c.to_string() << " * " << p.to_string();
        first = false;
    }
    return os.str();
}

} // namespace hecke
