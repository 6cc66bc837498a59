#include "hecke/markov_trace.hpp"

#include <ostream>
#include <sstream>

namespace hecke {

std::string TraceParameter::to_string() const {
    switch (kind) {
        case Kind::Interval: return "Interval(" + rational_to_string(lambda) + ")";
        case Kind::Ladder:
            return "Ladder(d=" + std::to_string(ladder_d) + ", " + rational_to_string(lambda) + ")";
        case Kind::Invalid: return "Invalid(" + rational_to_string(lambda) + ")";
    }
    return "?";
}

RationalScalar markov_trace(const HeckeElement& h, const RationalScalar& lambda) {
    RationalScalar acc = RationalScalar::zero();
    for (const auto& [p, c] : h.terms()) acc += c * lambda.pow(p.cycle_excess());
    return acc;
}

std::vector<std::vector<RationalScalar>> gram_matrix(int n, const RationalScalar& lambda) {
    const WordTable& table = word_table(n);
    const int size = static_cast<int>(table.permutations.size());
    std::vector<std::vector<RationalScalar>> g(static_cast<size_t>(size),
                                               std::vector<RationalScalar>(static_cast<size_t>(size)));
    for (int v = 0; v < size; ++v) {
        HeckeElement tv_star = HeckeElement::basis(table.permutations[static_cast<size_t>(v)].inverse());
        for (int w = 0; w < size; ++w) {
            HeckeElement prod =
                multiply(tv_star, HeckeElement::basis(table.permutations[static_cast<size_t>(w)]));
            g[static_cast<size_t>(v)][static_cast<size_t>(w)] = markov_trace(prod, lambda);
        }
    }
    return g;
}

namespace {

/// Specialized arithmetic at a fixed rational q0: elements are dense
/// coefficient vectors over the canonical basis, indexed by the word table.
struct SpecializedAlgebra {
    const WordTable& table;
    Rational q0;
    int size;
    // per generator i (1-based): target index of p o s_i and whether the
    // right multiplication lengthens
    std::vector<std::vector<std::pair<int, bool>>> right_action;
    // BFS order by word length with the parent edge used to reach each node
    std::vector<int> by_length;
    std::vector<std::pair<int, int>> parent; // (parent index, generator)
    std::vector<int> excess;                 // cycle excess per permutation

    SpecializedAlgebra(int n, Rational q) : table(word_table(n)), q0(std::move(q)) {
        size = static_cast<int>(table.permutations.size());
        right_action.assign(static_cast<size_t>(n), {});
        for (int i = 1; i < n; ++i) {
            auto& row = right_action[static_cast<size_t>(i)];
            row.resize(static_cast<size_t>(size));
            for (int t = 0; t < size; ++t) {
                const Permutation& p = table.permutations[static_cast<size_t>(t)];
                row[static_cast<size_t>(t)] = {table.index.at(p.swap_positions(i)),
                                               p.right_multiplication_lengthens(i)};
            }
        }
        std::vector<std::pair<int, int>> order;
        parent.assign(static_cast<size_t>(size), {-1, 0});
        excess.assign(static_cast<size_t>(size), 0);
        for (int t = 0; t < size; ++t) {
            const auto& word = table.words[static_cast<size_t>(t)];
            order.emplace_back(static_cast<int>(word.size()), t);
            excess[static_cast<size_t>(t)] =
                table.permutations[static_cast<size_t>(t)].cycle_excess();
            if (!word.empty()) {
                int g = word.back();
                parent[static_cast<size_t>(t)] = {
                    table.index.at(
                        table.permutations[static_cast<size_t>(t)].swap_positions(g)),
                    g};
            }
        }
        std::sort(order.begin(), order.end());
        for (auto& [len, t] : order) by_length.push_back(t);
    }

    std::vector<Rational> right_mul_gen(const std::vector<Rational>& x, int i) const {
        std::vector<Rational> out(static_cast<size_t>(size), Rational(0));
        const auto& act = right_action[static_cast<size_t>(i)];
        for (int t = 0; t < size; ++t) {
            const Rational& c = x[static_cast<size_t>(t)];
            if (c == 0) continue;
            auto [target, lengthens] = act[static_cast<size_t>(t)];
            if (lengthens) {
                out[static_cast<size_t>(target)] += c;
            } else {
                out[static_cast<size_t>(t)] += (q0 - 1) * c;
                out[static_cast<size_t>(target)] += q0 * c;
            }
        }
        return out;
    }

    Rational trace(const std::vector<Rational>& x, const std::vector<Rational>& lambda_pow) const {
        Rational acc(0);
        for (int t = 0; t < size; ++t) {
            const Rational& c = x[static_cast<size_t>(t)];
            if (c != 0) acc += c * lambda_pow[static_cast<size_t>(excess[static_cast<size_t>(t)])];
        }
        return acc;
    }
};

} // namespace

std::vector<std::vector<Rational>> gram_matrix_at(int n, const Rational& lambda,
                                                  const Rational& q0) {
    SpecializedAlgebra alg(n, q0);
    std::vector<Rational> lambda_pow(static_cast<size_t>(n), Rational(1));
    for (int k = 1; k < n; ++k)
        lambda_pow[static_cast<size_t>(k)] = lambda_pow[static_cast<size_t>(k - 1)] * lambda;

    std::vector<std::vector<Rational>> g(
        static_cast<size_t>(alg.size), std::vector<Rational>(static_cast<size_t>(alg.size)));
    std::vector<std::vector<Rational>> products(static_cast<size_t>(alg.size));
    for (int v = 0; v < alg.size; ++v) {
        const Permutation inv = alg.table.permutations[static_cast<size_t>(v)].inverse();
        const int inv_idx = alg.table.index.at(inv);
        // walk all w upward by length, extending T_{v^{-1}} T_w by one
        // length-increasing generator at each edge
        for (int t : alg.by_length) {
            auto [par, gen] = alg.parent[static_cast<size_t>(t)];
            if (par < 0) {
                std::vector<Rational> base(static_cast<size_t>(alg.size), Rational(0));
                base[static_cast<size_t>(inv_idx)] = 1;
                products[static_cast<size_t>(t)] = std::move(base);
            } else {
                products[static_cast<size_t>(t)] =
                    alg.right_mul_gen(products[static_cast<size_t>(par)], gen);
            }
            g[static_cast<size_t>(v)][static_cast<size_t>(t)] =
                alg.trace(products[static_cast<size_t>(t)], lambda_pow);
        }
    }
    return g;
}

int gram_rank(int n, const Rational& lambda, const Rational& q0) {
    return dense_rank(gram_matrix_at(n, lambda, q0));
}

bool gram_positive_definite(int n, const Rational& lambda, const Rational& q0) {
    auto g = gram_matrix_at(n, lambda, q0);
    auto pivots = symmetric_pivots(std::move(g));
    if (static_cast<int>(pivots.size()) != static_cast<int>(word_table(n).permutations.size()))
        return false;
    for (const auto& p : pivots)
        if (p <= 0) return false;
    return true;
}

bool kernel_membership(const HeckeElement& h, const Rational& lambda, const Rational& q0) {
    HeckeElement prod = multiply(h.star(StarMode::RealRegime), h);
    QuadExt acc = QuadExt::from_rational(Rational(0), q0);
    for (const auto& [p, c] : prod.terms()) {
        QuadExt coeff = c.eval_sqrt_q(q0);
        Rational lp = 1;
        for (int k = 0; k < p.cycle_excess(); ++k) lp *= lambda;
        acc = acc + coeff * QuadExt::from_rational(lp, q0);
    }
    return acc.is_zero();
}

TraceParameter classify_lambda(const Rational& lambda, const Rational& q0, int probe_bound) {
    if (q0 < 1) throw Error("classify_lambda requires q0 >= 1");
    TraceParameter out;
    out.lambda = lambda;
    for (int ad = 1; ad <= probe_bound; ++ad) {
        for (int d : {ad, -ad}) {
            Rational ladder = lambda_ladder(d).eval_sqrt_q(q0).as_rational();
            if (ladder == lambda) {
                out.kind = TraceParameter::Kind::Ladder;
                out.ladder_d = d;
                return out;
            }
        }
    }
    if (lambda >= 0 && lambda <= q0 - 1) {
        out.kind = TraceParameter::Kind::Interval;
        return out;
    }
    out.kind = TraceParameter::Kind::Invalid;
    return out;
}

void export_gram_csv(std::ostream& os, int n, const Rational& lambda, const Rational& q0) {
    auto g = gram_matrix_at(n, lambda, q0);
    for (const auto& row : g) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) os << ",";
            os << row[c].get_num() << "/" << row[c].get_den();
        }
        os << "\n";
    }
}

} // namespace hecke
