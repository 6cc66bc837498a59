#include "hecke/jw_model.hpp"

#include <cmath>
#include <sstream>

#include "hecke/linalg.hpp"
#include "hecke/numeric_matrix.hpp"

namespace hecke {

TensorOperator gq_operator(int d) {
    if (d < 1) throw ShapeMismatch("local dimension must be >= 1");
    TensorOperator out(d, 2, 2);
    const RationalScalar mu = RationalScalar::mu();
    const RationalScalar qm1 = RationalScalar::q() - RationalScalar::one();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            MIndex col = mindex_encode({i, j}, d);
            MIndex swapped = mindex_encode({j, i}, d);
            if (i == j) {
                out.add_entry(col, col, RationalScalar(-1));
            } else if (i < j) {
                out.add_entry(swapped, col, -mu);
            } else {
                out.add_entry(col, col, qm1);
                out.add_entry(swapped, col, -mu);
            }
        }
    return out;
}

TensorOperator eq_operator(int d) {
    RationalScalar inv = (RationalScalar::q() + RationalScalar::one()).inverse();
    return (TensorOperator::identity(d, 2) + gq_operator(d)) * inv;
}

TensorOperator shifted_generator(int d, int n, int i) {
    if (i < 1 || i > n - 1) throw IndexOutOfRange("shifted generator index");
    return pad_operator(gq_operator(d), i - 1, n - i - 1);
}

TensorOperator epsilon_word_op(int d, int n, const std::vector<int>& word) {
    TensorOperator acc = TensorOperator::identity(d, n);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        acc = compose(shifted_generator(d, n, *it), acc);
    return acc;
}

TensorOperator epsilon_word_op_dual(int d, int n, const std::vector<int>& word) {
    const RationalScalar qm1 = RationalScalar::q() - RationalScalar::one();
    TensorOperator acc = TensorOperator::identity(d, n);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        TensorOperator dual = TensorOperator::identity(d, n) * qm1 - shifted_generator(d, n, *it);
        acc = compose(dual, acc);
    }
    return acc;
}

TensorOperator epsilon_rep(const HeckeElement& h, int d) {
    const int n = h.order();
    const WordTable& table = word_table(n);
    TensorOperator out(d, n, n);
    for (const auto& [p, c] : h.terms())
        out = out + epsilon_word_op(d, n, table.word_of(p)) * c;
    return out;
}

TensorOperator epsilon_rep_dual(const HeckeElement& h, int d) {
    return epsilon_rep(h.alpha_dual(), d);
}

std::vector<std::pair<Rational, int>> spectrum_at(const TensorOperator& op, const Rational& mu0) {
    if (op.row_pow() != op.col_pow()) throw ShapeMismatch("spectrum of non-square operator");
    const std::size_t dim = static_cast<std::size_t>(op.rows());
    std::vector<std::vector<Rational>> dense(dim, std::vector<Rational>(dim, Rational(0)));
    for (const auto& [c, col] : op.columns())
        for (const auto& [r, v] : col)
            dense[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                v.eval_rational(mu0);
    const Rational q0 = mu0 * mu0;
    std::vector<std::pair<Rational, int>> result;
    int total = 0;
    for (const Rational& candidate : {q0, Rational(-1)}) {
        auto shifted = dense;
        for (std::size_t i = 0; i < dim; ++i) shifted[i][i] -= candidate;
        int mult = static_cast<int>(dim) - dense_rank(std::move(shifted));
        if (mult > 0) {
            result.emplace_back(candidate, mult);
            total += mult;
        }
    }
    if (total != static_cast<int>(dim))
        throw NotSupportedSpectrum("eigenvalues outside the probe set {q, -1}");
    return result;
}

namespace {

// Operators specialized to Q(sqrt(q0)), column-major sparse.
using QCol = std::map<MIndex, QuadExt>;
using QOp = std::map<MIndex, QCol>;

QOp specialize(const TensorOperator& op, const Rational& q0) {
    QOp out;
    for (const auto& [c, col] : op.columns())
        for (const auto& [r, v] : col) {
            QuadExt x = v.eval_sqrt_q(q0);
            if (!x.is_zero()) out[c].emplace(r, std::move(x));
        }
    return out;
}

QOp qop_compose(const QOp& a, const QOp& b) {
    QOp out;
    for (const auto& [j, bcol] : b)
        for (const auto& [k, bv] : bcol) {
            auto it = a.find(k);
            if (it == a.end()) continue;
            for (const auto& [i, av] : it->second) {
                QuadExt add = av * bv;
                if (add.is_zero()) continue;
                auto& cell = out[j][i];
                cell = cell + add;
                if (cell.is_zero()) {
                    out[j].erase(i);
                    if (out[j].empty()) out.erase(j);
                }
            }
        }
    return out;
}

std::map<std::uint64_t, QuadExt> qop_flatten(const QOp& op, MIndex rows) {
    std::map<std::uint64_t, QuadExt> out;
    for (const auto& [c, col] : op)
        for (const auto& [r, v] : col) out.emplace(c * rows + r, v);
    return out;
}

} // namespace

std::int64_t image_algebra_dimension(int n, int d, const Rational& q0) {
    if (n < 1 || d < 1) throw ShapeMismatch("image_algebra_dimension arguments");
    const WordTable& table = word_table(n);
    const int size = static_cast<int>(table.permutations.size());
    const MIndex dim = mindex_pow(d, n);

    std::vector<QOp> gens(static_cast<size_t>(n));
    for (int i = 1; i < n; ++i)
        gens[static_cast<size_t>(i)] = specialize(shifted_generator(d, n, i), q0);

    // spanning-tree edges: each non-identity word extends its parent by one
    // length-increasing right multiplication
    std::vector<std::vector<std::pair<int, int>>> children(static_cast<size_t>(size));
    int root = -1;
    for (int t = 0; t < size; ++t) {
        const auto& word = table.words[static_cast<size_t>(t)];
        if (word.empty()) {
            root = t;
            continue;
        }
        int g = word.back();
        int parent = table.index.at(table.permutations[static_cast<size_t>(t)].swap_positions(g));
        children[static_cast<size_t>(parent)].emplace_back(t, g);
    }

    SparseRowReducer reducer;
    QOp identity_op;
    for (MIndex i = 0; i < dim; ++i)
        identity_op[i].emplace(i, QuadExt::from_rational(Rational(1), q0));
    reducer.add_row(qop_flatten(identity_op, dim));

    // depth-first along the tree so only one root-to-leaf path of operators
    // is alive at a time
    std::vector<std::pair<int, QOp>> stack;
    stack.emplace_back(root, std::move(identity_op));
    std::vector<size_t> next_child(static_cast<size_t>(size), 0);
    while (!stack.empty()) {
        auto& [node, op] = stack.back();
        size_t& cursor = next_child[static_cast<size_t>(node)];
        if (cursor >= children[static_cast<size_t>(node)].size()) {
            stack.pop_back();
            continue;
        }
        auto [child, gen] = children[static_cast<size_t>(node)][cursor++];
        QOp child_op = qop_compose(op, gens[static_cast<size_t>(gen)]);
        reducer.add_row(qop_flatten(child_op, dim));
        stack.emplace_back(child, std::move(child_op));
    }
    return reducer.rank();
}

SelfadjointCheck check_selfadjointness(int d, const Rational& mu0) {
    TensorOperator eq = eq_operator(d);
    SelfadjointCheck out;
    out.selfadjoint = true;
    const MIndex dim = eq.rows();
    for (MIndex r = 0; r < dim; ++r)
        for (MIndex c = 0; c < dim; ++c) {
            Rational diff = eq.entry(r, c).eval_rational(mu0) - eq.entry(c, r).eval_rational(mu0);
            if (diff != 0) {
                out.selfadjoint = false;
                double mag = std::abs(diff.get_d());
                if (mag > out.max_residual) out.max_residual = mag;
            }
        }
    return out;
}

SelfadjointCheck check_selfadjointness(int d, std::complex<double> mu0, double pole_tolerance) {
    ComplexMatrix m = to_complex(eq_operator(d), mu0, pole_tolerance);
    ComplexMatrix diff = m - m.adjoint();
    SelfadjointCheck out;
    out.max_residual = diff.max_abs();
    out.selfadjoint = out.max_residual < 1e-12;
    return out;
}

std::vector<VerificationReport> verify_permutation_recovery(int d, int m, double tolerance) {
    std::vector<std::pair<std::string, std::string>> params = {{"d", std::to_string(d)},
                                                               {"m", std::to_string(m)}};
    if (m < 3)
        return {VerificationReport::skip("prop-4.4", "requires root order m >= 3", params)};
    auto out = verify_permutation_recovery(d, std::polar(1.0, M_PI / m), tolerance);
    for (auto& r : out) r.params = params;
    return out;
}

std::vector<VerificationReport> verify_permutation_recovery(int d, std::complex<double> mu0,
                                                            double tolerance) {
    std::vector<std::pair<std::string, std::string>> params = {
        {"d", std::to_string(d)}, {"mu0", std::to_string(mu0.real()) + "+" +
                                              std::to_string(mu0.imag()) + "i"}};
    std::vector<VerificationReport> out;
    const std::complex<double> q = mu0 * mu0;
    if (std::abs(std::abs(q) - 1.0) > 1e-12 || std::abs(q - 1.0) < 1e-12) {
        out.push_back(VerificationReport::skip("prop-4.4", "requires |q| = 1, q != 1", params));
        return out;
    }
    const std::size_t dim = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
    ComplexMatrix g = to_complex(gq_operator(d), mu0);
    // g^{-1} = (g - (q-1)) / q from the quadratic relation
    ComplexMatrix ginv = (g - ComplexMatrix::identity(dim).scaled(q - 1.0)).scaled(1.0 / q);
    ComplexMatrix ginv_adj = ginv.adjoint();

    // P from ((g^{-1})* - g)/(q - 1); expected diagonal sign operator
    ComplexMatrix p = (ginv_adj - g).scaled(1.0 / (q - 1.0));
    ComplexMatrix p_expected(dim, dim);
    ComplexMatrix theta(dim, dim);
    ComplexMatrix t_expected(dim, dim);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::size_t col = static_cast<std::size_t>(i) * static_cast<std::size_t>(d) +
                              static_cast<std::size_t>(j);
            std::size_t swapped = static_cast<std::size_t>(j) * static_cast<std::size_t>(d) +
                                  static_cast<std::size_t>(i);
            theta.at(swapped, col) = 1.0;
            if (i < j) p_expected.at(col, col) = 1.0;
            else if (i > j) p_expected.at(col, col) = -1.0;
            if (i == j) t_expected.at(col, col) = 1.0;
            else t_expected.at(swapped, col) = mu0;
        }
    double rp = (p - p_expected).max_abs();
    out.push_back(VerificationReport::check("prop-4.4-sign-operator", rp < tolerance,
                                            "max residual " + std::to_string(rp), params));

    // T from (1/2)[(g^{-1})* g + g (g^{-1})*] - q = (1 - q) T
    ComplexMatrix anticomm = (ginv_adj * g + g * ginv_adj).scaled(0.5);
    ComplexMatrix t =
        (anticomm - ComplexMatrix::identity(dim).scaled(q)).scaled(1.0 / (1.0 - q));
    double rt = (t - t_expected).max_abs();
    out.push_back(VerificationReport::check("prop-4.4-twisted-flip", rt < tolerance,
                                            "max residual " + std::to_string(rt), params));

    // T = mu theta + (1 - mu)(1 - P^2)
    ComplexMatrix rhs = theta.scaled(mu0) +
                        (ComplexMatrix::identity(dim) - p * p).scaled(1.0 - mu0);
    double rf = (t - rhs).max_abs();
    out.push_back(VerificationReport::check("prop-4.4-theta-identity", rf < tolerance,
                                            "max residual " + std::to_string(rf), params));
    return out;
}

} // namespace hecke
