#include "hecke/permutation.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace hecke {

Permutation::Permutation(int n) {
    if (n < 1) throw Error("permutation order must be >= 1");
    img_.resize(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) img_[static_cast<size_t>(k)] = k + 1;
}

Permutation Permutation::from_one_line(std::vector<int> images) {
    int n = static_cast<int>(images.size());
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : images) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
            throw Error("not a permutation of {1..n}");
        seen[static_cast<size_t>(v - 1)] = true;
    }
    Permutation p(n);
    p.img_ = std::move(images);
    return p;
}

bool Permutation::is_identity() const {
    for (int k = 1; k <= order(); ++k)
        if ((*this)(k) != k) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation out(order());
    for (int k = 1; k <= order(); ++k) out.img_[static_cast<size_t>((*this)(k)-1)] = k;
    return out;
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (order() != o.order()) throw OrderMismatch("permutation product");
    Permutation out(order());
    for (int k = 1; k <= order(); ++k) out.img_[static_cast<size_t>(k - 1)] = (*this)(o(k));
    return out;
}

int Permutation::inversions() const {
    int n = order(), count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (img_[static_cast<size_t>(i)] > img_[static_cast<size_t>(j)]) ++count;
    return count;
}

Permutation Permutation::swap_values(int i) const {
    if (i < 1 || i >= order()) throw IndexOutOfRange("transposition index");
    Permutation out = *this;
    for (auto& v : out.img_) {
        if (v == i) v = i + 1;
        else if (v == i + 1) v = i;
    }
    return out;
}

Permutation Permutation::swap_positions(int i) const {
    if (i < 1 || i >= order()) throw IndexOutOfRange("transposition index");
    Permutation out = *this;
    std::swap(out.img_[static_cast<size_t>(i - 1)], out.img_[static_cast<size_t>(i)]);
    return out;
}

bool Permutation::left_multiplication_lengthens(int i) const {
    // position of value i precedes position of value i+1
    int pos_i = 0, pos_i1 = 0;
    for (int k = 1; k <= order(); ++k) {
        if ((*this)(k) == i) pos_i = k;
        else if ((*this)(k) == i + 1) pos_i1 = k;
    }
    return pos_i < pos_i1;
}

bool Permutation::right_multiplication_lengthens(int i) const {
    return (*this)(i) < (*this)(i + 1);
}

Permutation Permutation::embed(int m) const {
    if (m < order()) throw OrderMismatch("embed target smaller than order");
    Permutation out(m);
    for (int k = 1; k <= order(); ++k) out.img_[static_cast<size_t>(k - 1)] = (*this)(k);
    return out;
}

int Permutation::cycle_count() const {
    int n = order(), cycles = 0;
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int k = 1; k <= n; ++k) {
        if (seen[static_cast<size_t>(k - 1)]) continue;
        ++cycles;
        int j = k;
        while (!seen[static_cast<size_t>(j - 1)]) {
            seen[static_cast<size_t>(j - 1)] = true;
            j = (*this)(j);
        }
    }
    return cycles;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int k = 1; k <= order(); ++k) {
        if (k > 1) os << " ";
        os << (*this)(k);
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// BasisWord

BasisWord::BasisWord(int order, std::vector<int> descents)
    : order_(order), descents_(std::move(descents)) {
    if (order < 1) throw Error("basis word order must be >= 1");
    if (static_cast<int>(descents_.size()) != order - 1)
        throw Error("descent tuple must have order-1 entries");
    for (int k = 0; k < order - 1; ++k)
        if (descents_[static_cast<size_t>(k)] < 0 || descents_[static_cast<size_t>(k)] > k + 1)
            throw Error("descent entry out of range");
}

BasisWord BasisWord::identity(int order) {
    return BasisWord(order, std::vector<int>(static_cast<size_t>(order - 1), 0));
}

std::vector<int> BasisWord::reduced_word() const {
    // Level `level` contributes the prefix g_{i} g_{i-1} ... g_1, shifted up
    // by one for every level above it (each enclosing sigma bumps indices).
    std::vector<int> out;
    for (int level = order_; level >= 2; --level) {
        int shift = order_ - level;
        int top = descents_[static_cast<size_t>(level - 2)];
        for (int g = top; g >= 1; --g) out.push_back(g + shift);
    }
    return out;
}

Permutation BasisWord::to_permutation() const {
    return permutation_from_word(reduced_word(), order_);
}

BasisWord BasisWord::from_permutation(const Permutation& p) {
    int n = p.order();
    std::vector<int> descents(static_cast<size_t>(n - 1), 0);
    Permutation cur = p;
    for (int level = n; level >= 2; --level) {
        int top = cur(1) - 1; // the top prefix g_top ... g_1 sends 1 to top+1
        descents[static_cast<size_t>(level - 2)] = top;
        // strip the prefix: cur <- s_1 s_2 ... s_top cur, applied innermost first
        for (int g = top; g >= 1; --g) cur = cur.swap_values(g);
        // cur now fixes 1; strip it and renumber down by one
        std::vector<int> rest;
        rest.reserve(static_cast<size_t>(level - 1));
        for (int k = 2; k <= level; ++k) rest.push_back(cur(k) - 1);
        cur = Permutation::from_one_line(std::move(rest));
    }
    return BasisWord(n, std::move(descents));
}

std::string BasisWord::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < descents_.size(); ++k) {
        if (k) os << ",";
        os << descents_[k];
    }
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// WordTable

const std::vector<int>& WordTable::word_of(const Permutation& p) const {
    auto it = index.find(p);
    if (it == index.end()) throw Error("permutation not in word table");
    return words[static_cast<size_t>(it->second)];
}

Permutation permutation_from_word(const std::vector<int>& word, int order) {
    Permutation p(order);
    for (auto it = word.rbegin(); it != word.rend(); ++it) p = p.swap_values(*it);
    return p;
}

namespace {

std::unique_ptr<WordTable> build_word_table(int n) {
    auto table = std::make_unique<WordTable>();
    table->order = n;
    // enumerate descent tuples odometer-style
    std::vector<int> tuple(static_cast<size_t>(n - 1), 0);
    std::map<Permutation, std::vector<int>> found;
    while (true) {
        BasisWord bw(n, tuple);
        Permutation p = bw.to_permutation();
        auto word = bw.reduced_word();
        if (!found.emplace(p, std::move(word)).second)
            throw Error("basis recursion produced a duplicate permutation");
        // advance
        int pos = 0;
        for (; pos < n - 1; ++pos) {
            if (tuple[static_cast<size_t>(pos)] < pos + 1) {
                ++tuple[static_cast<size_t>(pos)];
                for (int r = 0; r < pos; ++r) tuple[static_cast<size_t>(r)] = 0;
                break;
            }
        }
        if (pos == n - 1) break;
    }
    for (auto& [p, w] : found) {
        table->index.emplace(p, static_cast<int>(table->permutations.size()));
        table->permutations.push_back(p);
        table->words.push_back(w);
    }
    return table;
}

} // namespace

const WordTable& word_table(int n) {
    if (n < 1) throw Error("word table order must be >= 1");
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<WordTable>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_word_table(n)).first;
    return *it->second;
}

} // namespace hecke
