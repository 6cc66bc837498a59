#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

/// Permutation of {1..n} in one-line notation.  Products compose as
/// functions: (p * r)(x) = p(r(x)).
class Permutation {
public:
    explicit Permutation(int n); // identity
    static Permutation from_one_line(std::vector<int> images);

    int order() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[static_cast<size_t>(x - 1)]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    Permutation inverse() const;
    Permutation operator*(const Permutation& o) const;

    /// Number of inverted pairs; equals the Coxeter length.
    int inversions() const;

    /// s_i * p (swap the values i, i+1).
    Permutation swap_values(int i) const;
    /// p * s_i (swap the entries at positions i, i+1).
    Permutation swap_positions(int i) const;

    /// True iff length(s_i * p) > length(p), i.e. the value i occurs before i+1.
    bool left_multiplication_lengthens(int i) const;
    /// True iff length(p * s_i) > length(p), i.e. p(i) < p(i+1).
    bool right_multiplication_lengthens(int i) const;

    /// Same permutation acting on {1..m}, m >= order, fixing the new points.
    Permutation embed(int m) const;

    int cycle_count() const;
    /// Sum over cycles of (length - 1); the exponent in the trace rule.
    int cycle_excess() const { return order() - cycle_count(); }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    std::string to_string() const; // "[2 1 3]"

private:
    std::vector<int> img_;
};

/// Positive word in the generator alphabet arising from the inductive basis
/// recursion: level k >= 2 contributes the prefix g_{i_k} g_{i_k - 1} ... g_1
/// applied on the left of the shifted lower levels.  The tuple entries
/// satisfy 0 <= i_k <= k-1 and the expansion is a reduced word of length
/// sum(i_k) for the associated permutation.
class BasisWord {
public:
    BasisWord(int order, std::vector<int> descents);

    static BasisWord identity(int order);
    static BasisWord from_permutation(const Permutation& p);

    int order() const { return order_; }
    const std::vector<int>& descents() const { return descents_; }

    /// Generator indices, leftmost factor first.
    std::vector<int> reduced_word() const;
    Permutation to_permutation() const;

    bool operator==(const BasisWord& o) const {
        return order_ == o.order_ && descents_ == o.descents_;
    }

    std::string to_string() const;

private:
    int order_;
    std::vector<int> descents_; // descents_[k] = i_{k+2}
};

/// Canonical word data for one symmetric-group order: every permutation of
/// {1..n} together with its canonical reduced word, enumerated once and
/// shared.  Lookup structures are immutable after construction.
struct WordTable {
    int order = 0;
    std::vector<Permutation> permutations;       // sorted lexicographically
    std::vector<std::vector<int>> words;         // canonical reduced words, same index
    std::map<Permutation, int> index;

    const std::vector<int>& word_of(const Permutation& p) const;
};

/// Shared per-order table; thread-safe lazy construction.
const WordTable& word_table(int n);

Permutation permutation_from_word(const std::vector<int>& word, int order);

} // namespace hecke
