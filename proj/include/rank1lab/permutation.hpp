#ifndef RANK1LAB_PERMUTATION_HPP
#define RANK1LAB_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "rank1lab/errors.hpp"

namespace rank1lab {

// A permutation of {0..n-1}, stored as the image table img[i].
// All arithmetic is exact integer work; composition is (f*g)(x) = f(g(x)).
// External formats (JSON, cycle notation in tests) are 1-based; the
// conversion happens only at the boundary.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);

    static Perm identity(int n);
    // images listed as 1-based values, e.g. {2,1,3} for the transposition (1 2).
    static Perm from_one_based(const std::vector<int>& images);
    // cycles over 1-based points; unlisted points are fixed. n is the degree.
    static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i)]; }

    Perm operator*(const Perm& rhs) const; // this after rhs
    Perm inverse() const;
    // phi * this * phi^{-1}: the same permutation after relabeling points by phi.
    Perm conjugate_by(const Perm& phi) const;

    bool is_identity() const;
    std::vector<std::vector<int>> cycles() const;       // 0-based points
    std::vector<int> cycle_type() const;                // lengths, descending
    std::vector<int> to_one_based() const;
    const std::vector<int>& images() const { return img_; }

    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<int> img_;
};

// p composed with itself k times; negative k uses the inverse.
Perm pow(const Perm& p, long long k);

// True iff the group generated by gens acts transitively on {0..n-1}.
bool acts_transitively(int n, const std::vector<const Perm*>& gens);

// All partitions of n, each descending, in deterministic (reverse-lex) order
// starting from {n}. Used to pick one representative h per conjugacy class.
std::vector<std::vector<int>> partitions(int n);

// The canonical permutation with the given descending cycle type: cycles
// filled with consecutive points, e.g. {2,1} -> (1 2)(3) in 1-based terms.
Perm canonical_of_cycle_type(int n, const std::vector<int>& type);

} // namespace rank1lab

#endif
