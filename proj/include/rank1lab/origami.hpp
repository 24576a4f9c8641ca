#ifndef RANK1LAB_ORIGAMI_HPP
#define RANK1LAB_ORIGAMI_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rank1lab/permutation.hpp"

namespace rank1lab {

// A square-tiled surface: n unit squares, h(i) = square to the right of i,
// v(i) = square above i. The pair must generate a transitive group
// (connected surface). Squares are 1-based externally, 0-based internally.
struct Origami {
    int n = 0;
    Perm h;
    Perm v;

    friend auto operator<=>(const Origami&, const Origami&) = default;
};

struct OrigamiHash {
    size_t operator()(const Origami& o) const;
};

// Zero orders k_i (each >= 1), descending. Sum k_i = 2g - 2.
struct Stratum {
    std::vector<int> zero_orders;

    friend auto operator<=>(const Stratum&, const Stratum&) = default;
};

// Vertex structure of the square complex. Corner cycles are the cycles of
// the corner walk around top-right corners; a cycle of length m is a cone
// point of angle 2*pi*m (m = 1 regular, m >= 2 a zero of order m-1).
struct SingularityData {
    std::vector<std::vector<int>> vertex_cycles; // 0-based squares
    std::vector<int> cone_angle_multiples;       // m per cycle, same order
    Stratum stratum() const;                     // regular points dropped
};

// Throws BadPermutation / NotTransitive.
Origami validate(int n, const Perm& h, const Perm& v);

// The corner walk c = v^{-1} h^{-1} v h sending the top-right corner of a
// square to the next square around the same vertex.
Perm corner_walk(const Origami& o);

SingularityData singularities(const Origami& o);

// Genus from the vertex count (Euler characteristic with F = n, E = 2n),
// cross-checked against the zero orders; disagreement throws
// InternalInconsistency.
int genus(const Origami& o);

// Lexicographically minimal simultaneous relabeling of (h, v); idempotent;
// equal on two origamis iff they are isomorphic.
Origami canonical_form(const Origami& o);

// Also returns the relabeling pi with canonical.h = pi h pi^{-1} (and same
// for v); pi maps old labels to new labels.
std::pair<Origami, Perm> canonical_form_with_map(const Origami& o);

// One representative (canonical form) per isomorphism class of connected
// n-square origamis, in deterministic order, optionally restricted to a
// stratum. The callback returns false to stop early.
void enumerate(int n, const std::optional<Stratum>& stratum,
               const std::function<bool(const Origami&)>& yield);

// Convenience wrapper collecting the whole enumeration.
std::vector<Origami> enumerate_all(int n, const std::optional<Stratum>& stratum = {});

} // namespace rank1lab

#endif
