#ifndef RANK1LAB_SL2Z_HPP
#define RANK1LAB_SL2Z_HPP

#include <array>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rank1lab/origami.hpp"

namespace rank1lab {

// Generator action on square labelings. Squares are glued by (h, v); the
// shear T = [[1,1],[0,1]] re-cuts the surface so the top neighbor of square
// i becomes v(h^{-1}(i)); the quarter turn S = [[0,-1],[1,0]] swaps the roles
// of the two gluings. Both preserve the number of squares and the stratum.
Origami act_T(const Origami& o);      // (h, v) -> (h, v h^{-1})
Origami act_T_inv(const Origami& o);  // (h, v) -> (h, v h)
Origami act_S(const Origami& o);      // (h, v) -> (v^{-1}, h)
Origami act_S_inv(const Origami& o);  // (h, v) -> (v, h^{-1})
Origami act_T_pow(const Origami& o, long long k);

struct OrbitEdge {
    int from;
    char gen; // 'T' or 'S'
    int to;
};

// The SL(2,Z) orbit of canonical forms, explored breadth-first with
// generator order T then S. group_inv[i] holds B_i = A_i^{-1} (row-major)
// where members[i] is A_i applied to members[0]; its first column is the
// direction on the base surface that renders member i horizontally.
struct Orbit {
    std::vector<Origami> members; // members[0] = canonical_form(seed)
    std::vector<OrbitEdge> edges; // two per member, in BFS order
    std::vector<std::array<boost::multiprecision::cpp_int, 4>> group_inv;

    int index_of(const Origami& canonical) const; // -1 if absent
};

Origami act_gen(const Origami& o, char gen); // 'T' or 'S'

// Letter encoding shared by the random walk and the chain maps:
// 0 = T, 1 = T^{-1}, 2 = S, 3 = S^{-1}.
Origami act_letter(const Origami& o, int letter);

// Throws OrbitBudgetExceeded if the orbit has more than cap members.
Orbit orbit(const Origami& o, std::size_t cap = 100000);

// A cusp of the Teichmueller disc: one T-orbit on the SL(2,Z) orbit.
struct Cusp {
    Origami rep;              // lexicographically least member of the T-orbit
    int width;                // size of the T-orbit
    long long q, p;           // periodic direction on the base, slope p/q
    std::vector<int> members; // orbit indices, ascending
};

// All cusps, ordered by least member index. Directions are read off the
// BFS group elements, primitive and sign-normalized (q > 0, or q = 0, p > 0).
std::vector<Cusp> cusps(const Orbit& orb);

// One elementary move when folding a primitive direction onto (1,0):
// gen 'T' applies act_T_pow(o, count); gen 'S' applies act_S (count = 1).
struct SlopeMove {
    char gen;
    long long count;
};

// Moves m_1..m_k with (m_k ... m_1)(q,p)^t = (1,0)^t. Applying them in order
// to an origami turns the (q,p) direction into the horizontal one.
std::vector<SlopeMove> direction_to_horizontal_word(long long q, long long p);
Origami apply_move(const Origami& o, const SlopeMove& m);

} // namespace rank1lab

#endif
