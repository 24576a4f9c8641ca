#ifndef RANK1LAB_CYCLIC_COVER_HPP
#define RANK1LAB_CYCLIC_COVER_HPP

#include <array>

#include "rank1lab/origami.hpp"
#include "rank1lab/permutation.hpp"

namespace rank1lab {

// Degree-N cyclic cover of the four-cornered pillowcase with monodromy a_i
// around the i-th corner.
struct CyclicCoverData {
    int N = 0;
    std::array<int, 4> a{};
};

// Throws ConstraintViolated naming the failing clause: N >= 2, 0 < a_i <= N,
// gcd(N, a_1..a_4) = 1, sum a_i divisible by N.
CyclicCoverData validate_cover(int N, const std::array<int, 4>& a);

// Riemann-Hurwitz: g = N + 1 - (1/2) sum gcd(a_i, N).
int rh_genus(const CyclicCoverData& d);

// The cover as an origami on 2N squares, indexed (sheet k, front/back half).
// Squares 2k are the front halves, 2k+1 the back halves. Throws
// NotOrientable when the pulled-back form is a genuine quadratic
// differential (exactly when N is odd or some a_i is even).
Origami build_origami(const CyclicCoverData& d);

// Generator of the deck group: sheet shift (k, half) -> (k+1, half) as a
// square relabeling of build_origami(d). It inverts both gluing
// permutations (the quotient form pulls back to minus itself under it);
// its square is a translation automorphism.
Perm deck_transformation(const CyclicCoverData& d);

Origami eierlegende_wollmilchsau(); // cover (4; 1,1,1,1), canonical form
Origami ornithorynque();            // cover (6; 1,1,1,3), canonical form

} // namespace rank1lab

#endif
