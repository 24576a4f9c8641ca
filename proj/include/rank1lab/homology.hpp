#ifndef RANK1LAB_HOMOLOGY_HPP
#define RANK1LAB_HOMOLOGY_HPP

#include <vector>

#include "rank1lab/origami.hpp"

namespace rank1lab {

// Integer 1-chains on the square complex: coordinates 0..n-1 are the top
// edges t_i (oriented rightward), n..2n-1 the right edges r_i (oriented
// upward). Every edge of the surface appears exactly once this way.
using Chain = std::vector<long long>;
using IMat = std::vector<std::vector<long long>>; // row-major

// A basis of H_1(X, Z) with the algebraic intersection pairing, plus the
// projection matrix expressing any cycle in that basis.
struct HomologyBasis {
    Origami surface;
    int genus = 0;
    int rank = 0;                  // 2g
    std::vector<Chain> cycle_reps; // rank cycles of length 2n
    IMat intersection_form;        // J[k][l] = cycle k . cycle l, unimodular
    IMat reduction;                // rank x 2n; reduction * cycle = coordinates
};

// Kernel-of-boundary modulo image-of-faces over the integers (Smith normal
// form); asserts the quotient is free of rank 2*genus.
HomologyBasis homology_basis(const Origami& o);

// Coordinates of a closed chain; throws InternalInconsistency on non-cycles.
std::vector<long long> reduce_cycle(const HomologyBasis& basis, const Chain& c);

// Algebraic intersection number (exact) of two cycles.
long long chain_intersection(const Origami& o, const Chain& x, const Chain& y);

// Edge-level transport through one generator letter (0 = T, 1 = T^{-1},
// 2 = S, 3 = S^{-1}); the result is a chain on act_letter(o, letter).
Chain chain_map_letter(const Origami& o, int letter, const Chain& c);

// The same chain after relabeling squares by pi (old label j -> pi(j)).
Chain chain_relabel(const Perm& pi, const Chain& c);

struct SymplecticMatrix {
    IMat entries; // rank x rank, columns are images of basis cycles
    char gen = 'T';
    Origami from; // source surface
    Origami to;   // canonical form of the generator image
};

// Integer action of one generator on H_1: transports every basis cycle of
// homology_basis(o) through the re-gluing, relabels into the canonical form
// of the image and reduces there. Satisfies M^T J_to M = J_from exactly.
SymplecticMatrix homology_action(const Origami& o, char gen);

// Transition matrix between two prepared bases: from.surface must map to
// to.surface under act_letter followed by canonical relabeling.
IMat homology_transition(const HomologyBasis& from, int letter, const HomologyBasis& to);

} // namespace rank1lab

#endif
