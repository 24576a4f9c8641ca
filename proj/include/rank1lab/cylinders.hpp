#ifndef RANK1LAB_CYLINDERS_HPP
#define RANK1LAB_CYLINDERS_HPP

#include <vector>

#include "rank1lab/origami.hpp"

namespace rank1lab {

// A maximal horizontal segment of singular leaf between two cone points,
// named by the squares whose top edges compose it (left to right). Each
// saddle connection lies on exactly one boundary circle (the interface
// above one cylinder's top row), and is traversed once from below (top of
// that cylinder) and once from above (bottom of the cylinder over it).
struct SaddleConnection {
    int id = -1;
    std::vector<int> edges;  // squares j: segment over the top edge of j
    int left_vertex = -1;    // corner-class id at the left endpoint
    int right_vertex = -1;   // corner-class id at the right endpoint
    int circle = -1;         // cylinder index whose top interface holds it
};

struct Cylinder {
    int index = -1;
    int circumference = 0;
    int height = 0;
    std::vector<int> rows;            // h-cycle indices, bottom to top
    std::vector<int> bottom_squares;  // bottom row in h-order
    std::vector<int> top_squares;     // top row in h-order
    std::vector<int> top_word;        // saddle-connection ids along the top
    std::vector<int> bottom_word;     // saddle-connection ids along the bottom
};

struct CylinderDecomposition {
    long long q = 1, p = 0;  // direction of slope p/q on the original surface
    Origami surface;         // sheared copy whose horizontal direction is (q,p)
    std::vector<Cylinder> cylinders;
    std::vector<SaddleConnection> saddle_connections;
    std::vector<int> square_cylinder;  // square -> cylinder index
    std::vector<int> corner_class;     // square -> class of its top-right corner
    std::vector<int> class_order;      // corner class -> zero order (m - 1)
};

struct ConfigReport {
    bool equal_circumference = false;
    bool chain_is_single_cycle = false;
    bool boundary_parity_ok = false;
    bool pass = false;
};

CylinderDecomposition horizontal_decomposition(const Origami& o);
CylinderDecomposition direction_decomposition(const Origami& o, long long q, long long p);

// The rank-one cylinder configuration test: equal circumferences, tops
// identified to bottoms in one cyclic chain covering all cylinders, and an
// even total zero order on every cylinder boundary.
ConfigReport configuration_check(const CylinderDecomposition& d);

// Residue of a simple pole under the time-t geodesic flow: (a,b) -> (a e^-t, b e^t).
struct Residue {
    double re = 0, im = 0;
};
Residue gt_residue(const Residue& c, double t);

// Modulus of a w x h cylinder after time t: (h/w) e^{2t}.
double gt_modulus(const Cylinder& cyl, double t);

// True iff across the two decompositions, equal core-curve homology classes
// only occur between cylinders of the same direction.
bool homologous_implies_parallel_check(const Origami& o, const CylinderDecomposition& d1,
                                       const CylinderDecomposition& d2);

} // namespace rank1lab

#endif
