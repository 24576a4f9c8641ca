#ifndef RANK1LAB_DEGENERATION_HPP
#define RANK1LAB_DEGENERATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "rank1lab/cylinders.hpp"
#include "rank1lab/origami.hpp"
#include "rank1lab/sl2z.hpp"

namespace rank1lab {

// One component of the pinched surface: carries the zeros whose cone points
// lie on it and one simple pole for every incident cylinder end.
struct Part {
    int index = -1;
    std::vector<int> zero_orders; // descending
    int poles = 0;                // simple poles = incident cylinder ends
    int genus = -1;               // from sum(zeros) - poles = 2g' - 2; -1 if unsolvable
};

// Pinching a cylinder leaves a node joining the part under its bottom to the
// part over its top. A fully pinched cylinder always produces a pair of
// simple poles, so every edge carries poles.
struct PartEdge {
    int from = -1; // part containing the cylinder's bottom boundary
    int to = -1;   // part containing the cylinder's top boundary
    int cylinder = -1;
    bool pole_pair = true;
};

struct ConnectivityGraph {
    std::vector<Part> vertices;
    std::vector<PartEdge> edges;
};

enum class PinchVerdict {
    SingleLoop, // one part, one pinched cylinder (at most two poles)
    DoubleEdge, // two parts joined by exactly two pole pairs
    PartCycle,  // k >= 3 parts in one cycle, one pole pair per step
    Infeasible, // any other shape
};

std::string to_string(PinchVerdict v);

struct DegenerateConfig {
    ConnectivityGraph graph;
    long long q = 1, p = 0; // pinched direction, slope p/q
    PinchVerdict verdict = PinchVerdict::Infeasible;
};

// Pinch the core curves of every cylinder of d and classify the limit shape.
DegenerateConfig pinch(const Origami& o, const CylinderDecomposition& d);

// True iff the pole-carrying edges form exactly one cycle (a loop or a
// double edge counts) and every vertex off that cycle is isolated.
bool gp_is_cycle(const ConnectivityGraph& g);

// Dimension of the cycle space over F_2: E - V + components.
int cycle_space_dim(const ConnectivityGraph& g);

// A part survives iff sum(zeros) - poles = 2g' - 2 for an integer g' >= 0
// and the part is not a twice-punctured sphere (two poles, no zeros).
bool part_feasibility(const Part& p);

struct FilterFailure {
    long long q = 1, p = 0;
    std::string stage; // "config", "pinch", or "parts"
    std::string detail;
};

struct FilterReport {
    Origami origami; // canonical base surface
    int directions_checked = 0;
    bool pass = false;
    std::vector<FilterFailure> failures;
};

struct FilterOptions {
    bool check_config = true;
    bool check_pinch = true;
    std::size_t orbit_cap = 100000;
};

// Necessary conditions for the Teichmueller disc to stay in the rank-one
// locus: every periodic direction must pass the cylinder configuration
// check, pinch to an admissible shape, and leave only feasible parts.
// Stops at the first failing direction. Throws ConstraintViolated below
// genus two.
FilterReport rank1_filter(const Origami& o, const FilterOptions& opt = {});
FilterReport rank1_filter_on_orbit(const Orbit& orb, const std::vector<Cusp>& cs,
                                   const FilterOptions& opt = {});

} // namespace rank1lab

#endif
