#include "rank1lab/cylinders.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "rank1lab/errors.hpp"
#include "rank1lab/homology.hpp"
#include "rank1lab/sl2z.hpp"

namespace rank1lab {

// Splits one boundary circle (the interface above row `row_squares`, listed
// in h-order) into saddle connections, appending them to d and returning the
// ids in traversal order. The corner after the edge over square j is the
// top-right corner of j; singular corners are the breakpoints.
static std::vector<int> split_circle(CylinderDecomposition& d, int circle,
                                     const std::vector<int>& row_squares) {
    int len = static_cast<int>(row_squares.size());
    auto singular_after = [&](int pos) {
        return d.class_order[static_cast<size_t>(
                   d.corner_class[static_cast<size_t>(row_squares[static_cast<size_t>(pos)])])] > 0;
    };
    int start = 0;
    bool any_singular = false;
    for (int k = 0; k < len; ++k) {
        // break before position k iff the corner after position k-1 is singular
        if (singular_after((k + len - 1) % len)) {
            start = k;
            any_singular = true;
            break;
        }
    }
    std::vector<int> word;
    if (!any_singular) {
        // Closed regular circle (genus-one tower): one full-circle segment.
        SaddleConnection sc;
        sc.id = static_cast<int>(d.saddle_connections.size());
        sc.edges.assign(row_squares.begin(), row_squares.end());
        int cls = d.corner_class[static_cast<size_t>(row_squares.back())];
        sc.left_vertex = sc.right_vertex = cls;
        sc.circle = circle;
        word.push_back(sc.id);
        d.saddle_connections.push_back(std::move(sc));
        return word;
    }
    SaddleConnection cur;
    auto flush = [&](int next_pos) {
        cur.id = static_cast<int>(d.saddle_connections.size());
        cur.circle = circle;
        cur.left_vertex = d.corner_class[static_cast<size_t>(
            row_squares[static_cast<size_t>((next_pos - static_cast<int>(cur.edges.size()) - 1 + 2 * len) % len)])];
        cur.right_vertex = d.corner_class[static_cast<size_t>(cur.edges.back())];
        word.push_back(cur.id);
        d.saddle_connections.push_back(std::move(cur));
        cur = SaddleConnection{};
    };
    for (int k = 0; k < len; ++k) {
        int pos = (start + k) % len;
        cur.edges.push_back(row_squares[static_cast<size_t>(pos)]);
        if (singular_after(pos)) flush((start + k + 1) % len);
    }
    if (!cur.edges.empty())
        throw InternalInconsistency("saddle-connection scan did not close");
    return word;
}

CylinderDecomposition horizontal_decomposition(const Origami& o) {
    validate(o.n, o.h, o.v);
    CylinderDecomposition d;
    d.q = 1;
    d.p = 0;
    d.surface = o;

    SingularityData sing = singularities(o);
    d.corner_class.assign(static_cast<size_t>(o.n), -1);
    d.class_order.resize(sing.vertex_cycles.size());
    for (size_t c = 0; c < sing.vertex_cycles.size(); ++c) {
        d.class_order[c] = sing.cone_angle_multiples[c] - 1;
        for (int sq : sing.vertex_cycles[c]) d.corner_class[static_cast<size_t>(sq)] = static_cast<int>(c);
    }

    std::vector<std::vector<int>> rows = o.h.cycles();
    std::vector<int> row_of(static_cast<size_t>(o.n), -1);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int sq : rows[r]) row_of[static_cast<size_t>(sq)] = static_cast<int>(r);

    // Row r merges with the row above it iff every corner on the interface
    // is regular; then v conjugates the h-cycle, so the row above has equal
    // length and the interface is interior to a cylinder.
    int nrows = static_cast<int>(rows.size());
    std::vector<int> merge_up(static_cast<size_t>(nrows), -1);
    std::vector<char> has_incoming(static_cast<size_t>(nrows), 0);
    for (int r = 0; r < nrows; ++r) {
        bool all_regular = true;
        for (int sq : rows[static_cast<size_t>(r)])
            if (d.class_order[static_cast<size_t>(d.corner_class[static_cast<size_t>(sq)])] > 0) {
                all_regular = false;
                break;
            }
        if (!all_regular) continue;
        int above = row_of[static_cast<size_t>(o.v(rows[static_cast<size_t>(r)][0]))];
        if (rows[static_cast<size_t>(above)].size() != rows[static_cast<size_t>(r)].size())
            throw InternalInconsistency("regular interface between rows of unequal length");
        merge_up[static_cast<size_t>(r)] = above;
        has_incoming[static_cast<size_t>(above)] = 1;
    }

    // Cylinders are the chains of merged rows; a chain that closes into a
    // cycle (all interfaces regular) is a genus-one tower, broken at its
    // least row so the machinery below still sees one top and one bottom.
    d.square_cylinder.assign(static_cast<size_t>(o.n), -1);
    std::vector<char> used(static_cast<size_t>(nrows), 0);
    for (int r = 0; r < nrows; ++r) {
        if (used[static_cast<size_t>(r)] || has_incoming[static_cast<size_t>(r)]) continue;
        Cylinder cyl;
        cyl.index = static_cast<int>(d.cylinders.size());
        for (int cur = r; cur != -1 && !used[static_cast<size_t>(cur)];
             cur = merge_up[static_cast<size_t>(cur)]) {
            used[static_cast<size_t>(cur)] = 1;
            cyl.rows.push_back(cur);
        }
        d.cylinders.push_back(std::move(cyl));
    }
    for (int r = 0; r < nrows; ++r) { // leftover closed towers
        if (used[static_cast<size_t>(r)]) continue;
        Cylinder cyl;
        cyl.index = static_cast<int>(d.cylinders.size());
        for (int cur = r; !used[static_cast<size_t>(cur)]; cur = merge_up[static_cast<size_t>(cur)]) {
            used[static_cast<size_t>(cur)] = 1;
            cyl.rows.push_back(cur);
        }
        d.cylinders.push_back(std::move(cyl));
    }

    long long area = 0;
    for (Cylinder& cyl : d.cylinders) {
        cyl.circumference = static_cast<int>(rows[static_cast<size_t>(cyl.rows.front())].size());
        cyl.height = static_cast<int>(cyl.rows.size());
        cyl.bottom_squares = rows[static_cast<size_t>(cyl.rows.front())];
        cyl.top_squares = rows[static_cast<size_t>(cyl.rows.back())];
        for (int r : cyl.rows)
            for (int sq : rows[static_cast<size_t>(r)])
                d.square_cylinder[static_cast<size_t>(sq)] = cyl.index;
        area += static_cast<long long>(cyl.circumference) * cyl.height;
    }
    if (area != o.n) throw InternalInconsistency("cylinder areas do not sum to n");
    for (int sq = 0; sq < o.n; ++sq)
        if (d.square_cylinder[static_cast<size_t>(sq)] == -1)
            throw InternalInconsistency("square missing from all cylinders");

    // Boundary circles are exactly the interfaces above top rows; split each
    // into saddle connections, then read each cylinder's bottom word off the
    // edges below its bottom row.
    for (Cylinder& cyl : d.cylinders)
        cyl.top_word = split_circle(d, cyl.index, cyl.top_squares);

    std::vector<int> sc_of_edge(static_cast<size_t>(o.n), -1); // top edge of square j -> sc id
    for (const SaddleConnection& sc : d.saddle_connections)
        for (int sq : sc.edges) sc_of_edge[static_cast<size_t>(sq)] = sc.id;

    for (Cylinder& cyl : d.cylinders) {
        std::vector<int> seq;
        for (int sq : cyl.bottom_squares) {
            int below = o.v.inverse()(sq);
            int sc = sc_of_edge[static_cast<size_t>(below)];
            if (sc < 0) throw InternalInconsistency("bottom edge lies on no boundary circle");
            if (seq.empty() || seq.back() != sc) seq.push_back(sc);
        }
        if (seq.size() > 1 && seq.front() == seq.back()) seq.pop_back(); // wrap through a regular corner
        cyl.bottom_word = std::move(seq);
    }
    return d;
}

CylinderDecomposition direction_decomposition(const Origami& o, long long q, long long p) {
    std::vector<SlopeMove> word = direction_to_horizontal_word(q, p);
    Origami sheared = o;
    for (const SlopeMove& m : word) sheared = apply_move(sheared, m);
    CylinderDecomposition d = horizontal_decomposition(sheared);
    d.q = q;
    d.p = p;
    return d;
}

ConfigReport configuration_check(const CylinderDecomposition& d) {
    ConfigReport rep;
    const auto& cyls = d.cylinders;
    if (cyls.empty()) throw InternalInconsistency("decomposition with no cylinders");

    rep.equal_circumference = true;
    for (const Cylinder& c : cyls)
        if (c.circumference != cyls[0].circumference) rep.equal_circumference = false;

    // Chain condition: each saddle connection on top of C is on the bottom of
    // one cylinder above(C); the configuration needs above(.) constant per
    // cylinder, bottoms fed by a single cylinder, and the successor map one
    // k-cycle over all k cylinders.
    std::vector<int> sc_top_of(d.saddle_connections.size(), -1);
    std::vector<int> sc_bottom_of(d.saddle_connections.size(), -1);
    for (const Cylinder& c : cyls) {
        for (int sc : c.top_word) sc_top_of[static_cast<size_t>(sc)] = c.index;
        for (int sc : c.bottom_word) {
            if (sc_bottom_of[static_cast<size_t>(sc)] != -1 &&
                sc_bottom_of[static_cast<size_t>(sc)] != c.index)
                throw InternalInconsistency("saddle connection on the bottom of two cylinders");
            sc_bottom_of[static_cast<size_t>(sc)] = c.index;
        }
    }
    rep.chain_is_single_cycle = true;
    std::vector<int> next(cyls.size(), -1);
    for (const Cylinder& c : cyls) {
        for (int sc : c.top_word) {
            int up = sc_bottom_of[static_cast<size_t>(sc)];
            if (next[static_cast<size_t>(c.index)] == -1) next[static_cast<size_t>(c.index)] = up;
            if (next[static_cast<size_t>(c.index)] != up) rep.chain_is_single_cycle = false;
        }
        for (int sc : c.bottom_word) {
            int down = sc_top_of[static_cast<size_t>(sc)];
            if (down != -1 && next[static_cast<size_t>(down)] != -1 &&
                next[static_cast<size_t>(down)] != c.index)
                rep.chain_is_single_cycle = false;
        }
    }
    if (rep.chain_is_single_cycle) {
        // successor map must be one cycle covering every cylinder
        std::vector<char> seen(cyls.size(), 0);
        int cur = 0, count = 0;
        while (cur != -1 && !seen[static_cast<size_t>(cur)]) {
            seen[static_cast<size_t>(cur)] = 1;
            ++count;
            cur = next[static_cast<size_t>(cur)];
        }
        if (cur != 0 || count != static_cast<int>(cyls.size())) rep.chain_is_single_cycle = false;
    }

    // Boundary parity: the distinct zeros on the top and on the bottom of
    // every cylinder must have even total order.
    rep.boundary_parity_ok = true;
    Perm v_inv = d.surface.v.inverse();
    auto circle_parity_even = [&](const std::vector<int>& squares, bool shift_down) {
        std::set<int> classes;
        for (int sq : squares) {
            int corner_sq = shift_down ? v_inv(sq) : sq;
            classes.insert(d.corner_class[static_cast<size_t>(corner_sq)]);
        }
        long long total = 0;
        for (int cls : classes) total += d.class_order[static_cast<size_t>(cls)];
        return total % 2 == 0;
    };
    for (const Cylinder& c : cyls) {
        if (!circle_parity_even(c.top_squares, false)) rep.boundary_parity_ok = false;
        if (!circle_parity_even(c.bottom_squares, true)) rep.boundary_parity_ok = false;
    }

    rep.pass = rep.equal_circumference && rep.chain_is_single_cycle && rep.boundary_parity_ok;
    return rep;
}

Residue gt_residue(const Residue& c, double t) {
    return Residue{c.re * std::exp(-t), c.im * std::exp(t)};
}

double gt_modulus(const Cylinder& cyl, double t) {
    return (static_cast<double>(cyl.height) / static_cast<double>(cyl.circumference)) *
           std::exp(2.0 * t);
}

// Core-curve class of each cylinder, transported back to the base surface:
// the top boundary circle of a cylinder is homologous to its core, so the
// core chain is the sum of the top row's top edges, pulled back through the
// inverse of the shearing word.
static std::vector<std::vector<long long>> core_classes(const Origami& o,
                                                        const HomologyBasis& basis,
                                                        const CylinderDecomposition& d) {
    std::vector<SlopeMove> word = direction_to_horizontal_word(d.q, d.p);
    std::vector<std::vector<long long>> out;
    for (const Cylinder& c : d.cylinders) {
        std::vector<long long> chain(2 * static_cast<size_t>(d.surface.n), 0);
        for (int sq : c.top_squares) chain[static_cast<size_t>(sq)] += 1; // t-coordinates
        // undo the word: walk the intermediate surfaces backwards
        std::vector<Origami> stages{o};
        for (const SlopeMove& m : word) stages.push_back(apply_move(stages.back(), m));
        for (size_t k = word.size(); k-- > 0;) {
            const SlopeMove& m = word[k];
            const Origami& target = stages[k];
            if (m.gen == 'S') {
                Origami cur = stages[k + 1];
                for (long long i = 0; i < m.count; ++i) {
                    chain = chain_map_letter(cur, 3, chain); // S^{-1}
                    cur = act_letter(cur, 3);
                }
                if (cur != target) throw InternalInconsistency("word unwind mismatch");
            } else {
                long long steps = m.count;
                Origami cur = stages[k + 1];
                for (long long i = 0; i < std::llabs(steps); ++i) {
                    int letter = steps > 0 ? 1 : 0; // undo T^k with k steps of T^{-1}
                    chain = chain_map_letter(cur, letter, chain);
                    cur = act_letter(cur, letter);
                }
                if (cur != target) throw InternalInconsistency("word unwind mismatch");
            }
        }
        out.push_back(reduce_cycle(basis, chain));
    }
    return out;
}

bool homologous_implies_parallel_check(const Origami& o, const CylinderDecomposition& d1,
                                       const CylinderDecomposition& d2) {
    HomologyBasis basis = homology_basis(o);
    auto c1 = core_classes(o, basis, d1);
    auto c2 = core_classes(o, basis, d2);
    bool same_direction = d1.q == d2.q && d1.p == d2.p;
    if (same_direction) return true;
    for (const auto& a : c1)
        for (const auto& b : c2)
            if (a == b) return false;
    return true;
}

} // namespace rank1lab
