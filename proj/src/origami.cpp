#include "rank1lab/origami.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "rank1lab/errors.hpp"

namespace rank1lab {

size_t OrigamiHash::operator()(const Origami& o) const {
    size_t seed = static_cast<size_t>(o.n);
    auto mix = [&seed](size_t x) {
        seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    };
    for (int x : o.h.images()) mix(static_cast<size_t>(x));
    for (int x : o.v.images()) mix(static_cast<size_t>(x));
    return seed;
}

Stratum SingularityData::stratum() const {
    Stratum s;
    for (int m : cone_angle_multiples)
        if (m >= 2) s.zero_orders.push_back(m - 1);
    std::sort(s.zero_orders.rbegin(), s.zero_orders.rend());
    return s;
}

Origami validate(int n, const Perm& h, const Perm& v) {
    if (n < 1) throw BadPermutation("square count must be at least 1");
    if (h.size() != n || v.size() != n)
        throw BadPermutation("permutation degree does not match square count");
    if (!acts_transitively(n, {&h, &v}))
        throw NotTransitive("the squares are not connected by the gluings");
    return Origami{n, h, v};
}

Perm corner_walk(const Origami& o) {
    // Walk counterclockwise around the vertex at the top-right corner of a
    // square: right neighbor, its upper neighbor, back left, back down.
    return o.v.inverse() * o.h.inverse() * o.v * o.h;
}

SingularityData singularities(const Origami& o) {
    SingularityData out;
    out.vertex_cycles = corner_walk(o).cycles();
    for (const auto& cyc : out.vertex_cycles)
        out.cone_angle_multiples.push_back(static_cast<int>(cyc.size()));
    return out;
}

int genus(const Origami& o) {
    SingularityData sing = singularities(o);
    int vertex_count = static_cast<int>(sing.vertex_cycles.size());
    // Euler characteristic of the square complex: V - E + F = V - 2n + n.
    int two_g = 2 - (vertex_count - o.n);
    if (two_g % 2 != 0)
        throw InternalInconsistency("odd Euler characteristic defect");
    int g = two_g / 2;
    int total_order = 0;
    for (int k : sing.stratum().zero_orders) total_order += k;
    if (total_order != 2 * g - 2)
        throw InternalInconsistency("zero orders disagree with the genus");
    return g;
}

namespace {

// Deterministic relabeling by breadth-first traversal from `start`,
// exploring the right neighbor before the upper one. Returns new labels
// indexed by old label.
std::vector<int> bfs_labels(const Origami& o, int start) {
    std::vector<int> label(static_cast<size_t>(o.n), -1);
    std::vector<int> queue;
    queue.reserve(static_cast<size_t>(o.n));
    label[static_cast<size_t>(start)] = 0;
    queue.push_back(start);
    int next = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int y : {o.h(x), o.v(x)}) {
            if (label[static_cast<size_t>(y)] < 0) {
                label[static_cast<size_t>(y)] = next++;
                queue.push_back(y);
            }
        }
    }
    return label;
}

} // namespace

std::pair<Origami, Perm> canonical_form_with_map(const Origami& o) {
    std::pair<std::vector<int>, std::vector<int>> best;
    Perm best_pi;
    bool have = false;
    for (int start = 0; start < o.n; ++start) {
        Perm pi{Perm(bfs_labels(o, start))};
        Perm h2 = o.h.conjugate_by(pi);
        Perm v2 = o.v.conjugate_by(pi);
        auto key = std::make_pair(h2.images(), v2.images());
        if (!have || key < best) {
            best = std::move(key);
            best_pi = std::move(pi);
            have = true;
        }
    }
    Origami canon{o.n, Perm(best.first), Perm(best.second)};
    return {std::move(canon), std::move(best_pi)};
}

Origami canonical_form(const Origami& o) { return canonical_form_with_map(o).first; }

void enumerate(int n, const std::optional<Stratum>& stratum,
               const std::function<bool(const Origami&)>& yield) {
    std::unordered_set<Origami, OrigamiHash> seen;
    for (const auto& type : partitions(n)) {
        Perm h = canonical_of_cycle_type(n, type);
        std::vector<int> vimg(static_cast<size_t>(n));
        std::iota(vimg.begin(), vimg.end(), 0);
        do {
            Perm v{Perm(vimg)};
            if (!acts_transitively(n, {&h, &v})) continue;
            Origami o{n, h, v};
            if (stratum && singularities(o).stratum() != *stratum) continue;
            Origami canon = canonical_form(o);
            if (seen.insert(canon).second) {
                if (!yield(canon)) return;
            }
        } while (std::next_permutation(vimg.begin(), vimg.end()));
    }
}

std::vector<Origami> enumerate_all(int n, const std::optional<Stratum>& stratum) {
    std::vector<Origami> out;
    enumerate(n, stratum, [&out](const Origami& o) {
        out.push_back(o);
        return true;
    });
    return out;
}

} // namespace rank1lab
