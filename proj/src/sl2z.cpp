#include "rank1lab/sl2z.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>

#include "rank1lab/errors.hpp"

namespace rank1lab {

using boost::multiprecision::cpp_int;
using Mat2 = std::array<cpp_int, 4>; // row-major [a b; c d]

Origami act_T(const Origami& o) { return Origami{o.n, o.h, o.v * o.h.inverse()}; }
Origami act_T_inv(const Origami& o) { return Origami{o.n, o.h, o.v * o.h}; }
Origami act_S(const Origami& o) { return Origami{o.n, o.v.inverse(), o.h}; }
Origami act_S_inv(const Origami& o) { return Origami{o.n, o.v, o.h.inverse()}; }

Origami act_T_pow(const Origami& o, long long k) {
    return Origami{o.n, o.h, o.v * pow(o.h, -k)};
}

Origami act_gen(const Origami& o, char gen) {
    if (gen == 'T') return act_T(o);
    if (gen == 'S') return act_S(o);
    throw InternalInconsistency(std::string("unknown generator ") + gen);
}

Origami act_letter(const Origami& o, int letter) {
    switch (letter) {
    case 0: return act_T(o);
    case 1: return act_T_inv(o);
    case 2: return act_S(o);
    case 3: return act_S_inv(o);
    default: throw InternalInconsistency("unknown letter " + std::to_string(letter));
    }
}

int Orbit::index_of(const Origami& canonical) const {
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i] == canonical) return static_cast<int>(i);
    return -1;
}

static Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    return Mat2{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Orbit orbit(const Origami& o, std::size_t cap) {
    validate(o.n, o.h, o.v);
    static const Mat2 kTInv{1, -1, 0, 1}; // inverses: B_new = B_old * g^{-1}
    static const Mat2 kSInv{0, 1, -1, 0};

    Orbit orb;
    std::unordered_map<Origami, int, OrigamiHash> index;
    Origami seed = canonical_form(o);
    orb.members.push_back(seed);
    orb.group_inv.push_back(Mat2{1, 0, 0, 1});
    index.emplace(seed, 0);

    std::queue<int> pending;
    pending.push(0);
    while (!pending.empty()) {
        int i = pending.front();
        pending.pop();
        for (char gen : {'T', 'S'}) {
            Origami img = canonical_form(act_gen(orb.members[static_cast<std::size_t>(i)], gen));
            auto it = index.find(img);
            int j;
            if (it != index.end()) {
                j = it->second;
            } else {
                if (orb.members.size() >= cap)
                    throw OrbitBudgetExceeded("SL(2,Z) orbit exceeds " + std::to_string(cap) +
                                              " surfaces");
                j = static_cast<int>(orb.members.size());
                orb.members.push_back(img);
                orb.group_inv.push_back(mat_mul(orb.group_inv[static_cast<std::size_t>(i)],
                                                gen == 'T' ? kTInv : kSInv));
                index.emplace(std::move(img), j);
                pending.push(j);
            }
            orb.edges.push_back(OrbitEdge{i, gen, j});
        }
    }
    return orb;
}

static long long to_ll(const cpp_int& x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw InternalInconsistency("cusp direction exceeds 64-bit range");
    return x.convert_to<long long>();
}

std::vector<Cusp> cusps(const Orbit& orb) {
    int n = static_cast<int>(orb.members.size());
    std::vector<int> tnext(static_cast<std::size_t>(n), -1);
    for (const OrbitEdge& e : orb.edges)
        if (e.gen == 'T') tnext[static_cast<std::size_t>(e.from)] = e.to;

    std::vector<Cusp> out;
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    for (int start = 0; start < n; ++start) {
        if (done[static_cast<std::size_t>(start)]) continue;
        Cusp c;
        int x = start;
        do {
            done[static_cast<std::size_t>(x)] = 1;
            c.members.push_back(x);
            x = tnext[static_cast<std::size_t>(x)];
        } while (x != start);
        std::sort(c.members.begin(), c.members.end());
        c.width = static_cast<int>(c.members.size());
        c.rep = orb.members[static_cast<std::size_t>(c.members[0])];
        for (int m : c.members)
            c.rep = std::min(c.rep, orb.members[static_cast<std::size_t>(m)]);
        // Direction carried by the least member's BFS group element: the
        // first column of B = A^{-1} sends the member's horizontal direction
        // back to the base surface. det B = 1, so the column is primitive.
        const Mat2& b = orb.group_inv[static_cast<std::size_t>(c.members[0])];
        cpp_int q = b[0], p = b[2];
        if (q < 0 || (q == 0 && p < 0)) {
            q = -q;
            p = -p;
        }
        c.q = to_ll(q);
        c.p = to_ll(p);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<SlopeMove> direction_to_horizontal_word(long long q, long long p) {
    if (q == 0 && p == 0) throw InvalidDirection("direction 0/0 is not a direction");
    if (std::gcd(std::abs(p), std::abs(q)) != 1)
        throw InvalidDirection("direction must be primitive");
    std::vector<SlopeMove> word;
    while (p != 0) {
        long long ap = std::abs(p);
        long long r = q % ap;
        if (r < 0) r += ap;
        long long k = (q - r) / p; // T^{-k}: (q, p) -> (q - k p, p), now 0 <= q < |p|
        if (k != 0) word.push_back(SlopeMove{'T', -k});
        word.push_back(SlopeMove{'S', 1}); // (q, p) -> (-p, q), shrinking |p|
        long long nq = -p, np = r;
        q = nq;
        p = np;
    }
    if (q < 0) { // S^2 = -I flips (-1,0) to (1,0)
        word.push_back(SlopeMove{'S', 1});
        word.push_back(SlopeMove{'S', 1});
        q = -q;
    }
    return word;
}

Origami apply_move(const Origami& o, const SlopeMove& m) {
    if (m.gen == 'T') return act_T_pow(o, m.count);
    if (m.gen == 'S') {
        Origami cur = o;
        for (long long i = 0; i < m.count; ++i) cur = act_S(cur);
        return cur;
    }
    throw InternalInconsistency(std::string("unknown move ") + m.gen);
}

} // namespace rank1lab
