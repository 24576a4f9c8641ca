#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "rank1lab/cylinders.hpp"
#include "rank1lab/errors.hpp"
#include "rank1lab/origami.hpp"
#include "rank1lab/permutation.hpp"
#include "rank1lab/sl2z.hpp"

using rank1lab::Origami;
using rank1lab::Perm;
using rank1lab::Stratum;

namespace {

Origami l_origami() {
    return rank1lab::validate(3, Perm::from_one_based({2, 1, 3}),
                              Perm::from_one_based({3, 2, 1}));
}

Origami torus() {
    return rank1lab::validate(1, Perm::identity(1), Perm::identity(1));
}

std::vector<Origami> sample_surfaces() {
    std::vector<Origami> out{torus(), l_origami()};
    for (const Origami& o : rank1lab::enumerate_all(4, Stratum{{1, 1}})) out.push_back(o);
    for (const Origami& o : rank1lab::enumerate_all(4, Stratum{{2}})) out.push_back(o);
    return out;
}

// apply one folding move to a direction vector: T^k maps (q,p) to (q+kp, p),
// S maps (q,p) to (-p, q)
std::pair<long long, long long> move_on_vector(const rank1lab::SlopeMove& m, long long q,
                                               long long p) {
    if (m.gen == 'T') return {q + m.count * p, p};
    return {-p, q};
}

} // namespace

TEST_CASE("shear and quarter turn act as documented on the gluings") {
    Origami o = l_origami();
    Origami t = rank1lab::act_T(o);
    CHECK(t.h == o.h);
    CHECK(t.v == (o.v * o.h.inverse()));
    Origami s = rank1lab::act_S(o);
    CHECK(s.h == o.v.inverse());
    CHECK(s.v == o.h);
}

TEST_CASE("generator actions invert and satisfy the group relations") {
    for (const Origami& o : sample_surfaces()) {
        CHECK(rank1lab::act_T_inv(rank1lab::act_T(o)) == o);
        CHECK(rank1lab::act_T(rank1lab::act_T_inv(o)) == o);
        CHECK(rank1lab::act_S_inv(rank1lab::act_S(o)) == o);
        // S^2 negates both gluings, S^4 is the identity on the nose
        Origami s2 = rank1lab::act_S(rank1lab::act_S(o));
        CHECK(s2.h == o.h.inverse());
        CHECK(s2.v == o.v.inverse());
        CHECK(rank1lab::act_S(rank1lab::act_S(s2)) == o);
        // S^2 T S^2 is the shear again, after relabeling by h
        Origami w = rank1lab::act_S(rank1lab::act_S(rank1lab::act_T(s2)));
        CHECK(rank1lab::canonical_form(w) ==
              rank1lab::canonical_form(rank1lab::act_T(o)));
        // the actions preserve square count and stratum
        CHECK(rank1lab::act_T(o).n == o.n);
        CHECK(rank1lab::singularities(rank1lab::act_T(o)).stratum() ==
              rank1lab::singularities(o).stratum());
        CHECK(rank1lab::singularities(rank1lab::act_S(o)).stratum() ==
              rank1lab::singularities(o).stratum());
    }
}

TEST_CASE("act_T_pow matches iterated shears either way") {
    Origami o = l_origami();
    Origami fwd = o;
    Origami bwd = o;
    for (int k = 0; k <= 7; ++k) {
        CHECK(rank1lab::act_T_pow(o, k) == fwd);
        CHECK(rank1lab::act_T_pow(o, -k) == bwd);
        fwd = rank1lab::act_T(fwd);
        bwd = rank1lab::act_T_inv(bwd);
    }
}

TEST_CASE("letter encoding covers the four generator moves") {
    Origami o = l_origami();
    CHECK(rank1lab::act_letter(o, 0) == rank1lab::act_T(o));
    CHECK(rank1lab::act_letter(o, 1) == rank1lab::act_T_inv(o));
    CHECK(rank1lab::act_letter(o, 2) == rank1lab::act_S(o));
    CHECK(rank1lab::act_letter(o, 3) == rank1lab::act_S_inv(o));
}

TEST_CASE("orbit explores the full generator closure") {
    for (const Origami& seed : sample_surfaces()) {
        auto orb = rank1lab::orbit(seed);
        REQUIRE(!orb.members.empty());
        CHECK(orb.members[0] == rank1lab::canonical_form(seed));
        CHECK(orb.edges.size() == 2 * orb.members.size());
        std::set<std::pair<std::vector<int>, std::vector<int>>> distinct;
        for (const Origami& m : orb.members) {
            CHECK(rank1lab::canonical_form(m) == m);
            CHECK(distinct.insert({m.h.images(), m.v.images()}).second);
        }
        for (const auto& e : orb.edges) {
            Origami img = rank1lab::canonical_form(
                rank1lab::act_gen(orb.members[static_cast<size_t>(e.from)], e.gen));
            CHECK(img == orb.members[static_cast<size_t>(e.to)]);
            CHECK(orb.index_of(img) == e.to);
        }
        // a disconnected pair can never appear among the members
        Origami absent{seed.n + 1, Perm::identity(seed.n + 1), Perm::identity(seed.n + 1)};
        CHECK(orb.index_of(absent) == -1);
    }
}

TEST_CASE("orbit sizes of the small reference surfaces") {
    CHECK(rank1lab::orbit(torus()).members.size() == 1);
    CHECK(rank1lab::orbit(l_origami()).members.size() == 3);
    // the three-square stratum H(2) is a single orbit
    auto classes = rank1lab::enumerate_all(3, Stratum{{2}});
    REQUIRE(classes.size() == 3);
    auto orb = rank1lab::orbit(classes[0]);
    for (const Origami& o : classes) CHECK(orb.index_of(o) >= 0);
}

TEST_CASE("orbit membership does not depend on the seed") {
    auto orb = rank1lab::orbit(l_origami());
    for (const Origami& m : orb.members) {
        auto again = rank1lab::orbit(m);
        REQUIRE(again.members.size() == orb.members.size());
        for (const Origami& x : again.members) CHECK(orb.index_of(x) >= 0);
    }
}

TEST_CASE("orbit budget is enforced") {
    CHECK_THROWS_AS(rank1lab::orbit(l_origami(), 2), rank1lab::OrbitBudgetExceeded);
    CHECK_NOTHROW(rank1lab::orbit(l_origami(), 3));
}

TEST_CASE("cusps partition the orbit into T-orbits") {
    for (const Origami& seed : sample_surfaces()) {
        auto orb = rank1lab::orbit(seed);
        auto cs = rank1lab::cusps(orb);
        std::set<int> covered;
        std::size_t width_total = 0;
        for (const auto& c : cs) {
            CHECK(c.width == static_cast<int>(c.members.size()));
            width_total += c.members.size();
            CHECK(std::is_sorted(c.members.begin(), c.members.end()));
            // the representative is the least member of its T-orbit
            Origami least = orb.members[static_cast<size_t>(c.members[0])];
            for (int i : c.members) {
                CHECK(covered.insert(i).second);
                least = std::min(least, orb.members[static_cast<size_t>(i)]);
            }
            CHECK(c.rep == least);
            // the shear maps every member of the cusp back into the cusp
            for (int i : c.members) {
                int j = orb.index_of(rank1lab::canonical_form(
                    rank1lab::act_T(orb.members[static_cast<size_t>(i)])));
                CHECK(std::find(c.members.begin(), c.members.end(), j) !=
                      c.members.end());
            }
            // direction is primitive and sign-normalized
            CHECK(std::gcd(c.q, c.p) == 1);
            CHECK((c.q > 0 || (c.q == 0 && c.p > 0)));
            // the direction really is periodic on the base surface: pinching
            // it lands back inside this cusp's T-orbit
            auto d = rank1lab::direction_decomposition(orb.members[0], c.q, c.p);
            int idx = orb.index_of(rank1lab::canonical_form(d.surface));
            CHECK(std::find(c.members.begin(), c.members.end(), idx) != c.members.end());
        }
        CHECK(width_total == orb.members.size());
    }
}

TEST_CASE("reference cusp counts and directions") {
    auto torus_cusps = rank1lab::cusps(rank1lab::orbit(torus()));
    REQUIRE(torus_cusps.size() == 1);
    CHECK(torus_cusps[0].width == 1);
    CHECK(torus_cusps[0].q == 1);
    CHECK(torus_cusps[0].p == 0);

    auto l_cusps = rank1lab::cusps(rank1lab::orbit(l_origami()));
    REQUIRE(l_cusps.size() == 2);
    CHECK(l_cusps[0].width + l_cusps[1].width == 3);
    std::set<std::pair<long long, long long>> dirs;
    for (const auto& c : l_cusps) dirs.insert({c.q, c.p});
    CHECK(dirs == std::set<std::pair<long long, long long>>{{1, 0}, {1, -1}});
}

TEST_CASE("folding word sends a direction to the horizontal one") {
    const std::vector<std::pair<long long, long long>> dirs{
        {1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, -1}, {3, 7}, {7, -3}, {-5, 2}, {-4, -9}};
    for (auto [q, p] : dirs) {
        auto word = rank1lab::direction_to_horizontal_word(q, p);
        long long a = q;
        long long b = p;
        for (const auto& m : word) std::tie(a, b) = move_on_vector(m, a, b);
        CHECK(a == 1);
        CHECK(b == 0);
    }
    CHECK_THROWS_AS(rank1lab::direction_to_horizontal_word(0, 0),
                    rank1lab::InvalidDirection);
    CHECK_THROWS_AS(rank1lab::direction_to_horizontal_word(2, 4),
                    rank1lab::InvalidDirection);
}

TEST_CASE("applying the folding word renders the direction horizontal") {
    Origami o = l_origami();
    for (auto [q, p] : {std::pair<long long, long long>{1, 1}, {1, -1}, {2, 1}}) {
        Origami sheared = o;
        for (const auto& m : rank1lab::direction_to_horizontal_word(q, p))
            sheared = rank1lab::apply_move(sheared, m);
        // same cylinder shapes as the library's direction decomposition
        auto direct = rank1lab::direction_decomposition(o, q, p);
        auto horiz = rank1lab::horizontal_decomposition(sheared);
        std::multiset<std::pair<int, int>> a, b;
        for (const auto& c : direct.cylinders) a.insert({c.circumference, c.height});
        for (const auto& c : horiz.cylinders) b.insert({c.circumference, c.height});
        CHECK(a == b);
    }
}
