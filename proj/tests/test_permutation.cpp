#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "rank1lab/errors.hpp"
#include "rank1lab/permutation.hpp"

using rank1lab::Perm;

namespace {

// reference composition oracle: (f*g)(x) = f(g(x))
Perm compose_oracle(const Perm& f, const Perm& g) {
    std::vector<int> img(static_cast<size_t>(f.size()));
    for (int x = 0; x < f.size(); ++x) img[static_cast<size_t>(x)] = f(g(x));
    return Perm(img);
}

} // namespace

TEST_CASE("identity fixes every point and is neutral") {
    Perm e = Perm::identity(5);
    CHECK(e.is_identity());
    for (int i = 0; i < 5; ++i) CHECK(e(i) == i);
    Perm p = Perm::from_one_based({3, 1, 2, 5, 4});
    CHECK((e * p) == p);
    CHECK((p * e) == p);
}

TEST_CASE("construction rejects non-bijections") {
    CHECK_THROWS_AS(Perm({0, 0, 2}), rank1lab::BadPermutation);
    CHECK_THROWS_AS(Perm({0, 3, 1}), rank1lab::BadPermutation);
    CHECK_THROWS_AS(Perm({-1, 0, 1}), rank1lab::BadPermutation);
    CHECK_THROWS_AS(Perm::from_one_based({1, 1}), rank1lab::BadPermutation);
    CHECK_THROWS_AS(Perm::from_one_based({0, 1}), rank1lab::BadPermutation);
}

TEST_CASE("one-based conversion round-trips") {
    std::vector<int> img{2, 1, 3};
    Perm p = Perm::from_one_based(img);
    CHECK(p(0) == 1);
    CHECK(p(1) == 0);
    CHECK(p(2) == 2);
    CHECK(p.to_one_based() == img);
}

TEST_CASE("composition order is right-to-left") {
    // f = (1 2), g = (2 3) on three points: f*g sends 2 -> f(3) = 3... check
    // against the elementwise oracle instead of hand expansion.
    Perm f = Perm::from_one_based({2, 1, 3});
    Perm g = Perm::from_one_based({1, 3, 2});
    CHECK((f * g) == compose_oracle(f, g));
    CHECK((g * f) == compose_oracle(g, f));
    CHECK((f * g) != (g * f)); // these two do not commute
}

TEST_CASE("inverse composes to the identity") {
    Perm p = Perm::from_one_based({4, 1, 5, 3, 2});
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
    CHECK(p.inverse().inverse() == p);
}

TEST_CASE("pow matches repeated composition and handles negatives") {
    Perm p = Perm::from_one_based({2, 3, 4, 5, 1}); // 5-cycle
    Perm acc = Perm::identity(5);
    for (int k = 0; k <= 12; ++k) {
        CHECK(pow(p, k) == acc);
        acc = p * acc;
    }
    CHECK(pow(p, 5).is_identity());
    CHECK(pow(p, -1) == p.inverse());
    CHECK(pow(p, -3) == pow(p.inverse(), 3));
    CHECK(pow(p, -7) == pow(p, -7 + 10)); // order 5 divides the difference
}

TEST_CASE("conjugation relabels points") {
    Perm p = Perm::from_cycles(4, {{1, 2}});
    Perm phi = Perm::from_cycles(4, {{1, 3}});
    // phi p phi^{-1} swaps the relabeled points 3 and 2
    CHECK(p.conjugate_by(phi) == Perm::from_cycles(4, {{3, 2}}));
    // conjugation preserves cycle type
    Perm q = Perm::from_one_based({2, 3, 1, 5, 4, 6});
    Perm psi = Perm::from_one_based({6, 4, 2, 5, 3, 1});
    CHECK(q.conjugate_by(psi).cycle_type() == q.cycle_type());
    // definition check: conjugate_by(phi) == phi * q * phi^{-1}
    CHECK(q.conjugate_by(psi) == (psi * q * psi.inverse()));
}

TEST_CASE("cycles start at their least point and follow images") {
    Perm p = Perm::from_cycles(6, {{1, 4, 2}, {3, 6}});
    auto cycs = p.cycles();
    REQUIRE(cycs.size() == 3); // includes the fixed point 5 (0-based 4)
    CHECK(cycs[0] == std::vector<int>{0, 3, 1});
    CHECK(cycs[1] == std::vector<int>{2, 5});
    CHECK(cycs[2] == std::vector<int>{4});
    CHECK(p.cycle_type() == std::vector<int>{3, 2, 1});
}

TEST_CASE("from_cycles rejects repeated or out-of-range points") {
    CHECK_THROWS_AS(Perm::from_cycles(3, {{1, 2}, {2, 3}}), rank1lab::BadPermutation);
    CHECK_THROWS_AS(Perm::from_cycles(3, {{1, 4}}), rank1lab::BadPermutation);
    CHECK_THROWS_AS(Perm::from_cycles(3, {{0, 1}}), rank1lab::BadPermutation);
}

TEST_CASE("transitivity detection") {
    Perm a = Perm::from_cycles(4, {{1, 2}});
    Perm b = Perm::from_cycles(4, {{3, 4}});
    Perm c = Perm::from_cycles(4, {{2, 3}});
    CHECK_FALSE(rank1lab::acts_transitively(4, {&a, &b}));
    CHECK(rank1lab::acts_transitively(4, {&a, &b, &c}));
    Perm cyc = Perm::from_one_based({2, 3, 4, 1});
    CHECK(rank1lab::acts_transitively(4, {&cyc}));
    Perm e = Perm::identity(1);
    CHECK(rank1lab::acts_transitively(1, {&e}));
}

TEST_CASE("partitions are complete, descending, and deduplicated") {
    auto parts = rank1lab::partitions(6);
    CHECK(parts.size() == 11); // p(6)
    std::set<std::vector<int>> seen;
    for (const auto& t : parts) {
        CHECK(std::accumulate(t.begin(), t.end(), 0) == 6);
        CHECK(std::is_sorted(t.rbegin(), t.rend()));
        CHECK(seen.insert(t).second);
    }
    CHECK(rank1lab::partitions(1).size() == 1);
    CHECK(rank1lab::partitions(8).size() == 22);
}

TEST_CASE("canonical cycle-type representative has that type") {
    for (int n : {3, 5, 7}) {
        for (const auto& type : rank1lab::partitions(n)) {
            Perm p = rank1lab::canonical_of_cycle_type(n, type);
            CHECK(p.size() == n);
            CHECK(p.cycle_type() == type);
        }
    }
}
