#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "rank1lab/cyclic_cover.hpp"
#include "rank1lab/errors.hpp"
#include "rank1lab/homology.hpp"
#include "rank1lab/origami.hpp"
#include "rank1lab/permutation.hpp"
#include "rank1lab/sl2z.hpp"

using rank1lab::Chain;
using rank1lab::HomologyBasis;
using rank1lab::IMat;
using rank1lab::Origami;
using rank1lab::Perm;

namespace {

Origami l_origami() {
    return rank1lab::validate(3, Perm::from_one_based({2, 1, 3}),
                              Perm::from_one_based({3, 2, 1}));
}

Origami torus() {
    return rank1lab::validate(1, Perm::identity(1), Perm::identity(1));
}

IMat mat_mul(const IMat& a, const IMat& b) {
    size_t rows = a.size(), inner = b.size(), cols = b[0].size();
    IMat out(rows, std::vector<long long>(cols, 0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < inner; ++k)
            for (size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

IMat mat_transpose(const IMat& a) {
    IMat out(a[0].size(), std::vector<long long>(a.size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
    return out;
}

bool is_identity(const IMat& a) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

// Laplace expansion; the matrices here are at most 8x8
long long det(const IMat& a) {
    size_t n = a.size();
    if (n == 1) return a[0][0];
    long long sum = 0;
    for (size_t c = 0; c < n; ++c) {
        if (a[0][c] == 0) continue;
        IMat minor(n - 1, std::vector<long long>(n - 1, 0));
        for (size_t i = 1; i < n; ++i) {
            size_t jj = 0;
            for (size_t j = 0; j < n; ++j)
                if (j != c) minor[i - 1][jj++] = a[i][j];
        }
        sum += (c % 2 == 0 ? 1 : -1) * a[0][c] * det(minor);
    }
    return sum;
}

Chain random_cycle(const HomologyBasis& b, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Chain c(static_cast<size_t>(2 * b.surface.n), 0);
    for (const Chain& rep : b.cycle_reps) {
        long long k = coeff(rng);
        for (size_t i = 0; i < c.size(); ++i) c[i] += k * rep[i];
    }
    return c;
}

void check_symplectic(const IMat& m, const IMat& j_from, const IMat& j_to) {
    CHECK(mat_mul(mat_transpose(m), mat_mul(j_to, m)) == j_from);
}

} // namespace

TEST_CASE("torus homology is a symplectic plane") {
    HomologyBasis b = rank1lab::homology_basis(torus());
    CHECK(b.genus == 1);
    CHECK(b.rank == 2);
    REQUIRE(b.cycle_reps.size() == 2);
    REQUIRE(b.intersection_form.size() == 2);
    CHECK(b.intersection_form[0][0] == 0);
    CHECK(b.intersection_form[1][1] == 0);
    CHECK(b.intersection_form[0][1] == -b.intersection_form[1][0]);
    CHECK(std::llabs(b.intersection_form[0][1]) == 1);
}

TEST_CASE("basis ranks, antisymmetry, and unimodularity on reference surfaces") {
    for (const Origami& o : {l_origami(), rank1lab::eierlegende_wollmilchsau(),
                             rank1lab::ornithorynque()}) {
        HomologyBasis b = rank1lab::homology_basis(o);
        CHECK(b.rank == 2 * rank1lab::genus(o));
        CHECK(b.cycle_reps.size() == static_cast<size_t>(b.rank));
        for (int i = 0; i < b.rank; ++i) {
            CHECK(b.intersection_form[static_cast<size_t>(i)][static_cast<size_t>(i)] == 0);
            for (int j = 0; j < b.rank; ++j)
                CHECK(b.intersection_form[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                      -b.intersection_form[static_cast<size_t>(j)][static_cast<size_t>(i)]);
        }
        long long d = det(b.intersection_form);
        CHECK(d == 1); // antisymmetric unimodular forms of even rank have det 1
    }
}

TEST_CASE("the intersection pairing is antisymmetric and bilinear on cycles") {
    std::mt19937 rng(7);
    for (const Origami& o :
         {l_origami(), rank1lab::eierlegende_wollmilchsau(),
          rank1lab::enumerate_all(4, rank1lab::Stratum{{1, 1}}).front()}) {
        HomologyBasis b = rank1lab::homology_basis(o);
        for (int trial = 0; trial < 8; ++trial) {
            Chain x = random_cycle(b, rng);
            Chain y = random_cycle(b, rng);
            Chain z = random_cycle(b, rng);
            long long xy = rank1lab::chain_intersection(o, x, y);
            CHECK(xy == -rank1lab::chain_intersection(o, y, x));
            CHECK(rank1lab::chain_intersection(o, x, x) == 0);
            Chain xpz = x;
            for (size_t i = 0; i < x.size(); ++i) xpz[i] += z[i];
            CHECK(rank1lab::chain_intersection(o, xpz, y) ==
                  xy + rank1lab::chain_intersection(o, z, y));
        }
        // the stored form tabulates the pairing on the basis representatives
        for (int i = 0; i < b.rank; ++i)
            for (int j = 0; j < b.rank; ++j)
                CHECK(rank1lab::chain_intersection(o, b.cycle_reps[static_cast<size_t>(i)],
                                                   b.cycle_reps[static_cast<size_t>(j)]) ==
                      b.intersection_form[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
}

TEST_CASE("reduction inverts the basis representatives") {
    for (const Origami& o : {l_origami(), rank1lab::eierlegende_wollmilchsau()}) {
        HomologyBasis b = rank1lab::homology_basis(o);
        for (int k = 0; k < b.rank; ++k) {
            auto coords = rank1lab::reduce_cycle(b, b.cycle_reps[static_cast<size_t>(k)]);
            for (int i = 0; i < b.rank; ++i)
                CHECK(coords[static_cast<size_t>(i)] == (i == k ? 1 : 0));
        }
        // sums of representatives reduce to sums of coordinates
        Chain all(static_cast<size_t>(2 * o.n), 0);
        for (const Chain& rep : b.cycle_reps)
            for (size_t i = 0; i < all.size(); ++i) all[i] += rep[i];
        auto coords = rank1lab::reduce_cycle(b, all);
        for (long long c : coords) CHECK(c == 1);
    }
}

TEST_CASE("reduction rejects chains with boundary") {
    Origami ew = rank1lab::eierlegende_wollmilchsau();
    HomologyBasis b = rank1lab::homology_basis(ew);
    auto classes = rank1lab::singularities(ew).vertex_cycles;
    auto class_of = [&classes](int sq) {
        for (size_t c = 0; c < classes.size(); ++c)
            for (int x : classes[c])
                if (x == sq) return static_cast<int>(c);
        return -1;
    };
    Perm hinv = ew.h.inverse();
    bool found = false;
    for (int i = 0; i < ew.n && !found; ++i) {
        if (class_of(i) == class_of(hinv(i))) continue;
        Chain single(static_cast<size_t>(2 * ew.n), 0);
        single[static_cast<size_t>(i)] = 1;
        CHECK_THROWS_AS(rank1lab::reduce_cycle(b, single), rank1lab::InternalInconsistency);
        found = true;
    }
    CHECK(found);
}

TEST_CASE("generator chain maps preserve the intersection pairing") {
    std::mt19937 rng(11);
    for (const Origami& o : {l_origami(), rank1lab::eierlegende_wollmilchsau()}) {
        HomologyBasis b = rank1lab::homology_basis(o);
        for (int letter = 0; letter < 4; ++letter) {
            Origami image = rank1lab::act_letter(o, letter);
            for (int trial = 0; trial < 6; ++trial) {
                Chain x = random_cycle(b, rng);
                Chain y = random_cycle(b, rng);
                Chain mx = rank1lab::chain_map_letter(o, letter, x);
                Chain my = rank1lab::chain_map_letter(o, letter, y);
                CHECK(rank1lab::chain_intersection(image, mx, my) ==
                      rank1lab::chain_intersection(o, x, y));
            }
        }
    }
}

TEST_CASE("the tautological cycles transform by the defining matrix") {
    for (const Origami& o : {l_origami(), rank1lab::eierlegende_wollmilchsau()}) {
        int n = o.n;
        Chain sum_t(static_cast<size_t>(2 * n), 0), sum_r(static_cast<size_t>(2 * n), 0);
        for (int j = 0; j < n; ++j) {
            sum_t[static_cast<size_t>(j)] = 1;
            sum_r[static_cast<size_t>(n + j)] = 1;
        }
        // shear: horizontal class fixed, vertical class picks up the horizontal
        Chain tt = rank1lab::chain_map_letter(o, 0, sum_t);
        Chain tr = rank1lab::chain_map_letter(o, 0, sum_r);
        CHECK(tt == sum_t);
        for (int j = 0; j < n; ++j) {
            CHECK(tr[static_cast<size_t>(j)] == 1);
            CHECK(tr[static_cast<size_t>(n + j)] == 1);
        }
        // quarter turn: horizontal goes to vertical, vertical to minus horizontal
        Chain st = rank1lab::chain_map_letter(o, 2, sum_t);
        Chain sr = rank1lab::chain_map_letter(o, 2, sum_r);
        CHECK(st == sum_r);
        for (int j = 0; j < n; ++j) {
            CHECK(sr[static_cast<size_t>(j)] == -1);
            CHECK(sr[static_cast<size_t>(n + j)] == 0);
        }
    }
}

TEST_CASE("generator actions are symplectic on every small surface") {
    for (int n = 1; n <= 5; ++n) {
        for (const Origami& o : rank1lab::enumerate_all(n)) {
            HomologyBasis from = rank1lab::homology_basis(o);
            for (char gen : {'T', 'S'}) {
                auto m = rank1lab::homology_action(o, gen);
                CHECK(m.gen == gen);
                CHECK(m.from == o);
                CHECK(m.to == rank1lab::canonical_form(rank1lab::act_gen(o, gen)));
                HomologyBasis to = rank1lab::homology_basis(m.to);
                check_symplectic(m.entries, from.intersection_form, to.intersection_form);
            }
        }
    }
}

TEST_CASE("torus generator actions have the classical traces") {
    Origami o = torus();
    auto t = rank1lab::homology_action(o, 'T');
    REQUIRE(t.entries.size() == 2);
    CHECK(t.entries[0][0] + t.entries[1][1] == 2);
    CHECK(det(t.entries) == 1);
    auto s = rank1lab::homology_action(o, 'S');
    CHECK(s.entries[0][0] + s.entries[1][1] == 0);
    CHECK(det(s.entries) == 1);
}

TEST_CASE("four quarter turns compose to the identity on homology") {
    Origami o = rank1lab::canonical_form(l_origami());
    HomologyBasis bases[5];
    bases[0] = rank1lab::homology_basis(o);
    IMat total;
    for (int step = 0; step < 4; ++step) {
        Origami next = rank1lab::canonical_form(rank1lab::act_S(bases[step].surface));
        bases[step + 1] = rank1lab::homology_basis(next);
        IMat m = rank1lab::homology_transition(bases[step], 2, bases[step + 1]);
        total = step == 0 ? m : mat_mul(m, total);
    }
    CHECK(bases[4].surface == o);
    CHECK(is_identity(total));
}

TEST_CASE("transitions demand the matching prepared basis") {
    Origami o = rank1lab::canonical_form(l_origami());
    HomologyBasis b = rank1lab::homology_basis(o);
    HomologyBasis wrong = rank1lab::homology_basis(rank1lab::eierlegende_wollmilchsau());
    CHECK_THROWS_AS(rank1lab::homology_transition(b, 0, wrong),
                    rank1lab::InternalInconsistency);
}
