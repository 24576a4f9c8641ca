#include "rank1lab/cyclic_cover.hpp"

#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "rank1lab/errors.hpp"

namespace rank1lab {

CyclicCoverData validate_cover(int N, const std::array<int, 4>& a) {
    if (N < 2) throw ConstraintViolated("cover degree must satisfy N >= 2");
    long long sum = 0;
    int g = N;
    for (int i = 0; i < 4; ++i) {
        if (a[static_cast<size_t>(i)] <= 0 || a[static_cast<size_t>(i)] > N)
            throw ConstraintViolated("monodromy a_" + std::to_string(i + 1) +
                                     " must satisfy 0 < a_i <= N");
        sum += a[static_cast<size_t>(i)];
        g = std::gcd(g, a[static_cast<size_t>(i)]);
    }
    if (g != 1) throw ConstraintViolated("gcd(N, a_1, a_2, a_3, a_4) must be 1");
    if (sum % N != 0) throw ConstraintViolated("sum of a_i must be divisible by N");
    return CyclicCoverData{N, a};
}

int rh_genus(const CyclicCoverData& d) {
    long long branch = 0;
    for (int ai : d.a) branch += std::gcd(ai, d.N);
    if (branch % 2 != 0) throw InternalInconsistency("Riemann-Hurwitz count is odd");
    return static_cast<int>(d.N + 1 - branch / 2);
}

namespace {

// The pillowcase is two half-squares sewn along their boundary; the sheet
// shifts live on three slits joining consecutive corners: the bottom crease
// (shift s1 = a1), the middle vertical seam (s2 = a1 + a2) and the top
// crease (s3 = a1 + a2 + a3). The side seam carries no shift. Creases glue
// with a half-turn, so crossing them reverses the translation frame.
struct CoverComplex {
    int N;
    int s1, s2, s3;

    int front(int k) const { return 2 * mod(k); }
    int back(int k) const { return 2 * mod(k) + 1; }
    int mod(int k) const { return ((k % N) + N) % N; }
};

struct Gluing {
    int from, to;
    bool reverses;
};

} // namespace

Origami build_origami(const CyclicCoverData& d) {
    CoverComplex cx{d.N, d.a[0] % d.N, (d.a[0] + d.a[1]) % d.N,
                    (d.a[0] + d.a[1] + d.a[2]) % d.N};
    int n = 2 * d.N;

    std::vector<std::vector<Gluing>> adj(static_cast<size_t>(n));
    auto glue = [&](int x, int y, bool reverses) {
        adj[static_cast<size_t>(x)].push_back(Gluing{x, y, reverses});
        adj[static_cast<size_t>(y)].push_back(Gluing{y, x, reverses});
    };
    for (int k = 0; k < d.N; ++k) {
        glue(cx.front(k), cx.back(k + cx.s2), false); // middle seam
        glue(cx.back(k), cx.front(k), false);         // side seam
        glue(cx.front(k), cx.back(k + cx.s1), true);  // bottom crease
        glue(cx.front(k), cx.back(k + cx.s3), true);  // top crease
    }

    // Orient each square: a consistent spin assignment is precisely a square
    // root of the pulled-back quadratic differential.
    std::vector<int> spin(static_cast<size_t>(n), 0);
    for (int start = 0; start < n; ++start) {
        if (spin[static_cast<size_t>(start)] != 0) continue;
        spin[static_cast<size_t>(start)] = 1;
        std::queue<int> bfs;
        bfs.push(start);
        while (!bfs.empty()) {
            int x = bfs.front();
            bfs.pop();
            for (const Gluing& e : adj[static_cast<size_t>(x)]) {
                int want = e.reverses ? -spin[static_cast<size_t>(x)]
                                      : spin[static_cast<size_t>(x)];
                if (spin[static_cast<size_t>(e.to)] == 0) {
                    spin[static_cast<size_t>(e.to)] = want;
                    bfs.push(e.to);
                } else if (spin[static_cast<size_t>(e.to)] != want) {
                    throw NotOrientable("pulled-back form is a genuine quadratic differential");
                }
            }
        }
    }

    // Read off the right and top neighbors; a spin -1 square is assembled
    // rotated by a half-turn, swapping its left/right and top/bottom sides.
    std::vector<int> h(static_cast<size_t>(n)), v(static_cast<size_t>(n));
    for (int k = 0; k < d.N; ++k) {
        int f = cx.front(k), b = cx.back(k);
        bool fu = spin[static_cast<size_t>(f)] > 0, bu = spin[static_cast<size_t>(b)] > 0;
        h[static_cast<size_t>(f)] = fu ? cx.back(k + cx.s2) : cx.back(k);
        h[static_cast<size_t>(b)] = bu ? cx.front(k) : cx.front(k - cx.s2);
        v[static_cast<size_t>(f)] = fu ? cx.back(k + cx.s3) : cx.back(k + cx.s1);
        v[static_cast<size_t>(b)] = bu ? cx.front(k - cx.s3) : cx.front(k - cx.s1);
    }

    Origami o{n, Perm(std::move(h)), Perm(std::move(v))};
    validate(o.n, o.h, o.v);
    if (genus(o) != rh_genus(d))
        throw InternalInconsistency("built cover disagrees with Riemann-Hurwitz genus");
    return o;
}

Perm deck_transformation(const CyclicCoverData& d) {
    std::vector<int> img(static_cast<size_t>(2 * d.N));
    for (int k = 0; k < d.N; ++k) {
        img[static_cast<size_t>(2 * k)] = 2 * ((k + 1) % d.N);
        img[static_cast<size_t>(2 * k + 1)] = 2 * ((k + 1) % d.N) + 1;
    }
    return Perm(std::move(img));
}

Origami eierlegende_wollmilchsau() {
    return canonical_form(build_origami(validate_cover(4, {1, 1, 1, 1})));
}

Origami ornithorynque() {
    return canonical_form(build_origami(validate_cover(6, {1, 1, 1, 3})));
}

} // namespace rank1lab
