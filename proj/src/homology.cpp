#include "rank1lab/homology.hpp"

#include <limits>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "rank1lab/errors.hpp"
#include "rank1lab/sl2z.hpp"

namespace rank1lab {

using boost::multiprecision::cpp_int;
using Mat = std::vector<std::vector<cpp_int>>;

namespace {

Mat identity_mat(int n) {
    Mat m(static_cast<size_t>(n), std::vector<cpp_int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    size_t m = a.size(), k = b.size(), n = b[0].size();
    Mat out(m, std::vector<cpp_int>(n, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < n; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

// Smith normal form with all four transforms: U * A * V = D.
struct SnfResult {
    Mat D, U, Uinv, V, Vinv;
    int rank = 0;
};

struct SnfWorker {
    Mat D, U, Uinv, V, Vinv;
    int m, n;

    explicit SnfWorker(Mat a)
        : D(std::move(a)),
          m(static_cast<int>(D.size())),
          n(static_cast<int>(D[0].size())) {
        U = identity_mat(m);
        Uinv = identity_mat(m);
        V = identity_mat(n);
        Vinv = identity_mat(n);
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        std::swap(D[static_cast<size_t>(i)], D[static_cast<size_t>(j)]);
        std::swap(U[static_cast<size_t>(i)], U[static_cast<size_t>(j)]);
        for (int r = 0; r < m; ++r)
            std::swap(Uinv[static_cast<size_t>(r)][static_cast<size_t>(i)],
                      Uinv[static_cast<size_t>(r)][static_cast<size_t>(j)]);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m; ++r)
            std::swap(D[static_cast<size_t>(r)][static_cast<size_t>(i)],
                      D[static_cast<size_t>(r)][static_cast<size_t>(j)]);
        for (int r = 0; r < n; ++r)
            std::swap(V[static_cast<size_t>(r)][static_cast<size_t>(i)],
                      V[static_cast<size_t>(r)][static_cast<size_t>(j)]);
        std::swap(Vinv[static_cast<size_t>(i)], Vinv[static_cast<size_t>(j)]);
    }
    void negate_row(int i) {
        for (auto& x : D[static_cast<size_t>(i)]) x = -x;
        for (auto& x : U[static_cast<size_t>(i)]) x = -x;
        for (int r = 0; r < m; ++r)
            Uinv[static_cast<size_t>(r)][static_cast<size_t>(i)] =
                -Uinv[static_cast<size_t>(r)][static_cast<size_t>(i)];
    }
    // row i += q * row j
    void add_row(int i, int j, const cpp_int& q) {
        for (int c = 0; c < n; ++c)
            D[static_cast<size_t>(i)][static_cast<size_t>(c)] +=
                q * D[static_cast<size_t>(j)][static_cast<size_t>(c)];
        for (int c = 0; c < m; ++c)
            U[static_cast<size_t>(i)][static_cast<size_t>(c)] +=
                q * U[static_cast<size_t>(j)][static_cast<size_t>(c)];
        for (int r = 0; r < m; ++r)
            Uinv[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
                q * Uinv[static_cast<size_t>(r)][static_cast<size_t>(i)];
    }
    // col i += q * col j
    void add_col(int i, int j, const cpp_int& q) {
        for (int r = 0; r < m; ++r)
            D[static_cast<size_t>(r)][static_cast<size_t>(i)] +=
                q * D[static_cast<size_t>(r)][static_cast<size_t>(j)];
        for (int r = 0; r < n; ++r)
            V[static_cast<size_t>(r)][static_cast<size_t>(i)] +=
                q * V[static_cast<size_t>(r)][static_cast<size_t>(j)];
        for (int c = 0; c < n; ++c)
            Vinv[static_cast<size_t>(j)][static_cast<size_t>(c)] -=
                q * Vinv[static_cast<size_t>(i)][static_cast<size_t>(c)];
    }

    SnfResult run() {
        int t = 0;
        while (t < m && t < n) {
            int pi = -1, pj = -1;
            cpp_int best = 0;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    const cpp_int& x = D[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    if (x == 0) continue;
                    cpp_int a = abs(x);
                    if (pi == -1 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == -1) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool settled = false;
            while (!settled) {
                settled = true;
                cpp_int pivot = D[static_cast<size_t>(t)][static_cast<size_t>(t)];
                for (int i = t + 1; i < m && settled; ++i) {
                    cpp_int x = D[static_cast<size_t>(i)][static_cast<size_t>(t)];
                    if (x == 0) continue;
                    add_row(i, t, -(x / pivot));
                    if (D[static_cast<size_t>(i)][static_cast<size_t>(t)] != 0) {
                        swap_rows(i, t); // strictly smaller remainder becomes the pivot
                        settled = false;
                    }
                }
                if (!settled) continue;
                for (int j = t + 1; j < n && settled; ++j) {
                    cpp_int x = D[static_cast<size_t>(t)][static_cast<size_t>(j)];
                    if (x == 0) continue;
                    add_col(j, t, -(x / pivot));
                    if (D[static_cast<size_t>(t)][static_cast<size_t>(j)] != 0) {
                        swap_cols(j, t);
                        settled = false;
                    }
                }
                if (!settled) continue;
                // divisibility chain: pivot must divide the remaining block
                for (int i = t + 1; i < m && settled; ++i)
                    for (int j = t + 1; j < n && settled; ++j)
                        if (D[static_cast<size_t>(i)][static_cast<size_t>(j)] % pivot != 0) {
                            add_row(t, i, 1);
                            settled = false;
                        }
            }
            if (D[static_cast<size_t>(t)][static_cast<size_t>(t)] < 0) negate_row(t);
            ++t;
        }
        return SnfResult{std::move(D), std::move(U), std::move(Uinv),
                         std::move(V), std::move(Vinv), t};
    }
};

SnfResult snf(Mat a) { return SnfWorker(std::move(a)).run(); }

// Determinant by fraction-free Gaussian elimination.
cpp_int bareiss_det(Mat a) {
    int n = static_cast<int>(a.size());
    cpp_int denom = 1;
    int sign = 1;
    for (int t = 0; t < n; ++t) {
        int p = t;
        while (p < n && a[static_cast<size_t>(p)][static_cast<size_t>(t)] == 0) ++p;
        if (p == n) return 0;
        if (p != t) {
            std::swap(a[static_cast<size_t>(p)], a[static_cast<size_t>(t)]);
            sign = -sign;
        }
        for (int i = t + 1; i < n; ++i) {
            for (int j = t + 1; j < n; ++j) {
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    (a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                         a[static_cast<size_t>(t)][static_cast<size_t>(t)] -
                     a[static_cast<size_t>(i)][static_cast<size_t>(t)] *
                         a[static_cast<size_t>(t)][static_cast<size_t>(j)]) /
                    denom;
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(t)] = 0;
        }
        denom = a[static_cast<size_t>(t)][static_cast<size_t>(t)];
    }
    return sign * a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
}

long long to_ll(const cpp_int& x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw InternalInconsistency("homology coefficient exceeds 64-bit range");
    return x.convert_to<long long>();
}

} // namespace

HomologyBasis homology_basis(const Origami& o) {
    int n = o.n;
    SingularityData sing = singularities(o);
    int nv = static_cast<int>(sing.vertex_cycles.size());
    std::vector<int> cls(static_cast<size_t>(n), -1);
    for (int c = 0; c < nv; ++c)
        for (int sq : sing.vertex_cycles[static_cast<size_t>(c)])
            cls[static_cast<size_t>(sq)] = c;

    Perm hinv = o.h.inverse(), vinv = o.v.inverse();

    // boundary of edges: t_i runs from the corner of h^{-1}(i) to that of i,
    // r_i from the corner of v^{-1}(i) to that of i
    Mat b1(static_cast<size_t>(nv), std::vector<cpp_int>(static_cast<size_t>(2 * n), 0));
    for (int i = 0; i < n; ++i) {
        b1[static_cast<size_t>(cls[static_cast<size_t>(i)])][static_cast<size_t>(i)] += 1;
        b1[static_cast<size_t>(cls[static_cast<size_t>(hinv(i))])][static_cast<size_t>(i)] -= 1;
        b1[static_cast<size_t>(cls[static_cast<size_t>(i)])][static_cast<size_t>(n + i)] += 1;
        b1[static_cast<size_t>(cls[static_cast<size_t>(vinv(i))])][static_cast<size_t>(n + i)] -= 1;
    }
    SnfResult s1 = snf(b1);
    if (s1.rank != nv - 1)
        throw InternalInconsistency("vertex boundary rank is not V - 1");
    int kdim = 2 * n - s1.rank;

    // boundary of faces, written in kernel coordinates
    Mat b2(static_cast<size_t>(2 * n), std::vector<cpp_int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        b2[static_cast<size_t>(vinv(i))][static_cast<size_t>(i)] += 1;
        b2[static_cast<size_t>(n + i)][static_cast<size_t>(i)] += 1;
        b2[static_cast<size_t>(i)][static_cast<size_t>(i)] -= 1;
        b2[static_cast<size_t>(n + hinv(i))][static_cast<size_t>(i)] -= 1;
    }
    Mat y = mat_mul(s1.Vinv, b2);
    for (int i = 0; i < s1.rank; ++i)
        for (int j = 0; j < n; ++j)
            if (y[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0)
                throw InternalInconsistency("face boundary is not a cycle");
    Mat q(static_cast<size_t>(kdim), std::vector<cpp_int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < kdim; ++i) q[static_cast<size_t>(i)] = y[static_cast<size_t>(s1.rank + i)];

    SnfResult sq = snf(std::move(q));
    for (int i = 0; i < sq.rank; ++i)
        if (sq.D[static_cast<size_t>(i)][static_cast<size_t>(i)] != 1)
            throw InternalInconsistency("first homology has torsion");
    int rank = kdim - sq.rank;

    HomologyBasis basis;
    basis.surface = o;
    basis.genus = genus(o);
    basis.rank = rank;
    if (rank != 2 * basis.genus)
        throw InternalInconsistency("homology rank disagrees with genus");

    // basis cycles z_k = Vker * Uq^{-1} e_{s+k}
    for (int k = 0; k < rank; ++k) {
        Chain z(static_cast<size_t>(2 * n), 0);
        for (int row = 0; row < 2 * n; ++row) {
            cpp_int acc = 0;
            for (int j = 0; j < kdim; ++j)
                acc += s1.V[static_cast<size_t>(row)][static_cast<size_t>(s1.rank + j)] *
                       sq.Uinv[static_cast<size_t>(j)][static_cast<size_t>(sq.rank + k)];
            z[static_cast<size_t>(row)] = to_ll(acc);
        }
        basis.cycle_reps.push_back(std::move(z));
    }

    // reduction = tail rows of Uq times tail rows of V1^{-1}
    basis.reduction.assign(static_cast<size_t>(rank),
                           std::vector<long long>(static_cast<size_t>(2 * n), 0));
    for (int k = 0; k < rank; ++k)
        for (int col = 0; col < 2 * n; ++col) {
            cpp_int acc = 0;
            for (int j = 0; j < kdim; ++j)
                acc += sq.U[static_cast<size_t>(sq.rank + k)][static_cast<size_t>(j)] *
                       s1.Vinv[static_cast<size_t>(s1.rank + j)][static_cast<size_t>(col)];
            basis.reduction[static_cast<size_t>(k)][static_cast<size_t>(col)] = to_ll(acc);
        }

    for (int k = 0; k < rank; ++k) { // reduction must invert the basis embedding
        std::vector<long long> coords = reduce_cycle(basis, basis.cycle_reps[static_cast<size_t>(k)]);
        for (int l = 0; l < rank; ++l)
            if (coords[static_cast<size_t>(l)] != (k == l ? 1 : 0))
                throw InternalInconsistency("basis reduction is not the identity on itself");
    }

    basis.intersection_form.assign(static_cast<size_t>(rank),
                                   std::vector<long long>(static_cast<size_t>(rank), 0));
    Mat j_exact(static_cast<size_t>(rank), std::vector<cpp_int>(static_cast<size_t>(rank), 0));
    for (int k = 0; k < rank; ++k)
        for (int l = 0; l < rank; ++l) {
            long long x = chain_intersection(o, basis.cycle_reps[static_cast<size_t>(k)],
                                             basis.cycle_reps[static_cast<size_t>(l)]);
            basis.intersection_form[static_cast<size_t>(k)][static_cast<size_t>(l)] = x;
            j_exact[static_cast<size_t>(k)][static_cast<size_t>(l)] = x;
        }
    for (int k = 0; k < rank; ++k)
        for (int l = 0; l < rank; ++l)
            if (basis.intersection_form[static_cast<size_t>(k)][static_cast<size_t>(l)] !=
                -basis.intersection_form[static_cast<size_t>(l)][static_cast<size_t>(k)])
                throw InternalInconsistency("intersection form is not antisymmetric");
    if (rank > 0 && bareiss_det(std::move(j_exact)) != 1)
        throw InternalInconsistency("intersection form is not unimodular");
    return basis;
}

std::vector<long long> reduce_cycle(const HomologyBasis& basis, const Chain& c) {
    const Origami& o = basis.surface;
    int n = o.n;
    if (static_cast<int>(c.size()) != 2 * n)
        throw InternalInconsistency("chain length does not match the surface");
    Perm hinv = o.h.inverse(), vinv = o.v.inverse();
    SingularityData sing = singularities(o);
    std::vector<long long> boundary(sing.vertex_cycles.size(), 0);
    std::vector<int> cls(static_cast<size_t>(n), -1);
    for (size_t cc = 0; cc < sing.vertex_cycles.size(); ++cc)
        for (int sq : sing.vertex_cycles[cc]) cls[static_cast<size_t>(sq)] = static_cast<int>(cc);
    for (int i = 0; i < n; ++i) {
        boundary[static_cast<size_t>(cls[static_cast<size_t>(i)])] += c[static_cast<size_t>(i)];
        boundary[static_cast<size_t>(cls[static_cast<size_t>(hinv(i))])] -= c[static_cast<size_t>(i)];
        boundary[static_cast<size_t>(cls[static_cast<size_t>(i)])] += c[static_cast<size_t>(n + i)];
        boundary[static_cast<size_t>(cls[static_cast<size_t>(vinv(i))])] -=
            c[static_cast<size_t>(n + i)];
    }
    for (long long b : boundary)
        if (b != 0) throw InternalInconsistency("chain is not a cycle");

    std::vector<long long> coords(static_cast<size_t>(basis.rank), 0);
    for (int k = 0; k < basis.rank; ++k) {
        long long acc = 0;
        for (int col = 0; col < 2 * n; ++col)
            acc += basis.reduction[static_cast<size_t>(k)][static_cast<size_t>(col)] *
                   c[static_cast<size_t>(col)];
        coords[static_cast<size_t>(k)] = acc;
    }
    return coords;
}

long long chain_intersection(const Origami& o, const Chain& x, const Chain& y) {
    // Signed crossings of y pushed off by (-eps,-eps) with x; both must be
    // closed. Cell interiors contribute x_t(i) y_r(v(i)) - x_r(i) y_t(h(i)):
    // the shifted r_j crosses t of the square below j upward (+1) and the
    // shifted t_j crosses r of the square left of j rightward (-1).
    const int n = o.n;
    auto t = [n](int i) { return static_cast<size_t>(i); };
    auto r = [n](int i) { return static_cast<size_t>(n + i); };
    long long total = 0;
    for (int i = 0; i < n; ++i) {
        total += x[t(i)] * y[r(o.v(i))];
        total -= x[r(i)] * y[t(o.h(i))];
    }

    // The shifted strands of y stop an eps short of each cone point, at the
    // down-left point of a corner sector TR(a), and reconnect by small arcs
    // around the cone. Walking such an arc counterclockwise past the whole
    // sector block of TR(i) crosses four x edge-ends: the head of r_i (-),
    // the tail of t_{h(i)} (+), the tail of r_{h^-1 v h(i)} (+), and the
    // head of t_{c(i)} (-), c the corner walk.
    Perm hinv = o.h.inverse(), vinv = o.v.inverse();
    Perm walk = corner_walk(o);
    std::vector<long long> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        w[static_cast<size_t>(i)] = -x[r(i)] + x[t(o.h(i))] + x[r(hinv(o.v(o.h(i))))] -
                                    x[t(walk(i))];

    // Route every arc through a base sector of its cone point; the detour is
    // a number of full turns, each crossing-free because x is closed. pre[s]
    // accumulates the weights from the base to sector s, full[s] the whole
    // turn (zero for closed x).
    std::vector<long long> pre(static_cast<size_t>(n), 0), full(static_cast<size_t>(n), 0);
    for (const auto& cyc : walk.cycles()) {
        long long acc = 0;
        for (int s : cyc) {
            pre[static_cast<size_t>(s)] = acc;
            acc += w[static_cast<size_t>(s)];
        }
        for (int s : cyc) full[static_cast<size_t>(s)] = acc;
    }
    // A strand of y entering a cone point lands in sector TR(j) (head of t_j
    // or r_j) and one leaving starts in TR(h^-1 j) (tail of t_j) or
    // TR(v^-1 j) (tail of r_j).
    for (int j = 0; j < n; ++j) {
        total += y[t(j)] * (full[static_cast<size_t>(j)] - pre[static_cast<size_t>(j)] +
                            pre[static_cast<size_t>(hinv(j))]);
        total += y[r(j)] * (full[static_cast<size_t>(j)] - pre[static_cast<size_t>(j)] +
                            pre[static_cast<size_t>(vinv(j))]);
    }
    return total;
}

Chain chain_map_letter(const Origami& o, int letter, const Chain& c) {
    int n = o.n;
    Chain out(static_cast<size_t>(2 * n), 0);
    Perm hinv = o.h.inverse();
    for (int j = 0; j < n; ++j) {
        long long t = c[static_cast<size_t>(j)], r = c[static_cast<size_t>(n + j)];
        switch (letter) {
        case 0: // T: t_j -> t_{h(j)}, r_j -> r_j + t_{h(j)}
            out[static_cast<size_t>(o.h(j))] += t + r;
            out[static_cast<size_t>(n + j)] += r;
            break;
        case 1: // T^{-1}: t_j -> t_{h^{-1}(j)}, r_j -> r_j - t_j
            out[static_cast<size_t>(hinv(j))] += t;
            out[static_cast<size_t>(n + j)] += r;
            out[static_cast<size_t>(j)] -= r;
            break;
        case 2: // S: t_j -> r_{v(j)}, r_j -> -t_j
            out[static_cast<size_t>(n + o.v(j))] += t;
            out[static_cast<size_t>(j)] -= r;
            break;
        case 3: // S^{-1}: t_j -> -r_j, r_j -> t_{h(j)}
            out[static_cast<size_t>(n + j)] -= t;
            out[static_cast<size_t>(o.h(j))] += r;
            break;
        default: throw InternalInconsistency("unknown letter " + std::to_string(letter));
        }
    }
    return out;
}

Chain chain_relabel(const Perm& pi, const Chain& c) {
    int n = pi.size();
    Chain out(static_cast<size_t>(2 * n), 0);
    for (int j = 0; j < n; ++j) {
        out[static_cast<size_t>(pi(j))] += c[static_cast<size_t>(j)];
        out[static_cast<size_t>(n + pi(j))] += c[static_cast<size_t>(n + j)];
    }
    return out;
}

IMat homology_transition(const HomologyBasis& from, int letter, const HomologyBasis& to) {
    auto [canon, pi] = canonical_form_with_map(act_letter(from.surface, letter));
    if (canon != to.surface)
        throw InternalInconsistency("transition target does not match the prepared basis");
    IMat m(static_cast<size_t>(to.rank), std::vector<long long>(static_cast<size_t>(from.rank), 0));
    for (int k = 0; k < from.rank; ++k) {
        Chain image = chain_relabel(
            pi, chain_map_letter(from.surface, letter, from.cycle_reps[static_cast<size_t>(k)]));
        std::vector<long long> col = reduce_cycle(to, image);
        for (int row = 0; row < to.rank; ++row)
            m[static_cast<size_t>(row)][static_cast<size_t>(k)] = col[static_cast<size_t>(row)];
    }
    return m;
}

SymplecticMatrix homology_action(const Origami& o, char gen) {
    if (gen != 'T' && gen != 'S')
        throw InternalInconsistency(std::string("unknown generator ") + gen);
    HomologyBasis from = homology_basis(o);
    HomologyBasis to = homology_basis(canonical_form(act_gen(o, gen)));
    SymplecticMatrix out;
    out.entries = homology_transition(from, gen == 'T' ? 0 : 2, to);
    out.gen = gen;
    out.from = o;
    out.to = to.surface;
    return out;
}

} // namespace rank1lab
