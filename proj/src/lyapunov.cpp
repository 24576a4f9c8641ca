#include "rank1lab/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

#include "rank1lab/errors.hpp"
#include "rank1lab/homology.hpp"
#include "rank1lab/sl2z.hpp"

namespace rank1lab {

namespace {

constexpr long long kBlock = 10000;

struct Transition {
    int target;
    IMat matrix;
};

// Per-member homology bases and the four letter transitions between them.
struct WalkTable {
    std::vector<HomologyBasis> bases;
    std::vector<std::array<Transition, 4>> steps;
    int rank;
};

WalkTable build_walk_table(const Origami& o) {
    Orbit orb = orbit(o);
    std::unordered_map<Origami, int, OrigamiHash> index;
    for (size_t i = 0; i < orb.members.size(); ++i)
        index.emplace(orb.members[i], static_cast<int>(i));

    WalkTable table;
    for (const Origami& member : orb.members) table.bases.push_back(homology_basis(member));
    table.rank = table.bases[0].rank;

    table.steps.resize(orb.members.size());
    for (size_t i = 0; i < orb.members.size(); ++i) {
        for (int letter = 0; letter < 4; ++letter) {
            Origami img = canonical_form(act_letter(orb.members[i], letter));
            auto it = index.find(img);
            if (it == index.end())
                throw InternalInconsistency("letter image escapes the group orbit");
            table.steps[i][static_cast<size_t>(letter)] = Transition{
                it->second,
                homology_transition(table.bases[i], letter,
                                    table.bases[static_cast<size_t>(it->second)])};
        }
    }
    return table;
}

struct Kahan {
    double sum = 0, comp = 0;
    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

} // namespace

LyapunovEstimate random_walk_exponents(const Origami& o, long long steps,
                                       unsigned long long seed) {
    if (steps < 1) throw ConstraintViolated("walk needs at least one step");
    WalkTable table = build_walk_table(o);
    int rank = table.rank;

    std::vector<std::vector<double>> frame(static_cast<size_t>(rank),
                                           std::vector<double>(static_cast<size_t>(rank), 0.0));
    for (int c = 0; c < rank; ++c) frame[static_cast<size_t>(c)][static_cast<size_t>(c)] = 1.0;
    std::vector<Kahan> log_acc(static_cast<size_t>(rank));
    std::vector<double> scratch(static_cast<size_t>(rank));

    std::mt19937_64 rng(seed);
    int member = 0;
    std::vector<double> block_means;
    double block_start_second = 0.0;

    for (long long step = 0; step < steps; ++step) {
        int letter = static_cast<int>(rng() % 4);
        const Transition& tr = table.steps[static_cast<size_t>(member)][static_cast<size_t>(letter)];
        for (int c = 0; c < rank; ++c) {
            std::vector<double>& col = frame[static_cast<size_t>(c)];
            for (int r = 0; r < rank; ++r) {
                double acc = 0;
                for (int k = 0; k < rank; ++k)
                    acc += static_cast<double>(
                               tr.matrix[static_cast<size_t>(r)][static_cast<size_t>(k)]) *
                           col[static_cast<size_t>(k)];
                scratch[static_cast<size_t>(r)] = acc;
            }
            col = scratch;
        }
        member = tr.target;

        for (int c = 0; c < rank; ++c) { // modified Gram-Schmidt
            std::vector<double>& col = frame[static_cast<size_t>(c)];
            for (int p = 0; p < c; ++p) {
                const std::vector<double>& prev = frame[static_cast<size_t>(p)];
                double dot = 0;
                for (int r = 0; r < rank; ++r)
                    dot += prev[static_cast<size_t>(r)] * col[static_cast<size_t>(r)];
                for (int r = 0; r < rank; ++r)
                    col[static_cast<size_t>(r)] -= dot * prev[static_cast<size_t>(r)];
            }
            double norm2 = 0;
            for (int r = 0; r < rank; ++r)
                norm2 += col[static_cast<size_t>(r)] * col[static_cast<size_t>(r)];
            double norm = std::sqrt(norm2);
            if (!(norm > 1e-250)) throw DegenerateFrame("orthonormal frame collapsed");
            log_acc[static_cast<size_t>(c)].add(std::log(norm));
            for (int r = 0; r < rank; ++r) col[static_cast<size_t>(r)] /= norm;
        }

        if ((step + 1) % kBlock == 0 && rank > 1) {
            double second = log_acc[1].sum;
            block_means.push_back((second - block_start_second) / static_cast<double>(kBlock));
            block_start_second = second;
        }
    }

    double top = log_acc[0].sum / static_cast<double>(steps);
    if (!(top > 0)) throw DegenerateFrame("leading growth rate is not positive");

    LyapunovEstimate est;
    est.steps = steps;
    est.seed = seed;
    est.top_raw = top;
    for (int c = 0; c < rank; ++c)
        est.exponents.push_back(log_acc[static_cast<size_t>(c)].sum /
                                static_cast<double>(steps) / top);
    std::sort(est.exponents.begin(), est.exponents.end(), std::greater<double>());

    if (block_means.size() >= 2) {
        double mean = 0;
        for (double b : block_means) mean += b;
        mean /= static_cast<double>(block_means.size());
        double var = 0;
        for (double b : block_means) var += (b - mean) * (b - mean);
        var /= static_cast<double>(block_means.size() - 1);
        est.stderr_top2 =
            std::sqrt(var / static_cast<double>(block_means.size())) / top;
    }
    return est;
}

bool degeneracy_test(const Origami& o, long long steps, unsigned long long seed, double tol) {
    if (!(tol > 0)) throw ConstraintViolated("tolerance must be positive");
    LyapunovEstimate est = random_walk_exponents(o, steps, seed);
    int g = static_cast<int>(est.exponents.size()) / 2;
    for (int k = 2; k <= g; ++k)
        if (std::abs(est.exponents[static_cast<size_t>(k - 1)]) >= tol) return false;
    return true;
}

LyapunovEstimate merge_estimates(const std::vector<LyapunovEstimate>& estimates) {
    if (estimates.empty()) throw ConstraintViolated("nothing to merge");
    size_t rank = estimates[0].exponents.size();
    bool weighted = true;
    for (const LyapunovEstimate& e : estimates) {
        if (e.exponents.size() != rank)
            throw InternalInconsistency("merging estimates of different rank");
        if (!(e.stderr_top2 > 0) || !std::isfinite(e.stderr_top2)) weighted = false;
    }

    LyapunovEstimate out;
    out.seed = estimates[0].seed;
    out.exponents.assign(rank, 0.0);
    double wsum = 0;
    for (const LyapunovEstimate& e : estimates) {
        double w = weighted ? 1.0 / (e.stderr_top2 * e.stderr_top2) : 1.0;
        wsum += w;
        out.steps += e.steps;
        out.top_raw += w * e.top_raw;
        for (size_t j = 0; j < rank; ++j) out.exponents[j] += w * e.exponents[j];
    }
    for (size_t j = 0; j < rank; ++j) out.exponents[j] /= wsum;
    out.top_raw /= wsum;
    if (weighted) {
        out.stderr_top2 = std::sqrt(1.0 / wsum);
    } else {
        double acc = 0;
        bool finite = true;
        for (const LyapunovEstimate& e : estimates) {
            if (!std::isfinite(e.stderr_top2)) finite = false;
            acc += e.stderr_top2 * e.stderr_top2;
        }
        if (finite)
            out.stderr_top2 = std::sqrt(acc) / static_cast<double>(estimates.size());
    }
    return out;
}

} // namespace rank1lab
