#include "rank1lab/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <future>
#include <memory>
#include <unordered_set>

#include <json.hpp>

#include "rank1lab/degeneration.hpp"
#include "rank1lab/errors.hpp"
#include "rank1lab/io.hpp"
#include "rank1lab/lyapunov.hpp"
#include "rank1lab/sl2z.hpp"

namespace rank1lab {

namespace {

using nlohmann::ordered_json;

constexpr long long k_batch = 1000; // canonical forms per checkpoint

struct EffectiveFilters {
    bool config = false;
    bool pinch = false;
    bool lyapunov = false;
};

EffectiveFilters effective_filters(const std::vector<SearchFilter>& filters) {
    EffectiveFilters ef;
    for (SearchFilter f : filters) {
        switch (f) {
            case SearchFilter::config: ef.config = true; break;
            case SearchFilter::pinch: ef.pinch = true; break;
            case SearchFilter::lyapunov: ef.lyapunov = true; break;
        }
    }
    return ef;
}

ordered_json filter_names(const EffectiveFilters& ef) {
    ordered_json names = ordered_json::array();
    if (ef.config) names.push_back("config");
    if (ef.pinch) names.push_back("pinch");
    if (ef.lyapunov) names.push_back("lyapunov");
    return names;
}

ordered_json job_config_json(const SearchJob& job, const EffectiveFilters& ef) {
    ordered_json cfg;
    if (job.stratum) {
        std::string text;
        for (std::size_t i = 0; i < job.stratum->zero_orders.size(); ++i) {
            if (i) text += ',';
            text += std::to_string(job.stratum->zero_orders[i]);
        }
        cfg["stratum"] = text;
    } else {
        cfg["stratum"] = "any";
    }
    cfg["min_squares"] = job.min_squares;
    cfg["max_squares"] = job.max_squares;
    cfg["filters"] = filter_names(ef);
    cfg["steps"] = job.lyapunov.steps;
    cfg["seed"] = job.lyapunov.seed;
    cfg["tol"] = job.lyapunov.tol;
    cfg["out"] = std::filesystem::path(job.output_path).filename().string();
    return cfg;
}

ordered_json filter_report_json(const FilterReport& rep) {
    ordered_json j;
    j["origami"] = origami_to_json(rep.origami);
    j["directions_checked"] = rep.directions_checked;
    j["pass"] = rep.pass;
    ordered_json fails = ordered_json::array();
    for (const FilterFailure& f : rep.failures) {
        ordered_json jf;
        jf["direction"] = direction_to_string(static_cast<int>(f.q), static_cast<int>(f.p));
        jf["stage"] = f.stage;
        jf["detail"] = f.detail;
        fails.push_back(jf);
    }
    j["failures"] = fails;
    return j;
}

ordered_json estimate_json(const LyapunovEstimate& est) {
    ordered_json j;
    j["exponents"] = est.exponents;
    j["stderr_top2"] = est.stderr_top2;
    j["steps"] = est.steps;
    j["seed"] = est.seed;
    return j;
}

struct ReportResult {
    std::string line;
    bool pass = false;
};

// Pure per-candidate work: cusps, combinatorial filters, and (only when they
// pass) the Lyapunov degeneracy test, rendered as one report line.
ReportResult evaluate_candidate(std::shared_ptr<const Orbit> orb,
                                EffectiveFilters ef, LyapunovParams lp) {
    const Origami& base = orb->members[0];
    std::vector<Cusp> cs = cusps(*orb);

    ordered_json rec;
    rec["origami"] = origami_to_json(base);
    rec["orbit_size"] = orb->members.size();
    rec["cusp_count"] = cs.size();

    FilterReport rep;
    if (ef.config || ef.pinch) {
        FilterOptions opt;
        opt.check_config = ef.config;
        opt.check_pinch = ef.pinch;
        rep = rank1_filter_on_orbit(*orb, cs, opt);
    } else {
        rep.origami = base;
        rep.pass = true;
    }
    rec["filter_report"] = filter_report_json(rep);

    bool pass = rep.pass;
    if (pass && ef.lyapunov) {
        LyapunovEstimate est = random_walk_exponents(base, lp.steps, lp.seed);
        rec["lyapunov_estimate"] = estimate_json(est);
        int g = genus(base);
        for (int k = 2; k <= g; ++k)
            if (!(std::abs(est.exponents[static_cast<std::size_t>(k) - 1]) < lp.tol)) pass = false;
    }
    rec["verdict"] = pass ? "pass" : "fail";
    return {rec.dump(), pass};
}

struct Checkpoint {
    ordered_json job;
    long long canonical_forms = 0;
    std::vector<std::string> lines;
};

std::filesystem::path checkpoint_path(const SearchJob& job) {
    std::filesystem::path dir;
    if (!job.cache_dir.empty()) {
        dir = job.cache_dir;
    } else if (const char* env = std::getenv("RANK1LAB_CACHE_DIR"); env && *env) {
        dir = env;
    } else {
        dir = std::filesystem::path(job.output_path).parent_path();
        if (dir.empty()) dir = ".";
    }
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoFailure("cannot create cache directory " + dir.string());
    std::string name = std::filesystem::path(job.output_path).filename().string();
    return dir / (name + ".checkpoint.json");
}

void write_checkpoint(const std::filesystem::path& path, const ordered_json& cfg,
                      long long canonical_forms, const std::vector<std::string>& lines) {
    ordered_json j;
    j["job"] = cfg;
    j["canonical_forms"] = canonical_forms;
    j["lines"] = lines;
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw IoFailure("cannot write checkpoint " + tmp.string());
        out << j.dump() << '\n';
        if (!out.flush()) throw IoFailure("cannot write checkpoint " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoFailure("cannot move checkpoint into place at " + path.string());
}

std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    Checkpoint ck;
    try {
        ordered_json j = ordered_json::parse(in);
        ck.job = j.at("job");
        ck.canonical_forms = j.at("canonical_forms").get<long long>();
        for (const auto& line : j.at("lines")) ck.lines.push_back(line.get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw IoFailure("unreadable checkpoint " + path.string() + ": " + e.what());
    }
    return ck;
}

} // namespace

std::string to_string(SearchFilter f) {
    switch (f) {
        case SearchFilter::config: return "config";
        case SearchFilter::pinch: return "pinch";
        case SearchFilter::lyapunov: return "lyapunov";
    }
    throw InternalInconsistency("unknown search filter");
}

SearchFilter filter_from_string(const std::string& name) {
    if (name == "config") return SearchFilter::config;
    if (name == "pinch") return SearchFilter::pinch;
    if (name == "lyapunov") return SearchFilter::lyapunov;
    throw ConstraintViolated("unknown filter '" + name + "' (expected config, pinch, or lyapunov)");
}

SearchSummary run_search(const SearchJob& job) {
    if (job.output_path.empty()) throw ConstraintViolated("search needs an output path");
    if (job.min_squares < 1 || job.min_squares > job.max_squares)
        throw ConstraintViolated("square range must satisfy 1 <= min <= max");

    const EffectiveFilters ef = effective_filters(job.filters);
    const ordered_json cfg = job_config_json(job, ef);
    const std::filesystem::path ck_path = checkpoint_path(job);

    std::optional<Checkpoint> stored;
    if (job.resume) {
        stored = read_checkpoint(ck_path);
        if (stored && stored->job != cfg)
            throw ResumeMismatch("checkpoint at " + ck_path.string() + " was written by a different job");
    }
    const long long replay_limit = stored ? stored->canonical_forms : 0;

    std::ofstream out(job.output_path);
    if (!out) throw IoFailure("cannot write report " + job.output_path);

    SearchSummary summary;
    std::vector<std::string> all_lines;
    std::size_t replay_cursor = 0;

    auto emit = [&](const std::string& line, bool pass) {
        out << line << '\n';
        if (!out) throw IoFailure("cannot write report " + job.output_path);
        all_lines.push_back(line);
        ++summary.orbits;
        if (pass) ++summary.passing;
    };

    // Bounded in-flight window, popped in dispatch order: evaluation may run
    // on several threads but the report stays in enumeration order.
    const std::size_t window = static_cast<std::size_t>(std::max(1, job.threads));
    std::deque<std::future<ReportResult>> inflight;
    auto pop_one = [&] {
        ReportResult r = inflight.front().get();
        inflight.pop_front();
        emit(r.line, r.pass);
    };
    auto drain = [&] {
        while (!inflight.empty()) pop_one();
    };

    for (int n = job.min_squares; n <= job.max_squares; ++n) {
        // Orbits stay inside one square count, so the dedup set resets per n.
        std::unordered_set<Origami, OrigamiHash> seen;
        enumerate(n, job.stratum, [&](const Origami& o) {
            ++summary.canonical_forms;
            const bool replaying = summary.canonical_forms <= replay_limit;
            if (genus(o) >= 2 && !seen.contains(o)) {
                auto orb = std::make_shared<const Orbit>(orbit(o));
                for (const Origami& m : orb->members) seen.insert(m);
                if (replaying) {
                    if (replay_cursor >= stored->lines.size())
                        throw ResumeMismatch("checkpoint is missing a candidate report");
                    const std::string& line = stored->lines[replay_cursor++];
                    ordered_json rec = ordered_json::parse(line);
                    if (rec.at("origami") != origami_to_json(o))
                        throw ResumeMismatch("checkpoint reports diverge from the enumeration");
                    emit(line, rec.at("verdict") == "pass");
                } else {
                    if (inflight.size() >= window) pop_one();
                    inflight.push_back(std::async(std::launch::async, evaluate_candidate,
                                                  orb, ef, job.lyapunov));
                }
            }
            if (replaying && summary.canonical_forms == replay_limit &&
                replay_cursor != stored->lines.size())
                throw ResumeMismatch("checkpoint has extra candidate reports");
            if (!replaying && summary.canonical_forms % k_batch == 0) {
                drain();
                write_checkpoint(ck_path, cfg, summary.canonical_forms, all_lines);
            }
            return true;
        });
    }
    drain();
    if (summary.canonical_forms < replay_limit)
        throw ResumeMismatch("checkpoint claims more enumeration than the job produces");
    write_checkpoint(ck_path, cfg, summary.canonical_forms, all_lines);

    ordered_json tail;
    tail["summary"] = {{"job", cfg},
                       {"canonical_forms", summary.canonical_forms},
                       {"orbits", summary.orbits},
                       {"passing", summary.passing}};
    out << tail.dump() << '\n';
    if (!out.flush()) throw IoFailure("cannot write report " + job.output_path);
    return summary;
}

} // namespace rank1lab
