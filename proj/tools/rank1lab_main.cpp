// Command-line surface: search / analyze / build / lyapunov.
// Exit codes: 0 success, 1 usage error, 2 runtime failure.

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rank1lab/cyclic_cover.hpp"
#include "rank1lab/cylinders.hpp"
#include "rank1lab/degeneration.hpp"
#include "rank1lab/errors.hpp"
#include "rank1lab/io.hpp"
#include "rank1lab/lyapunov.hpp"
#include "rank1lab/origami.hpp"
#include "rank1lab/search.hpp"
#include "rank1lab/sl2z.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rank1lab;

std::vector<long long> split_ints(const std::string& text) {
    std::vector<long long> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        long long v = std::stoll(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
        vals.push_back(v);
    }
    if (vals.empty()) throw std::invalid_argument("empty integer list");
    return vals;
}

Stratum parse_stratum(const std::string& text) {
    Stratum s;
    for (long long v : split_ints(text)) {
        if (v < 1) throw std::invalid_argument("zero orders must be >= 1");
        s.zero_orders.push_back(static_cast<int>(v));
    }
    std::sort(s.zero_orders.begin(), s.zero_orders.end(), std::greater<>());
    return s;
}

std::vector<SearchFilter> parse_filters(const std::string& text) {
    std::vector<SearchFilter> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(filter_from_string(item));
    return out;
}

ordered_json estimate_json(const LyapunovEstimate& est) {
    ordered_json j;
    j["exponents"] = est.exponents;
    j["stderr_top2"] = est.stderr_top2;
    j["steps"] = est.steps;
    j["seed"] = est.seed;
    return j;
}

// Decomposition, configuration check, and pinch classification of one
// periodic direction, as a single structured record.
ordered_json analyze_direction(const Origami& o, long long q, long long p) {
    CylinderDecomposition d = direction_decomposition(o, q, p);
    ConfigReport cr = configuration_check(d);
    DegenerateConfig dc = pinch(o, d);
    ordered_json j;
    j["direction"] = direction_to_string(static_cast<int>(q), static_cast<int>(p));
    ordered_json cyls = ordered_json::array();
    for (const Cylinder& c : d.cylinders)
        cyls.push_back({{"w", c.circumference}, {"h", c.height}});
    j["cylinders"] = cyls;
    j["equal_circumference"] = cr.equal_circumference;
    j["chain_is_single_cycle"] = cr.chain_is_single_cycle;
    j["boundary_parity_ok"] = cr.boundary_parity_ok;
    j["pass"] = cr.pass;
    bool feasible = true;
    for (const Part& part : dc.graph.vertices)
        if (!part_feasibility(part)) feasible = false;
    j["pinch"] = {{"verdict", to_string(dc.verdict)},
                  {"parts", dc.graph.vertices.size()},
                  {"edges", dc.graph.edges.size()},
                  {"feasible", feasible}};
    return j;
}

ordered_json orbit_dump(const Orbit& orb) {
    ordered_json j;
    ordered_json members = ordered_json::array();
    for (const Origami& m : orb.members) members.push_back(origami_to_json(m));
    j["members"] = members;
    ordered_json edges = ordered_json::array();
    for (const OrbitEdge& e : orb.edges)
        edges.push_back({{"from", e.from}, {"gen", std::string(1, e.gen)}, {"to", e.to}});
    j["transitions"] = edges;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"origami laboratory: SL(2,Z) orbits, cylinder configurations, "
                 "pinch degenerations, and Lyapunov spectra"};
    app.require_subcommand(1);

    // ---- search ----
    auto* c_search = app.add_subcommand(
        "search", "enumerate origamis and filter one candidate per SL(2,Z) orbit");
    std::string s_stratum, s_filters = "config,pinch", s_out;
    int s_min = 3, s_max = 8, s_threads = 1;
    long long s_steps = 1000000;
    unsigned long long s_seed = 1;
    double s_tol = 0.05;
    bool s_resume = false;
    c_search->add_option("--stratum", s_stratum, "zero orders k1,k2,... (default: every stratum)");
    c_search->add_option("--min-squares", s_min, "smallest square count")->capture_default_str();
    c_search->add_option("--max-squares", s_max, "largest square count")->capture_default_str();
    c_search->add_option("--filters", s_filters, "comma list of config,pinch,lyapunov")
        ->capture_default_str();
    c_search->add_option("--steps", s_steps, "walk length for the lyapunov filter")
        ->capture_default_str();
    c_search->add_option("--seed", s_seed, "walk seed")->capture_default_str();
    c_search->add_option("--tol", s_tol, "degeneracy threshold on |lambda_2..g|")
        ->capture_default_str();
    c_search->add_option("--out", s_out, "report file (line-delimited records + summary)")
        ->required();
    c_search->add_flag("--resume", s_resume, "replay a matching checkpoint, then continue");
    c_search->add_option("--threads", s_threads, "parallel candidate evaluations")
        ->capture_default_str();

    // ---- analyze ----
    auto* c_analyze = app.add_subcommand(
        "analyze", "cylinder decomposition, configuration check, and pinch verdict");
    std::string a_input, a_direction;
    bool a_orbit = false;
    c_analyze->add_option("--input", a_input, "origami file")->required();
    auto* a_dir_opt = c_analyze->add_option(
        "--direction", a_direction, "direction p/q (omitted: every cusp of the canonical form)");
    c_analyze->add_flag("--orbit", a_orbit, "emit the SL(2,Z) orbit members and transitions")
        ->excludes(a_dir_opt);

    // ---- build ----
    auto* c_build = app.add_subcommand("build", "construct a cyclic-cover origami");
    std::string b_cyclic, b_example, b_out;
    c_build->add_option("--cyclic", b_cyclic, "cover data N,a1,a2,a3,a4");
    c_build->add_option("--example", b_example, "shortcut: ew or orni");
    c_build->add_option("--out", b_out, "output file (default: stdout)");

    // ---- lyapunov ----
    auto* c_lyap = app.add_subcommand("lyapunov", "estimate the Kontsevich-Zorich spectrum");
    std::string l_input, l_out;
    long long l_steps = 1000000;
    unsigned long long l_seed = 1;
    c_lyap->add_option("--input", l_input, "origami file")->required();
    c_lyap->add_option("--steps", l_steps, "walk length")->capture_default_str();
    c_lyap->add_option("--seed", l_seed, "walk seed")->capture_default_str();
    c_lyap->add_option("--out", l_out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    // Semantic flag validation: anything wrong with the command line itself
    // is a usage error (exit 1), before any real work starts.
    SearchJob job;
    long long a_q = 1, a_p = 0;
    std::optional<std::array<int, 5>> cover_args;
    try {
        if (c_search->parsed()) {
            if (!s_stratum.empty()) job.stratum = parse_stratum(s_stratum);
            job.min_squares = s_min;
            job.max_squares = s_max;
            job.filters = parse_filters(s_filters);
            job.lyapunov.steps = s_steps;
            job.lyapunov.seed = s_seed;
            job.lyapunov.tol = s_tol;
            job.output_path = s_out;
            job.resume = s_resume;
            job.threads = s_threads;
            if (s_min < 1 || s_min > s_max)
                throw std::invalid_argument("need 1 <= --min-squares <= --max-squares");
            if (s_steps < 1) throw std::invalid_argument("--steps must be positive");
            if (s_threads < 1) throw std::invalid_argument("--threads must be positive");
            if (!(s_tol > 0)) throw std::invalid_argument("--tol must be positive");
        }
        if (c_analyze->parsed() && !a_direction.empty()) {
            auto [q, p] = parse_direction(a_direction);
            a_q = q;
            a_p = p;
        }
        if (c_build->parsed()) {
            if (b_cyclic.empty() == b_example.empty())
                throw std::invalid_argument("build needs exactly one of --cyclic or --example");
            if (!b_example.empty() && b_example != "ew" && b_example != "orni")
                throw std::invalid_argument("--example must be ew or orni");
            if (!b_cyclic.empty()) {
                std::vector<long long> vals = split_ints(b_cyclic);
                if (vals.size() != 5)
                    throw std::invalid_argument("--cyclic needs five integers N,a1,a2,a3,a4");
                std::array<int, 5> cc{};
                for (int i = 0; i < 5; ++i) {
                    if (vals[i] < -1000000 || vals[i] > 1000000)
                        throw std::invalid_argument("--cyclic entries out of range");
                    cc[static_cast<std::size_t>(i)] = static_cast<int>(vals[i]);
                }
                cover_args = cc;
            }
        }
        if (c_lyap->parsed() && l_steps < 1)
            throw std::invalid_argument("--steps must be positive");
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (c_search->parsed()) {
            SearchSummary s = run_search(job);
            ordered_json j = {{"canonical_forms", s.canonical_forms},
                              {"orbits", s.orbits},
                              {"passing", s.passing}};
            std::cout << j.dump() << "\n";
        } else if (c_analyze->parsed()) {
            Origami o = read_origami_file(a_input);
            if (a_orbit) {
                std::cout << orbit_dump(orbit(canonical_form(o))).dump() << "\n";
            } else if (!a_direction.empty()) {
                std::cout << analyze_direction(o, a_q, a_p).dump() << "\n";
            } else {
                Origami base = canonical_form(o);
                Orbit orb = orbit(base);
                for (const Cusp& c : cusps(orb))
                    std::cout << analyze_direction(base, c.q, c.p).dump() << "\n";
            }
        } else if (c_build->parsed()) {
            Origami o = b_example == "ew"    ? eierlegende_wollmilchsau()
                        : b_example == "orni" ? ornithorynque()
                                              : canonical_form(build_origami(validate_cover(
                                                    (*cover_args)[0],
                                                    {(*cover_args)[1], (*cover_args)[2],
                                                     (*cover_args)[3], (*cover_args)[4]})));
            if (b_out.empty())
                std::cout << origami_to_string(o) << "\n";
            else
                write_origami_file(o, b_out);
        } else if (c_lyap->parsed()) {
            Origami o = read_origami_file(l_input);
            LyapunovEstimate est = random_walk_exponents(o, l_steps, l_seed);
            std::string text = estimate_json(est).dump();
            if (l_out.empty()) {
                std::cout << text << "\n";
            } else {
                std::ofstream f(l_out);
                if (!f) throw IoFailure("cannot write " + l_out);
                f << text << "\n";
                if (!f.flush()) throw IoFailure("cannot write " + l_out);
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
