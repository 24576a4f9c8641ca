#ifndef RANK1LAB_SEARCH_HPP
#define RANK1LAB_SEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "rank1lab/origami.hpp"

namespace rank1lab {

enum class SearchFilter { config, pinch, lyapunov };

std::string to_string(SearchFilter f);
SearchFilter filter_from_string(const std::string& name); // throws ConstraintViolated

struct LyapunovParams {
    long long steps = 1000000;
    unsigned long long seed = 1;
    double tol = 0.05; // degeneracy threshold on |lambda_2..lambda_g|
};

// A reproducible survey over isomorphism classes of origamis: one candidate
// per SL(2,Z) orbit, filters applied in the fixed order config, pinch,
// lyapunov with short-circuit (a candidate failing one filter carries no
// data for the later ones). threads only controls evaluation parallelism;
// the report bytes depend on the job alone.
struct SearchJob {
    std::optional<Stratum> stratum; // nullopt = every stratum
    int min_squares = 3;
    int max_squares = 8;
    std::vector<SearchFilter> filters = {SearchFilter::config, SearchFilter::pinch};
    LyapunovParams lyapunov;
    std::string output_path;
    bool resume = false;   // replay a matching checkpoint, then continue
    int threads = 1;
    std::string cache_dir; // empty: $RANK1LAB_CACHE_DIR, else the output directory
};

struct SearchSummary {
    long long canonical_forms = 0; // isomorphism classes enumerated
    long long orbits = 0;          // candidate reports written
    long long passing = 0;         // reports with verdict "pass"
};

// Writes one line-delimited candidate report per orbit plus a trailing
// summary object to job.output_path, checkpointing every 1000 canonical
// forms. Genus 0 and 1 classes are skipped (the rank-one question starts
// at genus 2). Throws IoFailure on file errors and ResumeMismatch when a
// resumed checkpoint does not match the job.
SearchSummary run_search(const SearchJob& job);

} // namespace rank1lab

#endif
