#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plb/generators.hpp"
#include "plb/graph.hpp"

namespace plb {

// One description covering all four generator models; the harness and CLI
// share it so reports can echo the exact parameters back.
struct GenSpec {
    std::string model;  // chung-lu | girg | hyperbolic | abplg
    std::size_t n = 0;
    double beta_prime = 3;
    double w_min = 1;
    int dim = 1;
    double alpha = 2;
    double alpha_h = 0.75;
    double c_h = 0;
    double t_h = 0.1;
    double e_alpha = 1000;
    double beta_gen = 3;
    bool simple = false;
};

Graph generate(const GenSpec& spec, std::uint64_t seed);

struct TrialStats {
    std::uint64_t seed = 0;
    double c1_fit = 0, c2_fit = 0, c3_fit = 0;
    std::size_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t max_degree = 0;
    std::optional<double> tail_slope;
};

struct ExperimentAggregates {
    double c1_median = 0, c1_max = 0;
    double c2_median = 0, c2_min = 0;
    double c3_median = 0, c3_max = 0;
    std::optional<double> tail_slope_median;
};

struct ExperimentReport {
    GenSpec spec;
    double beta = 0, t = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<TrialStats> per_trial;  // ordered by seed index
    ExperimentAggregates aggregates;
};

// One graph per seed, all three constants fitted at (beta, t), CCDF tail
// slope fitted over degrees [10, max_degree/10]. Trials run on up to `jobs`
// threads; the report order is by seed index regardless.
ExperimentReport run_experiment(const GenSpec& spec, double beta, double t,
                                const std::vector<std::uint64_t>& seeds, int jobs = 1);

// least-squares slope of log2 ccdf(k) against log2 k over k in [10, Delta/10];
// empty when fewer than three points carry mass
std::optional<double> ccdf_tail_slope(const Graph& g);

double median(std::vector<double> xs);

enum class StudyFamily { RandomPlb, Embedded };

struct RatioRow {
    std::string instance_id;
    std::string check;      // greedy-mds-ratio | mds-lower | mis-lower | vc-lower | harmonic
    double measured = 0;    // solution size being tested
    double reference = 0;   // OPT or n, whatever the bound compares against
    double ratio = 0;
    double bound = 0;
    bool respected = false;
    bool skipped = false;
    std::string reason;
};

// Greedy-versus-oracle study over seeded instances. random-plb instances are
// Chung-Lu graphs resampled until connected with no isolated vertex;
// embedded instances come from embed_multigraph over random cubic graphs.
std::vector<RatioRow> ratio_study(StudyFamily family, std::size_t count, std::size_t size,
                                  double beta, double t, std::uint64_t seed);

// same checks on caller-supplied instances
std::vector<RatioRow> ratio_study_on(const std::vector<std::pair<std::string, Graph>>& instances,
                                     double beta, double t);

}  // namespace plb
