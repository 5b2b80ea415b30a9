#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

namespace plb {

// Expected-degree weights w_1 >= w_2 >= ... >= w_n > 0.
struct WeightSequence {
    std::vector<double> w;              // non-increasing
    double total = 0;                   // W = sum w_i
    double w_min = 0;
    double beta_prime = 0;              // nominal exponent, > 2
    std::optional<double> w_bar;        // lower-inequality threshold, if set

    std::size_t size() const { return w.size(); }
};

// Deterministic quantile construction w_i = w_min * (n/i)^{1/(beta'-1)}.
// w_n == w_min exactly. Default w_bar = n^{1/(beta'-1)}.
WeightSequence power_law_weights(std::size_t n, double beta_prime, double w_min);

// Build a WeightSequence from explicit weights (validates ordering and total).
WeightSequence make_weight_sequence(std::vector<double> w, double beta_prime,
                                    std::optional<double> w_bar = std::nullopt);

struct PowerLawFitReport {
    double c1_fit = 0;  // largest constant for which the lower inequality holds up to w_bar
    double c2_fit = 0;  // smallest constant for which the upper inequality holds everywhere
    bool pass = false;
};

// Checks the two-sided tail-count condition
//   c1 * n / w^{beta'-1+eta} <= |{v : w_v >= w}| <= c2 * n / w^{beta'-1-eta},
// lower for w_min <= w <= w_bar, upper for all w >= w_min.
PowerLawFitReport verify_general_power_law(const WeightSequence& ws, double eta, double w_bar);

// number of weights >= w
std::size_t count_at_least(const WeightSequence& ws, double w);

// one ASCII decimal per line, round-trip precision
void write_weights(const WeightSequence& ws, std::ostream& out);

}  // namespace plb
