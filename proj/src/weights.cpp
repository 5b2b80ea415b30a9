#include "plb/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace plb {

namespace {

double kahan_total(const std::vector<double>& xs) {
    double s = 0, c = 0;
    for (double x : xs) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

}  // namespace

WeightSequence power_law_weights(std::size_t n, double beta_prime, double w_min) {
    if (n < 1) throw std::invalid_argument("power_law_weights: n must be >= 1");
    if (!(beta_prime > 2)) throw std::invalid_argument("power_law_weights: beta' must be > 2");
    if (!(w_min >= 1)) throw std::invalid_argument("power_law_weights: w_min must be >= 1");
    WeightSequence ws;
    ws.beta_prime = beta_prime;
    ws.w_min = w_min;
    double inv = 1.0 / (beta_prime - 1.0);
    ws.w.resize(n);
    for (std::size_t i = 1; i <= n; ++i)
        ws.w[i - 1] = w_min * std::pow(static_cast<double>(n) / static_cast<double>(i), inv);
    ws.w[n - 1] = w_min;  // (n/n)^x == 1, keep it exact
    ws.total = kahan_total(ws.w);
    ws.w_bar = std::pow(static_cast<double>(n), inv);
    return ws;
}

WeightSequence make_weight_sequence(std::vector<double> w, double beta_prime, std::optional<double> w_bar) {
    if (w.empty()) throw std::invalid_argument("weight sequence must be non-empty");
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!(w[i] > 0)) throw std::invalid_argument("weights must be positive");
        if (i > 0 && w[i] > w[i - 1]) throw std::invalid_argument("weights must be non-increasing");
    }
    WeightSequence ws;
    ws.w = std::move(w);
    ws.beta_prime = beta_prime;
    ws.w_min = ws.w.back();
    ws.total = kahan_total(ws.w);
    ws.w_bar = w_bar;
    return ws;
}

std::size_t count_at_least(const WeightSequence& ws, double w) {
    // weights are sorted descending
    auto it = std::lower_bound(ws.w.begin(), ws.w.end(), w, [](double a, double b) { return a >= b; });
    return static_cast<std::size_t>(it - ws.w.begin());
}

PowerLawFitReport verify_general_power_law(const WeightSequence& ws, double eta, double w_bar) {
    if (ws.w.empty()) throw std::invalid_argument("verify_general_power_law: empty sequence");
    if (!(eta > 0)) throw std::invalid_argument("verify_general_power_law: eta must be > 0");
    if (!(eta < ws.beta_prime - 2)) throw std::invalid_argument("verify_general_power_law: need eta < beta' - 2");
    const double n = static_cast<double>(ws.size());
    const double lo_exp = ws.beta_prime - 1 + eta;
    const double hi_exp = ws.beta_prime - 1 - eta;

    PowerLawFitReport rep;
    rep.c1_fit = std::numeric_limits<double>::infinity();
    rep.c2_fit = 0;

    // The required constant only changes where the count changes, so scanning
    // the distinct weight values (plus w_bar) is exact.
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < ws.w.size(); ++i) {
        double v = ws.w[i];
        if (v == prev) continue;
        prev = v;
        double cnt = static_cast<double>(count_at_least(ws, v));
        rep.c2_fit = std::max(rep.c2_fit, cnt * std::pow(v, hi_exp) / n);
        if (v <= w_bar) rep.c1_fit = std::min(rep.c1_fit, cnt * std::pow(v, lo_exp) / n);
    }
    if (w_bar > ws.w.front()) {
        // no vertex reaches weight w_bar, the lower inequality cannot hold there
        rep.c1_fit = 0;
    } else if (w_bar >= ws.w_min) {
        double cnt = static_cast<double>(count_at_least(ws, w_bar));
        rep.c1_fit = std::min(rep.c1_fit, cnt * std::pow(w_bar, lo_exp) / n);
    }
    if (!std::isfinite(rep.c1_fit)) rep.c1_fit = 0;  // w_bar below w_min: no scan point
    rep.pass = rep.c1_fit > 0 && rep.c2_fit > 0 && std::isfinite(rep.c2_fit);
    return rep;
}

void write_weights(const WeightSequence& ws, std::ostream& out) {
    out.precision(17);
    for (double x : ws.w) out << x << "\n";
}

}  // namespace plb
