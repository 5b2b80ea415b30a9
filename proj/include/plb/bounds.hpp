#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace plb::bounds {

using Rational = boost::multiprecision::cpp_rational;

// A numeric input or result carried on two tracks: double always, exact
// rational when the value and the formula permit. The hardness factors sit
// very close to 1, so the exact track doubles as a cancellation check.
struct Scalar {
    double value = 0;
    std::optional<Rational> exact;

    static Scalar from_double(double v) { return {v, std::nullopt}; }
    static Scalar from_int(long long v);
    static Scalar from_decimal(const std::string& text);  // "0.05" -> 1/20
    static Scalar from_rational(const Rational& r);
};

Rational rational_from_decimal(const std::string& text);
double to_double(const Rational& r);
// r^k for integer k >= 0
Rational rational_pow(const Rational& r, unsigned k);
// the integer k if r == k exactly and k >= lo
std::optional<unsigned> as_positive_integer(const Rational& r);

// a_{beta,t} = 1 + (beta-1)/(beta-2) * 1/(1 - ((t+2)/(t+1))^{1-beta}).
// Exact when beta is an integer.
Scalar const_a(const Scalar& beta, const Scalar& t);

// b_{c1,beta,t} = (c1 (beta-1)/(beta-2) 2^beta (t+1)^{beta-1})^{1/(beta-2)}.
// Exact when 1/(beta-2) is a positive integer.
Scalar const_b(const Scalar& c1, const Scalar& beta, const Scalar& t);

struct GuaranteeBundle {
    Scalar a;                 // const_a
    Scalar b;                 // const_b
    Scalar mds_lb_fraction;   // 1/(2ab+1); also the MIS / VC lower-bound fraction
    Scalar greedy_ds_ratio;   // log_3(5) * a * ln(b+1) + 1   (float only)
    Scalar cds_ratio;         // 2 + ln(2ab+1)                (float only)
};
GuaranteeBundle guarantee_bundle(const Scalar& c1, const Scalar& beta, const Scalar& t);

enum class PvlKind { Linear, Log1p };

// Per-element potential-volume bound: c * a_{beta,t} * g(arg) + C
// with arg = (c1 (beta-1)/(beta-2) (n/M) 2^{beta-1} (t+1)^{beta-1})^{1/(beta-2)}.
Scalar pvl_bound(PvlKind kind, double c, double C, const Scalar& c1, const Scalar& beta,
                 const Scalar& t, double n, double M);

// Independent-set fraction from the lower-bound property:
// c2 (t+1)^{beta-1} / ((t+d_min)^beta (d_min+1)), or c2/(t+1) when the graph
// is connected with d_min = 1.
Scalar mis_plbl_lower(const Scalar& c2, const Scalar& beta, const Scalar& t,
                      unsigned d_min, bool connected);

enum class HardnessProblem { Mds, Mis, Mvc };
enum class HardnessMode { Multigraph, Simple };

struct HardnessResult {
    Scalar factor;    // inapproximability threshold, > 1
    Scalar growth_c;  // node growth constant of the underlying embedding
    double bracket;   // 2 c2 K; must be < 1
};

// Inapproximability thresholds for MDS/MIS/MVC on graphs with all three
// degree-bound properties, multigraph and simple variants. gamma is the
// slack of the MIS base bound (140/139 - gamma) and is ignored otherwise.
// c1 enters only the simple-graph MIS factor.
HardnessResult hardness_factor(HardnessProblem problem, HardnessMode mode, const Scalar& c1,
                               const Scalar& c2, const Scalar& beta, const Scalar& t,
                               const Scalar& gamma);

struct Lemma22Result {
    Scalar lhs;  // a^{-c}
    Scalar rhs;  // c/(1-2^{-c}) * sum_{i=a}^{b-1} i^{-c-1}
};
// Requires integers 1 <= a <= b/2. The inequality lhs <= rhs holds for all c > 0.
Lemma22Result lemma22_bound(unsigned a, unsigned b, const Scalar& c);

// Riemann zeta by direct summation with an Euler-Maclaurin tail, abs error <= 1e-12.
double zeta(double beta);

std::string rational_to_string(const Rational& r);

}  // namespace plb::bounds
