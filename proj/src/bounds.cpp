#include "plb/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace plb::bounds {

namespace mp = boost::multiprecision;

Scalar Scalar::from_int(long long v) {
    return {static_cast<double>(v), Rational(v)};
}

Scalar Scalar::from_rational(const Rational& r) {
    return {to_double(r), r};
}

Scalar Scalar::from_decimal(const std::string& text) {
    return from_rational(rational_from_decimal(text));
}

Rational rational_from_decimal(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.erase(0, 1);
    }
    auto dot = s.find('.');
    std::string digits = dot == std::string::npos ? s : s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = dot == std::string::npos ? 0 : s.size() - dot - 1;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("not a decimal number: '" + text + "'");
    // cpp_int's string constructor treats a leading 0 as an octal prefix
    auto first_digit = digits.find_first_not_of('0');
    digits = first_digit == std::string::npos ? "0" : digits.substr(first_digit);
    mp::cpp_int num(digits);
    mp::cpp_int den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational r(num, den);
    return neg ? -r : r;
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

Rational rational_pow(const Rational& r, unsigned k) {
    Rational acc = 1, base = r;
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::optional<unsigned> as_positive_integer(const Rational& r) {
    if (r <= 0 || mp::denominator(r) != 1) return std::nullopt;
    auto n = mp::numerator(r);
    if (n > 1000000) return std::nullopt;
    return n.convert_to<unsigned>();
}

std::string rational_to_string(const Rational& r) {
    return r.str();
}

namespace {

bool both_exact(const Scalar& x, const Scalar& y) { return x.exact && y.exact; }

}  // namespace

Scalar const_a(const Scalar& beta, const Scalar& t) {
    if (!(beta.value > 2)) throw std::invalid_argument("const_a: beta must be > 2");
    if (!(t.value >= 0)) throw std::invalid_argument("const_a: t must be >= 0");
    double ratio = (beta.value - 1) / (beta.value - 2);
    double pow_term = std::pow((t.value + 2) / (t.value + 1), 1 - beta.value);
    Scalar out;
    out.value = 1 + ratio * 1.0 / (1 - pow_term);
    if (both_exact(beta, t)) {
        if (auto bm1 = as_positive_integer(*beta.exact - 1)) {
            Rational rb = *beta.exact, rt = *t.exact;
            Rational q = rational_pow((rt + 1) / (rt + 2), *bm1);  // ((t+2)/(t+1))^{1-beta}
            out.exact = 1 + (rb - 1) / (rb - 2) / (1 - q);
        }
    }
    return out;
}

Scalar const_b(const Scalar& c1, const Scalar& beta, const Scalar& t) {
    if (!(beta.value > 2)) throw std::invalid_argument("const_b: beta must be > 2");
    if (!(c1.value > 0)) throw std::invalid_argument("const_b: c1 must be > 0");
    if (!(t.value >= 0)) throw std::invalid_argument("const_b: t must be >= 0");
    double base = c1.value * (beta.value - 1) / (beta.value - 2) * std::pow(2.0, beta.value) *
                  std::pow(t.value + 1, beta.value - 1);
    Scalar out;
    out.value = std::pow(base, 1.0 / (beta.value - 2));
    if (c1.exact && both_exact(beta, t)) {
        Rational rb = *beta.exact, rt = *t.exact, rc = *c1.exact;
        // b = X^k with k = 1/(beta-2); then beta*k = 2k+1 and (beta-1)*k = k+1
        // are integers, so X^k is rational whenever k is a positive integer.
        if (auto k = as_positive_integer(Rational(1) / (rb - 2))) {
            Rational ratio = (rb - 1) / (rb - 2);
            out.exact = rational_pow(rc, *k) * rational_pow(ratio, *k) *
                        rational_pow(Rational(2), 2 * *k + 1) * rational_pow(rt + 1, *k + 1);
        }
    }
    return out;
}

GuaranteeBundle guarantee_bundle(const Scalar& c1, const Scalar& beta, const Scalar& t) {
    GuaranteeBundle g;
    g.a = const_a(beta, t);
    g.b = const_b(c1, beta, t);
    g.mds_lb_fraction.value = 1.0 / (2 * g.a.value * g.b.value + 1);
    if (both_exact(g.a, g.b))
        g.mds_lb_fraction.exact = Rational(1) / (2 * *g.a.exact * *g.b.exact + 1);
    const double log3_5 = std::log(5.0) / std::log(3.0);
    g.greedy_ds_ratio.value = log3_5 * g.a.value * std::log1p(g.b.value) + 1;
    g.cds_ratio.value = 2 + std::log(2 * g.a.value * g.b.value + 1);
    return g;
}

Scalar pvl_bound(PvlKind kind, double c, double C, const Scalar& c1, const Scalar& beta,
                 const Scalar& t, double n, double M) {
    if (!(beta.value > 2)) throw std::invalid_argument("pvl_bound: beta must be > 2");
    if (!(M >= 1) || !(M <= n * (n - 1)))
        throw std::invalid_argument("pvl_bound: need 1 <= M <= n(n-1)");
    Scalar a = const_a(beta, t);
    double arg = std::pow(c1.value * (beta.value - 1) / (beta.value - 2) * (n / M) *
                              std::pow(2.0, beta.value - 1) * std::pow(t.value + 1, beta.value - 1),
                          1.0 / (beta.value - 2));
    Scalar out;
    switch (kind) {
        case PvlKind::Linear:
            out.value = c * a.value * arg + C;
            break;
        case PvlKind::Log1p:
            out.value = c * a.value * std::log1p(arg) + C;
            break;
        default:
            throw std::invalid_argument("pvl_bound: unsupported g kind");
    }
    return out;
}

Scalar mis_plbl_lower(const Scalar& c2, const Scalar& beta, const Scalar& t, unsigned d_min,
                      bool connected) {
    if (!(beta.value > 2)) throw std::invalid_argument("mis_plbl_lower: beta must be > 2");
    if (d_min < 1) throw std::invalid_argument("mis_plbl_lower: d_min must be >= 1");
    Scalar out;
    if (connected && d_min == 1) {
        out.value = c2.value / (t.value + 1);
        if (c2.exact && t.exact) out.exact = *c2.exact / (*t.exact + 1);
        return out;
    }
    out.value = c2.value * std::pow(t.value + 1, beta.value - 1) /
                (std::pow(t.value + d_min, beta.value) * (d_min + 1));
    if (c2.exact && beta.exact && t.exact) {
        if (auto bi = as_positive_integer(*beta.exact)) {
            out.exact = *c2.exact * rational_pow(*t.exact + 1, *bi - 1) /
                        (rational_pow(*t.exact + d_min, *bi) * Rational(d_min + 1));
        }
    }
    return out;
}

namespace {

// K of the multigraph embedding: 1/(t+1) + 1/(beta-1)
Scalar bracket_multi(const Scalar& beta, const Scalar& t) {
    Scalar out;
    out.value = 1 / (t.value + 1) + 1 / (beta.value - 1);
    if (both_exact(beta, t)) out.exact = Rational(1) / (*t.exact + 1) + Rational(1) / (*beta.exact - 1);
    return out;
}

// K' of the simple embedding: 1/(t+1) + 1/(beta-1) + (t+1)/(beta-2) + 1
Scalar bracket_simple(const Scalar& beta, const Scalar& t) {
    Scalar out;
    out.value = 1 / (t.value + 1) + 1 / (beta.value - 1) + (t.value + 1) / (beta.value - 2) + 1;
    if (both_exact(beta, t))
        out.exact = Rational(1) / (*t.exact + 1) + Rational(1) / (*beta.exact - 1) +
                    (*t.exact + 1) / (*beta.exact - 2) + 1;
    return out;
}

Scalar mul(const Scalar& x, const Scalar& y) {
    Scalar out{x.value * y.value, std::nullopt};
    if (both_exact(x, y)) out.exact = *x.exact * *y.exact;
    return out;
}

}  // namespace

HardnessResult hardness_factor(HardnessProblem problem, HardnessMode mode, const Scalar& c1,
                               const Scalar& c2, const Scalar& beta, const Scalar& t,
                               const Scalar& gamma) {
    if (mode == HardnessMode::Multigraph && !(beta.value > 1))
        throw std::invalid_argument("hardness_factor: multigraph mode needs beta > 1");
    if (mode == HardnessMode::Simple && !(beta.value > 2))
        throw std::invalid_argument("hardness_factor: simple mode needs beta > 2");
    if (!(c2.value > 0)) throw std::invalid_argument("hardness_factor: c2 must be > 0");
    if (!(gamma.value >= 0)) throw std::invalid_argument("hardness_factor: gamma must be >= 0");
    if (problem == HardnessProblem::Mis && !(gamma.value < 1.0 / 139))
        throw std::invalid_argument("hardness_factor: gamma must be < 1/139");

    const bool multi = mode == HardnessMode::Multigraph;
    Scalar K = multi ? bracket_multi(beta, t) : bracket_simple(beta, t);
    Scalar q = mul(mul(Scalar::from_int(2), c2), K);  // 2 c2 K
    if (!(q.value < 1))
        throw std::invalid_argument("hardness_factor: bracket condition violated, 2*c2*K = " +
                                    std::to_string(q.value) + " >= 1");

    HardnessResult res;
    res.bracket = q.value;

    // growth constant of the embedding
    if (multi) {
        res.growth_c.value = 1 + q.value / (1 - q.value);
        if (q.exact) res.growth_c.exact = 1 + *q.exact / (1 - *q.exact);
    } else {
        res.growth_c.value = 1 / (1 - q.value);
        if (q.exact) res.growth_c.exact = Rational(1) / (1 - *q.exact);
    }

    const double sqrt5_term = 10 * std::sqrt(5.0) - 22;  // MVC base bound minus 1

    Scalar f;
    if (multi) {
        double X = q.value / (1 - q.value);  // c - 1
        switch (problem) {
            case HardnessProblem::Mds: {
                f.value = 1 + 1 / (130 * (4 * X + 15));
                if (q.exact) {
                    Rational Xr = *q.exact / (1 - *q.exact);
                    f.exact = 1 + Rational(1) / (130 * (4 * Xr + 15));
                }
                break;
            }
            case HardnessProblem::Mis: {
                double num = (1.0 / 139 - gamma.value) * (1 - q.value);
                double den = 4 * c2.value * K.value * (140.0 / 139 - gamma.value) + 1 - q.value;
                f.value = 1 + num / den;
                if (q.exact && gamma.exact && c2.exact && K.exact) {
                    Rational numr = (Rational(1, 139) - *gamma.exact) * (1 - *q.exact);
                    Rational denr =
                        4 * *c2.exact * *K.exact * (Rational(140, 139) - *gamma.exact) + 1 - *q.exact;
                    f.exact = 1 + numr / denr;
                }
                break;
            }
            case HardnessProblem::Mvc: {
                f.value = 1 + sqrt5_term * (1 - q.value) / (3 - 4 * c2.value * K.value);
                break;  // irrational, float only
            }
        }
    } else {
        double omq = 1 - q.value;
        switch (problem) {
            case HardnessProblem::Mds: {
                double inner = 4 * (1 - c2.value / (t.value + 1)) / omq + 1;
                f.value = 1 + 1 / (130 * inner);
                if (q.exact && c2.exact && t.exact) {
                    Rational innerr = 4 * (1 - *c2.exact / (*t.exact + 1)) / (1 - *q.exact) + 1;
                    f.exact = 1 + Rational(1) / (130 * innerr);
                }
                break;
            }
            case HardnessProblem::Mis: {
                if (!(c1.value > 0)) throw std::invalid_argument("hardness_factor: simple MIS needs c1 > 0");
                double tail = (t.value + 1) * omq;
                double num = (1.0 / 139 - gamma.value) * tail;
                double den = 4 * c1.value * (140.0 / 139 - gamma.value) + tail;
                f.value = 1 + num / den;
                if (q.exact && gamma.exact && c1.exact && t.exact) {
                    Rational tailr = (*t.exact + 1) * (1 - *q.exact);
                    Rational numr = (Rational(1, 139) - *gamma.exact) * tailr;
                    Rational denr = 4 * *c1.exact * (Rational(140, 139) - *gamma.exact) + tailr;
                    f.exact = 1 + numr / denr;
                }
                break;
            }
            case HardnessProblem::Mvc: {
                double den =
                    2 * c2.value * (1 / (beta.value - 1) + (t.value + 1) / (beta.value - 2) + 1) + 1;
                f.value = 1 + omq * sqrt5_term / den;
                break;  // irrational, float only
            }
        }
    }
    res.factor = f;
    return res;
}

Lemma22Result lemma22_bound(unsigned a, unsigned b, const Scalar& c) {
    if (a < 1 || !(a <= b / 2)) throw std::invalid_argument("lemma22_bound: need 1 <= a <= b/2");
    if (!(c.value > 0)) throw std::invalid_argument("lemma22_bound: c must be > 0");
    Lemma22Result out;
    out.lhs.value = std::pow(static_cast<double>(a), -c.value);
    double sum = 0;
    for (unsigned i = a; i < b; ++i) sum += std::pow(static_cast<double>(i), -c.value - 1);
    out.rhs.value = c.value / (1 - std::pow(2.0, -c.value)) * sum;
    if (c.exact) {
        if (auto ci = as_positive_integer(*c.exact)) {
            out.lhs.exact = Rational(1) / rational_pow(Rational(a), *ci);
            Rational sr = 0;
            for (unsigned i = a; i < b; ++i) sr += Rational(1) / rational_pow(Rational(i), *ci + 1);
            Rational two_pc = rational_pow(Rational(2), *ci);
            out.rhs.exact = Rational(*ci) / (1 - Rational(1) / two_pc) * sr;
        }
    }
    return out;
}

double zeta(double beta) {
    if (!(beta > 1)) throw std::invalid_argument("zeta: beta must be > 1");
    // direct sum to K, Euler-Maclaurin tail from K: K^{1-b}/(b-1) + K^{-b}/2 + b K^{-b-1}/12
    const std::size_t K = 2000;
    double s = 0, comp = 0;
    for (std::size_t i = 1; i < K; ++i) {
        double x = std::pow(static_cast<double>(i), -beta);
        double y = x - comp;
        double t2 = s + y;
        comp = (t2 - s) - y;
        s = t2;
    }
    double Kd = static_cast<double>(K);
    s += std::pow(Kd, 1 - beta) / (beta - 1) + std::pow(Kd, -beta) / 2 +
         beta * std::pow(Kd, -beta - 1) / 12;
    return s;
}

}  // namespace plb::bounds
