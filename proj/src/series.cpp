#include "hblab/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hblab {

namespace {

// Rescale before any stored coefficient magnitude exceeds this.
constexpr double kRescaleThreshold = 1e250;

// Operands of a Cauchy product are pre-normalized past this magnitude
// so pairwise products cannot overflow.
constexpr double kMulNormalizeThreshold = 1e120;

double max_abs(const std::vector<Complex>& v, int upto) {
    double m = 0.0;
    for (int k = 0; k <= upto; ++k) m = std::max(m, std::abs(v[k]));
    return m;
}

}  // namespace

CoeffSeries::CoeffSeries(int trunc) {
    if (trunc < 0) throw std::invalid_argument("CoeffSeries: negative truncation");
    coeffs.assign(static_cast<size_t>(trunc) + 1, Complex(0.0, 0.0));
}

CoeffSeries::CoeffSeries(std::vector<Complex> c, double scale)
    : coeffs(std::move(c)), scale_exp(scale) {
    if (coeffs.empty()) coeffs.assign(1, Complex(0.0, 0.0));
}

Complex CoeffSeries::at(int k) const {
    return coeffs.at(static_cast<size_t>(k)) * std::exp(scale_exp);
}

double CoeffSeries::log_abs(int k) const {
    const double m = std::abs(coeffs.at(static_cast<size_t>(k)));
    if (m == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(m) + scale_exp;
}

double CoeffSeries::abs2(int k) const {
    const double la = log_abs(k);
    if (la == -std::numeric_limits<double>::infinity()) return 0.0;
    return std::exp(2.0 * la);
}

void CoeffSeries::normalize_scale() {
    const double m = max_abs(coeffs, trunc());
    if (m == 0.0 || !std::isfinite(m)) return;
    const double delta = std::log(m);
    const double f = std::exp(-delta);
    for (auto& c : coeffs) c *= f;
    scale_exp += delta;
}

CoeffSeries mul(const CoeffSeries& a, const CoeffSeries& b) {
    CoeffSeries x = a, y = b;
    if (max_abs(x.coeffs, x.trunc()) > kMulNormalizeThreshold) x.normalize_scale();
    if (max_abs(y.coeffs, y.trunc()) > kMulNormalizeThreshold) y.normalize_scale();

    const int t = std::min(x.trunc(), y.trunc());
    CoeffSeries r(t);
    r.scale_exp = x.scale_exp + y.scale_exp;
    for (int k = 0; k <= t; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j <= k; ++j) acc += x.coeffs[j] * y.coeffs[k - j];
        r.coeffs[k] = acc;
    }
    return r;
}

CoeffSeries add(const CoeffSeries& a, const CoeffSeries& b) {
    const int t = std::min(a.trunc(), b.trunc());
    const double s = std::max(a.scale_exp, b.scale_exp);
    const double fa = std::exp(a.scale_exp - s);
    const double fb = std::exp(b.scale_exp - s);
    CoeffSeries r(t);
    r.scale_exp = s;
    for (int k = 0; k <= t; ++k) r.coeffs[k] = a.coeffs[k] * fa + b.coeffs[k] * fb;
    return r;
}

CoeffSeries scaled(const CoeffSeries& a, Complex factor) {
    CoeffSeries r = a;
    for (auto& c : r.coeffs) c *= factor;
    return r;
}

CoeffSeries binomial_series(double gamma_exp, int trunc) {
    if (!(gamma_exp > 0.0))
        throw std::invalid_argument("binomial_series: exponent must be positive");
    CoeffSeries r(trunc);
    r.coeffs[0] = 1.0;
    double running = 1.0;
    for (int j = 1; j <= trunc; ++j) {
        running *= (gamma_exp + j - 1) / j;
        r.coeffs[j] = running;
    }
    return r;
}

CoeffSeries exp_series(const CoeffSeries& g) {
    const int t = g.trunc();
    std::vector<Complex> gm(static_cast<size_t>(t) + 1);
    for (int j = 0; j <= t; ++j) gm[j] = g.at(j);

    CoeffSeries f(t);
    f.scale_exp = gm[0].real();
    f.coeffs[0] = std::exp(Complex(0.0, gm[0].imag()));
    for (int n = 1; n <= t; ++n) {
        Complex acc(0.0, 0.0);
        for (int j = 1; j <= n; ++j)
            acc += static_cast<double>(j) * gm[j] * f.coeffs[n - j];
        f.coeffs[n] = acc / static_cast<double>(n);
        if (std::abs(f.coeffs[n]) > kRescaleThreshold) {
            const double delta = std::log(std::abs(f.coeffs[n]));
            const double shrink = std::exp(-delta);
            for (int k = 0; k <= n; ++k) f.coeffs[k] *= shrink;
            f.scale_exp += delta;
        }
    }
    return f;
}

PhiSpec PhiSpec::local_dirichlet(Complex zeta) {
    if (std::abs(std::abs(zeta) - 1.0) > 1e-12)
        throw std::invalid_argument("PhiSpec: zeta must lie on the unit circle");
    return PhiSpec(Variant(LocalDirichlet{zeta}));
}

PhiSpec PhiSpec::rational_pole(int numer_power, int pole_order) {
    if (numer_power < 0) throw std::invalid_argument("PhiSpec: numerator power must be >= 0");
    if (pole_order < 1) throw std::invalid_argument("PhiSpec: pole order must be >= 1");
    return PhiSpec(Variant(RationalPole{numer_power, pole_order}));
}

PhiSpec PhiSpec::exp_singular(double beta, double gamma) {
    if (!(beta > 0.0)) throw std::invalid_argument("PhiSpec: beta must be positive");
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("PhiSpec: gamma must lie in (0,1)");
    return PhiSpec(Variant(ExpSingular{beta, gamma}));
}

PhiSpec PhiSpec::user_rational(std::vector<Complex> num, std::vector<Complex> den) {
    if (den.empty() || den[0] == Complex(0.0, 0.0))
        throw std::invalid_argument("PhiSpec: denominator constant term must be nonzero");
    if (num.empty()) num.assign(1, Complex(0.0, 0.0));
    return PhiSpec(Variant(UserRational{std::move(num), std::move(den)}));
}

PhiSpec PhiSpec::zero() {
    return user_rational({Complex(0.0, 0.0)}, {Complex(1.0, 0.0)});
}

namespace {

CoeffSeries rational_division(const UserRational& ur, int trunc) {
    CoeffSeries r(trunc);
    const auto& num = ur.num;
    const auto& den = ur.den;
    for (int k = 0; k <= trunc; ++k) {
        Complex acc = k < static_cast<int>(num.size()) ? num[k] : Complex(0.0, 0.0);
        const int jmax = std::min<int>(k, static_cast<int>(den.size()) - 1);
        for (int j = 1; j <= jmax; ++j) acc -= den[j] * r.coeffs[k - j];
        r.coeffs[k] = acc / den[0];
    }
    return r;
}

}  // namespace

CoeffSeries phi_coeffs(const PhiSpec& spec, int trunc) {
    if (trunc < 0) throw std::invalid_argument("phi_coeffs: negative truncation");
    return std::visit(
        [&](const auto& v) -> CoeffSeries {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, LocalDirichlet>) {
                // z/(zeta - z) = sum_{j>=1} zeta^{-j} z^j
                CoeffSeries r(trunc);
                Complex c(1.0, 0.0);
                for (int j = 1; j <= trunc; ++j) {
                    c /= v.zeta;
                    r.coeffs[j] = c;
                }
                return r;
            } else if constexpr (std::is_same_v<T, RationalPole>) {
                CoeffSeries r(trunc);
                if (v.numer_power <= trunc) {
                    CoeffSeries w = binomial_series(v.pole_order, trunc - v.numer_power);
                    for (int j = 0; j + v.numer_power <= trunc; ++j)
                        r.coeffs[j + v.numer_power] = w.coeffs[j];
                }
                return r;
            } else if constexpr (std::is_same_v<T, ExpSingular>) {
                CoeffSeries g = scaled(binomial_series(v.gamma, trunc), v.beta);
                return exp_series(g);
            } else {
                if (v.den[0] == Complex(0.0, 0.0))
                    throw std::invalid_argument("phi_coeffs: denominator constant term is zero");
                return rational_division(v, trunc);
            }
        },
        spec.variant());
}

}  // namespace hblab
