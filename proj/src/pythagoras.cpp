#include "hblab/pythagoras.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hblab {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_power_of_two(int k) { return k > 0 && (k & (k - 1)) == 0; }

double angular_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), 2.0 * kPi);
    return std::min(d, 2.0 * kPi - d);
}

// Horner on the stored coefficients; the scale exponent is applied once.
Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex acc(0.0, 0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// Fourier coefficients u_hat(k), k = 0..trunc, of samples taken on the
// offset grid, via one real-to-complex FFT.
std::vector<Complex> fourier_analysis(const std::vector<double>& samples, int trunc) {
    const int k_count = static_cast<int>(samples.size());
    std::vector<double> in(samples);
    std::vector<fftw_complex> out(static_cast<size_t>(k_count / 2 + 1));
    fftw_plan plan = fftw_plan_dft_r2c_1d(k_count, in.data(), out.data(), FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);

    std::vector<Complex> hat(static_cast<size_t>(trunc) + 1);
    for (int k = 0; k <= trunc; ++k) {
        const Complex raw(out[k][0], out[k][1]);
        // Offset-grid twiddle: samples sit at theta = 2 pi (m + 1/2) / K.
        const Complex tw = std::polar(1.0, -kPi * k / k_count);
        hat[k] = tw * raw / static_cast<double>(k_count);
    }
    return hat;
}

// Smooth remainder of log|a| after the closed-form singular factor is
// removed; see singular_log_factor.
double smooth_log_modulus(const PhiSpec& spec, double theta) {
    return std::visit(
        [&](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, LocalDirichlet>) {
                const double rel = theta - std::arg(v.zeta);
                return -0.5 * std::log(3.0 - 2.0 * std::cos(rel));
            } else if constexpr (std::is_same_v<T, RationalPole>) {
                const double q = 2.0 - 2.0 * std::cos(theta);
                return -0.5 * std::log1p(std::pow(q, v.pole_order));
            } else if constexpr (std::is_same_v<T, ExpSingular>) {
                const Complex w = Complex(1.0, 0.0) - std::polar(1.0, theta);
                const double re_pow = std::pow(w, -v.gamma).real();
                return -0.5 * std::log1p(std::exp(-2.0 * v.beta * re_pow));
            } else {
                // No singular factor is split off for user rationals.
                const double lphi = log_abs_phi(spec, theta);
                if (lphi > 0.0) return -lphi - 0.5 * std::log1p(std::exp(-2.0 * lphi));
                return -0.5 * std::log1p(std::exp(2.0 * lphi));
            }
        },
        spec.variant());
}

// Taylor coefficients of the log of the singular outer factor of a.
CoeffSeries singular_log_factor(const PhiSpec& spec, int trunc) {
    return std::visit(
        [&](const auto& v) -> CoeffSeries {
            using T = std::decay_t<decltype(v)>;
            CoeffSeries g(trunc);
            if constexpr (std::is_same_v<T, LocalDirichlet>) {
                // log(1 - z/zeta)
                Complex p(1.0, 0.0);
                for (int k = 1; k <= trunc; ++k) {
                    p /= v.zeta;
                    g.coeffs[k] = -p / static_cast<double>(k);
                }
            } else if constexpr (std::is_same_v<T, RationalPole>) {
                // N * log(1 - z)
                for (int k = 1; k <= trunc; ++k)
                    g.coeffs[k] = -static_cast<double>(v.pole_order) / k;
            } else if constexpr (std::is_same_v<T, ExpSingular>) {
                // -beta * (1 - z)^{-gamma} = -log phi
                g = scaled(binomial_series(v.gamma, trunc), -v.beta);
            }
            (void)v;
            return g;
        },
        spec.variant());
}

}  // namespace

double boundary_angle(int m, int grid_size) {
    return 2.0 * kPi * (m + 0.5) / grid_size;
}

CoeffSeries analytic_completion(const std::vector<double>& logmod, int trunc) {
    const int k_count = static_cast<int>(logmod.size());
    if (!is_power_of_two(k_count))
        throw std::invalid_argument("analytic_completion: sample count must be a power of two");
    if (k_count < 4 * trunc)
        throw std::invalid_argument("analytic_completion: need at least 4*trunc samples");
    for (double x : logmod)
        if (!std::isfinite(x))
            throw std::invalid_argument("analytic_completion: non-finite sample");

    const auto hat = fourier_analysis(logmod, trunc);
    CoeffSeries g(trunc);
    g.coeffs[0] = hat[0].real();
    for (int k = 1; k <= trunc; ++k) g.coeffs[k] = 2.0 * hat[k];
    return g;
}

CoeffSeries outer_from_log_modulus(const std::vector<double>& logmod, int trunc) {
    return exp_series(analytic_completion(logmod, trunc));
}

double log_abs_phi(const PhiSpec& spec, double theta) {
    return std::visit(
        [&](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, LocalDirichlet>) {
                const double rel = theta - std::arg(v.zeta);
                return -std::log(2.0 * std::abs(std::sin(rel / 2.0)));
            } else if constexpr (std::is_same_v<T, RationalPole>) {
                return -v.pole_order * std::log(2.0 * std::abs(std::sin(theta / 2.0)));
            } else if constexpr (std::is_same_v<T, ExpSingular>) {
                const Complex w = Complex(1.0, 0.0) - std::polar(1.0, theta);
                return v.beta * std::pow(w, -v.gamma).real();
            } else {
                const Complex z = std::polar(1.0, theta);
                const double num = std::abs(horner(v.num, z));
                const double den = std::abs(horner(v.den, z));
                return std::log(num) - std::log(den);
            }
        },
        spec.variant());
}

std::vector<double> singular_angles(const PhiSpec& spec) {
    if (const auto* ld = spec.get_if<LocalDirichlet>()) return {std::arg(ld->zeta)};
    if (spec.get_if<RationalPole>() || spec.get_if<ExpSingular>()) return {0.0};
    return {};
}

PythagoreanPair pair_from_phi(const PhiSpec& spec, int grid_size, int trunc) {
    std::vector<double> smooth(static_cast<size_t>(grid_size));
    for (int m = 0; m < grid_size; ++m)
        smooth[m] = smooth_log_modulus(spec, boundary_angle(m, grid_size));

    const CoeffSeries g =
        add(singular_log_factor(spec, trunc), analytic_completion(smooth, trunc));
    CoeffSeries a = exp_series(g);

    const Complex a0c = a.at(0);
    if (!(a0c.real() > 0.0) || std::abs(a0c.imag()) > 1e-8 * std::abs(a0c))
        throw std::runtime_error("pair_from_phi: outer function value at 0 is not positive");

    PythagoreanPair pair;
    pair.b = mul(a, phi_coeffs(spec, trunc));
    pair.a = std::move(a);
    pair.a0 = a0c.real();
    pair.grid_size = grid_size;
    return pair;
}

Complex eval_series(const CoeffSeries& s, Complex z) {
    return horner(s.coeffs, z) * std::exp(s.scale_exp);
}

namespace {

template <typename DefectAt>
double max_defect(const PhiSpec& spec, double exclusion_halfwidth, int check_points,
                  DefectAt&& defect_at) {
    const auto singular = singular_angles(spec);
    double worst = 0.0;
    for (int m = 0; m < check_points; ++m) {
        const double theta = boundary_angle(m, check_points);
        bool excluded = false;
        for (double s : singular)
            if (angular_distance(theta, s) < exclusion_halfwidth) excluded = true;
        if (excluded) continue;
        worst = std::max(worst, defect_at(theta));
    }
    return worst;
}

}  // namespace

double boundary_identity_defect(const PythagoreanPair& pair, const PhiSpec& spec,
                                double exclusion_halfwidth, int check_points) {
    return max_defect(spec, exclusion_halfwidth, check_points, [&](double theta) {
        const Complex z = std::polar(1.0, theta);
        const double log_a = std::log(std::abs(eval_series(pair.a, z)));
        const double lphi = log_abs_phi(spec, theta);
        // log(1 + |phi|^2), stable for large |phi|
        const double log1p_phi2 = lphi > 0.0 ? 2.0 * lphi + std::log1p(std::exp(-2.0 * lphi))
                                             : std::log1p(std::exp(2.0 * lphi));
        return std::abs(std::expm1(2.0 * log_a + log1p_phi2));
    });
}

double boundary_identity_defect_series(const PythagoreanPair& pair, const PhiSpec& spec,
                                       double exclusion_halfwidth, int check_points) {
    return max_defect(spec, exclusion_halfwidth, check_points, [&](double theta) {
        const Complex z = std::polar(1.0, theta);
        const double a2 = std::norm(eval_series(pair.a, z));
        const double b2 = std::norm(eval_series(pair.b, z));
        return std::abs(a2 + b2 - 1.0);
    });
}

}  // namespace hblab
