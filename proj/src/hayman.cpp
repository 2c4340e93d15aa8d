#include "hblab/hayman.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hblab {

HaymanModel::HaymanModel(double beta_in, double gamma_in) : beta(beta_in), gamma(gamma_in) {
    if (!(beta > 0.0)) throw std::invalid_argument("HaymanModel: beta must be positive");
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("HaymanModel: gamma must lie in (0,1)");
    const double bg = std::pow(beta * gamma, 1.0 / (gamma + 1.0));
    growth_constant = bg * (1.0 + 1.0 / gamma);
    amplitude_constant = std::sqrt(2.0 * std::numbers::pi * (gamma + 1.0) / bg);
}

SaddleData saddle_data(const HaymanModel& model, double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("saddle_data: radius must lie in (0,1)");
    const double s = 1.0 - r;
    const double bg = model.beta * model.gamma;
    SaddleData d;
    d.log_max_modulus = model.beta * std::pow(s, -model.gamma);
    d.a_value = bg * r * std::pow(s, -(model.gamma + 1.0));
    d.b_value = bg * r * (1.0 + model.gamma * r) * std::pow(s, -(model.gamma + 2.0));
    return d;
}

SaddleSolution solve_saddle(const HaymanModel& model, int n) {
    if (n < 1) throw std::invalid_argument("solve_saddle: n must be >= 1");
    const double bg = model.beta * model.gamma;
    const double target = n;
    const double s_first = std::pow(bg / target, 1.0 / (model.gamma + 1.0));

    // Bracket: A(1-s) >= n * 2^{gamma+1} (1-s) at s = s_first/2, but guard
    // by doubling outward anyway.
    double lo = 0.0;                                 // A(lo) < n
    double hi = 1.0 - std::min(0.5, s_first / 2.0);  // aim past the root
    while (saddle_data(model, hi).a_value < target) hi = 1.0 - (1.0 - hi) / 2.0;

    while (hi - lo > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        if (saddle_data(model, mid).a_value < target)
            lo = mid;
        else
            hi = mid;
    }

    // Newton polish with A' = B/r, safeguarded inside the bracket.
    double r = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const SaddleData d = saddle_data(model, r);
        const double f = d.a_value - target;
        if (std::abs(f) <= 1e-14 * target) break;
        double step = f / (d.b_value / r);
        double next = r - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (saddle_data(model, next).a_value < target)
            lo = next;
        else
            hi = next;
        if (next == r) break;
        r = next;
    }

    SaddleSolution sol;
    sol.n = n;
    sol.r = r;
    sol.s = 1.0 - r;
    sol.residual = saddle_data(model, r).a_value - target;
    sol.s_first_order = s_first;
    return sol;
}

double saddle_point_log_estimate(const HaymanModel& model, int n) {
    const SaddleSolution sol = solve_saddle(model, n);
    const SaddleData d = saddle_data(model, sol.r);
    return d.log_max_modulus - n * std::log(sol.r) -
           0.5 * std::log(2.0 * std::numbers::pi * d.b_value);
}

double closed_form_log_estimate(const HaymanModel& model, int n) {
    if (n < 1) throw std::invalid_argument("closed_form_log_estimate: n must be >= 1");
    const double g = model.gamma;
    return model.growth_constant * std::pow(n, g / (g + 1.0)) -
           std::log(model.amplitude_constant) -
           (g + 2.0) / (2.0 * g + 2.0) * std::log(static_cast<double>(n));
}

std::vector<CoefficientComparison> compare_with_exact(const HaymanModel& model,
                                                      const std::vector<int>& n_list) {
    const int max_n = n_list.empty() ? 0 : *std::max_element(n_list.begin(), n_list.end());
    const CoeffSeries exact =
        exp_series(scaled(binomial_series(model.gamma, max_n), model.beta));

    std::vector<CoefficientComparison> out;
    out.reserve(n_list.size());
    for (int n : n_list) {
        CoefficientComparison row;
        row.n = n;
        row.log_exact = exact.log_abs(n);
        if (n >= 1) {
            row.log_saddle = saddle_point_log_estimate(model, n);
            row.log_closed = closed_form_log_estimate(model, n);
            row.ratio_saddle = std::exp(row.log_exact - row.log_saddle);
            row.ratio_closed = std::exp(row.log_exact - row.log_closed);
        } else {
            row.log_saddle = row.log_closed = 0.0;
            row.ratio_saddle = row.ratio_closed = 0.0;
        }
        out.push_back(row);
    }
    return out;
}

}  // namespace hblab
