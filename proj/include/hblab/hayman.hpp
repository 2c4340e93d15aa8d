// Saddle-point coefficient asymptotics for phi = exp(beta/(1-z)^gamma):
// auxiliary radial functions, the saddle radius, and the two estimate
// routes cross-validated against exact coefficients.
#pragma once

#include <vector>

#include "hblab/series.hpp"

namespace hblab {

/// Parameters (beta > 0, gamma in (0,1)) with the two constants of the
/// closed-form coefficient law, recomputed on construction:
/// growth_constant  = (beta*gamma)^{1/(gamma+1)} * (1 + 1/gamma),
/// amplitude_constant = sqrt(2*pi*(gamma+1) / (beta*gamma)^{1/(gamma+1)}).
struct HaymanModel {
    double beta;
    double gamma;
    double growth_constant;
    double amplitude_constant;

    HaymanModel(double beta_in, double gamma_in);
};

/// log M(r), A(r) = r (log M)'(r), B(r) = r A'(r) at radius r in (0,1).
struct SaddleData {
    double log_max_modulus;
    double a_value;
    double b_value;
};

SaddleData saddle_data(const HaymanModel& model, double r);

/// Solution of A(r_n) = n, with the achieved residual and the first-order
/// approximation s ~ (beta*gamma/n)^{1/(gamma+1)} for diagnostics.
struct SaddleSolution {
    int n;
    double r;         // saddle radius in (0,1)
    double s;         // 1 - r
    double residual;  // A(r) - n
    double s_first_order;
};

/// Bisection bracket then safeguarded Newton (A' = B/r).
SaddleSolution solve_saddle(const HaymanModel& model, int n);

/// log of the saddle-point estimate f(r_n) / (r_n^n sqrt(2 pi B(r_n))).
double saddle_point_log_estimate(const HaymanModel& model, int n);

/// log of the closed-form law exp(C n^{g/(g+1)}) / (D n^{(g+2)/(2g+2)}).
double closed_form_log_estimate(const HaymanModel& model, int n);

struct CoefficientComparison {
    int n;
    double log_exact;
    double log_saddle;
    double log_closed;
    double ratio_saddle;  // exact / saddle estimate
    double ratio_closed;
};

/// Exact coefficients via the series exponential against both estimates.
std::vector<CoefficientComparison> compare_with_exact(const HaymanModel& model,
                                                      const std::vector<int>& n_list);

}  // namespace hblab
