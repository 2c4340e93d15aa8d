// Truncated power-series kernel over complex coefficients.
#pragma once

#include <complex>
#include <variant>
#include <vector>

namespace hblab {

using Complex = std::complex<double>;

/// Coefficients of a formal power series truncated at order trunc().
/// The value represented by slot k is coeffs[k] * exp(scale_exp); the
/// scale exponent is the overflow guard for series whose coefficients
/// grow beyond double range (rescaling triggers near 1e250).
struct CoeffSeries {
    std::vector<Complex> coeffs;
    double scale_exp = 0.0;

    CoeffSeries() : coeffs(1) {}
    explicit CoeffSeries(int trunc);
    CoeffSeries(std::vector<Complex> c, double scale = 0.0);

    int trunc() const { return static_cast<int>(coeffs.size()) - 1; }

    /// Materialized coefficient coeffs[k] * exp(scale_exp).
    Complex at(int k) const;

    /// log |coefficient k|; -inf for a zero slot. Never overflows.
    double log_abs(int k) const;

    /// |coefficient k|^2 with the scale exponent folded in.
    double abs2(int k) const;

    /// Move coefficient magnitude into scale_exp so max |coeffs| == 1.
    void normalize_scale();
};

/// Cauchy product; truncation is the min of the operands'.
CoeffSeries mul(const CoeffSeries& a, const CoeffSeries& b);

/// Coefficient-wise sum on the common truncation range.
CoeffSeries add(const CoeffSeries& a, const CoeffSeries& b);

/// Multiply by a scalar (applied to the stored coefficients).
CoeffSeries scaled(const CoeffSeries& a, Complex factor);

/// Coefficients of (1-z)^(-gamma_exp) via the running-product binomial
/// recurrence; requires gamma_exp > 0.
CoeffSeries binomial_series(double gamma_exp, int trunc);

/// exp of a series: f0 = exp(g0) and n*f_n = sum_{j=1..n} j*g_j*f_{n-j},
/// with the scale exponent adjusted whenever coefficients grow large.
CoeffSeries exp_series(const CoeffSeries& g);

struct LocalDirichlet {
    Complex zeta;  // unimodular
};

struct RationalPole {
    int numer_power;  // M >= 0, power of z in the numerator
    int pole_order;   // N >= 1, order of the pole at z = 1
};

struct ExpSingular {
    double beta;   // > 0
    double gamma;  // in (0,1)
};

struct UserRational {
    std::vector<Complex> num;
    std::vector<Complex> den;  // den[0] != 0
};

/// Symbolic description of the Smirnov-class symbol phi = b/a.
class PhiSpec {
public:
    using Variant = std::variant<LocalDirichlet, RationalPole, ExpSingular, UserRational>;

    static PhiSpec local_dirichlet(Complex zeta);
    static PhiSpec rational_pole(int numer_power, int pole_order);
    static PhiSpec exp_singular(double beta, double gamma);
    static PhiSpec user_rational(std::vector<Complex> num, std::vector<Complex> den);
    static PhiSpec zero();  // phi == 0, the Hardy-space baseline

    const Variant& variant() const { return v_; }

    template <typename T>
    const T* get_if() const { return std::get_if<T>(&v_); }

private:
    explicit PhiSpec(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/// Taylor coefficients of phi up to order trunc.
CoeffSeries phi_coeffs(const PhiSpec& spec, int trunc);

}  // namespace hblab
