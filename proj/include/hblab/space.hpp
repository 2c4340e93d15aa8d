// Inner products, norms, Gram matrices and reproducing kernels of H(b),
// all driven by the Taylor coefficients of the symbol phi = b/a.
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hblab/pythagoras.hpp"
#include "hblab/series.hpp"

namespace hblab {

/// Per-symbol context: materialized coefficients of phi together with the
/// cumulative monomial norms cum[n] = 1 + sum_{j<=n} |c_j|^2.
class HbContext {
public:
    explicit HbContext(CoeffSeries c);

    int trunc() const { return static_cast<int>(cum_.size()) - 1; }
    const CoeffSeries& series() const { return c_; }
    const std::vector<Complex>& symbol() const { return vals_; }
    const std::vector<double>& cum() const { return cum_; }

private:
    CoeffSeries c_;
    std::vector<Complex> vals_;  // materialized c_j
    std::vector<double> cum_;
};

/// Polynomial element of H(b), stored by Taylor coefficients.
struct HbPolynomial {
    std::vector<Complex> coeffs;

    HbPolynomial() = default;
    explicit HbPolynomial(std::vector<Complex> c) : coeffs(std::move(c)) {}

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Complex at(int k) const {
        return k >= 0 && k <= degree() ? coeffs[static_cast<size_t>(k)] : Complex(0.0, 0.0);
    }
    Complex eval(Complex z) const;

    static HbPolynomial monomial(int n);
};

HbPolynomial operator+(const HbPolynomial& p, const HbPolynomial& q);
HbPolynomial operator-(const HbPolynomial& p, const HbPolynomial& q);

/// ||z^n||^2 = cum[n].
double monomial_norm_sq(const HbContext& ctx, int n);

/// Analytic projection of conj(phi) * p: q_k = sum_j conj(c_j) p_{k+j}.
HbPolynomial plus_part(const HbContext& ctx, const HbPolynomial& p);

/// <p, q> = <p, q>_{H^2} + <p^+, q^+>_{H^2}.
Complex hb_inner(const HbContext& ctx, const HbPolynomial& p, const HbPolynomial& q);

double hb_norm(const HbContext& ctx, const HbPolynomial& p);

/// Hermitian positive-definite Gram matrix of the monomials z^0..z^n.
Eigen::MatrixXcd gram(const HbContext& ctx, int n);

/// Suggested kernel truncation: tail below 1e-9 at the given point.
int kernel_truncation(Complex w);

/// Taylor coefficients (in z) of the reproducing kernel at w, |w| < 1.
HbPolynomial kernel_poly(const PythagoreanPair& pair, Complex w, int trunc);

}  // namespace hblab
