#include "hblab/space.hpp"

#include <cmath>
#include <stdexcept>

namespace hblab {

HbContext::HbContext(CoeffSeries c) : c_(std::move(c)) {
    const int t = c_.trunc();
    vals_.resize(static_cast<size_t>(t) + 1);
    cum_.resize(static_cast<size_t>(t) + 1);
    const double s = std::exp(c_.scale_exp);
    double acc = 1.0;
    for (int j = 0; j <= t; ++j) {
        vals_[j] = c_.coeffs[j] * s;
        acc += c_.abs2(j);
        cum_[j] = acc;
    }
}

Complex HbPolynomial::eval(Complex z) const {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

HbPolynomial HbPolynomial::monomial(int n) {
    std::vector<Complex> c(static_cast<size_t>(n) + 1, Complex(0.0, 0.0));
    c.back() = Complex(1.0, 0.0);
    return HbPolynomial(std::move(c));
}

HbPolynomial operator+(const HbPolynomial& p, const HbPolynomial& q) {
    std::vector<Complex> c(std::max(p.coeffs.size(), q.coeffs.size()), Complex(0.0, 0.0));
    for (size_t k = 0; k < c.size(); ++k)
        c[k] = p.at(static_cast<int>(k)) + q.at(static_cast<int>(k));
    return HbPolynomial(std::move(c));
}

HbPolynomial operator-(const HbPolynomial& p, const HbPolynomial& q) {
    std::vector<Complex> c(std::max(p.coeffs.size(), q.coeffs.size()), Complex(0.0, 0.0));
    for (size_t k = 0; k < c.size(); ++k)
        c[k] = p.at(static_cast<int>(k)) - q.at(static_cast<int>(k));
    return HbPolynomial(std::move(c));
}

double monomial_norm_sq(const HbContext& ctx, int n) {
    if (n < 0 || n > ctx.trunc())
        throw std::out_of_range("monomial_norm_sq: index beyond context truncation");
    return ctx.cum()[static_cast<size_t>(n)];
}

HbPolynomial plus_part(const HbContext& ctx, const HbPolynomial& p) {
    const int d = p.degree();
    if (d > ctx.trunc())
        throw std::out_of_range("plus_part: polynomial degree beyond context truncation");
    const auto& c = ctx.symbol();
    std::vector<Complex> q(static_cast<size_t>(d) + 1, Complex(0.0, 0.0));
    for (int k = 0; k <= d; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j <= d - k; ++j) acc += std::conj(c[j]) * p.coeffs[k + j];
        q[k] = acc;
    }
    return HbPolynomial(std::move(q));
}

Complex hb_inner(const HbContext& ctx, const HbPolynomial& p, const HbPolynomial& q) {
    const HbPolynomial pp = plus_part(ctx, p);
    const HbPolynomial qp = plus_part(ctx, q);
    Complex acc(0.0, 0.0);
    const int d = std::max(p.degree(), q.degree());
    for (int k = 0; k <= d; ++k)
        acc += p.at(k) * std::conj(q.at(k)) + pp.at(k) * std::conj(qp.at(k));
    return acc;
}

double hb_norm(const HbContext& ctx, const HbPolynomial& p) {
    return std::sqrt(std::max(0.0, hb_inner(ctx, p, p).real()));
}

Eigen::MatrixXcd gram(const HbContext& ctx, int n) {
    if (n < 0 || n > ctx.trunc())
        throw std::out_of_range("gram: size beyond context truncation");
    const auto& c = ctx.symbol();
    Eigen::MatrixXcd g(n + 1, n + 1);
    // G_{m, m+d} = delta_{d0} + sum_{i<=m} conj(c_i) c_{i+d}: cumulative
    // along each diagonal, O(n^2) total.
    for (int d = 0; d <= n; ++d) {
        Complex acc(0.0, 0.0);
        for (int m = 0; m + d <= n; ++m) {
            acc += std::conj(c[m]) * c[m + d];
            g(m, m + d) = acc + (d == 0 ? 1.0 : 0.0);
            if (d > 0) g(m + d, m) = std::conj(g(m, m + d));
        }
    }
    return g;
}

int kernel_truncation(Complex w) {
    const double r = std::abs(w);
    if (r < 1e-6) return 1;
    const int t = static_cast<int>(std::ceil(std::log(1e-9 * (1.0 - r)) / std::log(r)));
    return std::max(t, 1);
}

HbPolynomial kernel_poly(const PythagoreanPair& pair, Complex w, int trunc) {
    if (std::abs(w) >= 1.0)
        throw std::invalid_argument("kernel_poly: evaluation point must lie in the open disk");
    if (trunc > pair.b.trunc())
        throw std::invalid_argument("kernel_poly: pair series shorter than requested truncation");

    const Complex bw_conj = std::conj(eval_series(pair.b, w));
    const double scale = std::exp(pair.b.scale_exp);
    const Complex q = std::conj(w);

    // (1 - conj(b(w)) b(z)) * sum_m conj(w)^m z^m via the one-pass
    // recurrence kappa_k = q * kappa_{k-1} + u_k.
    std::vector<Complex> kappa(static_cast<size_t>(trunc) + 1);
    Complex prev(0.0, 0.0);
    for (int k = 0; k <= trunc; ++k) {
        Complex u = -bw_conj * (pair.b.coeffs[k] * scale);
        if (k == 0) u += 1.0;
        prev = q * prev + u;
        kappa[k] = prev;
    }
    return HbPolynomial(std::move(kappa));
}

}  // namespace hblab
