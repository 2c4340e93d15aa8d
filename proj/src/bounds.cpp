#include "hblab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hblab {

namespace {

constexpr double kPowerIterTol = 1e-8;
constexpr int kPowerIterCap = 10000;

// Shared Cholesky factor for repeated rows on the same subspace.
class OpNormSolver {
public:
    OpNormSolver(const HbContext& ctx, int gram_size) : size_(gram_size + 1) {
        if (gram_size < 0 || gram_size > ctx.trunc())
            throw std::invalid_argument("truncated_opnorm: gram size beyond context truncation");
        Eigen::LLT<Eigen::MatrixXcd> llt(gram(ctx, gram_size));
        if (llt.info() != Eigen::Success)
            throw std::runtime_error(
                "truncated_opnorm: Gram factorization failed (numerically not positive "
                "definite); refusing to regularize");
        lower_ = llt.matrixL();
        upper_ = lower_.adjoint();
    }

    double estimate(const SummabilityRow& row) const {
        if (row.n > size_ - 1)
            throw std::invalid_argument("truncated_opnorm: row index beyond gram size");

        Eigen::VectorXcd diag = Eigen::VectorXcd::Zero(size_);
        for (int k = 0; k <= row.n; ++k) diag(k) = row.weights[static_cast<size_t>(k)];

        // A = L* D L*^{-1}; power iteration on A* A.
        const auto apply = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
            Eigen::VectorXcd t = upper_.triangularView<Eigen::Upper>().solve(v);
            t = diag.asDiagonal() * t;
            return upper_.triangularView<Eigen::Upper>() * t;
        };
        const auto apply_adjoint = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
            Eigen::VectorXcd t = lower_.triangularView<Eigen::Lower>() * v;
            t = diag.conjugate().asDiagonal() * t;
            return lower_.triangularView<Eigen::Lower>().solve(t);
        };

        Eigen::VectorXcd v = Eigen::VectorXcd::Ones(size_) / std::sqrt(double(size_));
        double sigma = 0.0, prev = -1.0;
        for (int iter = 0; iter < kPowerIterCap; ++iter) {
            const Eigen::VectorXcd av = apply(v);
            sigma = av.norm();
            if (sigma == 0.0) return 0.0;
            const Eigen::VectorXcd u = apply_adjoint(av);
            const double nu = u.norm();
            if (nu == 0.0) break;
            v = u / nu;
            if (prev >= 0.0 && std::abs(sigma - prev) <= kPowerIterTol * sigma) break;
            prev = sigma;
        }
        return sigma;
    }

private:
    int size_;
    Eigen::MatrixXcd lower_;
    Eigen::MatrixXcd upper_;
};

double fitted_lemma_bound(const HbContext& ctx, const SummabilityRow& row, double a0) {
    if (a0 <= 0.0) return 0.0;
    const double gnn = std::abs(row.weights.back());
    return a0 * gnn * std::sqrt(monomial_norm_sq(ctx, row.n));
}

}  // namespace

double lemma_lower_bound(const PythagoreanPair& pair, const HbContext& ctx,
                         const SummabilityRow& row) {
    return fitted_lemma_bound(ctx, row, pair.a0);
}

OpNormEstimate truncated_opnorm(const HbContext& ctx, const SummabilityRow& row, int gram_size,
                                double a0) {
    OpNormSolver solver(ctx, gram_size);
    return OpNormEstimate{row.n, gram_size, solver.estimate(row),
                          fitted_lemma_bound(ctx, row, a0)};
}

std::vector<OpNormEstimate> opnorm_profile(const HbContext& ctx, const TriMatrixSpec& spec,
                                           const std::vector<int>& n_list, int gram_size,
                                           double a0) {
    OpNormSolver solver(ctx, gram_size);
    std::vector<OpNormEstimate> out;
    out.reserve(n_list.size());
    for (int n : n_list) {
        const SummabilityRow row = spec.row(n);
        out.push_back(OpNormEstimate{n, gram_size, solver.estimate(row),
                                     fitted_lemma_bound(ctx, row, a0)});
    }
    return out;
}

namespace {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms = 0.0;
};

// Least squares of y against (x, 1).
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t m = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < m; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double det = m * sxx - sx * sx;
    LinearFit f;
    f.slope = (m * sxy - sx * sy) / det;
    f.intercept = (sy - f.slope * sx) / m;
    double ss = 0;
    for (size_t i = 0; i < m; ++i) {
        const double r = y[i] - (f.slope * x[i] + f.intercept);
        ss += r * r;
    }
    f.rms = std::sqrt(ss / m);
    return f;
}

double stretched_rms(const std::vector<double>& n, const std::vector<double>& y, double delta,
                     double* coeff_out) {
    std::vector<double> basis(n.size());
    for (size_t i = 0; i < n.size(); ++i) basis[i] = std::pow(n[i], delta);
    const LinearFit f = fit_line(basis, y);
    if (coeff_out) *coeff_out = f.slope;
    return f.rms;
}

}  // namespace

DivergenceVerdict classify(const std::vector<double>& norms, double alpha) {
    const int t = static_cast<int>(norms.size()) - 1;
    if (t < 100) throw std::invalid_argument("classify: need norms up to at least n = 100");
    if (!(alpha >= 0.0)) throw std::invalid_argument("classify: alpha must be >= 0");

    const int n0 = std::max(2, t / 10);
    std::vector<double> ns, logn, logy;
    for (int n = n0; n <= t; ++n) {
        const double v = norms[static_cast<size_t>(n)];
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("classify: norms must be positive and finite");
        ns.push_back(n);
        logn.push_back(std::log(static_cast<double>(n)));
        logy.push_back(std::log(v));
    }

    DivergenceVerdict verdict;

    const auto [ymin, ymax] = std::minmax_element(logy.begin(), logy.end());
    if (*ymax - *ymin <= 1e-12 * std::max(1.0, std::abs(*ymax))) {
        verdict.fitted_model = BoundedNorms{};
        return verdict;
    }

    const LinearFit poly = fit_line(logn, logy);

    // Stretched-exponential: grid over the inner exponent, then a ternary
    // refinement of the best cell.
    double best_delta = 0.1, best_rms = std::numeric_limits<double>::infinity();
    for (double d = 0.05; d <= 0.951; d += 0.01) {
        const double r = stretched_rms(ns, logy, d, nullptr);
        if (r < best_rms) {
            best_rms = r;
            best_delta = d;
        }
    }
    double lo = std::max(0.01, best_delta - 0.01), hi = std::min(0.99, best_delta + 0.01);
    for (int iter = 0; iter < 60; ++iter) {
        const double d1 = lo + (hi - lo) / 3.0, d2 = hi - (hi - lo) / 3.0;
        if (stretched_rms(ns, logy, d1, nullptr) < stretched_rms(ns, logy, d2, nullptr))
            hi = d2;
        else
            lo = d1;
    }
    double coeff = 0.0;
    const double delta = 0.5 * (lo + hi);
    const double rms_s = stretched_rms(ns, logy, delta, &coeff);

    // Ties (within 1%) resolve toward polynomial growth.
    if (rms_s < 0.99 * poly.rms) {
        verdict.fitted_model = StretchedExponential{coeff, delta};
        verdict.fit_residual = rms_s;
        const bool growing = coeff > 0.0;
        verdict.case_i = growing;
        verdict.case_ii = growing;
        verdict.case_iii = growing;
    } else {
        verdict.fitted_model = PolynomialGrowth{poly.slope};
        verdict.fit_residual = poly.rms;
        const double rho = poly.slope;
        verdict.case_i = rho > alpha;
        verdict.case_ii = 2.0 * (rho - alpha) > 1.0;
        verdict.case_iii = rho - alpha > 1.0;
    }

    // condition (iii) is strictly stronger than (ii), which implies (i)
    if ((verdict.case_iii && !verdict.case_ii) || (verdict.case_ii && !verdict.case_i))
        throw std::logic_error("classify: implication chain violated");
    return verdict;
}

const char* model_name(const FittedModel& m) {
    if (std::holds_alternative<PolynomialGrowth>(m)) return "polynomial_growth";
    if (std::holds_alternative<StretchedExponential>(m)) return "stretched_exponential";
    return "bounded";
}

}  // namespace hblab
