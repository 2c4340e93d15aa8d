#include "hblab/experiments.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hblab/numeric_format.hpp"
#include "hblab/summability.hpp"

namespace hblab {

void ExperimentConfig::validate() const {
    if (trunc < 0) throw std::invalid_argument("config: trunc must be >= 0");
    if (gram_size < 0 || gram_size > trunc)
        throw std::invalid_argument("config: gram size must satisfy 0 <= N <= T");
    if (grid_size <= 0 || (grid_size & (grid_size - 1)) != 0)
        throw std::invalid_argument("config: grid size must be a power of two");
    if (!(alpha >= 0.0)) throw std::invalid_argument("config: alpha must be >= 0");
}

void run_norms(const ExperimentConfig& cfg, std::ostream& out) {
    cfg.validate();
    const HbContext ctx(phi_coeffs(cfg.phi, cfg.trunc));
    out << "n,norm\n";
    for (int n = 0; n <= cfg.trunc; ++n)
        out << n << ',' << format_real(std::sqrt(monomial_norm_sq(ctx, n))) << '\n';
}

void run_opnorm(const ExperimentConfig& cfg, const std::vector<int>& n_list, std::ostream& out) {
    cfg.validate();
    const HbContext ctx(phi_coeffs(cfg.phi, cfg.trunc));
    const PythagoreanPair pair = pair_from_phi(cfg.phi, cfg.grid_size, cfg.trunc);
    const TriMatrixSpec method = TriMatrixSpec::cesaro(cfg.alpha);
    const auto profile = opnorm_profile(ctx, method, n_list, cfg.gram_size, pair.a0);
    out << "n,lemma_bound,truncated_norm,N\n";
    for (const auto& e : profile)
        out << e.n << ',' << format_real(e.lemma_bound) << ',' << format_real(e.value) << ','
            << e.gram_size << '\n';
}

DivergenceVerdict run_classify(const ExperimentConfig& cfg, std::ostream& out,
                               std::ostream& summary) {
    cfg.validate();
    const HbContext ctx(phi_coeffs(cfg.phi, cfg.trunc));
    std::vector<double> norms(static_cast<size_t>(cfg.trunc) + 1);
    for (int n = 0; n <= cfg.trunc; ++n) norms[n] = std::sqrt(monomial_norm_sq(ctx, n));
    const DivergenceVerdict v = classify(norms, cfg.alpha);

    double p1 = 0.0, p2 = 0.0;
    if (const auto* pg = std::get_if<PolynomialGrowth>(&v.fitted_model)) {
        p1 = pg->rho;
    } else if (const auto* se = std::get_if<StretchedExponential>(&v.fitted_model)) {
        p1 = se->coeff;
        p2 = se->delta;
    }
    out << "alpha,model,param1,param2,residual,case_i,case_ii,case_iii\n";
    out << format_real(cfg.alpha) << ',' << model_name(v.fitted_model) << ','
        << format_real(p1) << ',' << format_real(p2) << ',' << format_real(v.fit_residual)
        << ',' << v.case_i << ',' << v.case_ii << ',' << v.case_iii << '\n';

    summary << "fitted model: " << model_name(v.fitted_model);
    if (std::holds_alternative<PolynomialGrowth>(v.fitted_model))
        summary << " (||z^n|| ~ n^" << p1 << ")";
    else if (std::holds_alternative<StretchedExponential>(v.fitted_model))
        summary << " (||z^n|| ~ exp(" << p1 << " n^" << p2 << "))";
    summary << ", residual " << v.fit_residual << '\n';
    summary << "alpha = " << cfg.alpha << ": ";
    if (v.case_iii)
        summary << "case (iii): weak divergence with liminf growth of the pairings\n";
    else if (v.case_ii)
        summary << "case (ii): norm divergence along the whole sequence\n";
    else if (v.case_i)
        summary << "case (i) only: unbounded partial-sum norms on a subsequence\n";
    else
        summary << "no divergence hypothesis holds\n";
    return v;
}

void run_hayman(double beta, double gamma, const std::vector<int>& n_list, std::ostream& out) {
    const HaymanModel model(beta, gamma);
    out << "n,log_exact,log_saddle,log_closed,ratio_saddle,ratio_closed\n";
    for (const auto& row : compare_with_exact(model, n_list))
        out << row.n << ',' << format_real(row.log_exact) << ',' << format_real(row.log_saddle)
            << ',' << format_real(row.log_closed) << ',' << format_real(row.ratio_saddle) << ','
            << format_real(row.ratio_closed) << '\n';
}

void run_cesaro_demo(const ExperimentConfig& cfg, const HbPolynomial& sample, std::ostream& out) {
    cfg.validate();
    if (sample.degree() > cfg.gram_size)
        throw std::invalid_argument("cesaro demo: sample degree exceeds N");
    const HbContext ctx(phi_coeffs(cfg.phi, cfg.trunc));
    out << "n,distance\n";
    for (int n = 0; n <= cfg.gram_size; ++n) {
        const HbPolynomial diff = apply_row(cesaro_row(cfg.alpha, n), sample) - sample;
        out << n << ',' << format_real(hb_norm(ctx, diff)) << '\n';
    }
}

void run_pair(const ExperimentConfig& cfg, std::ostream& out) {
    cfg.validate();
    const PythagoreanPair pair = pair_from_phi(cfg.phi, cfg.grid_size, cfg.trunc);
    out << "k,a_re,a_im,b_re,b_im\n";
    for (int k = 0; k <= cfg.trunc; ++k) {
        const Complex a = pair.a.at(k);
        const Complex b = pair.b.at(k);
        out << k << ',' << format_real(a.real()) << ',' << format_real(a.imag()) << ','
            << format_real(b.real()) << ',' << format_real(b.imag()) << '\n';
    }
}

HbPolynomial load_polynomial(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_polynomial: cannot open " + path);
    std::vector<Complex> coeffs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        Complex z;
        if (!parse_complex(tok, z))
            throw std::runtime_error("load_polynomial: line " + std::to_string(lineno) +
                                     ": cannot parse '" + tok + "'");
        coeffs.push_back(z);
        std::string extra;
        if (ls >> extra)
            throw std::runtime_error("load_polynomial: line " + std::to_string(lineno) +
                                     ": one coefficient per line");
    }
    if (coeffs.empty()) coeffs.assign(1, Complex(0.0, 0.0));
    return HbPolynomial(std::move(coeffs));
}

HbPolynomial random_polynomial(int degree, std::uint64_t seed) {
    if (degree < 0) throw std::invalid_argument("random_polynomial: negative degree");
    std::mt19937_64 rng(seed);
    const auto unit = [&rng]() {
        // top 53 bits -> [0,1), identical across standard libraries
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    std::vector<Complex> coeffs(static_cast<size_t>(degree) + 1);
    for (auto& c : coeffs) {
        const double re = 2.0 * unit() - 1.0;
        const double im = 2.0 * unit() - 1.0;
        c = Complex(re, im);
    }
    return HbPolynomial(std::move(coeffs));
}

std::vector<int> parse_index_list(const std::string& csv_list) {
    std::vector<int> out;
    std::stringstream ss(csv_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t pos = 0;
        const int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad index list entry: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty index list");
    return out;
}

}  // namespace hblab
