// Experiment runners behind the CLI subcommands; each writes one
// plot-ready CSV table (17-significant-digit reals, complex as re+imi).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hblab/bounds.hpp"
#include "hblab/hayman.hpp"
#include "hblab/pythagoras.hpp"
#include "hblab/space.hpp"

namespace hblab {

struct ExperimentConfig {
    PhiSpec phi;
    double alpha = 0.0;
    int trunc = 4096;        // series truncation T
    int gram_size = 256;     // monomial subspace size N <= T
    int grid_size = 1 << 16; // boundary samples K, a power of two

    explicit ExperimentConfig(PhiSpec p) : phi(std::move(p)) {}
    void validate() const;
};

/// Monomial norms ||z^n||, n = 0..T. Columns: n,norm.
void run_norms(const ExperimentConfig& cfg, std::ostream& out);

/// Lemma bound vs truncated operator norm for the Cesaro family.
/// Columns: n,lemma_bound,truncated_norm,N.
void run_opnorm(const ExperimentConfig& cfg, const std::vector<int>& n_list, std::ostream& out);

/// Growth-model verdict. CSV columns:
/// alpha,model,param1,param2,residual,case_i,case_ii,case_iii.
/// A human-readable summary goes to the second stream.
DivergenceVerdict run_classify(const ExperimentConfig& cfg, std::ostream& out,
                               std::ostream& summary);

/// Exact vs estimated coefficient growth for the exponential symbol.
/// Columns: n,log_exact,log_saddle,log_closed,ratio_saddle,ratio_closed.
void run_hayman(double beta, double gamma, const std::vector<int>& n_list, std::ostream& out);

/// Distances ||sigma_n^alpha(p) - p||_{H(b)} for n = 0..N.
/// Columns: n,distance.
void run_cesaro_demo(const ExperimentConfig& cfg, const HbPolynomial& sample, std::ostream& out);

/// Recovered Pythagorean pair coefficients. Columns: k,a_re,a_im,b_re,b_im.
void run_pair(const ExperimentConfig& cfg, std::ostream& out);

/// Polynomial sample file: one complex coefficient per line, index order.
HbPolynomial load_polynomial(const std::string& path);

/// Deterministic random polynomial with coefficients uniform in the unit
/// square; the generator mapping is fixed, not implementation-defined.
HbPolynomial random_polynomial(int degree, std::uint64_t seed);

std::vector<int> parse_index_list(const std::string& csv_list);

}  // namespace hblab
