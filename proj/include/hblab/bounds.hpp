// Lower bounds and truncated operator norms of triangular summability
// operators on H(b), plus numerical classification of norm growth.
#pragma once

#include <variant>
#include <vector>

#include "hblab/pythagoras.hpp"
#include "hblab/space.hpp"
#include "hblab/summability.hpp"

namespace hblab {

struct OpNormEstimate {
    int n = 0;          // row index
    int gram_size = 0;  // truncation N of the monomial subspace
    double value = 0.0;
    double lemma_bound = 0.0;
};

/// a(0) |gamma_{nn}| ||z^n||, the rank-one witness bound.
double lemma_lower_bound(const PythagoreanPair& pair, const HbContext& ctx,
                         const SummabilityRow& row);

/// Spectral norm of the row's diagonal action on span{1,...,z^N} in the
/// Gram metric: factor G = L L*, then power-iterate L* D L*^{-1} with the
/// normalized all-ones start vector, relative tolerance 1e-8, cap 10000.
/// a0 > 0 fills the lemma_bound field of the result.
OpNormEstimate truncated_opnorm(const HbContext& ctx, const SummabilityRow& row, int gram_size,
                                double a0 = 0.0);

std::vector<OpNormEstimate> opnorm_profile(const HbContext& ctx, const TriMatrixSpec& spec,
                                           const std::vector<int>& n_list, int gram_size,
                                           double a0 = 0.0);

struct PolynomialGrowth {
    double rho = 0.0;  // ||z^n|| ~ n^rho
};

struct StretchedExponential {
    double coeff = 0.0;  // ||z^n|| ~ exp(coeff * n^delta)
    double delta = 0.0;
};

struct BoundedNorms {};

using FittedModel = std::variant<PolynomialGrowth, StretchedExponential, BoundedNorms>;

/// Verdict on the three divergence hypotheses for the Cesaro family at a
/// given alpha, decided analytically on the fitted growth model.
struct DivergenceVerdict {
    bool case_i = false;    // sup |gamma_nn| ||z^n|| infinite
    bool case_ii = false;   // sum |gamma_nn|^{-2} ||z^n||^{-2} finite
    bool case_iii = false;  // sum |gamma_nn|^{-1} ||z^n||^{-1} finite
    FittedModel fitted_model;
    double fit_residual = 0.0;
};

/// Fits log||z^n|| over n in [T/10, T] against rho*log n + const and
/// coeff*n^delta + const, picks the lower-residual model (ties toward
/// polynomial growth), and evaluates the three hypotheses on it.
/// norms[n] = ||z^n||; requires at least 101 entries.
DivergenceVerdict classify(const std::vector<double>& norms, double alpha);

const char* model_name(const FittedModel& m);

}  // namespace hblab
