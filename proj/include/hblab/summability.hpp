// Lower-triangular summability methods acting on Taylor coefficients.
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hblab/space.hpp"

namespace hblab {

/// One row (gamma_{n0}, ..., gamma_{nn}) of a triangular method.
struct SummabilityRow {
    int n = 0;
    std::vector<Complex> weights;  // length n+1
};

/// Generalized Cesaro weights gamma_{nk} = binom(n,k)/binom(n+alpha,k),
/// computed by running products; alpha = 0 gives the Taylor partial sum.
SummabilityRow cesaro_row(double alpha, int n);

/// Coefficient k of the result is gamma_{nk} p_k for k <= n, zero beyond.
HbPolynomial apply_row(const SummabilityRow& row, const HbPolynomial& p);

struct CesaroMethod {
    double alpha = 0.0;
};

struct CustomMatrix {
    std::vector<std::vector<Complex>> rows;  // row n has n+1 entries
};

/// Row generator: either the Cesaro family or rows loaded from a file.
class TriMatrixSpec {
public:
    static TriMatrixSpec cesaro(double alpha);
    static TriMatrixSpec custom(CustomMatrix m);

    SummabilityRow row(int n) const;
    const std::variant<CesaroMethod, CustomMatrix>& variant() const { return v_; }

private:
    explicit TriMatrixSpec(std::variant<CesaroMethod, CustomMatrix> v) : v_(std::move(v)) {}
    std::variant<CesaroMethod, CustomMatrix> v_;
};

/// Parse a triangular matrix from a text file: one row per line, entries
/// whitespace-separated, each "re" or "re+imi"; blank lines are skipped.
/// Row n must contain exactly n+1 entries.
TriMatrixSpec load_custom_matrix(const std::string& path);

}  // namespace hblab
