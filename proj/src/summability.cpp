#include "hblab/summability.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hblab/numeric_format.hpp"

namespace hblab {

SummabilityRow cesaro_row(double alpha, int n) {
    if (!(alpha >= 0.0)) throw std::invalid_argument("cesaro_row: alpha must be >= 0");
    if (n < 0) throw std::invalid_argument("cesaro_row: negative row index");
    SummabilityRow row;
    row.n = n;
    row.weights.resize(static_cast<size_t>(n) + 1);
    double w = 1.0;
    row.weights[0] = w;
    for (int k = 1; k <= n; ++k) {
        w *= static_cast<double>(n - k + 1) / (n + alpha - k + 1);
        row.weights[k] = w;
    }
    return row;
}

HbPolynomial apply_row(const SummabilityRow& row, const HbPolynomial& p) {
    const int d = std::min(row.n, p.degree());
    std::vector<Complex> out(static_cast<size_t>(std::max(d, 0)) + 1, Complex(0.0, 0.0));
    for (int k = 0; k <= d; ++k) out[k] = row.weights[k] * p.coeffs[k];
    return HbPolynomial(std::move(out));
}

TriMatrixSpec TriMatrixSpec::cesaro(double alpha) {
    if (!(alpha >= 0.0)) throw std::invalid_argument("TriMatrixSpec: alpha must be >= 0");
    return TriMatrixSpec(CesaroMethod{alpha});
}

TriMatrixSpec TriMatrixSpec::custom(CustomMatrix m) {
    for (size_t n = 0; n < m.rows.size(); ++n)
        if (m.rows[n].size() != n + 1)
            throw std::invalid_argument("TriMatrixSpec: row " + std::to_string(n) +
                                        " is not lower-triangular");
    return TriMatrixSpec(std::variant<CesaroMethod, CustomMatrix>(std::move(m)));
}

SummabilityRow TriMatrixSpec::row(int n) const {
    if (const auto* c = std::get_if<CesaroMethod>(&v_)) return cesaro_row(c->alpha, n);
    const auto& m = std::get<CustomMatrix>(v_);
    if (n < 0 || n >= static_cast<int>(m.rows.size()))
        throw std::out_of_range("TriMatrixSpec: row " + std::to_string(n) +
                                " not present in custom matrix");
    return SummabilityRow{n, m.rows[static_cast<size_t>(n)]};
}

TriMatrixSpec load_custom_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_custom_matrix: cannot open " + path);

    CustomMatrix m;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<Complex> row;
        std::string tok;
        while (ls >> tok) {
            Complex z;
            if (!parse_complex(tok, z))
                throw std::runtime_error("load_custom_matrix: line " + std::to_string(lineno) +
                                         ": cannot parse '" + tok + "'");
            row.push_back(z);
        }
        if (row.empty()) continue;  // blank line
        const size_t n = m.rows.size();
        if (row.size() != n + 1)
            throw std::runtime_error("load_custom_matrix: row " + std::to_string(n) +
                                     " has " + std::to_string(row.size()) + " entries, expected " +
                                     std::to_string(n + 1));
        m.rows.push_back(std::move(row));
    }
    return TriMatrixSpec::custom(std::move(m));
}

}  // namespace hblab
