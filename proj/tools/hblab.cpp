// Experiment runner: norms, operator bounds, divergence classification,
// coefficient asymptotics and Pythagorean pair recovery as CSV tables.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "hblab/experiments.hpp"
#include "hblab/numeric_format.hpp"
#include "hblab/summability.hpp"

namespace {

using hblab::Complex;

struct PhiFlags {
    std::string family = "local-dirichlet";
    std::string zeta = "1";
    int numer_power = 0;
    int pole_order = 1;
    double beta = 1.0;
    double gamma = 0.5;
    std::string num = "0";
    std::string den = "1";
};

std::vector<Complex> parse_complex_list(const std::string& text) {
    std::vector<Complex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Complex z;
        if (!hblab::parse_complex(item, z))
            throw CLI::ValidationError("cannot parse complex value '" + item + "'");
        out.push_back(z);
    }
    return out;
}

hblab::PhiSpec build_phi(const PhiFlags& f) {
    if (f.family == "local-dirichlet") {
        Complex zeta;
        if (!hblab::parse_complex(f.zeta, zeta))
            throw CLI::ValidationError("cannot parse --zeta value '" + f.zeta + "'");
        return hblab::PhiSpec::local_dirichlet(zeta);
    }
    if (f.family == "rational-pole")
        return hblab::PhiSpec::rational_pole(f.numer_power, f.pole_order);
    if (f.family == "exp-singular") return hblab::PhiSpec::exp_singular(f.beta, f.gamma);
    if (f.family == "user-rational")
        return hblab::PhiSpec::user_rational(parse_complex_list(f.num),
                                             parse_complex_list(f.den));
    if (f.family == "zero") return hblab::PhiSpec::zero();
    throw CLI::ValidationError("unknown --phi family '" + f.family + "'");
}

void add_phi_flags(CLI::App* cmd, PhiFlags& f) {
    cmd->add_option("--phi", f.family,
                    "symbol family: local-dirichlet | rational-pole | exp-singular | "
                    "user-rational | zero")
        ->capture_default_str();
    cmd->add_option("--zeta", f.zeta, "unimodular zeta for local-dirichlet (re or re+imi)")
        ->capture_default_str();
    cmd->add_option("--phi-m", f.numer_power, "numerator power M for rational-pole")
        ->capture_default_str();
    cmd->add_option("--phi-n", f.pole_order, "pole order N for rational-pole")
        ->capture_default_str();
    cmd->add_option("--beta", f.beta, "beta for exp-singular")->capture_default_str();
    cmd->add_option("--gamma", f.gamma, "gamma for exp-singular")->capture_default_str();
    cmd->add_option("--num", f.num, "numerator coefficients for user-rational, comma separated")
        ->capture_default_str();
    cmd->add_option("--den", f.den, "denominator coefficients for user-rational")
        ->capture_default_str();
}

// Owns either an output file or stdout.
class OutputStream {
public:
    explicit OutputStream(const std::string& path) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw std::runtime_error("cannot open output path " + path);
    }
    std::ostream& get() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical experiments on norms and summability operators in H(b) spaces"};
    app.require_subcommand(1);

    PhiFlags phi;
    double alpha = 0.0;
    int trunc = 4096;
    int gram_size = 256;
    int grid_size = 1 << 16;
    std::string out_path;
    std::string n_list = "4,16,64";
    double beta = 1.0, gamma = 0.5;
    std::string sample_path;
    int degree = 50;
    std::uint64_t seed = 20230509;

    const auto add_common = [&](CLI::App* cmd, bool with_phi = true) {
        if (with_phi) add_phi_flags(cmd, phi);
        cmd->add_option("--alpha", alpha, "Cesaro order alpha >= 0")->capture_default_str();
        cmd->add_option("--trunc", trunc, "series truncation T")->capture_default_str();
        cmd->add_option("--gram", gram_size, "monomial subspace size N <= T")
            ->capture_default_str();
        cmd->add_option("--grid", grid_size, "boundary samples K (power of two)")
            ->capture_default_str();
        cmd->add_option("--out", out_path, "output CSV path (default: stdout)");
    };

    auto* norms = app.add_subcommand("norms", "monomial norms ||z^n||, n = 0..T");
    add_common(norms);

    auto* opnorm =
        app.add_subcommand("opnorm", "lemma bound vs truncated operator norm per row");
    add_common(opnorm);
    opnorm->add_option("--n-list", n_list, "row indices, comma separated")
        ->capture_default_str();

    auto* classify = app.add_subcommand("classify", "fit norm growth, decide the three cases");
    add_common(classify);

    auto* hayman = app.add_subcommand("hayman", "exact vs asymptotic coefficient growth");
    hayman->add_option("--beta", beta, "beta > 0")->capture_default_str();
    hayman->add_option("--gamma", gamma, "gamma in (0,1)")->capture_default_str();
    hayman->add_option("--n-list", n_list, "coefficient indices, comma separated")
        ->capture_default_str();
    hayman->add_option("--out", out_path, "output CSV path (default: stdout)");

    auto* demo = app.add_subcommand("cesaro-demo", "||sigma_n^alpha(p) - p|| against n");
    add_common(demo);
    demo->add_option("--sample", sample_path, "polynomial sample file (one coefficient per line)");
    demo->add_option("--degree", degree, "degree of the generated sample when no file is given")
        ->capture_default_str();
    demo->add_option("--seed", seed, "seed for the generated sample")->capture_default_str();

    auto* pair = app.add_subcommand("pair", "recover the Pythagorean pair (b, a) from phi");
    add_common(pair);

    CLI11_PARSE(app, argc, argv);

    try {
        OutputStream out(out_path);
        if (norms->parsed() || classify->parsed() || opnorm->parsed() || demo->parsed() ||
            pair->parsed()) {
            hblab::ExperimentConfig cfg(build_phi(phi));
            cfg.alpha = alpha;
            cfg.trunc = trunc;
            cfg.gram_size = gram_size;
            cfg.grid_size = grid_size;

            if (norms->parsed()) {
                hblab::run_norms(cfg, out.get());
            } else if (classify->parsed()) {
                hblab::run_classify(cfg, out.get(), std::cerr);
            } else if (opnorm->parsed()) {
                hblab::run_opnorm(cfg, hblab::parse_index_list(n_list), out.get());
            } else if (pair->parsed()) {
                hblab::run_pair(cfg, out.get());
            } else {
                const hblab::HbPolynomial sample = sample_path.empty()
                                                       ? hblab::random_polynomial(degree, seed)
                                                       : hblab::load_polynomial(sample_path);
                hblab::run_cesaro_demo(cfg, sample, out.get());
            }
        } else if (hayman->parsed()) {
            hblab::run_hayman(beta, gamma, hblab::parse_index_list(n_list), out.get());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
