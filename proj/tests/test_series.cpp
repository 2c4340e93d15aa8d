#include <doctest.h>

#include <cmath>
#include <random>

#include "hblab/series.hpp"

using namespace hblab;

namespace {

CoeffSeries from_reals(std::initializer_list<double> vals) {
    std::vector<Complex> c;
    for (double v : vals) c.emplace_back(v, 0.0);
    return CoeffSeries(std::move(c));
}

CoeffSeries random_series(int trunc, std::mt19937_64& rng) {
    const auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    CoeffSeries s(trunc);
    for (auto& c : s.coeffs) c = Complex(2.0 * unit() - 1.0, 2.0 * unit() - 1.0);
    return s;
}

double max_rel_diff(const CoeffSeries& a, const CoeffSeries& b) {
    double worst = 0.0;
    const int t = std::min(a.trunc(), b.trunc());
    for (int k = 0; k <= t; ++k) {
        const double denom = std::max({std::abs(a.at(k)), std::abs(b.at(k)), 1e-30});
        worst = std::max(worst, std::abs(a.at(k) - b.at(k)) / denom);
    }
    return worst;
}

}  // namespace

TEST_CASE("cauchy product identities") {
    const auto one_plus = from_reals({1, 1});
    const auto one_minus = from_reals({1, -1});

    SUBCASE("(1+z)(1-z) = 1 - z^2") {
        const auto p = mul(one_plus, one_minus);
        CHECK(p.at(0) == Complex(1, 0));
        CHECK(p.at(1) == Complex(0, 0));
    }

    SUBCASE("multiplication by 1 is the identity") {
        std::mt19937_64 rng(7);
        const auto s = random_series(12, rng);
        const auto one = from_reals({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
        CHECK(max_rel_diff(mul(one, s), s) == 0.0);
    }

    SUBCASE("(1-z) telescopes the geometric series") {
        CoeffSeries geo(16);
        for (auto& c : geo.coeffs) c = 1.0;
        CoeffSeries lin(16);  // 1 - z padded to the same truncation
        lin.coeffs[0] = 1.0;
        lin.coeffs[1] = -1.0;
        const auto p = mul(lin, geo);
        CHECK(p.at(0) == Complex(1, 0));
        for (int k = 1; k <= 16; ++k) CHECK(p.at(k) == Complex(0, 0));
    }
}

TEST_CASE("cauchy product is commutative and associative") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const auto a = random_series(20, rng);
        const auto b = random_series(20, rng);
        const auto c = random_series(20, rng);
        CHECK(max_rel_diff(mul(a, b), mul(b, a)) == 0.0);
        CHECK(max_rel_diff(mul(mul(a, b), c), mul(a, mul(b, c))) <= 1e-12);
    }
}

TEST_CASE("binomial series") {
    SUBCASE("exponent 1 gives the geometric series") {
        const auto s = binomial_series(1.0, 8);
        for (int j = 0; j <= 8; ++j) CHECK(s.at(j) == Complex(1, 0));
    }
    SUBCASE("exponent 2 gives j+1") {
        const auto s = binomial_series(2.0, 8);
        for (int j = 0; j <= 8; ++j) CHECK(s.at(j).real() == doctest::Approx(j + 1.0));
    }
    SUBCASE("exponent 1/2 running product") {
        // by hand: j=1 -> 1/2, j=2 -> (1/2)(3/2)/2 = 3/8
        const auto s = binomial_series(0.5, 4);
        CHECK(s.at(1).real() == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(s.at(2).real() == doctest::Approx(0.375).epsilon(1e-14));
    }
    SUBCASE("rejects nonpositive exponents") {
        CHECK_THROWS_AS(binomial_series(0.0, 4), std::invalid_argument);
        CHECK_THROWS_AS(binomial_series(-1.5, 4), std::invalid_argument);
    }
}

TEST_CASE("series exponential") {
    SUBCASE("exp(z) reproduces 1/n!") {
        CoeffSeries g(12);
        g.coeffs[1] = 1.0;
        const auto f = exp_series(g);
        double fact = 1.0;
        for (int n = 0; n <= 12; ++n) {
            if (n > 0) fact *= n;
            CHECK(f.at(n).real() == doctest::Approx(1.0 / fact).epsilon(1e-13));
        }
    }
    SUBCASE("exp(0) = 1") {
        const auto f = exp_series(CoeffSeries(6));
        CHECK(f.at(0) == Complex(1, 0));
        for (int n = 1; n <= 6; ++n) CHECK(f.at(n) == Complex(0, 0));
    }
    SUBCASE("g = (1-z)^{-1/2}: first two coefficients by differentiation") {
        // f = exp(beta (1-z)^{-gamma}) with beta=1, gamma=1/2:
        // f(0) = e, f'(0) = beta*gamma*e.
        const auto f = exp_series(binomial_series(0.5, 4));
        const double e = std::exp(1.0);
        CHECK(f.at(0).real() == doctest::Approx(e).epsilon(1e-13));
        CHECK(f.at(1).real() == doctest::Approx(0.5 * e).epsilon(1e-13));
    }
}

TEST_CASE("exponential is a homomorphism: exp(g+h) = exp(g) exp(h)") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 10; ++rep) {
        const auto g = random_series(20, rng);
        const auto h = random_series(20, rng);
        const auto lhs = exp_series(add(g, h));
        const auto rhs = mul(exp_series(g), exp_series(h));
        CHECK(max_rel_diff(lhs, rhs) <= 1e-10);
    }
}

TEST_CASE("exp-singular coefficients are real positive and scale-invariant") {
    const auto spec = PhiSpec::exp_singular(1.0, 0.5);
    auto c = phi_coeffs(spec, 600);
    for (int j = 0; j <= 600; ++j) {
        CHECK(c.coeffs[j].imag() == 0.0);
        CHECK(c.coeffs[j].real() > 0.0);
    }
    // materialized values survive renormalization
    const double before = c.log_abs(600);
    auto d = c;
    d.normalize_scale();
    CHECK(d.log_abs(600) == doctest::Approx(before).epsilon(1e-14));
    CHECK(std::abs(d.at(3) - c.at(3)) <= 1e-12 * std::abs(c.at(3)));
}

TEST_CASE("scale exponent guards against overflow") {
    // beta large enough that raw coefficients would overflow a double
    const auto spec = PhiSpec::exp_singular(100.0, 0.9);
    const auto c = phi_coeffs(spec, 2000);
    for (int j = 0; j <= 2000; ++j) {
        CHECK(std::isfinite(c.coeffs[j].real()));
        CHECK(std::isfinite(c.coeffs[j].imag()));
    }
    CHECK(std::isfinite(c.log_abs(2000)));
    CHECK(c.log_abs(2000) > 700.0);  // beyond plain double range
}

TEST_CASE("phi coefficient families") {
    SUBCASE("local dirichlet at zeta = 1") {
        const auto c = phi_coeffs(PhiSpec::local_dirichlet({1, 0}), 4);
        CHECK(c.at(0) == Complex(0, 0));
        for (int j = 1; j <= 4; ++j) CHECK(c.at(j) == Complex(1, 0));
    }
    SUBCASE("local dirichlet coefficients are unimodular for any zeta") {
        const auto c = phi_coeffs(PhiSpec::local_dirichlet(std::polar(1.0, 2.2)), 64);
        for (int j = 1; j <= 64; ++j)
            CHECK(std::abs(c.at(j)) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("rational pole M=1, N=2 gives c_j = j") {
        const auto c = phi_coeffs(PhiSpec::rational_pole(1, 2), 4);
        for (int j = 0; j <= 4; ++j) CHECK(c.at(j).real() == doctest::Approx(j));
    }
    SUBCASE("exp singular start matches the hand derivative") {
        const auto c = phi_coeffs(PhiSpec::exp_singular(1.0, 0.5), 1);
        CHECK(c.at(0).real() == doctest::Approx(std::exp(1.0)).epsilon(1e-13));
        CHECK(c.at(1).real() == doctest::Approx(std::exp(1.0) / 2.0).epsilon(1e-13));
    }
    SUBCASE("user rational long division agrees with local dirichlet") {
        // z / (1 - z) is the zeta = 1 symbol
        const auto ur = PhiSpec::user_rational({{0, 0}, {1, 0}}, {{1, 0}, {-1, 0}});
        const auto c = phi_coeffs(ur, 32);
        const auto d = phi_coeffs(PhiSpec::local_dirichlet({1, 0}), 32);
        CHECK(max_rel_diff(c, d) <= 1e-14);
    }
    SUBCASE("zero symbol") {
        const auto c = phi_coeffs(PhiSpec::zero(), 8);
        for (int j = 0; j <= 8; ++j) CHECK(c.at(j) == Complex(0, 0));
    }
    SUBCASE("denominator with vanishing constant term is rejected") {
        CHECK_THROWS_AS(PhiSpec::user_rational({{1, 0}}, {{0, 0}, {1, 0}}),
                        std::invalid_argument);
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(PhiSpec::local_dirichlet({1.1, 0}), std::invalid_argument);
        CHECK_THROWS_AS(PhiSpec::rational_pole(-1, 2), std::invalid_argument);
        CHECK_THROWS_AS(PhiSpec::rational_pole(0, 0), std::invalid_argument);
        CHECK_THROWS_AS(PhiSpec::exp_singular(0.0, 0.5), std::invalid_argument);
        CHECK_THROWS_AS(PhiSpec::exp_singular(1.0, 1.0), std::invalid_argument);
    }
}
