#include <doctest.h>

#include <cmath>
#include <random>

#include "hblab/space.hpp"

using namespace hblab;

namespace {

HbContext dirichlet_ctx(Complex zeta, int trunc) {
    return HbContext(phi_coeffs(PhiSpec::local_dirichlet(zeta), trunc));
}

HbPolynomial random_poly(int degree, std::mt19937_64& rng) {
    const auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<Complex> c(static_cast<size_t>(degree) + 1);
    for (auto& x : c) x = Complex(2.0 * unit() - 1.0, 2.0 * unit() - 1.0);
    return HbPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("monomial norms") {
    SUBCASE("local dirichlet: ||z^n||^2 = n + 1") {
        const auto ctx = dirichlet_ctx({1, 0}, 64);
        CHECK(monomial_norm_sq(ctx, 3) == doctest::Approx(4.0).epsilon(1e-14));
        for (int n = 0; n <= 64; ++n)
            CHECK(monomial_norm_sq(ctx, n) == doctest::Approx(n + 1.0).epsilon(1e-13));
    }
    SUBCASE("zero symbol: Hardy-space norms") {
        const HbContext ctx(phi_coeffs(PhiSpec::zero(), 16));
        for (int n = 0; n <= 16; ++n) CHECK(monomial_norm_sq(ctx, n) == 1.0);
    }
    SUBCASE("exponential symbol at n = 1: 1 + e^2 + e^2/4") {
        const HbContext ctx(phi_coeffs(PhiSpec::exp_singular(1.0, 0.5), 8));
        const double e2 = std::exp(2.0);
        CHECK(monomial_norm_sq(ctx, 1) == doctest::Approx(1.0 + e2 + e2 / 4.0).epsilon(1e-12));
    }
    SUBCASE("norms are nondecreasing") {
        const HbContext ctx(phi_coeffs(PhiSpec::rational_pole(1, 2), 256));
        for (int n = 1; n <= 256; ++n)
            CHECK(monomial_norm_sq(ctx, n) >= monomial_norm_sq(ctx, n - 1));
    }
    SUBCASE("out of range") {
        const auto ctx = dirichlet_ctx({1, 0}, 8);
        CHECK_THROWS_AS(monomial_norm_sq(ctx, 9), std::out_of_range);
        CHECK_THROWS_AS(monomial_norm_sq(ctx, -1), std::out_of_range);
    }
}

TEST_CASE("plus part") {
    SUBCASE("monomial: q_k = conj(c_{n-k})") {
        const auto ctx = dirichlet_ctx(std::polar(1.0, 0.7), 16);
        const int n = 9;
        const auto q = plus_part(ctx, HbPolynomial::monomial(n));
        for (int k = 0; k <= n; ++k) {
            const Complex want = std::conj(ctx.symbol()[n - k]);
            CHECK(std::abs(q.at(k) - want) <= 1e-14);
        }
    }
    SUBCASE("1 + z in the local Dirichlet context") {
        const auto ctx = dirichlet_ctx({1, 0}, 8);
        const auto q = plus_part(ctx, HbPolynomial({{1, 0}, {1, 0}}));
        CHECK(q.at(0) == Complex(1, 0));
        CHECK(q.at(1) == Complex(0, 0));
    }
    SUBCASE("zero symbol annihilates") {
        const HbContext ctx(phi_coeffs(PhiSpec::zero(), 8));
        const auto q = plus_part(ctx, HbPolynomial({{1, 0}, {2, 0}, {3, 0}}));
        for (int k = 0; k <= q.degree(); ++k) CHECK(q.at(k) == Complex(0, 0));
    }
}

TEST_CASE("inner products") {
    const auto ctx = dirichlet_ctx({1, 0}, 64);

    SUBCASE("diagonal reproduces the monomial norm formula") {
        for (int n = 0; n <= 64; n += 7) {
            const auto zn = HbPolynomial::monomial(n);
            CHECK(hb_inner(ctx, zn, zn).real() ==
                  doctest::Approx(monomial_norm_sq(ctx, n)).epsilon(1e-13));
        }
    }
    SUBCASE("<z, z^2> = 1") {
        const Complex v = hb_inner(ctx, HbPolynomial::monomial(1), HbPolynomial::monomial(2));
        CHECK(std::abs(v - Complex(1, 0)) <= 1e-14);
    }
    SUBCASE("||1 + z||^2 = 3") {
        const HbPolynomial p({{1, 0}, {1, 0}});
        CHECK(hb_inner(ctx, p, p).real() == doctest::Approx(3.0).epsilon(1e-14));
    }
    SUBCASE("conjugate symmetry and linearity") {
        std::mt19937_64 rng(31);
        const auto p = random_poly(12, rng);
        const auto q = random_poly(9, rng);
        const auto r = random_poly(12, rng);
        const Complex pq = hb_inner(ctx, p, q);
        CHECK(std::abs(pq - std::conj(hb_inner(ctx, q, p))) <= 1e-13);
        const Complex sum = hb_inner(ctx, p + r, q);
        CHECK(std::abs(sum - pq - hb_inner(ctx, r, q)) <= 1e-12);
    }
}

TEST_CASE("gram matrices") {
    SUBCASE("zero symbol gives the identity") {
        const HbContext ctx(phi_coeffs(PhiSpec::zero(), 16));
        const auto g = gram(ctx, 12);
        CHECK((g - Eigen::MatrixXcd::Identity(13, 13)).norm() == 0.0);
    }
    SUBCASE("local dirichlet 3x3 block") {
        const auto ctx = dirichlet_ctx({1, 0}, 8);
        const auto g = gram(ctx, 2);
        CHECK(g(0, 0).real() == doctest::Approx(1.0));
        CHECK(g(1, 1).real() == doctest::Approx(2.0));
        CHECK(g(2, 2).real() == doctest::Approx(3.0));
        CHECK(std::abs(g(1, 2) - Complex(1, 0)) <= 1e-14);
        CHECK(std::abs(g(0, 1)) <= 1e-14);
        CHECK(std::abs(g(0, 2)) <= 1e-14);
    }
    SUBCASE("entries agree with the plus-part inner product") {
        const auto ctx = dirichlet_ctx(std::polar(1.0, 2.2), 32);
        const auto g = gram(ctx, 24);
        for (int m = 0; m <= 24; m += 5)
            for (int n = 0; n <= 24; n += 7) {
                const Complex want =
                    hb_inner(ctx, HbPolynomial::monomial(m), HbPolynomial::monomial(n));
                CHECK(std::abs(g(m, n) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
            }
    }
    SUBCASE("hermitian and positive definite") {
        const HbContext ctx(phi_coeffs(PhiSpec::exp_singular(1.0, 0.5), 64));
        const auto g = gram(ctx, 48);
        CHECK((g - g.adjoint()).norm() == 0.0);
        Eigen::LLT<Eigen::MatrixXcd> llt(g);
        CHECK(llt.info() == Eigen::Success);
    }
    SUBCASE("diagonal equals the cumulative norm formula") {
        const HbContext ctx(phi_coeffs(PhiSpec::rational_pole(0, 3), 128));
        const auto g = gram(ctx, 96);
        for (int n = 0; n <= 96; ++n)
            CHECK(g(n, n).real() ==
                  doctest::Approx(monomial_norm_sq(ctx, n)).epsilon(1e-12));
    }
}

TEST_CASE("reproducing kernel") {
    SUBCASE("zero symbol gives the Szego kernel") {
        PythagoreanPair triv;
        triv.a = CoeffSeries({{Complex(1, 0)}});
        triv.a.coeffs.resize(33, Complex(0, 0));
        triv.b = CoeffSeries(32);
        triv.a0 = 1.0;
        const Complex w(0.4, -0.3);
        const auto k = kernel_poly(triv, w, 32);
        Complex expect(1.0, 0.0);
        for (int j = 0; j <= 32; ++j) {
            CHECK(std::abs(k.at(j) - expect) <= 1e-14);
            expect *= std::conj(w);
        }
    }
    SUBCASE("kernel at the origin is constant when b(0) = 0") {
        const auto pair = pair_from_phi(PhiSpec::local_dirichlet({1, 0}), 1 << 12, 64);
        const auto k = kernel_poly(pair, Complex(0, 0), 32);
        CHECK(std::abs(k.at(0) - Complex(1, 0)) <= 1e-10);
        for (int j = 1; j <= 32; ++j) CHECK(std::abs(k.at(j)) <= 1e-12);
    }
    SUBCASE("rejects points outside the disk and short pairs") {
        const auto pair = pair_from_phi(PhiSpec::local_dirichlet({1, 0}), 1 << 12, 64);
        CHECK_THROWS_AS(kernel_poly(pair, Complex(1.0, 0.0), 16), std::invalid_argument);
        CHECK_THROWS_AS(kernel_poly(pair, Complex(0.5, 0.0), 65), std::invalid_argument);
    }
    SUBCASE("reproduces point evaluations") {
        const auto pair = pair_from_phi(PhiSpec::local_dirichlet({1, 0}), 1 << 14, 512);
        const HbContext ctx(phi_coeffs(PhiSpec::local_dirichlet({1, 0}), 512));
        std::mt19937_64 rng(47);
        const Complex points[] = {{0.5, 0.0}, {-0.3, 0.6}, {0.0, 0.7}, {-0.79, 0.0}};
        for (int rep = 0; rep < 10; ++rep) {
            const auto p = random_poly(50, rng);
            const double norm_p = hb_norm(ctx, p);
            for (const Complex& w : points) {
                const int t = kernel_truncation(w);
                REQUIRE(t <= 512);
                const auto k = kernel_poly(pair, w, t);
                const Complex got = hb_inner(ctx, p, k);
                CHECK(std::abs(got - p.eval(w)) <= 1e-6 * norm_p);
            }
        }
    }
}

TEST_CASE("multiplication by a contracts the Hardy norm into H(b)") {
    // ||a h||_{H(b)} <= ||h||_{H^2}; the truncation tail of a*h is
    // geometrically small here, covered by the 1e-8 allowance.
    const int t = 1024;
    const auto pair = pair_from_phi(PhiSpec::local_dirichlet({1, 0}), 1 << 14, t);
    const HbContext ctx(phi_coeffs(PhiSpec::local_dirichlet({1, 0}), t));
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 10; ++rep) {
        const auto h = random_poly(30, rng);
        CoeffSeries hs(t);
        for (int k = 0; k <= h.degree(); ++k) hs.coeffs[k] = h.coeffs[k];
        const CoeffSeries ah = mul(pair.a, hs);
        std::vector<Complex> coeffs(ah.coeffs.size());
        for (int k = 0; k <= ah.trunc(); ++k) coeffs[k] = ah.at(k);
        const HbPolynomial ahp(std::move(coeffs));

        double h2 = 0.0;
        for (const auto& c : h.coeffs) h2 += std::norm(c);
        CHECK(hb_norm(ctx, ahp) <= std::sqrt(h2) + 1e-8);
    }
}
