#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "mcfet/capacity.hpp"
#include "mcfet/errors.hpp"
#include "mcfet/link.hpp"
#include "mcfet/noise.hpp"
#include "mcfet/params.hpp"
#include "mcfet/pdf.hpp"
#include "mcfet/quadrature.hpp"
#include "mcfet/transducer.hpp"

using namespace mcfet;

TEST_CASE("link model agrees with the stage-by-stage functions") {
    SystemParams p = default_params();
    LinkModel link(p);

    CHECK(link.current_per_ligand() ==
          doctest::Approx(3.2924262663125396e-11).epsilon(1e-13));
    CHECK(link.N_r() == doctest::Approx(1256.6370614359173).epsilon(1e-14));

    CHECK(link.mu(1e8) == doctest::Approx(3.5628570190082686e-9).epsilon(1e-13));
    CHECK(link.mu(3e8) == doctest::Approx(9.118171314132322e-9).epsilon(1e-13));
    CHECK(link.mu(1e9) == doctest::Approx(2.0072165936449136e-8).epsilon(1e-13));
    CHECK(link.mu(1e9) == doctest::Approx(mean_output_current(p, 1e9)).epsilon(1e-14));

    CHECK(link.sigma2(1e8) == doctest::Approx(1.0720291576994934e-19).epsilon(1e-13));
    CHECK(link.sigma2(1e9) == doctest::Approx(3.4025011989500155e-19).epsilon(1e-13));
    CHECK(link.sigma(1e9) == doctest::Approx(std::sqrt(link.sigma2(1e9))).epsilon(1e-15));

    SignalStats s = link.stats(3e8);
    CHECK(s.P_b == doctest::Approx(0.2203848953963369).epsilon(1e-14));
    CHECK(s.rho_R == doctest::Approx(3e8 * link.gain().alpha_ch).epsilon(1e-14));
    CHECK(s.mu_Irx == doctest::Approx(link.mu(3e8)).epsilon(1e-15));
    CHECK(s.sigma2_Irx == doctest::Approx(link.sigma2(3e8)).epsilon(1e-15));
    CHECK(s.mu_Nb == doctest::Approx(s.P_b * link.N_r()).epsilon(1e-14));
}

TEST_CASE("mean curve inversion round-trips") {
    LinkModel link(default_params());
    for (double Ntx : {1e8, 3e8, 1e9}) {
        CHECK(link.mu_inverse(link.mu(Ntx)) == doctest::Approx(Ntx).epsilon(1e-12));
    }

    const double saturation = link.current_per_ligand() * link.N_r();
    CHECK_THROWS_AS(link.mu_inverse(0.0), std::domain_error);
    CHECK_THROWS_AS(link.mu_inverse(-1e-9), std::domain_error);
    CHECK_THROWS_AS(link.mu_inverse(saturation), std::domain_error);
    CHECK_THROWS_AS(link.mu_inverse(2.0 * saturation), std::domain_error);
}

TEST_CASE("tabulated pdf mechanics") {
    SUBCASE("uniform density") {
        TabulatedPdf u = uniform_pdf(0.0, 4.0, 65);
        CHECK(u.integral() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(u(2.0) == doctest::Approx(0.25).epsilon(1e-14));
        CHECK(u(-0.1) == 0.0);
        CHECK(u(4.1) == 0.0);
    }
    SUBCASE("linear interpolation between nodes") {
        TabulatedPdf t = tabulate_pdf([](double x) { return x; }, 0.0, 1.0, 11);
        // density x renormalizes to 2x on [0, 1]
        CHECK(t(0.5) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(t(0.75) == doctest::Approx(1.5).epsilon(1e-12));
        CHECK(t(0.05) == doctest::Approx(0.1).epsilon(1e-12));
    }
    SUBCASE("negative samples are clipped before normalization") {
        TabulatedPdf t =
            tabulate_pdf([](double x) { return x - 0.5; }, 0.0, 1.0, 101);
        for (double d : t.density) CHECK(d >= 0.0);
        CHECK(t.integral() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(t(0.25) == 0.0);
    }
    SUBCASE("degenerate inputs throw") {
        CHECK_THROWS_AS(tabulate_pdf([](double) { return 1.0; }, 0.0, 1.0, 1),
                        std::invalid_argument);
        CHECK_THROWS_AS(tabulate_pdf([](double) { return 0.0; }, 0.0, 1.0, 16),
                        NumericError);
    }
    SUBCASE("renormalize records the residual") {
        TabulatedPdf t = uniform_pdf(0.0, 1.0, 33);
        for (double& d : t.density) d *= 2.0;
        renormalize(t);
        CHECK(t.integral() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(t.norm_residual == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("transition density is a normalized Gaussian in y") {
    SystemParams p = default_params();
    LinkModel link(p);
    const double Ntx = 5e8;
    const double mu = link.mu(Ntx);
    const double sig = link.sigma(Ntx);

    CHECK(transition_pdf(mu, Ntx, link) ==
          doctest::Approx(1.0 / (sig * std::sqrt(2.0 * M_PI))).epsilon(1e-13));

    auto res = integrate([&](double y) { return transition_pdf(y, Ntx, link); },
                         mu - 10.0 * sig, mu + 10.0 * sig, 1e-12, 1e-10);
    REQUIRE(res.converged);
    CHECK(res.value == doctest::Approx(1.0).epsilon(1e-9));

    // params overload goes through the same path
    CHECK(transition_pdf(mu, Ntx, p) ==
          doctest::Approx(transition_pdf(mu, Ntx, link)).epsilon(1e-14));
}

TEST_CASE("Gaussian entropy reference points") {
    CHECK(gaussian_entropy(1.0 / (2.0 * M_PI * std::exp(1.0))) ==
          doctest::Approx(0.0).epsilon(1e-14));
    // quadrupling the variance buys exactly one bit
    CHECK(gaussian_entropy(4e-19) - gaussian_entropy(1e-19) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(gaussian_entropy(0.0), std::domain_error);
    CHECK_THROWS_AS(gaussian_entropy(-1.0), std::domain_error);
}

TEST_CASE("closed-form capacity at the default operating point") {
    SystemParams p = default_params();
    CapacityResult r = capacity_closed_form(p);

    CHECK(r.formula_variant == FormulaVariant::corrected);
    CHECK(r.C_bits == doctest::Approx(3.019583817168716).epsilon(1e-12));
    CHECK(r.L == doctest::Approx(0.9999999999941235).epsilon(1e-14));
    CHECK(r.M == doctest::Approx(3.102389944374404e-18).epsilon(1e-13));
    CHECK(r.arcsin_hi == doctest::Approx(-0.029721620988058674).epsilon(1e-12));
    CHECK(r.arcsin_lo == doctest::Approx(-0.9751258627085481).epsilon(1e-13));
    CHECK(r.K_norm == doctest::Approx(8596392377878896.0).epsilon(1e-12));

    // the arcsine bracket never exceeds pi, capping C at the entropy term plus log2(pi)
    const double cap = 3.1005805744428807 + std::log2(M_PI);
    CHECK(r.C_bits < cap);
}

TEST_CASE("literal formula reading fails loudly at the defaults") {
    // its second arcsine argument collapses to L ~ 1, putting the bracket negative
    SystemParams p = default_params();
    CHECK_THROWS_AS(capacity_closed_form(p, FormulaVariant::literal), NumericError);

    LinkModel link(p);
    CHECK(k_norm_closed_form(link, FormulaVariant::literal) < 0.0);
    CHECK(std::string(to_string(FormulaVariant::literal)) == "literal");
    CHECK(std::string(to_string(FormulaVariant::corrected)) == "corrected");
}

TEST_CASE("normalization constant: quadrature against closed form") {
    LinkModel link(default_params());
    const double kq = k_norm_quadrature(link);
    const double kc = k_norm_closed_form(link, FormulaVariant::corrected);
    CHECK(kq == doctest::Approx(8596392377878896.0).epsilon(1e-8));
    CHECK(kc == doctest::Approx(kq).epsilon(1e-8));
}

TEST_CASE("capacity grows with the transmit budget and saturates") {
    SystemParams p = default_params();
    const double c1e9 = capacity_closed_form(p).C_bits;

    p.channel.Ntx_max = 1e10;
    CHECK(capacity_closed_form(p).C_bits ==
          doctest::Approx(4.038728979946726).epsilon(1e-12));

    p.channel.Ntx_max = 1e11;
    const double c1e11 = capacity_closed_form(p).C_bits;
    CHECK(c1e11 == doctest::Approx(4.327466367995337).epsilon(1e-12));

    p.channel.Ntx_max = 1e12;
    const double c1e12 = capacity_closed_form(p).C_bits;
    CHECK(c1e12 == doctest::Approx(4.411381010435893).epsilon(1e-12));

    CHECK(c1e11 > c1e9);
    CHECK(c1e12 - c1e11 < 0.1);  // deep in the saturation regime
}

TEST_CASE("vanishing transmit range drives capacity far below zero") {
    SystemParams p = default_params();
    p.channel.Ntx_max = p.channel.Ntx_min * 1.0001;
    CapacityResult r = capacity_closed_form(p);
    CHECK(std::isfinite(r.C_bits));
    CHECK(r.C_bits < 0.5);
}

TEST_CASE("optimal input density matches its defining formula") {
    SystemParams p = default_params();
    LinkModel link(p);
    TabulatedPdf f = optimal_input_pdf(link, 512);

    CHECK(f.grid.size() == 512);
    CHECK(f.integral() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.lo() == doctest::Approx(1e8));
    CHECK(f.hi() == doctest::Approx(1e9));

    // strictly decreasing: both sigma(x) and the rate factor grow with x
    for (std::size_t i = 1; i < f.grid.size(); ++i) {
        CHECK(f.density[i] < f.density[i - 1]);
    }

    // renormalization preserves density ratios, so check against the formula
    const double c = link.gain().alpha_ch * p.receptor.k1;
    const double km1 = p.receptor.k_m1;
    auto shape = [&](double x) {
        const double rate = c * x + km1;
        return 1.0 / (link.sigma(x) * rate * rate);
    };
    const double expected =
        shape(f.grid.back()) / shape(f.grid.front());
    CHECK(f.density.back() / f.density.front() ==
          doctest::Approx(expected).epsilon(1e-12));

    CHECK_THROWS_AS(optimal_input_pdf(link, 32), std::invalid_argument);
}

TEST_CASE("Taylor mutual information under reference inputs") {
    SystemParams p = default_params();
    LinkModel link(p);

    // uniform input on the full transmit range, dense grid
    TabulatedPdf u = uniform_pdf(p.channel.Ntx_min, p.channel.Ntx_max, 4097);
    CHECK(mi_taylor(u, link) == doctest::Approx(2.8592854270520314).epsilon(1e-12));

    // at the optimal input the Taylor functional reproduces the closed form
    TabulatedPdf f = optimal_input_pdf(link, 4097);
    const double C = capacity_closed_form(p).C_bits;
    CHECK(mi_taylor(f, link) == doctest::Approx(C).epsilon(1e-6));

    // the optimal input beats the uniform one
    CHECK(mi_taylor(f, link) > mi_taylor(u, link));

    // params overload
    CHECK(mi_taylor(u, p) == doctest::Approx(mi_taylor(u, link)).epsilon(1e-14));
}

TEST_CASE("mi_taylor rejects unnormalized inputs") {
    SystemParams p = default_params();
    TabulatedPdf u = uniform_pdf(p.channel.Ntx_min, p.channel.Ntx_max, 129);
    for (double& d : u.density) d *= 1.5;
    CHECK_THROWS_AS(mi_taylor(u, p), std::domain_error);
}
