#include "doctest.h"

#include <cmath>

#include "mcfet/constants.hpp"
#include "mcfet/params.hpp"

using namespace mcfet;

TEST_CASE("default parameter set is self-consistent") {
    SystemParams p = default_params();

    CHECK(p.channel.d == doctest::Approx(250e-6));
    CHECK(p.channel.Ntx_min == doctest::Approx(1e8));
    CHECK(p.channel.Ntx_max == doctest::Approx(1e9));
    CHECK(p.receptor.k_m1 == doctest::Approx(10.0));
    CHECK(p.transducer.T == doctest::Approx(300.0));
    CHECK(p.noise.flatband_literal == true);

    auto v = validate(p);
    CHECK_FALSE(has_errors(v));
    // defaults sit just above the N_r >= 1000 comfort threshold, no warning
    CHECK(v.empty());
}

TEST_CASE("derived receptor count on the nanowire strip") {
    SystemParams p = default_params();
    // rho_SR * pi * r_R * l_R with the default geometry
    CHECK(p.N_r() == doctest::Approx(1256.6370614359173).epsilon(1e-14));

    p.receptor.rho_SR *= 2.0;
    CHECK(p.N_r() == doctest::Approx(2513.2741228718346).epsilon(1e-14));
}

TEST_CASE("dissociation constant helper") {
    SystemParams p = default_params();
    CHECK(p.receptor.K_D() == doctest::Approx(10.0 / 2e-18).epsilon(1e-15));
}

TEST_CASE("validate flags nonpositive fields by name") {
    SystemParams p = default_params();
    p.channel.d = 0.0;
    auto v = validate(p);
    REQUIRE(has_errors(v));
    bool found = false;
    for (const auto& viol : v)
        if (viol.field == std::string("channel.d")) found = true;
    CHECK(found);
}

TEST_CASE("validate rejects inverted transmit range") {
    SystemParams p = default_params();
    p.channel.Ntx_min = 2e9;  // above Ntx_max
    auto v = validate(p);
    CHECK(has_errors(v));
}

TEST_CASE("validate enforces linear-region gate drive") {
    SystemParams p = default_params();
    p.transducer.V_TH = 0.5;  // |V_TH| exceeds V_SG = 0.4
    auto v = validate(p);
    REQUIRE(has_errors(v));
    bool found = false;
    for (const auto& viol : v)
        if (viol.field == std::string("transducer.V_SG")) found = true;
    CHECK(found);
}

TEST_CASE("validate enforces f_H above 1/T_obs") {
    SystemParams p = default_params();
    p.noise.f_H = 1e-9;  // below f_L ~ 3.18e-8 Hz
    auto v = validate(p);
    CHECK(has_errors(v));
}

TEST_CASE("small receptor count is a warning, not an error") {
    SystemParams p = default_params();
    p.receptor.rho_SR = 1e15;  // N_r ~ 31
    auto v = validate(p);
    CHECK_FALSE(has_errors(v));
    bool warned = false;
    for (const auto& viol : v)
        if (viol.warning) warned = true;
    CHECK(warned);

    p.receptor.rho_SR = 1e12;  // N_r < 1, unusable
    v = validate(p);
    CHECK(has_errors(v));
}

TEST_CASE("physical constants match CODATA 2018") {
    CHECK(phys.q == doctest::Approx(1.602176634e-19).epsilon(1e-15));
    CHECK(phys.k_B == doctest::Approx(1.380649e-23).epsilon(1e-15));
    CHECK(phys.N_A == doctest::Approx(6.02214076e23).epsilon(1e-15));
    CHECK(phys.eps0 == doctest::Approx(8.8541878128e-12).epsilon(1e-15));
    // 1 per eV per cm^3 in SI trap-density units
    CHECK(per_eV_cm3 == doctest::Approx(1e6 / 1.602176634e-19).epsilon(1e-15));
}
