#include "doctest.h"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcfet/capacity.hpp"
#include "mcfet/params.hpp"
#include "mcfet/sweep.hpp"

using namespace mcfet;

TEST_CASE("sweep variable names round-trip") {
    for (SweepVariable v :
         {SweepVariable::Ntx_max, SweepVariable::d, SweepVariable::c_ion,
          SweepVariable::N_ot, SweepVariable::Ntx_min, SweepVariable::N_r_scale,
          SweepVariable::f_H}) {
        SweepVariable back;
        REQUIRE(parse_sweep_variable(to_string(v), back));
        CHECK(back == v);
    }
    SweepVariable out;
    // underscore alias for the receptor-density scale
    CHECK(parse_sweep_variable("N_r_scale", out));
    CHECK(out == SweepVariable::N_r_scale);
    CHECK_FALSE(parse_sweep_variable("bogus", out));
}

TEST_CASE("apply_sweep_value touches exactly the right knob") {
    SystemParams base = default_params();

    SystemParams p = apply_sweep_value(base, SweepVariable::d, 100e-6);
    CHECK(p.channel.d == doctest::Approx(100e-6));
    CHECK(p.channel.Ntx_max == doctest::Approx(base.channel.Ntx_max));

    p = apply_sweep_value(base, SweepVariable::Ntx_max, 5e9);
    CHECK(p.channel.Ntx_max == doctest::Approx(5e9));

    p = apply_sweep_value(base, SweepVariable::c_ion, 150.0);
    CHECK(p.transducer.c_ion == doctest::Approx(150.0));

    p = apply_sweep_value(base, SweepVariable::N_ot, 1e21);
    CHECK(p.noise.N_ot == doctest::Approx(1e21));

    p = apply_sweep_value(base, SweepVariable::f_H, 10.0);
    CHECK(p.noise.f_H == doctest::Approx(10.0));

    // N_r-scale multiplies the base receptor density
    p = apply_sweep_value(base, SweepVariable::N_r_scale, 2.0);
    CHECK(p.receptor.rho_SR == doctest::Approx(2.0 * base.receptor.rho_SR));
}

TEST_CASE("transmit-budget sweep rises then saturates") {
    SweepSpec spec;
    spec.variable = SweepVariable::Ntx_max;
    spec.values = {2e8, 1e9, 1e10, 1e11, 1e12};

    auto rows = run_sweep(spec, default_params());
    REQUIRE(rows.size() == 5);
    for (const auto& r : rows) {
        REQUIRE(r.ok);
        CHECK(r.param_hash.size() == 16);
    }
    CHECK(rows[1].C_bits == doctest::Approx(3.019583817168716).epsilon(1e-12));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].C_bits > rows[i - 1].C_bits);
    }
    // saturation: the last decade buys almost nothing
    CHECK(rows[4].C_bits - rows[3].C_bits < 0.1);
    // P_b endpoints come from the swept parameter set
    CHECK(rows[1].P_b_max == doctest::Approx(0.4851413773533828).epsilon(1e-13));
}

TEST_CASE("distance sweep has an interior optimum") {
    SweepSpec spec;
    spec.variable = SweepVariable::d;
    spec.values.clear();
    for (int i = 0; i < 17; ++i) {
        spec.values.push_back(50e-6 * std::pow(1000.0 / 50.0, i / 16.0));
    }

    auto rows = run_sweep(spec, default_params(), 2);
    REQUIRE(rows.size() == spec.values.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        REQUIRE(rows[i].ok);
        if (rows[i].C_bits > rows[best].C_bits) best = i;
    }
    CHECK(best > 0);
    CHECK(best + 1 < rows.size());
}

TEST_CASE("worker count does not change sweep results") {
    SweepSpec spec;
    spec.variable = SweepVariable::c_ion;
    spec.values = {10.0, 30.0, 100.0, 300.0};

    auto one = run_sweep(spec, default_params(), 1);
    auto four = run_sweep(spec, default_params(), 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].C_bits == four[i].C_bits);
        CHECK(one[i].param_hash == four[i].param_hash);
    }
    // screening monotonically erodes capacity over this range
    for (std::size_t i = 1; i < one.size(); ++i) {
        CHECK(one[i].C_bits < one[i - 1].C_bits);
    }
}

TEST_CASE("bad sweep points are reported, not fatal") {
    SweepSpec spec;
    spec.variable = SweepVariable::Ntx_max;
    // first point is below Ntx_min = 1e8, so that parameter set is invalid
    spec.values = {5e7, 5e8, 5e9};

    auto rows = run_sweep(spec, default_params());
    REQUIRE(rows.size() == 3);
    CHECK_FALSE(rows[0].ok);
    CHECK_FALSE(rows[0].reason.empty());
    CHECK(std::isnan(rows[0].C_bits));
    CHECK(rows[1].ok);
    CHECK(rows[2].ok);
}

TEST_CASE("sweep input validation") {
    SweepSpec spec;
    spec.variable = SweepVariable::d;
    spec.values = {};
    CHECK_THROWS_AS(run_sweep(spec, default_params()), std::invalid_argument);

    spec.values = {1e-4, 3e-4, 2e-4};  // not monotone
    CHECK_THROWS_AS(run_sweep(spec, default_params()), std::invalid_argument);

    spec.values = {1e-4, 1e-4};  // not strictly monotone
    CHECK_THROWS_AS(run_sweep(spec, default_params()), std::invalid_argument);

    // strictly decreasing is fine
    spec.values = {3e-4, 2e-4, 1e-4};
    CHECK(run_sweep(spec, default_params()).size() == 3);
}

TEST_CASE("CSV output is deterministic and unit-annotated") {
    SweepSpec spec;
    spec.variable = SweepVariable::N_ot;
    spec.values = {1e20, 1e21};
    auto rows = run_sweep(spec, default_params());

    std::ostringstream a, b;
    write_sweep_csv(a, spec, rows);
    write_sweep_csv(b, spec, rows);
    CHECK(a.str() == b.str());

    const std::string text = a.str();
    CHECK(text.find("N_ot (1/(J*m^3))") != std::string::npos);
    CHECK(text.find("C (bits)") != std::string::npos);
    CHECK(text.find("sigma2_F (A^2)") != std::string::npos);
    CHECK(text.find("param_hash") != std::string::npos);
    CHECK(text.find('\r') == std::string::npos);

    // one header plus one line per row
    std::size_t lines = 0;
    for (char ch : text)
        if (ch == '\n') ++lines;
    CHECK(lines == rows.size() + 1);

    // failed points serialize their numeric columns as nan
    SweepSpec bad;
    bad.variable = SweepVariable::Ntx_max;
    bad.values = {5e7, 5e8};
    auto bad_rows = run_sweep(bad, default_params());
    std::ostringstream c;
    write_sweep_csv(c, bad, bad_rows);
    CHECK(c.str().find("nan") != std::string::npos);
}
