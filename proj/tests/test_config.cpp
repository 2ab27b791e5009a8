#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "mcfet/config.hpp"
#include "mcfet/constants.hpp"
#include "mcfet/params.hpp"

using namespace mcfet;

namespace {

std::string write_temp(const std::string& text) {
    static int counter = 0;
    std::string path = "mcfet_cfg_test_" + std::to_string(counter++) + ".cfg";
    std::ofstream out(path);
    out << text;
    return path;
}

}  // namespace

TEST_CASE("config text round-trips every parameter") {
    SystemParams p = default_params();
    p.channel.d = 123e-6;
    p.transducer.c_ion = 77.0;
    p.noise.flatband_literal = false;

    std::string path = write_temp(config_text(p));
    SystemParams q = load_config(path);
    std::remove(path.c_str());

    CHECK(q.channel.d == doctest::Approx(123e-6).epsilon(1e-15));
    CHECK(q.transducer.c_ion == doctest::Approx(77.0).epsilon(1e-15));
    CHECK(q.noise.flatband_literal == false);
    CHECK(param_hash(q) == param_hash(p));
}

TEST_CASE("template text parses and reproduces the defaults") {
    std::string path = write_temp(config_template_text());
    ConfigLoad load = load_config_detailed(path);
    std::remove(path.c_str());
    CHECK(param_hash(load.params) == param_hash(default_params()));
    // the template spells out every known key
    CHECK(load.keys_set.size() == known_keys().size());
}

TEST_CASE("unit conversions on load") {
    SUBCASE("lengths") {
        std::string path = write_temp(
            "channel.d = 250 um\n"
            "transducer.t_ox = 2 nm\n"
            "transducer.r_R = 1e-8 m\n");
        SystemParams p = load_config(path);
        std::remove(path.c_str());
        CHECK(p.channel.d == doctest::Approx(250e-6).epsilon(1e-15));
        CHECK(p.transducer.t_ox == doctest::Approx(2e-9).epsilon(1e-15));
        CHECK(p.transducer.r_R == doctest::Approx(1e-8).epsilon(1e-15));
    }
    SUBCASE("mobility in cm2/Vs") {
        std::string path = write_temp("transducer.mu_p = 500 cm2/Vs\n");
        SystemParams p = load_config(path);
        std::remove(path.c_str());
        CHECK(p.transducer.mu_p == doctest::Approx(0.05).epsilon(1e-15));
    }
    SUBCASE("trap density in 1/eVcm3") {
        std::string path = write_temp("noise.N_ot = 1e16 1/eVcm3\n");
        SystemParams p = load_config(path);
        std::remove(path.c_str());
        CHECK(p.noise.N_ot == doctest::Approx(1e16 * per_eV_cm3).epsilon(1e-15));
    }
    SUBCASE("carrier density in 1/cm3") {
        std::string path = write_temp("transducer.p = 1e18 1/cm3\n");
        SystemParams p = load_config(path);
        std::remove(path.c_str());
        CHECK(p.transducer.p == doctest::Approx(1e24).epsilon(1e-15));
    }
    SUBCASE("permittivity in eps0 multiples") {
        std::string path = write_temp("transducer.eps_M = 78 eps0\n");
        SystemParams p = load_config(path);
        std::remove(path.c_str());
        CHECK(p.transducer.eps_M == doctest::Approx(78.0 * phys.eps0).epsilon(1e-15));
    }
    SUBCASE("millimolar equals mol/m^3") {
        std::string path = write_temp("transducer.c_ion = 30 mM\n");
        SystemParams p = load_config(path);
        std::remove(path.c_str());
        CHECK(p.transducer.c_ion == doctest::Approx(30.0).epsilon(1e-15));
    }
}

TEST_CASE("boolean key accepts the usual spellings") {
    for (const char* token : {"true", "1"}) {
        std::string path =
            write_temp(std::string("noise.flatband_literal = ") + token + "\n");
        CHECK(load_config(path).noise.flatband_literal == true);
        std::remove(path.c_str());
    }
    for (const char* token : {"false", "0"}) {
        std::string path =
            write_temp(std::string("noise.flatband_literal = ") + token + "\n");
        CHECK(load_config(path).noise.flatband_literal == false);
        std::remove(path.c_str());
    }
}

TEST_CASE("config errors carry kind and line") {
    SUBCASE("missing file") {
        try {
            load_config("definitely_not_here.cfg");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(e.kind == ConfigError::Kind::io);
        }
    }
    SUBCASE("unknown key") {
        std::string path = write_temp("# comment\nnoise.bogus = 3\n");
        try {
            load_config(path);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(e.kind == ConfigError::Kind::unknown_key);
            CHECK(e.line == 2);
            CHECK(e.key == "noise.bogus");
        }
        std::remove(path.c_str());
    }
    SUBCASE("bad unit") {
        std::string path = write_temp("channel.d = 250 furlongs\n");
        try {
            load_config(path);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(e.kind == ConfigError::Kind::bad_unit);
        }
        std::remove(path.c_str());
    }
    SUBCASE("unparseable value") {
        std::string path = write_temp("channel.d = squid\n");
        try {
            load_config(path);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(e.kind == ConfigError::Kind::bad_value);
        }
        std::remove(path.c_str());
    }
    SUBCASE("missing equals sign") {
        std::string path = write_temp("channel.d 250 um\n");
        CHECK_THROWS_AS(load_config(path), ConfigError);
        std::remove(path.c_str());
    }
}

TEST_CASE("apply_override mirrors the file syntax") {
    SystemParams p = default_params();
    apply_override(p, "channel.d=300 um");
    CHECK(p.channel.d == doctest::Approx(300e-6).epsilon(1e-15));
    apply_override(p, "noise.flatband_literal=false");
    CHECK(p.noise.flatband_literal == false);
    CHECK_THROWS_AS(apply_override(p, "nope=1"), ConfigError);
}

TEST_CASE("param hash is stable and sensitive") {
    SystemParams p = default_params();
    std::uint64_t h0 = param_hash(p);
    CHECK(param_hash(p) == h0);

    SystemParams q = p;
    q.channel.d *= 1.0 + 1e-12;
    CHECK(param_hash(q) != h0);

    q = p;
    q.noise.flatband_literal = false;
    CHECK(param_hash(q) != h0);

    CHECK(param_hash_hex(p).size() == 16);
}

TEST_CASE("save_config writes a file load_config accepts") {
    SystemParams p = default_params();
    p.receptor.Ne = 7.0;
    std::string path = "mcfet_cfg_roundtrip.cfg";
    save_config(p, path);
    SystemParams q = load_config(path);
    std::remove(path.c_str());
    CHECK(q.receptor.Ne == doctest::Approx(7.0).epsilon(1e-15));
    CHECK(param_hash(q) == param_hash(p));
}

TEST_CASE("load_config_detailed reports which keys were present") {
    std::string path = write_temp("channel.d = 100 um\nreceptor.Ne = 5\n");
    ConfigLoad load = load_config_detailed(path);
    std::remove(path.c_str());
    auto has = [&](const char* key) {
        return std::find(load.keys_set.begin(), load.keys_set.end(), key) !=
               load.keys_set.end();
    };
    CHECK(has("channel.d"));
    CHECK(has("receptor.Ne"));
    CHECK_FALSE(has("channel.D"));
    // untouched keys keep their defaults
    CHECK(load.params.channel.D == doctest::Approx(1e-10).epsilon(1e-15));
}
