#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltaspec/config.hpp"
#include "deltaspec/errors.hpp"
#include "deltaspec/reports.hpp"

using namespace deltaspec;

namespace {

const char* kBasic = R"(
# example experiment
[geometry]
shape = circle
R = 1.0

[coefficients]
family = laplacian
m0 = 1.0

[interaction]
kind = delta_vs_free
alpha = 1.0

[solver]
mode_cutoff = 64

[output]
format = csv
)";

} // namespace

TEST_CASE("basic config parses and validates")
{
    const auto cfg = parse_config_text(kBasic);
    CHECK(cfg.shape == "circle");
    CHECK(cfg.R == 1.0);
    CHECK(cfg.n == 2);
    CHECK(cfg.kind == Kind::delta_vs_free);
    CHECK(cfg.alpha.a0 == 1.0);
    CHECK(cfg.alpha.is_constant());
    CHECK(cfg.mode_cutoff == 64);
    CHECK(cfg.radial_geometry() == RadialGeometry::disk);
}

TEST_CASE("overrides are applied before validation")
{
    const auto cfg = parse_config_text(kBasic, {"geometry.R=2.5", "solver.mode_cutoff=10"});
    CHECK(cfg.R == 2.5);
    CHECK(cfg.mode_cutoff == 10);
    CHECK_THROWS_AS(parse_config_text(kBasic, {"geometry.R=-1"}), ConfigError);
    CHECK_THROWS_AS(parse_config_text(kBasic, {"nonsense"}), ConfigError);
}

TEST_CASE("unknown keys and malformed lines are hard errors")
{
    CHECK_THROWS_AS(parse_config_text("[geometry]\nshap = circle\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[geom]\nshape = circle\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("shape = circle\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[geometry\nshape = circle\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[geometry]\nshape circle\n"), ConfigError);
}

TEST_CASE("kind-specific validation")
{
    // missing beta for a delta' kind
    CHECK_THROWS_WITH_AS(
        parse_config_text("[interaction]\nkind = deltaprime_vs_free\n"),
        "beta required and non-zero", ConfigError);
    CHECK_THROWS_AS(
        parse_config_text("[interaction]\nkind = deltaprime_vs_neumann\nbeta = 0.0\n"),
        ConfigError);
    // alpha required for delta
    CHECK_THROWS_AS(parse_config_text("[interaction]\nkind = delta_vs_free\n"), ConfigError);
    // neumann_vs_free needs no strengths
    CHECK_NOTHROW(parse_config_text("[interaction]\nkind = neumann_vs_free\n"));
    // fourier alpha on the sphere is rejected
    CHECK_THROWS_AS(parse_config_text("[geometry]\nshape = sphere\n"
                                      "[interaction]\nkind = delta_vs_free\n"
                                      "alpha = fourier:1,0.5,0\n"),
                    ConfigError);
    // inconsistent dimension
    CHECK_THROWS_AS(parse_config_text("[geometry]\nshape = sphere\nn = 2\n"), ConfigError);
}

TEST_CASE("fourier strength parsing")
{
    const auto cfg = parse_config_text("[interaction]\nkind = delta_vs_free\n"
                                       "alpha = fourier:2.0,1.0,0.0\n");
    CHECK(cfg.alpha.a0 == 2.0);
    REQUIRE(cfg.alpha.cos_coeffs.size() == 1);
    CHECK(cfg.alpha.cos_coeffs[0] == 1.0);
    CHECK(cfg.variable_alpha());
    CHECK(cfg.alpha(0.0) == doctest::Approx(3.0));
}

TEST_CASE("resolved config round-trips through a re-parse")
{
    const auto cfg = parse_config_text(kBasic, {"interaction.alpha=fourier:2,1,0"});
    std::string text;
    for (const auto& [k, v] : cfg.resolved()) {
        const auto dot = k.find('.');
        text += "[" + k.substr(0, dot) + "]\n" + k.substr(dot + 1) + " = " + v + "\n";
    }
    const auto cfg2 = parse_config_text(text);
    CHECK(cfg2.resolved() == cfg.resolved());
}

TEST_CASE("constant family matrices")
{
    const auto cfg = parse_config_text("[geometry]\nshape = circle\n"
                                       "[coefficients]\nfamily = constant_spd\n"
                                       "parameters = 2.0, 0.5, 1.0\n"
                                       "[interaction]\nkind = neumann_vs_free\n");
    const Mat3 m = cfg.coefficients().matrix_at(Vec3::Zero());
    CHECK(m(0, 0) == 2.0);
    CHECK(m(0, 1) == 0.5);
    CHECK(m(1, 1) == 1.0);
    CHECK(m(2, 2) == 1.0);
    CHECK_THROWS_AS(parse_config_text("[coefficients]\nfamily = constant_spd\n"
                                      "parameters = 1,2\n"
                                      "[interaction]\nkind = neumann_vs_free\n"),
                    ConfigError);
}

TEST_CASE("reports embed the resolved config and use fixed columns/keys")
{
    const auto cfg = parse_config_text(kBasic);
    SingularSpectrum spec;
    spec.meta.n = 2;
    spec.values = {2.0, 0.25};
    spec.modes = {0, 1};
    spec.multiplicities = {1, 2};
    const std::string csv = spectrum_csv(spec, 3.0, &cfg);
    CHECK(csv.find("j,s,mode,mult,jp_s\n") != std::string::npos);
    CHECK(csv.find("# geometry.shape = circle") != std::string::npos);
    CHECK(csv.find("1,2,0,1,2\n") != std::string::npos);
    CHECK(csv.find("2,0.25,1,2,2\n") != std::string::npos);

    AsymptoticLaw law;
    law.n = 2;
    law.order_t = 3.0;
    law.exponent = 3.0;
    law.C_prime = 1.26;
    law.C = 2.0;
    const std::string json = constants_json(law, Kind::delta_vs_free, &cfg);
    for (const char* key : {"\"kind\"", "\"n\"", "\"C_prime\"", "\"C\"", "\"exponent\"",
                            "\"remainder_class\"", "\"config\""})
        CHECK(json.find(key) != std::string::npos);

    FitReport rep;
    rep.exponent_p = 3.0;
    rep.C_est = 1.99;
    rep.C_ref = 2.0;
    const std::string fj = fit_report_json(rep, law, &cfg);
    for (const char* key : {"\"exponent_p\"", "\"C_est\"", "\"C_ref\"", "\"relative_error\"",
                            "\"remainder_slope\"", "\"j_min\"", "\"j_max\"", "\"verdict\""})
        CHECK(fj.find(key) != std::string::npos);

    // identical inputs give byte-identical reports
    CHECK(spectrum_csv(spec, 3.0, &cfg) == csv);
    CHECK(constants_json(law, Kind::delta_vs_free, &cfg) == json);
}
