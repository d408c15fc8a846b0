#include "deltaspec/reports.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "deltaspec/symbols.hpp"

namespace deltaspec {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json config_json(const ExperimentConfig& config)
{
    ordered_json j;
    for (const auto& [key, value] : config.resolved()) j[key] = value;
    return j;
}

void append_config_comments(std::ostringstream& os, const ExperimentConfig* config)
{
    if (!config) return;
    for (const auto& [key, value] : config->resolved())
        os << "# " << key << " = " << value << "\n";
}

} // namespace

std::string spectrum_csv(const SingularSpectrum& spectrum, double p,
                         const ExperimentConfig* config)
{
    std::ostringstream os;
    append_config_comments(os, config);
    os << "j,s,mode,mult,jp_s\n";
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        const double j = static_cast<double>(i + 1);
        os << (i + 1) << ',' << num(spectrum.values[i]) << ',' << spectrum.modes[i] << ','
           << spectrum.multiplicities[i] << ',' << num(std::pow(j, p) * spectrum.values[i])
           << "\n";
    }
    return os.str();
}

std::string constants_json(const AsymptoticLaw& law, Kind kind,
                           const ExperimentConfig* config)
{
    ordered_json j;
    j["kind"] = to_string(kind);
    j["n"] = law.n;
    j["C_prime"] = law.C_prime;
    j["C"] = law.C;
    j["exponent"] = law.exponent;
    j["remainder_class"] = to_string(law.remainder_class);
    if (config) j["config"] = config_json(*config);
    return j.dump(2) + "\n";
}

std::string fit_report_json(const FitReport& report, const AsymptoticLaw& reference,
                            const ExperimentConfig* config)
{
    ordered_json j;
    j["exponent_p"] = report.exponent_p;
    j["C_est"] = report.C_est;
    j["C_ref"] = report.C_ref;
    j["relative_error"] = report.relative_error;
    j["remainder_slope"] = report.remainder_slope;
    j["j_min"] = report.j_min;
    j["j_max"] = report.j_max;
    j["n"] = report.n;
    j["used_median_fallback"] = report.used_median_fallback;
    j["verdict"] = ordered_json{{"constant_ok", report.constant_ok},
                                {"remainder_ok", report.remainder_ok}};
    j["reference"] = ordered_json{{"C_prime", reference.C_prime},
                                  {"C", reference.C},
                                  {"exponent", reference.exponent},
                                  {"remainder_class", to_string(reference.remainder_class)}};
    if (config) j["config"] = config_json(*config);
    return j.dump(2) + "\n";
}

std::string symbols_csv(const Hypersurface& surface, const CoefficientField& coeffs,
                        const ExperimentConfig* config)
{
    std::ostringstream os;
    append_config_comments(os, config);
    os << "u,v,xi1,xi2,a_nn,b,c,kappa0,re_kappa_plus,im_kappa_plus,p_gamma_nu,p_nu_gamma,"
          "r_gamma_symbol,r_nu_symbol\n";
    const bool is_surface = surface.ambient_dimension() == 3;
    const int nu = 24, nv = is_surface ? 12 : 1, nxi = is_surface ? 8 : 2;
    for (int i = 0; i < nu; ++i) {
        for (int jv = 0; jv < nv; ++jv) {
            const ParamPoint t{(i + 0.5) / nu * surface.u_max(),
                               is_surface ? (jv + 0.5) / nv * surface.v_max() : 0.0};
            const BoundaryFrame frame = surface.frame_at(t);
            const LocalQuadraticData local = transform_to_frame(coeffs, frame);
            for (int q = 0; q < nxi; ++q) {
                Eigen::Vector2d xi;
                if (is_surface) {
                    const double phi = 2.0 * M_PI * q / nxi;
                    xi = {std::cos(phi), std::sin(phi)};
                } else {
                    xi = {q == 0 ? 1.0 : -1.0, 0.0};
                }
                const LocalSymbolData sym = kappa(local, xi);
                const auto [pgn, png] = dtn_ntd_principal(sym);
                const auto [rg, rn] = composition_principal(sym);
                os << num(t.u) << ',' << num(t.v) << ',' << num(xi[0]) << ',' << num(xi[1])
                   << ',' << num(sym.a_nn) << ',' << num(sym.b) << ',' << num(sym.c) << ','
                   << num(sym.kappa0) << ',' << num(sym.kappa_plus.real()) << ','
                   << num(sym.kappa_plus.imag()) << ',' << num(pgn) << ',' << num(png) << ','
                   << num(rg) << ',' << num(rn) << "\n";
            }
        }
    }
    return os.str();
}

} // namespace deltaspec
