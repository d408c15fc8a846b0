#include "deltaspec/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "deltaspec/errors.hpp"

namespace deltaspec {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& v)
{
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size() || !std::isfinite(x))
            throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': expected a finite number, got '" + v + "'");
    }
}

int parse_int(const std::string& key, const std::string& v)
{
    try {
        std::size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': expected an integer, got '" + v + "'");
    }
}

std::vector<double> parse_number_list(const std::string& key, const std::string& v)
{
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_number(key, item));
    }
    return out;
}

// "fourier:a0,a1,b1,a2,b2,..." or a plain constant
TrigPolynomial parse_strength(const std::string& key, const std::string& v)
{
    if (v.rfind("fourier:", 0) != 0)
        return TrigPolynomial::constant(parse_number(key, v));
    const auto coeffs = parse_number_list(key, v.substr(8));
    if (coeffs.empty())
        throw ConfigError("key '" + key + "': fourier list must contain at least a0");
    TrigPolynomial p;
    p.a0 = coeffs[0];
    for (std::size_t i = 1; i < coeffs.size(); i += 2) {
        p.cos_coeffs.push_back(coeffs[i]);
        p.sin_coeffs.push_back(i + 1 < coeffs.size() ? coeffs[i + 1] : 0.0);
    }
    return p;
}

std::string format_double(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

struct RawConfig {
    std::map<std::string, std::string> kv; // "section.key" -> value
    std::vector<std::string> order;
};

RawConfig tokenize(const std::string& text)
{
    RawConfig raw;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        if (section.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": key outside any section");
        const std::string key = section + "." + trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!raw.kv.count(key)) raw.order.push_back(key);
        raw.kv[key] = value;
    }
    return raw;
}

const char* const kKnownKeys[] = {
    "geometry.shape", "geometry.R", "geometry.a", "geometry.b", "geometry.n",
    "coefficients.family", "coefficients.parameters", "coefficients.m0",
    "interaction.kind", "interaction.alpha", "interaction.beta",
    "solver.mode_cutoff", "solver.guard_band", "solver.quadrature_tol",
    "output.format", "output.path",
};

ExperimentConfig from_raw(const RawConfig& raw)
{
    for (const auto& [key, value] : raw.kv) {
        (void)value;
        if (std::find_if(std::begin(kKnownKeys), std::end(kKnownKeys),
                         [&](const char* k) { return key == k; }) == std::end(kKnownKeys))
            throw ConfigError("unknown key '" + key + "'");
    }
    auto get = [&](const char* key) -> const std::string* {
        const auto it = raw.kv.find(key);
        return it == raw.kv.end() ? nullptr : &it->second;
    };

    ExperimentConfig c;
    if (const auto* v = get("geometry.shape")) c.shape = *v;
    if (c.shape != "circle" && c.shape != "ellipse" && c.shape != "sphere")
        throw ConfigError("geometry.shape must be circle, ellipse or sphere");
    if (const auto* v = get("geometry.R")) c.R = parse_number("geometry.R", *v);
    if (const auto* v = get("geometry.a")) c.a = parse_number("geometry.a", *v);
    if (const auto* v = get("geometry.b")) c.b = parse_number("geometry.b", *v);
    c.n = c.shape == "sphere" ? 3 : 2;
    if (const auto* v = get("geometry.n")) {
        if (parse_int("geometry.n", *v) != c.n)
            throw ConfigError("geometry.n inconsistent with geometry.shape");
    }
    if (c.shape == "ellipse") {
        if (!(c.a > 0.0) || !(c.b > 0.0)) throw ConfigError("ellipse semi-axes must be positive");
    } else if (!(c.R > 0.0)) {
        throw ConfigError("geometry.R must be positive");
    }

    if (const auto* v = get("coefficients.family")) c.family = *v;
    if (c.family != "laplacian" && c.family != "constant_spd" &&
        c.family != "perturbed_identity")
        throw ConfigError("coefficients.family must be laplacian, constant_spd or "
                          "perturbed_identity");
    if (const auto* v = get("coefficients.parameters"))
        c.parameters = parse_number_list("coefficients.parameters", *v);
    if (const auto* v = get("coefficients.m0")) c.m0 = parse_number("coefficients.m0", *v);
    if (!(c.m0 > 0.0)) throw ConfigError("coefficients.m0 must be positive");

    if (const auto* v = get("interaction.kind")) c.kind = kind_from_string(*v);
    if (const auto* v = get("interaction.alpha")) {
        c.alpha = parse_strength("interaction.alpha", *v);
        c.has_alpha = true;
    }
    if (const auto* v = get("interaction.beta")) {
        c.beta = parse_number("interaction.beta", *v);
        c.has_beta = true;
    }
    if (c.kind == Kind::delta_vs_free && !c.has_alpha)
        throw ConfigError("alpha required for delta_vs_free");
    if ((c.kind == Kind::deltaprime_vs_free || c.kind == Kind::deltaprime_vs_neumann) &&
        (!c.has_beta || c.beta == 0.0))
        throw ConfigError("beta required and non-zero");
    if (c.has_alpha && !c.alpha.is_constant() && c.shape != "circle")
        throw ConfigError("variable alpha is supported on the circle only");

    if (const auto* v = get("solver.mode_cutoff"))
        c.mode_cutoff = parse_int("solver.mode_cutoff", *v);
    if (c.mode_cutoff < 1) throw ConfigError("solver.mode_cutoff must be >= 1");
    if (const auto* v = get("solver.guard_band"))
        c.guard_band = parse_int("solver.guard_band", *v);
    if (c.guard_band >= c.mode_cutoff)
        throw ConfigError("solver.guard_band must be smaller than solver.mode_cutoff");
    if (const auto* v = get("solver.quadrature_tol"))
        c.quadrature_tol = parse_number("solver.quadrature_tol", *v);
    if (!(c.quadrature_tol > 0.0) || c.quadrature_tol > 1e-2)
        throw ConfigError("solver.quadrature_tol must lie in (0, 1e-2]");

    if (const auto* v = get("output.format")) c.format = *v;
    if (c.format != "csv" && c.format != "json")
        throw ConfigError("output.format must be csv or json");
    if (const auto* v = get("output.path")) c.path = *v;

    // family parameter shapes
    if (c.family == "perturbed_identity" && c.parameters.size() != 1)
        throw ConfigError("perturbed_identity takes exactly one parameter (eps)");
    if (c.family == "constant_spd") {
        const std::size_t need = c.n == 2 ? 3 : 6;
        if (c.parameters.size() != need)
            throw ConfigError("constant_spd takes the upper triangle of the matrix (" +
                              std::to_string(need) + " numbers for n=" + std::to_string(c.n) + ")");
    }
    return c;
}

} // namespace

Hypersurface ExperimentConfig::surface() const
{
    if (shape == "circle") return Hypersurface::circle(R);
    if (shape == "ellipse") return Hypersurface::ellipse(a, b);
    return Hypersurface::sphere(R);
}

CoefficientField ExperimentConfig::coefficients() const
{
    if (family == "laplacian") return CoefficientField::laplacian(m0);
    if (family == "perturbed_identity")
        return CoefficientField::perturbed_identity(parameters.at(0), m0);
    Mat3 m = Mat3::Identity();
    if (n == 2) {
        m(0, 0) = parameters.at(0);
        m(0, 1) = m(1, 0) = parameters.at(1);
        m(1, 1) = parameters.at(2);
    } else {
        m(0, 0) = parameters.at(0);
        m(0, 1) = m(1, 0) = parameters.at(1);
        m(0, 2) = m(2, 0) = parameters.at(2);
        m(1, 1) = parameters.at(3);
        m(1, 2) = m(2, 1) = parameters.at(4);
        m(2, 2) = parameters.at(5);
    }
    return CoefficientField::constant_spd(m, m0);
}

RadialGeometry ExperimentConfig::radial_geometry() const
{
    if (shape == "circle") return RadialGeometry::disk;
    if (shape == "sphere") return RadialGeometry::ball;
    throw ConfigError("the mode solver supports circle and sphere geometries only");
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::resolved() const
{
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("geometry.shape", shape);
    if (shape == "ellipse") {
        out.emplace_back("geometry.a", format_double(a));
        out.emplace_back("geometry.b", format_double(b));
    } else {
        out.emplace_back("geometry.R", format_double(R));
    }
    out.emplace_back("geometry.n", std::to_string(n));
    out.emplace_back("coefficients.family", family);
    if (!parameters.empty()) {
        std::string list;
        for (std::size_t i = 0; i < parameters.size(); ++i)
            list += (i ? "," : "") + format_double(parameters[i]);
        out.emplace_back("coefficients.parameters", list);
    }
    out.emplace_back("coefficients.m0", format_double(m0));
    out.emplace_back("interaction.kind", to_string(kind));
    if (has_alpha) {
        if (alpha.is_constant()) {
            out.emplace_back("interaction.alpha", format_double(alpha.a0));
        } else {
            std::string list = "fourier:" + format_double(alpha.a0);
            for (std::size_t i = 0; i < alpha.cos_coeffs.size(); ++i) {
                list += "," + format_double(alpha.cos_coeffs[i]);
                list += "," + format_double(i < alpha.sin_coeffs.size() ? alpha.sin_coeffs[i] : 0.0);
            }
            out.emplace_back("interaction.alpha", list);
        }
    }
    if (has_beta) out.emplace_back("interaction.beta", format_double(beta));
    out.emplace_back("solver.mode_cutoff", std::to_string(mode_cutoff));
    out.emplace_back("solver.guard_band", std::to_string(guard_band));
    out.emplace_back("solver.quadrature_tol", format_double(quadrature_tol));
    out.emplace_back("output.format", format);
    if (!path.empty()) out.emplace_back("output.path", path);
    return out;
}

ExperimentConfig parse_config_text(const std::string& text,
                                   const std::vector<std::string>& overrides)
{
    RawConfig raw = tokenize(text);
    for (const auto& ov : overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos)
            throw ConfigError("override '" + ov + "': expected section.key=value");
        const std::string key = trim(ov.substr(0, eq));
        if (key.find('.') == std::string::npos)
            throw ConfigError("override '" + ov + "': key must be section.key");
        if (!raw.kv.count(key)) raw.order.push_back(key);
        raw.kv[key] = trim(ov.substr(eq + 1));
    }
    return from_raw(raw);
}

ExperimentConfig load_config(const std::string& file_path,
                             const std::vector<std::string>& overrides)
{
    std::ifstream in(file_path);
    if (!in) throw ConfigError("cannot open config file '" + file_path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), overrides);
}

} // namespace deltaspec
