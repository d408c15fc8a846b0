#pragma once

#include <string>
#include <vector>

#include "deltaspec/geometry.hpp"
#include "deltaspec/kinds.hpp"
#include "deltaspec/mode_solver.hpp"

namespace deltaspec {

/// Validated experiment description.  Parsed from sectioned key=value text;
/// unknown sections or keys are hard errors.
struct ExperimentConfig {
    // [geometry]
    std::string shape = "circle"; // circle | ellipse | sphere
    double R = 1.0;
    double a = 1.0, b = 1.0; // ellipse semi-axes
    int n = 2;

    // [coefficients]
    std::string family = "laplacian"; // laplacian | constant_spd | perturbed_identity
    std::vector<double> parameters;
    double m0 = 1.0;

    // [interaction]
    Kind kind = Kind::delta_vs_free;
    bool has_alpha = false;
    TrigPolynomial alpha; // constant or trig polynomial (circle only)
    bool has_beta = false;
    double beta = 0.0;

    // [solver]
    int mode_cutoff = 2000;
    int guard_band = -1; // -1: cutoff/4
    double quadrature_tol = 1e-10;

    // [output]
    std::string format = "csv"; // csv | json
    std::string path;           // empty: stdout

    Hypersurface surface() const;
    CoefficientField coefficients() const;
    RadialGeometry radial_geometry() const; // rejects the ellipse
    bool variable_alpha() const { return has_alpha && !alpha.is_constant(); }

    /// Canonical key=value listing (used to embed the resolved config in
    /// reports and for byte-identical reruns).
    std::vector<std::pair<std::string, std::string>> resolved() const;
};

/// Parses config text / file and applies dotted-key overrides
/// ("geometry.R=2"), then validates.  Throws ConfigError on any problem.
ExperimentConfig parse_config_text(const std::string& text,
                                   const std::vector<std::string>& overrides = {});
ExperimentConfig load_config(const std::string& file_path,
                             const std::vector<std::string>& overrides = {});

} // namespace deltaspec
