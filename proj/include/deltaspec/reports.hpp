#pragma once

#include <string>

#include "deltaspec/asymptotics.hpp"
#include "deltaspec/config.hpp"
#include "deltaspec/seeley.hpp"

namespace deltaspec {

/// CSV with fixed columns j,s,mode,mult,jp_s (jp_s = j^p s_j); the resolved
/// config is embedded as leading '#' comment lines.
std::string spectrum_csv(const SingularSpectrum& spectrum, double p,
                         const ExperimentConfig* config);

/// JSON report {kind, n, C_prime, C, exponent, remainder_class, config}.
std::string constants_json(const AsymptoticLaw& law, Kind kind,
                           const ExperimentConfig* config);

/// JSON report with the FitReport fields, the reference law and the config.
std::string fit_report_json(const FitReport& report, const AsymptoticLaw& reference,
                            const ExperimentConfig* config);

/// CSV of the boundary symbol values on a parameter grid.
std::string symbols_csv(const Hypersurface& surface, const CoefficientField& coeffs,
                        const ExperimentConfig* config);

} // namespace deltaspec
