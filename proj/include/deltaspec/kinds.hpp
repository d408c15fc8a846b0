#pragma once

#include <string>

#include "deltaspec/errors.hpp"

namespace deltaspec {

/// The four resolvent differences handled by the solvers.  The first three
/// compare an interaction realization with the free operator or with the
/// decoupled Neumann pair; the fourth compares Neumann with free.
enum class Kind {
    delta_vs_free,
    deltaprime_vs_free,
    deltaprime_vs_neumann,
    neumann_vs_free,
};

inline std::string to_string(Kind k)
{
    switch (k) {
    case Kind::delta_vs_free:         return "delta_vs_free";
    case Kind::deltaprime_vs_free:    return "deltaprime_vs_free";
    case Kind::deltaprime_vs_neumann: return "deltaprime_vs_neumann";
    case Kind::neumann_vs_free:       return "neumann_vs_free";
    }
    return "?";
}

inline Kind kind_from_string(const std::string& s)
{
    if (s == "delta_vs_free")         return Kind::delta_vs_free;
    if (s == "deltaprime_vs_free")    return Kind::deltaprime_vs_free;
    if (s == "deltaprime_vs_neumann") return Kind::deltaprime_vs_neumann;
    if (s == "neumann_vs_free")       return Kind::neumann_vs_free;
    throw ConfigError("unknown interaction kind '" + s + "'");
}

/// Power-law decay order t of the resolvent difference as an operator on
/// the interface: singular values behave like k^{-t/(n-1)}.
inline double decay_order(Kind k)
{
    switch (k) {
    case Kind::delta_vs_free:         return 3.0;
    case Kind::deltaprime_vs_free:    return 2.0;
    case Kind::deltaprime_vs_neumann: return 3.0;
    case Kind::neumann_vs_free:       return 2.0;
    }
    return 0.0;
}

} // namespace deltaspec
