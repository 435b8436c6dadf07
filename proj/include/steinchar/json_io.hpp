#pragma once

#include <json.hpp>
#include <string>

#include "steinchar/characters.hpp"
#include "steinchar/stats.hpp"
#include "steinchar/stein.hpp"

namespace steinchar {

using Json = nlohmann::ordered_json;

/// 17 significant digits; non-finite values become null.
std::string format_double(double x);

/// Serializes with every floating-point value printed by format_double, so
/// identical inputs give byte-identical output.
std::string dump_json(const Json& j, int indent = 2);

Json signature_json(const Signature& s);
Json bound_json(const BoundReport& r);
Json limit_json(const LimitReport& r);
Json moments_json(const MomentReport& m);
Json kolmogorov_json(const KolmogorovReport& r);
/// {family, n, case, [alpha_param], tau, components: [{label, signature,
/// multiplicity, dim, ratio_at_theta}]}.
Json table_json(const DecompositionTable& t, const ClassParameter& p);

}  // namespace steinchar
