#pragma once

#include "bsroots/gamma.hpp"
#include "bsroots/geometry.hpp"
#include "bsroots/ideal.hpp"
#include "bsroots/roots.hpp"
#include "bsroots/thresholds.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace bsroots {

using Json = nlohmann::ordered_json;

/// {"vars": n, "generators": [[...], ...]}. Throws InputError.
MonomialIdeal parse_ideal(std::string_view text);

/// Inline document when the argument starts with '{', otherwise a file path.
MonomialIdeal load_ideal(const std::string& path_or_inline);

Json ideal_to_json(const MonomialIdeal& a);

/// "1,2,3" -> integers. Throws InputError.
IntVector parse_int_list(std::string_view text);

/// "-3/4,-5/4,-3/2,-1:3": roots with optional multiplicities.
RootMultiset parse_bpoly(std::string_view text);

Json rationals_to_json(const std::vector<Rational>& xs);
Json integers_to_json(const IntVector& xs);

Json newton_to_json(const NewtonPolyhedron& p, const std::vector<FanCone>& cones, const Integer& modulus);
Json root_report_to_json(const RootReport& r, bool verbose);
Json gamma_report_to_json(const GammaReport& r, bool verbose);
Json law_to_json(const QuasiLinearLaw& law, bool verbose);
Json periodicity_to_json(const Periodicity& p);

}  // namespace bsroots
