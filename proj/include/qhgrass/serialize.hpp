#pragma once

// Canonical output forms: JSON (round-trippable), plain text, and LaTeX.
// Term order in every format is the canonical one — graded lexicographic for
// monomials, (q-degree, shape) for expansion terms — so output is
// deterministic across platforms.

#include <map>
#include <string>

#include "json.hpp"

#include "qhgrass/expansion.hpp"
#include "qhgrass/oracle.hpp"
#include "qhgrass/poly.hpp"
#include "qhgrass/shapes.hpp"

namespace qhgrass {

// A polynomial is a JSON list of [coefficient, [[var, power], ...]] entries
// sorted graded-lex; the empty list is zero. Coefficients that fit in 64 bits
// are numbers, larger ones are decimal strings.
nlohmann::json poly_to_json(const TPoly& p);
TPoly poly_from_json(const nlohmann::json& j);

std::string poly_to_text(const TPoly& p);  // e.g. "t_11*t_12 - t_3*t_11 + t_3^2"
std::string poly_to_latex(const TPoly& p); // e.g. "t_{11}t_{12} - t_3t_{11} + t_3^2"

std::string partition_to_text(const Partition& p); // "(2,1,1)", "()" when empty
nlohmann::json partition_to_json(const Partition& p); // array of nonzero parts

// {"grassmannian":{"m":..,"n":..},"operation":<verbatim>,"terms":[
//   {"partition":[..],"q":d,"coefficient":<canonical polynomial>}, ...]}
nlohmann::json expansion_to_json(const Expansion& e, const nlohmann::json& operation);
Expansion expansion_from_json(const nlohmann::json& j);

// "(t_5-t_1)(t_3-t_1)\sigma_{(2,1,1)} + ... + q\sigma_{(1)}": coefficients
// render factored when the factored form is available and expand is false;
// unit coefficients are omitted; q-degree d renders as "", "q", or "q^d".
std::string expansion_to_latex(const Expansion& e, bool expand = false);
std::string expansion_to_text(const Expansion& e, bool expand = false);

// Same shapes for classical expansions keyed by partition only (no q).
nlohmann::json classical_to_json(const std::map<Partition, TPoly>& cls, const Rect& rect,
                                 const nlohmann::json& operation);
std::string classical_to_latex(const std::map<Partition, TPoly>& cls);
std::string classical_to_text(const std::map<Partition, TPoly>& cls);

// {"status":..,"checked":..,"skipped":..,"failures":[{"kind":..,"detail":..,
//  "lambda":[..],"mu":[..],"nu":[..],"d":..,"expected":..,"actual":..}]}
nlohmann::json report_to_json(const CheckReport& rep);

} // namespace qhgrass
