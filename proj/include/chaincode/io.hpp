#pragma once

/**
 * @file io.hpp
 * @brief JSON descriptors and the polynomial text format.
 *
 * Rings are `{"p","a","m","modulus"}` with ascending modulus coefficients,
 * elements are ascending coordinate lists, polynomials are ascending lists of
 * elements (or text such as `X^5 + 2*X^3 + 2*w^2*X + w`), and codes carry their
 * ring inline. Readers reject unknown keys and malformed values with ParseError;
 * writers emit keys in a fixed order so output is byte-stable.
 */

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "chaincode/polycyclic.hpp"

namespace chaincode::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text. Throws ParseError.
Json parse_json(std::string_view text);

Json to_json(const Ring& ring);
Ring ring_from_json(const Json& j);

/// Coordinates as a list. Readers also take a bare integer or a constant in text form.
Json to_json(const RingElem& x);
RingElem element_from_json(const Json& j, const Ring& ring);

Json to_json(const Vec& v);
Vec vec_from_json(const Json& j, const Ring& ring);

Json to_json(const Poly& f);
/// A coefficient list or a text string.
Poly poly_from_json(const Json& j, const Ring& ring);

/// Integers, `X` (or `x`), the ring generator as `w` (also `b`, `alpha`, `beta`, `α`,
/// `β`), `+ - * ^`, parentheses and implicit multiplication. Exponents are
/// non-negative integer literals.
Poly parse_poly(std::string_view text, const Ring& ring);

/// `{"ring","n","generators"}` plus informational "type" and "log_cardinality".
Json to_json(const LinearCode& code);
/// `ring` substitutes for a missing "ring" key.
LinearCode code_from_json(const Json& j, const std::optional<Ring>& ring = std::nullopt);

Json to_json(const StrongGroebnerBasis& sgb);
StrongGroebnerBasis sgb_from_json(const Json& j, const Ring& ring);

/// `{"ring","n","a","sgb","generators","type","log_cardinality"}`.
Json to_json(const PolycyclicCode& code);

/// The code comes from "sgb", from a free generator "g", or from "generators". "a" may
/// be omitted with "g", in which case Ψ(a) is X^n mod g. When several sources are given
/// they must describe the same code (InvalidArgument otherwise).
PolycyclicCode polycyclic_from_json(const Json& j, const std::optional<Ring>& ring = std::nullopt);

}  // namespace chaincode::io
