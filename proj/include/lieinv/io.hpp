#ifndef LIEINV_IO_HPP
#define LIEINV_IO_HPP

#include <functional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "lieinv/contraction.hpp"
#include "lieinv/lie_algebra.hpp"
#include "lieinv/mlp.hpp"
#include "lieinv/report.hpp"
#include "lieinv/verify.hpp"

namespace lieinv {

using Json = nlohmann::ordered_json;
using AlgebraResolver = std::function<LieAlgebra(std::string_view)>;

/// Throws ParseError with the parser message.
Json parse_json(std::string_view text);
/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);
/// Throws ParseError when the file cannot be read.
std::string read_file(const std::string& path);

/// {"name", "generators", "brackets": [{"i", "j", "terms": [{"k", "c"}]}]}, indices 1-based,
/// "c" a rational string or an integer. An optional "coordinates" list renames the dual variables.
LieAlgebra algebra_from_json(const Json& j);
Json to_json(const LieAlgebra& g);

/// {"algebra": name, "exponents": {generator or block: int}}, optional "name".
ContractionSpec spec_from_json(const Json& j, const AlgebraResolver& resolve);
Json to_json(const ContractionSpec& s);

Json to_json(const InvariantsReport& r);
Json to_json(const ContractionReport& r);
Json to_json(const MLPReport& r);
Json to_json(const VerifyReport& r);

InvariantsReport invariants_report_from_json(const Json& j);
ContractionReport contraction_report_from_json(const Json& j);
MLPReport mlp_report_from_json(const Json& j);
VerifyReport verify_report_from_json(const Json& j);

}  // namespace lieinv

#endif  // LIEINV_IO_HPP
