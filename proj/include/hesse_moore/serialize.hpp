// JSON encodings shared by the command-line tool and its tests.
//   point:       [x0, x1, x2] as residues, normalized
//   curve:       {"p": p, "lambda": lambda}
//   matrix:      [[c, ...], ...] residues
//   form matrix: [["3*x0 + x1", ...], ...] entries in the poly text format

#ifndef HESSE_MOORE_SERIALIZE_HPP_
#define HESSE_MOORE_SERIALIZE_HPP_

#include <json.hpp>

#include "hesse.hpp"

namespace hesse_moore {

using json = nlohmann::json;

// "1,2,-3" -> (1, 2, p - 3)
Triple parse_triple(std::string_view text, Modulus m);
std::vector<std::int64_t> parse_int_list(std::string_view text);

json to_json(const Triple& a);
json to_json(const ProjectivePoint& p);
json to_json(const std::vector<ProjectivePoint>& points);
json to_json(const HesseCurve& e);
json to_json(const Matrix& m);
json to_json(const HomForm& g);
json to_json(const FormMatrix& m);

ProjectivePoint point_from_json(const json& j, Modulus m);
Matrix matrix_from_json(const json& j, Modulus m);
// Entries parsed with parse_form; zero entries take the degree of the
// nonzero ones, or `zero_degree` when all entries vanish.
FormMatrix form_matrix_from_json(const json& j, Modulus m, int zero_degree = 1);

} // namespace hesse_moore

#endif
