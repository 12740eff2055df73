#include "hesse_moore/serialize.hpp"

#include <charconv>

namespace hesse_moore {

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view piece = text.substr(pos, end - pos);
    while (!piece.empty() && piece.front() == ' ')
      piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ')
      piece.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
      throw PreconditionError("not an integer: '" + std::string(piece) + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

Triple parse_triple(std::string_view text, Modulus m) {
  std::vector<std::int64_t> v = parse_int_list(text);
  if (v.size() != 3)
    throw PreconditionError("expected three comma-separated residues, got '" +
                            std::string(text) + "'");
  return make_triple(m, v[0], v[1], v[2]);
}

json to_json(const Triple& a) {
  return json::array({a[0].value(), a[1].value(), a[2].value()});
}

json to_json(const ProjectivePoint& p) { return to_json(p.coords()); }

json to_json(const std::vector<ProjectivePoint>& points) {
  json out = json::array();
  for (const ProjectivePoint& p : points)
    out.push_back(to_json(p));
  return out;
}

json to_json(const HesseCurve& e) {
  return {{"p", e.modulus().value()}, {"lambda", e.lambda().value()}};
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j).value());
    out.push_back(row);
  }
  return out;
}

json to_json(const HomForm& g) { return g.to_string(); }

json to_json(const FormMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j)
      row.push_back(m(i, j).to_string());
    out.push_back(row);
  }
  return out;
}

ProjectivePoint point_from_json(const json& j, Modulus m) {
  if (!j.is_array() || j.size() != 3)
    throw PreconditionError("point must be an array of three residues");
  return ProjectivePoint(
      make_triple(m, j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>()));
}

Matrix matrix_from_json(const json& j, Modulus m) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw PreconditionError("matrix must be a nonempty array of rows");
  Matrix out(m, j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != out.cols())
      throw PreconditionError("ragged matrix rows");
    for (std::size_t c = 0; c < out.cols(); ++c)
      out(r, c) = Fp(m, j[r][c].get<std::int64_t>());
  }
  return out;
}

FormMatrix form_matrix_from_json(const json& j, Modulus m, int zero_degree) {
  if (!j.is_array() || j.empty())
    throw PreconditionError("form matrix must be a nonempty array of rows");
  std::size_t n = j.size();
  std::vector<HomForm> parsed;
  int degree = -1;
  for (const json& row : j) {
    if (!row.is_array() || row.size() != n)
      throw PreconditionError("form matrix must be square");
    for (const json& entry : row) {
      std::string text = entry.is_string() ? entry.get<std::string>() : entry.dump();
      HomForm g = parse_form(text, m, -1);
      if (!g.is_zero()) {
        if (degree >= 0 && g.degree() != degree)
          throw DegreeMismatch("form matrix entries of degrees " + std::to_string(degree) +
                               " and " + std::to_string(g.degree()));
        degree = g.degree();
      }
      parsed.push_back(g);
    }
  }
  if (degree < 0)
    degree = zero_degree;
  for (HomForm& g : parsed)
    if (g.is_zero())
      g = HomForm(m, degree);
  return FormMatrix(n, std::move(parsed));
}

} // namespace hesse_moore
