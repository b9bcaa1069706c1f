#include "ssarr/serialize.hpp"

#include <fstream>

#include "ssarr/errors.hpp"

namespace ssarr {

Json to_json(const CycNumber& x) {
  Json out = Json::array();
  for (const auto& c : x.coeffs()) out.push_back(format_rational(c));
  return out;
}

CycNumber cycnumber_from_json(const CycField& field, const Json& j) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(field.degree())) {
    throw InputError("coefficient must be an array of " + std::to_string(field.degree()) + " rational strings");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (c.is_string()) {
      coeffs.push_back(parse_rational(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long>());
    } else {
      throw InputError("coefficient entries must be \"p/q\" strings");
    }
  }
  return CycNumber(field, std::move(coeffs));
}

Json to_json(const Triple& t) { return Json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])}); }

Json to_json(const Arrangement& arrangement) {
  Json lines = Json::array();
  for (const auto& l : arrangement.lines()) lines.push_back(to_json(l.coeffs));
  return Json{{"cyclotomic_order", arrangement.field().order()}, {"lines", std::move(lines)}};
}

Arrangement arrangement_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cyclotomic_order") || !j.contains("lines")) {
    throw InputError("arrangement JSON needs \"cyclotomic_order\" and \"lines\"");
  }
  if (!j["cyclotomic_order"].is_number_integer() || j["cyclotomic_order"].get<long>() < 1) {
    throw InputError("\"cyclotomic_order\" must be a positive integer");
  }
  const CycField field(j["cyclotomic_order"].get<int>());
  if (!j["lines"].is_array()) throw InputError("\"lines\" must be an array");
  std::vector<ProjLine> lines;
  for (const auto& l : j["lines"]) {
    if (!l.is_array() || l.size() != 3) throw InputError("each line needs three coefficients");
    lines.push_back(ProjLine::make(Triple{cycnumber_from_json(field, l[0]), cycnumber_from_json(field, l[1]),
                                          cycnumber_from_json(field, l[2])}));
  }
  return Arrangement(field, std::move(lines));
}

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return arrangement_from_json(j);
}

void save_json(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << '\n';
}

Json to_json(const Census& census) {
  Json out = Json::object();
  for (const auto& [k, count] : census) out[std::to_string(k)] = count;
  return out;
}

Json to_json(const Lattice& lattice) {
  Json points = Json::array();
  for (const auto& p : lattice.points) points.push_back(to_json(p.coords));
  return Json{{"line_count", lattice.line_count},
              {"points", std::move(points)},
              {"multiplicities", lattice.mult},
              {"incidence", lattice.incidence},
              {"census", to_json(census(lattice))}};
}

Json to_json(const ClassifyReport& report) {
  Json modular = Json::array();
  for (const auto& mp : report.modular) {
    modular.push_back(Json{{"point", to_json(mp.point.coords)}, {"multiplicity", mp.multiplicity}});
  }
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(
        Json{{"name", c.name}, {"applicable", c.applicable}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  }
  return Json{{"d", report.d},
              {"is_pencil", report.is_pencil},
              {"is_near_pencil", report.is_near_pencil},
              {"supersolvable", report.supersolvable()},
              {"modular_points", std::move(modular)},
              {"M", report.modular_count},
              {"m_homogeneous", report.m_homogeneous ? Json(*report.m_homogeneous) : Json(nullptr)},
              {"max_multiplicity", report.max_multiplicity},
              {"census", to_json(report.census)},
              {"checks", std::move(checks)}};
}

Json to_json(const WClass& cls) { return Json{{"n", cls.n}, {"k", cls.k}, {"exponents", cls.exponents}}; }

Json to_json(const RecoveredClass& rec) {
  Json out = to_json(rec.cls);
  out["full_monomial"] = rec.full_monomial;
  return out;
}

Json to_json(const MdrResult& r) {
  return Json{{"value", r.value ? Json(*r.value) : Json(nullptr)}, {"degree_dims", r.degree_dims}, {"bound", r.bound}};
}

Json to_json(const MultiRestriction& r) {
  static constexpr const char* names[] = {"x", "y", "z"};
  Json forms = Json::array();
  for (std::size_t i = 0; i < r.forms.size(); ++i) {
    forms.push_back(Json{{"form", Json::array({to_json(r.forms[i][0]), to_json(r.forms[i][1])})},
                         {"multiplicity", r.mult[i]}});
  }
  return Json{{"coordinates", Json::array({names[r.coords[0]], names[r.coords[1]]})},
              {"forms", std::move(forms)},
              {"total", r.total},
              {"balanced", is_balanced(r)}};
}

Json to_json(const MultiExponents& r) {
  Json dims = Json::array();
  for (const auto& [p, dim] : r.degree_dims) dims.push_back(Json{{"degree", p}, {"dim", dim}});
  return Json{{"value", Json::array({r.exponents.d1, r.exponents.d2})},
              {"degree_dims", std::move(dims)},
              {"closed_form", r.easy}};
}

Json to_json(const NodalResult& r) {
  return Json{{"value", r.dimension},
              {"degree_dims", Json::array({r.dimension})},
              {"products_rank", r.products_rank},
              {"products_vanish", r.products_vanish}};
}

}  // namespace ssarr
