#include "g2qm/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace g2qm {

using nlohmann::json;

namespace {

Rational rational_of(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("expected a rational as integer or string, got " + v.dump());
}

json rational_json(const Rational& q) { return to_string(q); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

QuadElem quad_of(const json& v, long delta) {
  if (!v.is_array() || v.size() != 2) throw InputError("expected [a, b], got " + v.dump());
  return QuadElem(rational_of(v[0]), rational_of(v[1]), delta);
}

QFMatrix qf_matrix_of(const json& v, long delta) {
  if (!v.is_array() || v.size() != 2) throw InputError("analytic representation must be 2x2");
  QFMatrix m(2, 2, QuadElem(delta));
  for (std::size_t r = 0; r < 2; ++r) {
    if (!v[r].is_array() || v[r].size() != 2) throw InputError("analytic representation must be 2x2");
    for (std::size_t c = 0; c < 2; ++c) m(r, c) = quad_of(v[r][c], delta);
  }
  return m;
}

RatMatrix rat_matrix_of(const json& v, std::size_t n) {
  if (!v.is_array() || v.size() != n) throw InputError("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  RatMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!v[r].is_array() || v[r].size() != n) throw InputError("ragged matrix");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rational_of(v[r][c]);
  }
  return m;
}

Quaternion quaternion_of(const json& v, const QuatAlgebra& alg) {
  if (!v.is_array() || v.size() != 4) throw InputError("quaternion must have 4 coordinates");
  return Quaternion(alg, rational_of(v[0]), rational_of(v[1]), rational_of(v[2]), rational_of(v[3]));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<Loop> loops_of(const json& v) {
  std::vector<Loop> out;
  if (!v.is_array()) throw InputError("loops must be a list");
  for (const auto& l : v) {
    if (!l.is_array() || l.size() < 2 || l.size() > 3) throw InputError("loop must be [from, to, sign]");
    Loop x{l[0].get<int>() - 1, l[1].get<int>() - 1, l.size() == 3 ? l[2].get<int>() : 1};
    if (x.from < 0 || x.to < 0 || x.from > 5 || x.to > 5 || x.from == x.to) throw InputError("loop endpoints must be distinct in 1..6");
    if (x.sign != 1 && x.sign != -1) throw InputError("loop sign must be +-1");
    out.push_back(x);
  }
  if (out.size() != 4) throw InputError("exactly four loops are needed");
  return out;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CurveFile parse_curve_file(std::string_view text) {
  json j = parse_json(text);
  try {
    long delta = field(j, "delta").get<long>();
    if (delta == 0 || delta == 1 || !is_squarefree(Integer(delta))) throw InputError("delta must be square-free and not 0 or 1");
    const json& co = field(j, "coefficients");
    if (!co.is_array() || co.size() != 7) throw InputError("a curve needs 7 coefficients (degree <= 6, ascending)");
    std::vector<QuadElem> c;
    for (const auto& x : co) c.push_back(quad_of(x, delta));
    PolyQF f(std::move(c));
    std::string label = j.value("label", std::string());
    CurveFile out{CurveModel(std::move(f), label), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    if (j.contains("loops")) out.loops = loops_of(j["loops"]);
    if (j.contains("endomorphisms")) {
      const json& e = j["endomorphisms"];
      out.algebra = QuatAlgebra(rational_of(field(e, "a")), rational_of(field(e, "b")));
      out.ti = qf_matrix_of(field(e, "ti"), delta);
      out.tj = qf_matrix_of(field(e, "tj"), delta);
    }
    return out;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad curve file: ") + e.what());
  } catch (const std::domain_error& e) {
    throw InputError(std::string("bad curve: ") + e.what());
  }
}

CurveFile read_curve_file(const std::string& path) { return parse_curve_file(read_text_file(path)); }

std::string curve_json(const CurveModel& c) {
  json co = json::array();
  for (int i = 0; i <= 6; ++i) {
    QuadElem x = i <= c.degree() ? c.poly()[i] : QuadElem(c.delta());
    co.push_back(json::array({rational_json(x.a()), rational_json(x.b())}));
  }
  return json{{"delta", c.delta()}, {"coefficients", co}, {"label", c.label()}}.dump();
}

QMLattice parse_lattice_file(std::string_view text) {
  json j = parse_json(text);
  try {
    const json& a = field(j, "algebra");
    if (!a.is_array() || a.size() != 2) throw InputError("algebra must be [a, b]");
    QuatAlgebra alg(rational_of(a[0]), rational_of(a[1]));
    std::vector<Quaternion> basis;
    for (const auto& q : field(j, "order")) basis.push_back(quaternion_of(q, alg));
    if (basis.size() != 4) throw InputError("order needs 4 basis quaternions");
    QuatOrder o(alg, std::move(basis));
    std::string label = j.value("label", std::string());
    if (j.contains("mu")) return synthetic_lattice(o, quaternion_of(j["mu"], alg), label);
    QMLattice lat{o, make_quat_action(rat_matrix_of(field(j, "mi"), 4), rat_matrix_of(field(j, "mj"), 4)),
                  rat_matrix_of(field(j, "form"), 4), label};
    if (!(lat.action.algebra == alg)) throw InputError("action matrices do not match the algebra");
    validate_lattice(lat);
    return lat;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad lattice file: ") + e.what());
  }
}

QMLattice read_lattice_file(const std::string& path) { return parse_lattice_file(read_text_file(path)); }

std::vector<Loop> parse_loops(std::string_view text) {
  json v = json::array();
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    json l = json::array();
    std::stringstream is(item);
    std::string n;
    while (std::getline(is, n, ',')) {
      try {
        l.push_back(std::stoi(n));
      } catch (const std::exception&) {
        throw InputError("bad loop entry '" + n + "'");
      }
    }
    v.push_back(l);
  }
  return loops_of(v);
}

std::string json_quad(const QuadElem& x) {
  return json::array({rational_json(x.a()), rational_json(x.b()), x.delta()}).dump();
}

std::string json_complex(const BigComplex& z, int digits) {
  return json::array({to_string(z.re(), digits), to_string(z.im(), digits)}).dump();
}

std::string json_quaternion(const Quaternion& x) {
  json c = json::array();
  for (const auto& v : x.coords()) c.push_back(rational_json(v));
  return json{{"algebra", {rational_json(x.algebra().a), rational_json(x.algebra().b)}}, {"coords", c}}.dump();
}

std::string json_matrix(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      if (is_integer(q) && abs(num(q)) < Integer(1) << 53)
        row.push_back(num(q).convert_to<long long>());
      else
        row.push_back(rational_json(q));
    }
    rows.push_back(row);
  }
  return rows.dump();
}

std::string json_period_matrix(const PeriodMatrix& pm, int digits) {
  json omega = json::array();
  for (std::size_t r = 0; r < pm.omega.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < pm.omega.cols(); ++c) row.push_back(json::parse(json_complex(pm.omega(r, c), digits)));
    omega.push_back(row);
  }
  json loops = json::array();
  for (const auto& l : pm.basis.loops) loops.push_back({l.from + 1, l.to + 1, l.sign});
  return json{{"omega", omega},
              {"loops", loops},
              {"intersection", json::parse(json_matrix(pm.basis.intersection))},
              {"change", json::parse(json_matrix(pm.change))},
              {"form", json::parse(json_matrix(pm.form))},
              {"digits", pm.digits}}
      .dump();
}

}  // namespace g2qm
