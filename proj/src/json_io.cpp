#include "qch/json_io.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qch::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error(what); }

std::vector<int> int_vector(const json& j, const std::string& what) {
  if (!j.is_array()) fail(what + ": expected an array");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) fail(what + ": expected integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<std::vector<int>> table_field(const json& j, const std::string& what) {
  if (!j.is_array()) fail(what + ": expected an array of rows");
  std::vector<std::vector<int>> t;
  for (const auto& row : j) t.push_back(int_vector(row, what));
  return t;
}

std::vector<int> parse_tuple_key(const std::string& key) {
  std::vector<int> t;
  std::istringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) t.push_back(std::stoi(part));
  return t;
}

std::string tuple_key(const std::vector<int>& t) {
  std::string k;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) k += ',';
    k += std::to_string(t[i]);
  }
  return k;
}

}  // namespace

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  fail("expected an integer or integer string");
}

std::string rat_to_string(const Rat& v) { return v.get_str(); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    Rat r(j.get<std::string>());
    r.canonicalize();
    return r;
  }
  fail("expected a rational as integer or \"p/q\" string");
}

json quandle_to_json(const QuandleTable& t) {
  json j;
  j["size"] = t.size();
  j["table"] = t.table();
  return j;
}

QuandleTable quandle_from_json(const json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("table"))
    fail("quandle: expected {\"size\", \"table\"}");
  std::size_t q = j["size"].get<std::size_t>();
  auto table = table_field(j["table"], "quandle table");
  if (table.size() != q) fail("quandle: table has the wrong number of rows");
  for (const auto& row : table) {
    if (row.size() != q) fail("quandle: table row has the wrong length");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= q) fail("quandle: entry out of range");
  }
  return QuandleTable(q, std::move(table));
}

json group_to_json(const GroupTable& g) {
  json j;
  j["kind"] = "group";
  j["size"] = g.size;
  j["table"] = g.table;
  return j;
}

GroupTable group_from_json(const json& j) {
  if (!j.is_object() || j.value("kind", "") != std::string("group"))
    fail("group: expected {\"kind\":\"group\", ...}");
  GroupTable g;
  g.size = j.at("size").get<std::size_t>();
  g.table = table_field(j.at("table"), "group table");
  if (g.table.size() != g.size) fail("group: table has the wrong number of rows");
  for (const auto& row : g.table)
    if (row.size() != g.size) fail("group: table row has the wrong length");
  if (auto err = validate_group(g)) fail("group: " + *err);
  return g;
}

json imat_to_json(const IMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j2 = 0; j2 < m.cols(); ++j2) row.push_back(int_to_json(m(i, j2)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

IMat imat_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries")) fail("matrix: expected {\"rows\",\"cols\",\"entries\"}");
  std::size_t r = j.at("rows").get<std::size_t>();
  std::size_t c = j.at("cols").get<std::size_t>();
  const json& e = j.at("entries");
  if (!e.is_array() || e.size() != r) fail("matrix: wrong number of rows");
  IMat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!e[i].is_array() || e[i].size() != c) fail("matrix: wrong row length");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = int_from_json(e[i][k]);
  }
  return m;
}

json qmat_to_json(const QMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j2 = 0; j2 < m.cols(); ++j2) row.push_back(rat_to_string(m(i, j2)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

QMat qmat_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries")) fail("matrix: expected {\"rows\",\"cols\",\"entries\"}");
  std::size_t r = j.at("rows").get<std::size_t>();
  std::size_t c = j.at("cols").get<std::size_t>();
  const json& e = j.at("entries");
  if (!e.is_array() || e.size() != r) fail("matrix: wrong number of rows");
  QMat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!e[i].is_array() || e[i].size() != c) fail("matrix: wrong row length");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = rat_from_json(e[i][k]);
  }
  return m;
}

json qvec_to_json(const QVec& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(rat_to_string(e));
  return a;
}

QVec qvec_from_json(const json& j) {
  if (!j.is_array()) fail("vector: expected an array");
  QVec v;
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

json presentation_to_json(const Presentation& p) {
  json torsion = json::array();
  for (const auto& d : p.torsion) torsion.push_back(int_to_json(d));
  return json{{"free_rank", p.free_rank}, {"torsion", std::move(torsion)}};
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  p.free_rank = j.at("free_rank").get<long>();
  for (const auto& e : j.at("torsion")) p.torsion.push_back(int_from_json(e));
  return p;
}

json coefficient_to_json(const CoefficientModule& a) {
  json torsion = json::array();
  for (const auto& d : a.factors()) torsion.push_back(int_to_json(d));
  json t = json::array();
  for (std::size_t i = 0; i < a.T().rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < a.T().cols(); ++k) row.push_back(int_to_json(a.T()(i, k)));
    t.push_back(std::move(row));
  }
  return json{{"torsion", std::move(torsion)}, {"T", std::move(t)}};
}

CoefficientModule coefficient_from_json(const json& j) {
  if (!j.is_object() || !j.contains("torsion") || !j.contains("T"))
    fail("coefficient: expected {\"torsion\", \"T\"}");
  IVec factors;
  for (const auto& e : j.at("torsion")) factors.push_back(int_from_json(e));
  const json& tj = j.at("T");
  if (!tj.is_array() || tj.size() != factors.size()) fail("coefficient: T has the wrong shape");
  IMat t(factors.size(), factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!tj[i].is_array() || tj[i].size() != factors.size())
      fail("coefficient: T has the wrong shape");
    for (std::size_t k = 0; k < factors.size(); ++k) t(i, k) = int_from_json(tj[i][k]);
  }
  return CoefficientModule(std::move(factors), std::move(t));
}

json cochain_to_json(const CochainBasis& basis, std::size_t rank, const CochainVec& c) {
  if (c.size() != basis.size() * rank) fail("cochain: value vector has the wrong length");
  json values = json::object();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    json v = json::array();
    bool nonzero = false;
    for (std::size_t k = 0; k < rank; ++k) {
      v.push_back(int_to_json(c[i * rank + k]));
      if (c[i * rank + k] != 0) nonzero = true;
    }
    if (nonzero) values[tuple_key(basis.tuple(i))] = std::move(v);
  }
  return json{{"degree", basis.degree()}, {"values", std::move(values)}};
}

CochainVec cochain_from_json(const CochainBasis& basis, std::size_t rank, const json& j) {
  if (!j.is_object() || !j.contains("values")) fail("cochain: expected {\"degree\", \"values\"}");
  if (j.contains("degree") && j.at("degree").get<int>() != basis.degree())
    fail("cochain: degree mismatch");
  CochainVec c(basis.size() * rank, Int(0));
  for (const auto& [key, val] : j.at("values").items()) {
    long idx = basis.index_of(parse_tuple_key(key));
    if (idx < 0) fail("cochain: tuple \"" + key + "\" is degenerate or out of range");
    if (!val.is_array() || val.size() != rank) fail("cochain: value for \"" + key + "\" has the wrong rank");
    for (std::size_t k = 0; k < rank; ++k) c[idx * rank + k] = int_from_json(val[k]);
  }
  return c;
}

QuandleModuleSpec module_from_json(const json& j, const IVec& factors, std::size_t q) {
  if (!j.is_object() || !j.contains("eta") || !j.contains("tau"))
    fail("module: expected {\"eta\", \"tau\"}");
  const std::size_t m = factors.size();
  auto read_family = [&](const json& fam, const std::string& what) {
    std::vector<IMat> out(q * q, IMat(m, m));
    std::vector<bool> seen(q * q, false);
    for (const auto& [key, val] : fam.items()) {
      std::vector<int> xy = parse_tuple_key(key);
      if (xy.size() != 2 || xy[0] < 0 || xy[1] < 0 || static_cast<std::size_t>(xy[0]) >= q ||
          static_cast<std::size_t>(xy[1]) >= q)
        fail(what + ": bad pair key \"" + key + "\"");
      if (!val.is_array() || val.size() != m) fail(what + ": matrix for \"" + key + "\" has the wrong shape");
      IMat mat(m, m);
      for (std::size_t i = 0; i < m; ++i) {
        if (!val[i].is_array() || val[i].size() != m)
          fail(what + ": matrix for \"" + key + "\" has the wrong shape");
        for (std::size_t k = 0; k < m; ++k) mat(i, k) = int_from_json(val[i][k]);
      }
      out[xy[0] * q + xy[1]] = std::move(mat);
      seen[xy[0] * q + xy[1]] = true;
    }
    for (bool s : seen)
      if (!s) fail(what + ": missing pair entries (need all " + std::to_string(q * q) + ")");
    return out;
  };
  return QuandleModuleSpec(factors, read_family(j.at("eta"), "eta"), read_family(j.at("tau"), "tau"), q);
}

json principal_to_json(const PrincipalData& d, const CoefficientModule& a) {
  json action = json::object();
  for (std::size_t k = 0; k < d.action.size(); ++k) {
    IVec el = a.element(k);
    std::string key;
    for (std::size_t i = 0; i < el.size(); ++i) {
      if (i) key += ',';
      key += el[i].get_str();
    }
    action[key] = d.action[k];
  }
  return json{{"total", quandle_to_json(d.total)},
              {"base", quandle_to_json(d.base)},
              {"projection", d.projection},
              {"action", std::move(action)},
              {"section", d.section}};
}

PrincipalData principal_from_json(const json& j) {
  if (!j.is_object()) fail("principal: expected an object");
  PrincipalData d;
  d.total = quandle_from_json(j.at("total"));
  d.base = quandle_from_json(j.at("base"));
  d.projection = int_vector(j.at("projection"), "projection");
  d.section = int_vector(j.at("section"), "section");
  const json& act = j.at("action");
  if (!act.is_object()) fail("principal: action must map coefficient elements to permutations");
  // Order permutations by the flat index of their coefficient-element key; the
  // caller's CoefficientModule uses the same lexicographic element order.
  std::map<std::vector<int>, std::vector<int>> sorted;
  for (const auto& [key, val] : act.items())
    sorted[parse_tuple_key(key)] = int_vector(val, "action");
  for (auto& [key, perm] : sorted) d.action.push_back(std::move(perm));
  return d;
}

TowerSystem tower_from_json(const json& j) {
  if (!j.is_object() || !j.contains("stages")) fail("tower: expected {\"stages\", ...}");
  TowerSystem sys;
  for (const auto& st : j.at("stages"))
    sys.stages.push_back({quandle_from_json(st.at("quandle")),
                          coefficient_from_json(st.at("coeff"))});
  for (const auto& p : j.at("projections"))
    sys.projections.push_back(int_vector(p, "projection"));
  for (const auto& m : j.at("coeff_maps")) sys.coeff_maps.push_back(imat_from_json(m));
  return sys;
}

json colimit_to_json(const ColimitResult& r) {
  json stages = json::array();
  for (const auto& st : r.stages) stages.push_back(presentation_to_json(st.presentation()));
  json connecting = json::array();
  for (const auto& m : r.connecting) connecting.push_back(imat_to_json(m));
  return json{{"stages", std::move(stages)},
              {"connecting", std::move(connecting)},
              {"colimit", presentation_to_json(r.colimit)},
              {"stabilized", r.stabilized}};
}

json chain_to_json(const FormalChain& w) {
  json terms = json::array();
  for (const auto& t : w.terms) {
    json points = json::array();
    for (const auto& p : t.points) points.push_back(qvec_to_json(p));
    terms.push_back(json{{"coef", qmat_to_json(t.coef)}, {"points", std::move(points)}});
  }
  return json{{"degree", w.degree}, {"terms", std::move(terms)}};
}

json certificate_to_json(const Certificate& c, const json& inputs) {
  json identities = json::array();
  for (const auto& id : c.identities)
    identities.push_back(json{{"name", id.name}, {"holds", id.holds}});
  json out{{"inputs", inputs},
           {"identities", std::move(identities)},
           {"chain", chain_to_json(c.chain)},
           {"boundary", chain_to_json(c.boundary)},
           {"pairing", qvec_to_json(c.pairing_value)},
           {"verdict", to_string(c.verdict)}};
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

}  // namespace qch::io
