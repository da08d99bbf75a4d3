#include "supercohom/json_io.hpp"

#include <fstream>
#include <sstream>

namespace supercohom {

namespace {

template <typename T>
T field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

Vec residues(const PrimeField& f, const Json& j, std::size_t expect, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  if (j.size() != expect)
    throw InputError(what + " has length " + std::to_string(j.size()) + ", expected " +
                     std::to_string(expect));
  Vec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError(what + " must hold integers");
    v.push_back(f.reduce(x.get<std::int64_t>()));
  }
  return v;
}

Json vec_json(const Vec& v) { return Json(v); }

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json algebra_to_json(const SuperAlgebra& L) {
  Json j;
  j["p"] = L.p();
  j["even"] = L.basis().even_names();
  j["odd"] = L.basis().odd_names();
  j["brackets"] = Json::array();
  for (const auto& e : L.bracket_entries())
    j["brackets"].push_back({{"i", e.i}, {"j", e.j}, {"out", vec_json(e.out)}});
  if (L.restricted()) {
    j["pmap"] = Json::array();
    for (std::size_t i = 0; i < L.n_even(); ++i)
      if (!is_zero(L.pmap_basis(i))) j["pmap"].push_back({{"i", i}, {"out", vec_json(L.pmap_basis(i))}});
  }
  return j;
}

AlgebraPtr algebra_from_json(const Json& j) {
  const auto p = field_of<std::int64_t>(j, "p");
  if (p < 3 || p > (std::int64_t{1} << 30) || !is_prime(static_cast<std::uint64_t>(p)))
    throw InputError("p must be an odd prime");
  PrimeField f(static_cast<std::uint32_t>(p));
  SuperBasis basis;
  try {
    basis = SuperBasis(field_of<std::vector<std::string>>(j, "even"),
                       field_of<std::vector<std::string>>(j, "odd"));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const std::size_t n = basis.dim();
  std::vector<BracketEntry> br;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw InputError("brackets must be an array");
    for (const auto& e : j["brackets"]) {
      const auto i = field_of<std::size_t>(e, "i"), k = field_of<std::size_t>(e, "j");
      if (i >= n || k >= n) throw InputError("bracket index out of range");
      if (i > k) throw InputError("bracket entries need i <= j");
      br.push_back({i, k, residues(f, e.at("out"), n, "bracket output")});
    }
  }
  std::optional<std::vector<Vec>> pmap;
  if (j.contains("pmap")) {
    if (!j["pmap"].is_array()) throw InputError("pmap must be an array");
    pmap = std::vector<Vec>(basis.n_even(), Vec(n, 0));
    for (const auto& e : j["pmap"]) {
      const auto i = field_of<std::size_t>(e, "i");
      if (i >= basis.n_even()) throw InputError("pmap index must be an even basis index");
      (*pmap)[i] = residues(f, e.at("out"), n, "pmap output");
    }
  }
  try {
    return std::make_shared<const SuperAlgebra>(f, basis, br, pmap);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json module_to_json(const Representation& R) {
  Json j;
  j["even"] = R.basis().even_names();
  j["odd"] = R.basis().odd_names();
  j["action"] = Json::array();
  for (const auto& m : R.actions()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vec_json(m.row(r)));
    j["action"].push_back(rows);
  }
  return j;
}

Representation module_from_json(const Json& j, const AlgebraPtr& L) {
  const PrimeField& f = L->field();
  SuperBasis basis;
  try {
    basis = SuperBasis(field_of<std::vector<std::string>>(j, "even"),
                       field_of<std::vector<std::string>>(j, "odd"));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const std::size_t d = basis.dim();
  const Json& act = j.contains("action") ? j["action"] : Json();
  if (!act.is_array() || act.size() != L->dim())
    throw InputError("action needs one matrix per algebra basis element");
  std::vector<Matrix> mats;
  for (const auto& m : act) {
    if (!m.is_array() || m.size() != d) throw InputError("action matrix has wrong row count");
    std::vector<Vec> rows;
    for (const auto& r : m) rows.push_back(residues(f, r, d, "action row"));
    mats.push_back(Matrix::from_rows(f, d, rows));
  }
  return Representation(L, basis, std::move(mats));
}

Json cochain_to_json(const CochainSpace& C, const Vec& coords) {
  if (coords.size() != C.dim()) throw DimensionError("cochain has wrong length");
  Json j;
  j["degree"] = C.degree();
  j["parity"] = to_string(cochain_parity(C, coords));
  j["entries"] = Json::array();
  for (std::size_t idx = 0; idx < coords.size(); ++idx) {
    if (coords[idx] == 0) continue;
    const auto [m, b] = std::pair{idx / C.module_dim(), idx % C.module_dim()};
    j["entries"].push_back(
        {{"monomial", C.monomial(m)}, {"module_index", b}, {"value", coords[idx]}});
  }
  return j;
}

Vec cochain_from_json(const Json& j, const CochainSpace& C) {
  if (field_of<unsigned>(j, "degree") != C.degree()) throw InputError("cochain degree mismatch");
  const PrimeField& f = C.field();
  Vec coords(C.dim(), 0);
  const Json& entries = j.contains("entries") ? j["entries"] : Json::array();
  if (!entries.is_array()) throw InputError("entries must be an array");
  for (const auto& e : entries) {
    const auto mono = field_of<std::vector<std::size_t>>(e, "monomial");
    const auto b = field_of<std::size_t>(e, "module_index");
    const auto v = field_of<std::int64_t>(e, "value");
    if (mono.size() != C.degree()) throw InputError("monomial has the wrong degree");
    if (b >= C.module_dim()) throw InputError("module index out of range");
    for (auto i : mono)
      if (i >= C.L().dim()) throw InputError("monomial index out of range");
    const auto idx = C.find(mono);
    if (!idx) throw InputError("monomial is not in canonical order");
    coords[C.index(*idx, b)] = f.add(coords[C.index(*idx, b)], f.reduce(v));
  }
  return coords;
}

Json restricted_to_json(const CochainSpace& C2, const RestrictedTwoCochain& c) {
  Json j;
  j["phi"] = cochain_to_json(C2, c.phi);
  j["omega"] = Json::array();
  for (const auto& w : c.omega) j["omega"].push_back(vec_json(w));
  return j;
}

RestrictedTwoCochain restricted_two_from_json(const Json& j, const CochainSpace& C2) {
  if (!j.contains("phi")) throw InputError("missing field 'phi'");
  RestrictedTwoCochain c = zero_two(C2);
  c.phi = cochain_from_json(j["phi"], C2);
  if (j.contains("omega")) {
    const Json& om = j["omega"];
    if (!om.is_array() || om.size() != C2.L().n_even())
      throw InputError("omega needs one value per even basis element");
    for (std::size_t k = 0; k < om.size(); ++k)
      c.omega[k] = residues(C2.field(), om[k], C2.module_dim(), "omega value");
  }
  return c;
}

Json restricted_to_json(const CochainSpace& C3, const RestrictedThreeCochain& c) {
  Json j;
  j["alpha"] = cochain_to_json(C3, c.alpha);
  j["beta"] = Json::array();
  for (const auto& row : c.beta) {
    Json r = Json::array();
    for (const auto& w : row) r.push_back(vec_json(w));
    j["beta"].push_back(r);
  }
  return j;
}

RestrictedThreeCochain restricted_three_from_json(const Json& j, const CochainSpace& C3) {
  if (!j.contains("alpha")) throw InputError("missing field 'alpha'");
  const std::size_t n0 = C3.L().n_even();
  RestrictedThreeCochain c;
  c.alpha = cochain_from_json(j["alpha"], C3);
  c.beta.assign(n0, std::vector<Vec>(n0, Vec(C3.module_dim(), 0)));
  if (j.contains("beta")) {
    const Json& b = j["beta"];
    if (!b.is_array() || b.size() != n0) throw InputError("beta needs n0 x n0 values");
    for (std::size_t x = 0; x < n0; ++x) {
      if (!b[x].is_array() || b[x].size() != n0) throw InputError("beta needs n0 x n0 values");
      for (std::size_t y = 0; y < n0; ++y)
        c.beta[x][y] = residues(C3.field(), b[x][y], C3.module_dim(), "beta value");
    }
  }
  return c;
}

Json report_to_json(const CochainSpace& C, const ReportRecord& r) {
  const auto& rep = r.report;
  if (C.degree() != rep.degree) throw DegreeError("cochain space does not match the report");
  Json j;
  j["p"] = r.p;
  j["lambda"] = r.lambda ? Json(*r.lambda) : Json(nullptr);
  j["theory"] = to_string(rep.theory);
  j["degree"] = rep.degree;
  j["dimZ"] = rep.dim_z;
  j["dimB"] = rep.dim_b;
  j["dimH"] = rep.dim_h;
  j["hEven"] = rep.h_even;
  j["hOdd"] = rep.h_odd;
  j["representatives"] = Json::array();
  const bool paired = rep.theory == Theory::Restricted && rep.degree == 2;
  for (const auto& v : rep.representatives)
    j["representatives"].push_back(paired ? restricted_to_json(C, unflatten_two(C, v))
                                          : cochain_to_json(C, v));
  return j;
}

ReportRecord report_from_json(const Json& j, const CochainSpace& C) {
  ReportRecord r;
  r.p = field_of<std::uint32_t>(j, "p");
  if (j.contains("lambda") && !j["lambda"].is_null()) r.lambda = field_of<Vec>(j, "lambda");
  const auto theory = field_of<std::string>(j, "theory");
  if (theory != "ordinary" && theory != "restricted") throw InputError("unknown theory " + theory);
  auto& rep = r.report;
  rep.theory = theory == "restricted" ? Theory::Restricted : Theory::Ordinary;
  rep.degree = field_of<unsigned>(j, "degree");
  if (rep.degree != C.degree()) throw InputError("report degree mismatch");
  rep.dim_z = field_of<std::size_t>(j, "dimZ");
  rep.dim_b = field_of<std::size_t>(j, "dimB");
  rep.dim_h = field_of<std::size_t>(j, "dimH");
  rep.h_even = field_of<std::size_t>(j, "hEven");
  rep.h_odd = field_of<std::size_t>(j, "hOdd");
  const bool paired = rep.theory == Theory::Restricted && rep.degree == 2;
  for (const auto& x : field_of<Json>(j, "representatives"))
    rep.representatives.push_back(paired ? flatten(C, restricted_two_from_json(x, C))
                                         : cochain_from_json(x, C));
  return r;
}

}  // namespace supercohom
