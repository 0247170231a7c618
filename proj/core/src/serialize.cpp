#include "algdyn/serialize.hpp"

#include <fstream>
#include <sstream>

#include "algdyn/errors.hpp"

namespace algdyn {

namespace {

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what) {
  throw ParseError(source + ": " + where + ": " + what);
}

Rat parse_entry(const Json& e, const std::string& source, const std::string& where) {
  if (e.is_number_integer()) return e.is_number_unsigned() ? Rat(Int(std::to_string(e.get<std::uint64_t>())))
                                                          : Rat(Int(std::to_string(e.get<std::int64_t>())));
  if (e.is_string()) {
    try {
      return parse_rat(e.get<std::string>());
    } catch (const Error& ex) {
      fail(source, where, ex.what());
    }
  }
  fail(source, where, "expected an integer or a \"p/q\" string");
}

std::size_t parse_size(const Json& j, const char* key, const std::string& source) {
  if (!j.contains(key)) fail(source, std::string("/") + key, "missing field");
  const Json& v = j[key];
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1) fail(source, std::string("/") + key, "expected a positive integer");
  return v.get<std::size_t>();
}

}  // namespace

SolenoidAction parse_action(const std::string& text, const std::string& source) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(source, line_col(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
  if (!j.is_object()) fail(source, "/", "expected an object");
  std::size_t d = parse_size(j, "d", source), m = parse_size(j, "m", source);
  if (!j.contains("generators") || !j["generators"].is_array()) fail(source, "/generators", "expected an array");
  const Json& gens = j["generators"];
  if (gens.size() != d)
    fail(source, "/generators", "has " + std::to_string(gens.size()) + " matrices, expected d = " + std::to_string(d));
  std::vector<QMatrix> mats;
  for (std::size_t g = 0; g < d; ++g) {
    std::string gp = "/generators/" + std::to_string(g);
    if (!gens[g].is_array() || gens[g].size() != m) fail(source, gp, "expected " + std::to_string(m) + " rows");
    QMatrix a(m, m);
    for (std::size_t r = 0; r < m; ++r) {
      std::string rp = gp + "/" + std::to_string(r);
      const Json& row = gens[g][r];
      if (!row.is_array() || row.size() != m) fail(source, rp, "expected " + std::to_string(m) + " entries");
      for (std::size_t c = 0; c < m; ++c) a(r, c) = parse_entry(row[c], source, rp + "/" + std::to_string(c));
    }
    mats.push_back(std::move(a));
  }
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) fail(source, "/label", "expected a string");
    label = j["label"].get<std::string>();
  }
  SolenoidAction act = SolenoidAction::make(std::move(mats), label);
  Diagnostics diag = validate(act);
  if (!diag.ok) fail(source, "/generators", diag.messages.front());
  return act;
}

SolenoidAction load_action(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_action(ss.str(), path);
}

Json to_json(const Rat& q) { return to_string(q); }

Json to_json(const RatPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const QSubspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    basis.push_back(std::move(row));
  }
  return {{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", std::move(basis)}};
}

Json to_json(const Interval& x) {
  char lo[64], hi[64];
  mpfr_snprintf(lo, sizeof lo, "%.19RDe", x.lo());
  mpfr_snprintf(hi, sizeof hi, "%.19RUe", x.hi());
  return {{"lo", lo}, {"hi", hi}};
}

Json to_json(const IntVec& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json to_json(const SolenoidAction& a) {
  Json gens = Json::array();
  for (const auto& g : a.generators) gens.push_back(to_json(g));
  Json j{{"d", a.d}, {"m", a.m}, {"generators", std::move(gens)}};
  if (!a.label.empty()) j["label"] = a.label;
  return j;
}

Json to_json(const InvariantFlag& flag) {
  Json dims = Json::array(), blocks = Json::array();
  for (const auto& s : flag.subspaces) dims.push_back(s.dim());
  for (const auto& b : flag.blocks) {
    Json gens = Json::array();
    for (const auto& g : b) gens.push_back(to_json(g));
    blocks.push_back(std::move(gens));
  }
  return {{"dimensions", std::move(dims)}, {"basis", to_json(flag.basis)}, {"blocks", std::move(blocks)}};
}

Json to_json(const NumberFieldAction& nf) {
  Json mult = Json::array();
  for (const auto& g : nf.multipliers) mult.push_back(to_json(g));
  return {{"degree", nf.degree()},
          {"minpoly", to_json(nf.f)},
          {"minpoly_text", nf.f.str("x")},
          {"multipliers", std::move(mult)},
          {"basis_map", to_json(nf.basis_map)}};
}

namespace {

const char* certainty(Certainty c) { return c == Certainty::Exact ? "exact" : "numeric"; }

}  // namespace

Json to_json(const WeightAnalysis& wa) {
  Json blocks = Json::array(), weights = Json::array(), classes = Json::array(), zeros = Json::array();
  for (const auto& b : wa.blocks) {
    Json primes = Json::array();
    for (const auto& p : b.primes) primes.push_back(p.get_str());
    blocks.push_back({{"field", to_json(b.nf)},
                      {"real_places", b.roots.real.size()},
                      {"complex_places", b.roots.upper.size()},
                      {"primes", std::move(primes)}});
  }
  for (std::size_t i = 0; i < wa.weights.size(); ++i) {
    const auto& w = wa.weights[i];
    Json entries = Json::array();
    for (const auto& e : w.entries) entries.push_back(to_json(e));
    Json jw{{"index", i}, {"block", w.block}, {"place", w.place.label()}, {"delta", w.delta}, {"zero", w.zero}};
    if (w.is_padic()) {
      Json ex = Json::array();
      for (const auto& c : w.exact) ex.push_back(to_string(c));
      jw["log_prime_coefficients"] = std::move(ex);
    }
    jw["entries"] = std::move(entries);
    weights.push_back(std::move(jw));
  }
  for (const auto& c : wa.partition.classes) {
    Json members = Json::array();
    for (auto m : c.members) members.push_back(m);
    classes.push_back({{"members", std::move(members)},
                       {"dimension", c.dimension},
                       {"certainty", certainty(c.certainty)},
                       {"warning", c.warning}});
  }
  for (auto z : wa.partition.zero_weights) zeros.push_back(z);
  return {{"flag", to_json(wa.flag)},
          {"blocks", std::move(blocks)},
          {"weights", std::move(weights)},
          {"classes", std::move(classes)},
          {"zero_weights", std::move(zeros)}};
}

Json to_json(const HorosphericalReport& h) {
  Json split = Json::object();
  for (const auto& [k, v] : h.split) split[k] = v;
  auto list = [](const std::vector<std::size_t>& v) {
    Json a = Json::array();
    for (auto x : v) a.push_back(x);
    return a;
  };
  return {{"stable", list(h.stable)},
          {"neutral", list(h.neutral)},
          {"unstable", list(h.unstable)},
          {"dimension", h.dimension},
          {"split", std::move(split)}};
}

Json to_json(const LogCombination& c) {
  Json exact = Json::array();
  for (const auto& [p, q] : c.padic) exact.push_back({{"prime", p.get_str()}, {"coefficient", to_string(q)}});
  Json j{{"exact", std::move(exact)}};
  j["archimedean"] = c.has_arch() ? to_json(c.arch) : Json(nullptr);
  j["value"] = to_json(c.value());
  j["text"] = c.str();
  return j;
}

Json to_json(const EntropyReport& r) {
  Json blocks = Json::array(), classes = Json::array();
  for (const auto& b : r.per_block) blocks.push_back(to_json(b));
  for (const auto& c : r.per_class) classes.push_back({{"class", c.cls}, {"entropy", to_json(c.value)}});
  return {{"n", to_json(r.n)},
          {"units", r.units},
          {"per_block", std::move(blocks)},
          {"per_class", std::move(classes)},
          {"total", to_json(r.total)}};
}

Json to_json(const KappaResult& k) {
  Json j{{"value", to_json(k.value)}};
  j["exact"] = k.exact ? Json(to_string(*k.exact)) : Json(nullptr);
  j["proper"] = k.proper;
  j["below_one"] = k.below_one;
  return j;
}

Json to_json(const LinearForm& lf) {
  Json res = Json::array();
  for (const auto& [n, r] : lf.residuals) res.push_back({{"n", to_json(n)}, {"residual", to_json(r)}});
  return {{"class", lf.cls}, {"c", to_json(lf.c)}, {"consistent", lf.consistent}, {"residuals", std::move(res)}};
}

Json to_json(const ShapeReport& r) {
  Json rows = Json::array(), notes = Json::array();
  for (const auto& row : r.rows) {
    Json jr{{"n", to_json(row.n)},
            {"class", row.cls},
            {"measure", row.measure.str()},
            {"reference", row.reference.str()},
            {"ratio", to_json(row.value.value)}};
    if (row.value.exact) jr["exact"] = to_string(*row.value.exact);
    rows.push_back(std::move(jr));
  }
  for (const auto& n : r.notes) notes.push_back(n);
  Json j{{"constant", r.constant}, {"kappa", to_json(r.kappa)}};
  j["exact"] = r.exact ? Json(to_string(*r.exact)) : Json(nullptr);
  j["notes"] = std::move(notes);
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const TotalIrreducibility& t) {
  Json j{{"irreducible", t.irreducible},
         {"totally_irreducible", t.totally_irreducible},
         {"degree_bound", t.degree_bound},
         {"M", t.M.get_str()},
         {"truncated", t.truncated}};
  j["sublattice"] = t.sublattice ? to_json(*t.sublattice) : Json(nullptr);
  j["witness"] = t.witness ? to_json(*t.witness) : Json(nullptr);
  return j;
}

Json to_json(const VirtualCyclicity& v) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < v.relations.basis.size(); ++i)
    basis.push_back({{"vector", to_json(v.relations.basis[i])}, {"order", v.relations.orders[i]}});
  Json j{{"verdict", to_string(v.verdict)}, {"rank", v.relations.rank}, {"relations", std::move(basis)}};
  j["offending"] = v.offending ? to_json(*v.offending) : Json(nullptr);
  return j;
}

Json to_json(const FactorCheck& f) {
  Json j{{"verdict", to_string(f.verdict)}};
  j["witness"] = f.witness ? to_json(*f.witness) : Json(nullptr);
  return j;
}

Json to_json(const ComparisonReport& r) {
  Json j{{"disjoint", to_string(r.disjoint)}, {"hypothesis_holds", r.hypothesis_holds}};
  j["lattice"] = r.lattice ? to_json(*r.lattice) : Json(nullptr);
  if (r.embedding) {
    Json orders = Json::array();
    for (auto o : r.embedding->orders) orders.push_back(o);
    j["embedding"] = {{"block1", r.embedding->block1},
                      {"block2", r.embedding->block2},
                      {"field", to_json(r.embedding->field)},
                      {"theta1", to_json(r.embedding->theta1)},
                      {"theta2", to_json(r.embedding->theta2)},
                      {"orders", std::move(orders)}};
  } else {
    j["embedding"] = nullptr;
  }
  j["weakly_isomorphic"] = r.weakly_isomorphic;
  j["joining_annihilator"] = r.joining ? to_json(*r.joining) : Json(nullptr);
  Json prod = Json::array();
  for (const auto& p : r.restricted_product) prod.push_back(to_json(p));
  j["restricted_product"] = std::move(prod);
  Json notes = Json::array();
  for (const auto& n : r.notes) notes.push_back(n);
  j["notes"] = std::move(notes);
  return j;
}

Json to_json(const TorsionGroup& g) {
  Json elems = Json::array();
  for (std::size_t i = 0; i < g.elements.size(); ++i)
    elems.push_back({{"matrix", to_json(g.elements[i])}, {"order", g.orders[i]}});
  return {{"order", g.elements.size()}, {"complete", g.complete}, {"note", g.note}, {"elements", std::move(elems)}};
}

}  // namespace algdyn
