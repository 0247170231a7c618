#include "cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "algdyn/errors.hpp"
#include "algdyn/serialize.hpp"

namespace algdyn::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

IntVec parse_n(const std::string& text) {
  IntVec n;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      n.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("--n " + text + ": expected comma separated integers");
    }
  }
  if (n.empty()) throw ParseError("--n: empty vector");
  return n;
}

std::string vec_str(const IntVec& n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? ", " : "") + std::to_string(n[i]);
  return s + ")";
}

bool overlap(const Interval& a, const Interval& b) {
  return !(mpfr_less_p(a.hi(), b.lo()) || mpfr_less_p(b.hi(), a.lo()));
}

std::vector<IntVec> default_n(std::size_t d) {
  std::vector<IntVec> out;
  for (std::size_t j = 0; j < d; ++j) {
    IntVec e(d, 0);
    e[j] = 1;
    out.push_back(e);
  }
  if (d > 1) out.push_back(IntVec(d, 1));
  return out;
}

struct Context {
  const RunConfig& cfg;
  WeightConfig wc;
  ClassifyConfig cc;
  std::ostream& out;
};

// Accumulates one verification suite.
struct Suite {
  std::string name;
  std::size_t checked = 0;
  Json failures = Json::array();

  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
  bool passed() const { return failures.empty(); }
  Json json() const { return {{"name", name}, {"passed", passed()}, {"checked", checked}, {"failures", failures}}; }
};

SolenoidAction product_with_itself(const SolenoidAction& a) {
  std::vector<QMatrix> gens;
  for (const auto& g : a.generators) gens.push_back(block_diag(g, g));
  return SolenoidAction::make(std::move(gens), a.label + " x " + a.label);
}

std::vector<Suite> verify_suites(const SolenoidAction& a, const WeightConfig& wc) {
  WeightAnalysis wa = analyze_weights(a, wc);
  std::vector<IntVec> grid = sample_grid(a.d, 2);
  std::vector<Suite> suites;

  Suite pf{"product_formula"};
  for (std::size_t b = 0; b < wa.blocks.size(); ++b)
    for (const auto& n : grid)
      pf.check(check_product_formula(wa.blocks[b].nf, n, wc).contains_zero(),
               "block " + std::to_string(b) + " n = " + vec_str(n));
  suites.push_back(std::move(pf));

  std::vector<WeightAnalysis> blocks;
  for (const auto& b : wa.flag.blocks) blocks.push_back(analyze_weights(b, wc));
  Suite flag{"flag_additivity"}, cls{"class_additivity"}, sym{"symmetry"}, hom{"homogeneity"};
  for (const auto& n : grid) {
    EntropyReport h = haar_entropy(wa, n);
    Interval total = h.total.value();
    LogCombination sum(wc.bits);
    for (const auto& bw : blocks) sum += haar_entropy(bw, n).total;
    flag.check(overlap(total, sum.value()), "n = " + vec_str(n));
    LogCombination by_class(wc.bits);
    for (const auto& c : h.per_class) by_class += c.value;
    cls.check(overlap(total, by_class.value()), "n = " + vec_str(n));
    IntVec neg(n);
    for (auto& x : neg) x = -x;
    sym.check(overlap(total, haar_entropy(wa, neg).total.value()), "n = " + vec_str(n));
    for (int k = 2; k <= 5; ++k) {
      IntVec kn(n);
      for (auto& x : kn) x *= k;
      LogCombination hk = haar_entropy(wa, kn).total, scaled = h.total.scaled(Rat(k));
      hom.check(hk.padic == scaled.padic && overlap(hk.value(), scaled.value()),
                "n = " + vec_str(n) + ", k = " + std::to_string(k));
    }
  }
  for (auto* s : {&flag, &cls, &sym, &hom}) suites.push_back(std::move(*s));

  Suite shape{"shape_identity"};
  SolenoidAction prod = product_with_itself(a);
  std::vector<RatVec> diag;
  for (std::size_t i = 0; i < a.m; ++i) {
    RatVec v(2 * a.m, Rat(0));
    v[i] = 1;
    v[a.m + i] = -1;
    diag.push_back(std::move(v));
  }
  try {
    ShapeReport d = shape_identity_report(prod, HomogeneousMeasure::from_annihilator(QSubspace::span(diag, 2 * a.m)),
                                          a, 3, wc);
    shape.check(d.constant && d.kappa.contains(Rat(1)), "diagonal joining");
    ShapeReport f = shape_identity_report(prod, HomogeneousMeasure::full(2 * a.m), a, 3, wc);
    shape.check(f.constant && f.kappa.contains(Rat(2)), "full product");
  } catch (const DomainError& e) {
    shape.check(false, e.what());
  }
  suites.push_back(std::move(shape));
  return suites;
}

Json envelope(const Context& ctx) {
  Json inputs = Json::array();
  for (const auto& p : ctx.cfg.inputs) inputs.push_back(p);
  return {{"tool", "algdyn"},
          {"version", kVersion},
          {"command", ctx.cfg.command},
          {"seed", ctx.cfg.seed},
          {"precision", ctx.cfg.precision},
          {"index_bound", ctx.cfg.index_bound},
          {"inputs", std::move(inputs)}};
}

void text_entropy(std::ostream& out, const EntropyReport& r) {
  out << "n = " << vec_str(r.n) << "\n";
  out << "  total: " << r.total.str() << "  ~ " << r.total.value().str(17) << " nats\n";
  for (std::size_t b = 0; b < r.per_block.size(); ++b) out << "  block " << b << ": " << r.per_block[b].str() << "\n";
  for (const auto& c : r.per_class) out << "  class " << c.cls << ": " << c.value.str() << "\n";
}

void text_weights(std::ostream& out, const WeightAnalysis& wa) {
  out << "flag blocks: " << wa.flag.length() << "\n";
  for (std::size_t b = 0; b < wa.blocks.size(); ++b)
    out << "  block " << b << ": degree " << wa.blocks[b].nf.degree() << ", field " << wa.blocks[b].nf.f.str("x")
        << "\n";
  out << "weights:\n";
  for (std::size_t i = 0; i < wa.weights.size(); ++i) {
    const auto& w = wa.weights[i];
    out << "  " << i << "  block " << w.block << "  " << w.place.label() << "  delta " << w.delta << " :";
    for (const auto& e : w.entries) out << " " << e.str(10);
    if (w.zero) out << "  (zero)";
    out << "\n";
  }
  out << "coarse classes: " << wa.partition.classes.size() << "\n";
  for (std::size_t c = 0; c < wa.partition.classes.size(); ++c) {
    const auto& cc = wa.partition.classes[c];
    out << "  class " << c << ": dimension " << cc.dimension << ", members";
    for (auto m : cc.members) out << " " << m;
    out << (cc.certainty == Certainty::Exact ? ", exact" : ", numeric") << (cc.warning ? ", undecided pair" : "") << "\n";
  }
}

void text_classify(std::ostream& out, const TotalIrreducibility& t, const VirtualCyclicity& v, const FactorCheck& f,
                   const TorsionGroup& g) {
  out << "irreducible: " << (t.irreducible ? "true" : "false") << "\n";
  out << "totally_irreducible: " << (t.totally_irreducible ? "true" : "false") << "  (D = " << t.degree_bound
      << ", M = " << t.M.get_str() << (t.truncated ? ", truncated" : "") << ")\n";
  if (t.sublattice) out << "  reducible on diag" << vec_str(*t.sublattice) << " Z^d\n";
  out << "virtually_cyclic: " << to_string(v.verdict) << "  (rank " << v.relations.rank << ")\n";
  for (std::size_t i = 0; i < v.relations.basis.size(); ++i)
    out << "  relation " << vec_str(v.relations.basis[i]) << " of order " << v.relations.orders[i] << "\n";
  out << "virtually_cyclic_factor: " << to_string(f.verdict) << "\n";
  out << "commutant torsion: " << g.elements.size() << " elements" << (g.complete ? "" : " (heuristic)") << "\n";
}

int cmd_analyze(Context& ctx, const SolenoidAction& a, Json& result) {
  WeightAnalysis wa = analyze_weights(a, ctx.wc);
  auto t = total_irreducibility(a, ctx.cc);
  auto v = virtually_cyclic(a, ctx.cc);
  auto f = has_virtually_cyclic_factor(a, ctx.cc);
  auto g = commutant_torsion(a, ctx.cc);
  std::vector<IntVec> ns = ctx.cfg.n.empty() ? default_n(a.d) : ctx.cfg.n;
  Json ent = Json::array();
  std::vector<EntropyReport> reports;
  for (const auto& n : ns) {
    reports.push_back(haar_entropy(wa, n));
    Json e = to_json(reports.back());
    e["horospherical"] = to_json(stable_horospherical(wa, n));
    ent.push_back(std::move(e));
  }
  result = {{"action", to_json(a)},
            {"blocks", wa.flag.length()},
            {"coarse_classes", wa.partition.classes.size()},
            {"weights", to_json(wa)},
            {"total_irreducibility", to_json(t)},
            {"virtually_cyclic", to_json(v)},
            {"virtually_cyclic_factor", to_json(f)},
            {"commutant_torsion", to_json(g)},
            {"entropy", std::move(ent)}};
  if (!ctx.cfg.json) {
    ctx.out << "action: " << (a.label.empty() ? "(unlabeled)" : a.label) << "  d = " << a.d << ", m = " << a.m << "\n";
    text_weights(ctx.out, wa);
    text_classify(ctx.out, t, v, f, g);
    for (const auto& r : reports) text_entropy(ctx.out, r);
  }
  return kOk;
}

int cmd_entropy(Context& ctx, const SolenoidAction& a, Json& result) {
  WeightAnalysis wa = analyze_weights(a, ctx.wc);
  std::vector<IntVec> ns = ctx.cfg.n.empty() ? default_n(a.d) : ctx.cfg.n;
  result = Json::array();
  for (const auto& n : ns) {
    EntropyReport r = haar_entropy(wa, n);
    Json e = to_json(r);
    e["horospherical"] = to_json(stable_horospherical(wa, n));
    result.push_back(std::move(e));
    if (!ctx.cfg.json) text_entropy(ctx.out, r);
  }
  return kOk;
}

int cmd_weights(Context& ctx, const SolenoidAction& a, Json& result) {
  WeightAnalysis wa = analyze_weights(a, ctx.wc);
  result = to_json(wa);
  Json horo = Json::array();
  for (const auto& n : ctx.cfg.n) {
    HorosphericalReport h = stable_horospherical(wa, n);
    Json jh = to_json(h);
    jh["n"] = to_json(n);
    horo.push_back(std::move(jh));
    if (!ctx.cfg.json) {
      ctx.out << "n = " << vec_str(n) << ": stable classes";
      for (auto c : h.stable) ctx.out << " " << c;
      ctx.out << ", dimension " << h.dimension << "\n";
    }
  }
  result["horospherical"] = std::move(horo);
  if (!ctx.cfg.json) text_weights(ctx.out, wa);
  return kOk;
}

int cmd_classify(Context& ctx, const SolenoidAction& a, Json& result) {
  auto t = total_irreducibility(a, ctx.cc);
  auto v = virtually_cyclic(a, ctx.cc);
  auto f = has_virtually_cyclic_factor(a, ctx.cc);
  auto g = commutant_torsion(a, ctx.cc);
  result = {{"total_irreducibility", to_json(t)},
            {"virtually_cyclic", to_json(v)},
            {"virtually_cyclic_factor", to_json(f)},
            {"commutant_torsion", to_json(g)}};
  if (!ctx.cfg.json) text_classify(ctx.out, t, v, f, g);
  return kOk;
}

int cmd_compare(Context& ctx, const SolenoidAction& a1, const SolenoidAction& a2, Json& result) {
  ComparisonReport r = compare(a1, a2, ctx.cc);
  result = to_json(r);
  bool verified = !r.joining || verify_joining(r, a1.m, a2.m);
  result["joining_verified"] = verified;
  if (!ctx.cfg.json) {
    ctx.out << "disjoint: " << to_string(r.disjoint) << "\n";
    if (r.lattice) ctx.out << "Lambda: diag" << vec_str(*r.lattice) << " Z^d\n";
    if (r.joining) {
      ctx.out << "joining annihilator:";
      for (const auto& v : r.joining->basis()) {
        ctx.out << " (";
        for (std::size_t i = 0; i < v.size(); ++i) ctx.out << (i ? ", " : "") << to_string(v[i]);
        ctx.out << ")";
      }
      ctx.out << (verified ? "  verified" : "  NOT verified") << "\n";
    }
    ctx.out << "weakly isomorphic: " << (r.weakly_isomorphic ? "true" : "false") << "\n";
    for (const auto& n : r.notes) ctx.out << "note: " << n << "\n";
  }
  return verified ? kOk : kFailed;
}

int cmd_verify(Context& ctx, const SolenoidAction& a, Json& result) {
  std::vector<Suite> suites = verify_suites(a, ctx.wc);
  result = Json::array();
  bool all = true;
  for (const auto& s : suites) {
    result.push_back(s.json());
    all = all && s.passed();
    if (!ctx.cfg.json) {
      ctx.out << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.checked << " checks)\n";
      for (const auto& f : s.failures) ctx.out << "  " << f.get<std::string>() << "\n";
    }
  }
  return all ? kOk : kFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Context ctx{config, {}, {}, out};
  ctx.wc.bits = static_cast<mpfr_prec_t>(config.precision);
  ctx.wc.max_bits = std::max<mpfr_prec_t>(4096, ctx.wc.bits * 8);
  ctx.wc.seed = config.seed;
  ctx.cc.seed = config.seed;
  ctx.cc.bits = ctx.wc.bits;
  ctx.cc.index_bound = config.index_bound;
  try {
    if (config.inputs.empty()) throw ParseError("no input file");
    std::size_t want = config.command == "compare" ? 2 : 1;
    if (config.inputs.size() != want)
      throw ParseError(config.command + " expects " + std::to_string(want) + " input file(s)");
    SolenoidAction a = load_action(config.inputs[0]);
    for (const auto& n : config.n)
      if (n.size() != a.d)
        throw ParseError("--n " + vec_str(n) + " has length " + std::to_string(n.size()) + ", expected d = " +
                         std::to_string(a.d));
    Json result;
    int code = kOk;
    if (config.command == "analyze") code = cmd_analyze(ctx, a, result);
    else if (config.command == "entropy") code = cmd_entropy(ctx, a, result);
    else if (config.command == "weights") code = cmd_weights(ctx, a, result);
    else if (config.command == "classify") code = cmd_classify(ctx, a, result);
    else if (config.command == "compare") code = cmd_compare(ctx, a, load_action(config.inputs[1]), result);
    else if (config.command == "verify") code = cmd_verify(ctx, a, result);
    else throw ParseError("unknown command " + config.command);
    if (config.json) {
      Json doc = envelope(ctx);
      doc["result"] = std::move(result);
      doc["status"] = code == kOk ? "ok" : "failed";
      out << doc.dump(2) << "\n";
    }
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const CertificationError& e) {
    err << "certification failure at " << e.subject() << ": " << e.what() << "\n";
    return kCertification;
  } catch (const SeparationError& e) {
    err << "separation failure: " << e.what() << "\n";
    return kSeparation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact structure, entropy and rigidity data for commuting rational matrix actions", "algdyn"};
  RunConfig cfg;
  std::vector<std::string> ns;
  app.add_option("command", cfg.command, "analyze | entropy | weights | classify | compare | verify")
      ->required()
      ->check(CLI::IsMember({"analyze", "entropy", "weights", "classify", "compare", "verify"}));
  app.add_option("files", cfg.inputs, "action JSON file(s)")->required()->expected(1, 2);
  app.add_option("--n", ns, "exponent vector v1,v2,... (repeatable)")->take_all();
  app.add_option("--seed", cfg.seed, "seed for every randomized retry");
  app.add_option("--precision", cfg.precision, "working precision in bits")->check(CLI::Range(32L, 65536L));
  app.add_option("--index-bound", cfg.index_bound, "largest index of a searched sublattice");
  app.add_flag("--json", cfg.json, "emit a JSON report");
  app.set_version_flag("--version", std::string("algdyn ") + kVersion);
  try {
    app.parse(argc, argv);
    for (const auto& s : ns) cfg.n.push_back(parse_n(s));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << "algdyn " << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kParse;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  }
  return run(cfg, out, err);
}

}  // namespace algdyn::cli
