#include "cli.hpp"
#include "report.hpp"

#include "rca/calculus.hpp"
#include "rca/context.hpp"
#include "rca/errors.hpp"
#include "rca/fuzz.hpp"
#include "rca/kent.hpp"
#include "rca/rough.hpp"
#include "rca/syntax.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace rca::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::size_t defaultJobs() {
  if (const char* env = std::getenv("RCA_JOBS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::string& path, const std::string& text) {
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

ContextFile loadContext(const std::string& path) {
  std::string text = readFile(path);
  if (fs::path(path).extension() == ".cxt") return {parseBurmeister(text, path), std::nullopt};
  return parseContextFile(text, path);
}

std::string joinIdx(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

std::string pathString(const std::vector<std::size_t>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "." : "") + std::to_string(p[i]);
  return s + "]";
}

std::string relationRows(const BinaryRelation& r) {
  std::string s;
  for (std::size_t a = 0; a < r.domainSize(); ++a) {
    s += "  ";
    for (std::size_t x = 0; x < r.codomainSize(); ++x) s += r.contains(a, x) ? 'X' : '.';
    s += '\n';
  }
  return s;
}

std::string assignmentString(const Assignment& v) {
  std::string s;
  for (const auto& [k, x] : v) s += (s.empty() ? "" : ", ") + k + "=" + std::to_string(x);
  return s;
}

ConceptBounds conceptBounds(const Bounds& b) { return {b.maxObjects, b.maxFeatures, b.maxConcepts}; }

void addBoundFlags(CLI::App* sub, Bounds& b) {
  sub->add_option("--max-objects", b.maxObjects, "context object cap")->capture_default_str();
  sub->add_option("--max-features", b.maxFeatures, "context feature cap")->capture_default_str();
  sub->add_option("--max-concepts", b.maxConcepts, "concept count cap")->capture_default_str();
  sub->add_option("--max-lattice", b.maxLattice, "algebra carrier cap")->capture_default_str();
  sub->add_option("--max-evaluations", b.maxEvaluations, "assignment cap for term checks")->capture_default_str();
}

// ---- concepts ----

int cmdConcepts(const RunConfig& cfg, const std::string& file, const std::string& dotFile, std::ostream& out) {
  Reporter rep(out, cfg.json, "concepts");
  ContextFile cf = loadContext(file);
  ConceptLattice cl = enumerateConcepts(cf.ctx, conceptBounds(cfg.bounds));
  const Lattice& l = cl.lattice();
  auto edges = l.hasseEdges();
  const Concept& top = cl.at(l.top());
  const Concept& bot = cl.at(l.bottom());
  json edgeJson = json::array();
  for (auto [a, b] : edges) edgeJson.push_back({a, b});
  json conceptsJson = json::array();
  for (const auto& c : cl.concepts()) conceptsJson.push_back({{"extent", members(c.extent)}, {"intent", members(c.intent)}});

  std::ostringstream text;
  text << cl.size() << (cl.size() == 1 ? " concept" : " concepts") << '\n';
  for (std::size_t i = 0; i < cl.size(); ++i)
    text << "  c" << i << " extent " << formatSubset(cl.at(i).extent) << " intent " << formatSubset(cl.at(i).intent) << '\n';
  text << "top c" << l.top() << " extent " << formatSubset(top.extent) << '\n';
  text << "bottom c" << l.bottom() << " intent " << formatSubset(bot.intent) << '\n';
  text << edges.size() << " hasse edges";
  for (auto [a, b] : edges) text << "\n  c" << a << " < c" << b;
  rep.info("lattice", text.str(),
           {{"concepts", cl.size()}, {"list", conceptsJson}, {"top", l.top()}, {"bottom", l.bottom()}, {"hasse", edgeJson}});

  if (!dotFile.empty()) {
    std::vector<std::string> labels;
    for (const auto& c : cl.concepts()) labels.push_back(formatSubset(c.extent) + " / " + formatSubset(c.intent));
    writeFile(dotFile, latticeToDot(l, labels));
  }
  return kOk;
}

// ---- rough ----

json checkJson(const CheckResult& c) {
  json j = {{"ok", c.ok}};
  if (c.witness) j["witness"] = {c.witness->first, c.witness->second};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

std::string checkText(const CheckResult& c) {
  if (c.ok) return "holds";
  std::string s = c.detail;
  if (c.witness) s += " (witness " + std::to_string(c.witness->first) + ", " + std::to_string(c.witness->second) + ")";
  return s;
}

int cmdRough(const RunConfig& cfg, const std::string& file, bool derive, bool amenable, bool lemmas, std::ostream& out) {
  ContextFile cf = loadContext(file);
  if (!cf.partition) throw UsageError(file + ": rough needs a partition: block");
  RoughFormalContext g(cf.ctx, *cf.partition);
  if (!derive && !amenable && !lemmas) derive = amenable = lemmas = true;
  Reporter rep(out, cfg.json, "rough");
  int code = kOk;

  if (derive) {
    BinaryRelation r = deriveLax(g), s = deriveStrict(g);
    const BinaryRelation& i = g.ctx.incidence();
    std::string text = "R =\n" + relationRows(r) + "S =\n" + relationRows(s);
    if (r == i && s == i) text += "R = S = I";
    else text += std::string("R ") + (r == i ? "=" : "!=") + " I, S " + (s == i ? "=" : "!=") + " I";
    rep.info("derive", text, {{"R", r.pairs()}, {"S", s.pairs()}, {"R_eq_I", r == i}, {"S_eq_I", s == i}});
  }

  AmenabilityReport ar = isAmenable(g);
  if (amenable) {
    rep.check("I-compatible(E)", ar.e.ok, checkText(ar.e), checkJson(ar.e));
    rep.check("I-compatible(R)", ar.r.ok, checkText(ar.r), checkJson(ar.r));
    rep.check("I-compatible(S)", ar.s.ok, checkText(ar.s), checkJson(ar.s));
    if (!ar.amenable()) code = kViolation;
  }

  if (lemmas) {
    CheckResult l1 = verifySandwich(g);
    rep.check("sandwich S<=I<=R", l1.ok, checkText(l1), checkJson(l1));
    if (!l1.ok) code = kViolation;
    if (!ar.amenable()) {
      const CheckResult& why = !ar.e.ok ? ar.e : !ar.r.ok ? ar.r : ar.s;
      std::string reason = "refused: the context is not amenable (" + checkText(why) + ")";
      rep.check("composition R;R<=R, S<=S;S", false, reason, {{"refused", true}, {"reason", reason}});
      return kUsage;
    }
    CheckResult l2 = verifyKB(g);
    rep.check("composition R;R<=R, S<=S;S", l2.ok, checkText(l2), checkJson(l2));
    if (!l2.ok) code = kViolation;
  }
  return code;
}

// ---- algebra ----

json verdictJson(const AxiomVerdict& v) {
  json j = {{"law", v.name}, {"ok", v.ok}};
  if (!v.witness.empty()) j["witness"] = v.witness;
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

std::string verdictText(const AxiomVerdict& v) {
  if (v.ok) return "holds";
  std::string s = "fails";
  if (!v.witness.empty()) s += " at (" + joinIdx(v.witness) + ")";
  if (!v.detail.empty()) s += ": " + v.detail;
  return s;
}

void reportAll(Reporter& rep, const AlgebraReport& r, bool quietPasses) {
  for (const auto& v : r.verdicts)
    if (!v.ok || !quietPasses) rep.check(v.name, v.ok, verdictText(v), verdictJson(v));
}

std::optional<AlgebraClass> parseClass(const std::string& s) {
  if (s == "aka") return AlgebraClass::AKA;
  if (s == "aka5p") return AlgebraClass::AKA5p;
  if (s == "kia3s") return AlgebraClass::KIA3s;
  if (s == "kia3l") return AlgebraClass::KIA3l;
  return std::nullopt;
}

struct AlgebraInput {
  std::optional<ModalLattice> modal;
  std::optional<HeterogeneousAlgebra> hetero;
};

AlgebraInput loadAlgebra(const RunConfig& cfg, const std::string& file, const std::string& fromContext) {
  AlgebraInput in;
  if (!fromContext.empty()) {
    ContextFile cf = loadContext(fromContext);
    if (!cf.partition) throw UsageError(fromContext + ": --from-context needs a partition: block");
    in.modal = complexAlgebra(RoughFormalContext(cf.ctx, *cf.partition), conceptBounds(cfg.bounds));
  } else {
    std::string text = readFile(file);
    if (detectAlgebraKind(text, file) == AlgebraKind::Modal) in.modal = parseModalAlgebra(text, file);
    else in.hetero = parseHeteroAlgebra(text, file);
  }
  std::size_t n = in.modal ? in.modal->size() : in.hetero->L.size();
  if (n > cfg.bounds.maxLattice)
    throw CapacityError("algebra has " + std::to_string(n) + " elements, cap is " + std::to_string(cfg.bounds.maxLattice));
  return in;
}

int cmdAlgebra(const RunConfig& cfg, const std::string& file, const std::string& fromContext,
               std::optional<std::string> check, bool derived, bool factor, const std::string& outFile, bool roundtrip,
               const std::string& dotFile, bool verbose, std::ostream& out) {
  if (file.empty() == fromContext.empty()) throw UsageError("algebra takes either a file or --from-context");
  AlgebraInput in = loadAlgebra(cfg, file, fromContext);
  Reporter rep(out, cfg.json, "algebra");
  if (!check && !derived && !factor && !roundtrip && dotFile.empty()) check = "aka";

  if (!dotFile.empty()) writeFile(dotFile, latticeToDot(in.modal ? in.modal->lattice() : in.hetero->L));

  if (check) {
    std::string name = check->empty() ? "aka" : *check;
    auto cls = parseClass(name);
    if (!cls) throw UsageError("unknown class '" + name + "' (aka, aka5p, kia3s, kia3l)");
    if (in.modal) {
      AlgebraReport r = checkAKA(*in.modal);
      reportAll(rep, r, !verbose);
      if (*cls == AlgebraClass::AKA5p) {
        auto v = checkAKA5p(*in.modal);
        rep.check(v.name, v.ok, verdictText(v), verdictJson(v));
      } else if (*cls == AlgebraClass::KIA3s) {
        auto v = checkKIA3s(*in.modal);
        rep.check(v.name, v.ok, verdictText(v), verdictJson(v));
      } else if (*cls == AlgebraClass::KIA3l) {
        auto v = checkKIA3l(*in.modal);
        rep.check(v.name, v.ok, verdictText(v), verdictJson(v));
      }
    } else {
      AlgebraReport r = checkHAKA(*in.hetero);
      reportAll(rep, r, !verbose);
      if (r.ok()) {
        std::optional<AxiomVerdict> v;
        if (*cls == AlgebraClass::AKA5p) v = checkHAKA5p(*in.hetero);
        if (*cls == AlgebraClass::KIA3s) v = checkHKIA3s(*in.hetero);
        if (*cls == AlgebraClass::KIA3l) v = checkHKIA3l(*in.hetero);
        if (v) rep.check(v->name, v->ok, verdictText(*v), verdictJson(*v));
      }
    }
    if (rep.failures() == 0) rep.check("class " + name, true, "member", {{"class", name}});
  }

  if (derived) {
    if (!in.modal) throw UsageError("--derived needs a modal algebra");
    if (!checkAKA(*in.modal).ok()) {
      rep.check("derived", false, "refused: not an aKa");
    } else {
      reportAll(rep, checkDerived(*in.modal), !verbose);
      if (rep.failures() == 0) rep.check("derived", true, "all derived laws hold");
    }
  }

  if (factor) {
    if (!in.modal) throw UsageError("--factor needs a modal algebra");
    HeterogeneousAlgebra h = factorize(*in.modal);
    std::string text = printHeteroAlgebra(h);
    if (outFile.empty() && !cfg.json) out << text;
    if (!outFile.empty()) writeFile(outFile, text);
    rep.info("factor", outFile.empty() ? "" : "wrote " + outFile,
             {{"sizes", {h.L.size(), h.SI.size(), h.SC.size(), h.LI.size(), h.LC.size()}}, {"file", outFile}});
  }

  if (roundtrip) {
    if (in.modal) {
      ModalLattice back = recompose(factorize(*in.modal));
      auto map = roundTripIsomorphism(*in.modal);
      auto v = checkModalIsomorphism(*in.modal, back, map);
      rep.check("roundtrip m ~ recompose(factorize(m))", !v, v ? v->describe() : "isomorphic via identity",
                {{"map", map}});
      HeterogeneousAlgebra h = factorize(*in.modal);
      in.hetero = h;
    }
    HeterogeneousAlgebra rebuilt = factorize(recompose(*in.hetero));
    HeteroIsomorphism iso = roundTripIsomorphism(*in.hetero, rebuilt);
    auto v = checkHeteroIsomorphism(*in.hetero, rebuilt, iso);
    rep.check("roundtrip h ~ factorize(recompose(h))", !v, v ? v->describe() : "isomorphic",
              {{"L", iso.L}, {"S_I", iso.SI}, {"S_C", iso.SC}, {"L_I", iso.LI}, {"L_C", iso.LC}});
  }
  return rep.failures() ? kViolation : kOk;
}

// ---- proof ----

int cmdProof(const RunConfig& cfg, const std::string& file, const std::string& calcName, bool check, bool print,
             bool unicode, bool cutelim, std::size_t budget, const std::string& outFile, std::size_t soundness,
             std::size_t maxSize, const std::string& cexDir, const std::string& emitDir, std::ostream& out) {
  Reporter rep(out, cfg.json, "proof");
  if (!emitDir.empty()) {
    for (const Proof& p : axiomLibrary()) {
      std::string path = (fs::path(emitDir) / (p.name + ".proof")).string();
      writeFile(path, printProof(p));
      rep.info("emit", "wrote " + path, {{"file", path}, {"name", p.name}});
    }
    if (file.empty()) return kOk;
  }
  if (file.empty()) throw UsageError("proof needs a proof file");
  Proof p = parseProof(readFile(file), file);
  if (!calcName.empty()) {
    auto c = parseCalculus(calcName);
    if (!c) throw UsageError("unknown calculus '" + calcName + "' (aka, aka5p, kia3l)");
    p.calc = *c;
  }
  if (!check && !print && !cutelim && soundness == 0) check = true;

  if (print) {
    std::string text = unicode ? printSequent(p.tree.conclusion, Glyphs::Unicode) + "\n" + printProofTree(p.tree)
                               : printProof(p);
    if (cfg.json) rep.info("print", "", {{"text", text}});
    else out << text;
  }

  if (check) {
    ProofVerdict v = checkProof(p);
    json f = {{"calc", calculusName(p.calc)}, {"valid", v.valid}, {"size", proofSize(p.tree)}};
    if (!v.valid) {
      f["path"] = v.path;
      f["rule"] = v.rule;
      f["error"] = stepErrorName(v.step.error);
      f["message"] = v.step.message;
    }
    rep.check("check", v.valid, v.valid ? "valid in " + calculusName(p.calc) : v.describe(), f);
  }

  if (cutelim) {
    CutElimination r = eliminateCuts(p.tree, budget);
    json steps = json::array();
    std::ostringstream text;
    for (const auto& s : r.steps) {
      steps.push_back({{"path", s.path}, {"rank_before", s.rankBefore}, {"rank_after", s.rankAfter},
                       {"lifts", s.lifts}, {"reductions", s.reductions}});
      text << "\n  cut at " << pathString(s.path) << ": rank " << s.rankBefore << " -> " << s.rankAfter << " ("
           << s.lifts << " lifts, " << s.reductions << " reductions)";
    }
    bool preserved = r.tree.conclusion == p.tree.conclusion;
    ProofVerdict v = checkProof(Proof{p.name, p.calc, p.hypotheses, r.tree});
    bool ok = r.complete && preserved && v.valid;
    std::string summary = r.complete ? "cut-free after " + std::to_string(r.steps.size()) + " steps"
                                     : std::to_string(r.remainingCuts) + " cuts remain: " + r.stuck;
    if (!v.valid) summary += "; result does not re-check: " + v.describe();
    rep.check("cutelim", ok, summary + text.str(),
              {{"complete", r.complete}, {"remaining", r.remainingCuts}, {"steps", steps}, {"preserved", preserved},
               {"rechecks", v.valid}, {"stuck", r.stuck}});
    std::string proofText = printProof(Proof{p.name, p.calc, p.hypotheses, r.tree});
    if (!outFile.empty()) writeFile(outFile, proofText);
    else if (!cfg.json) out << proofText;
  }

  if (soundness > 0) {
    AlgebraClass cls = calculusClass(p.calc);
    Rng rng(cfg.seed);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < soundness; ++i) {
      HeterogeneousAlgebra h = randomHAKA(rng, maxSize, cls);
      SoundnessReport r = checkSoundness(p, h, false);
      if (!r.sound) {
        ++failures;
        std::string path = (fs::path(cexDir) / (p.name.empty() ? "proof" : p.name)).string() + "-" +
                           std::to_string(i) + ".alg";
        writeFile(path, printHeteroAlgebra(h));
        rep.check("soundness #" + std::to_string(i), false,
                  "end-sequent fails under " + assignmentString(*r.witness) + "; algebra written to " + path,
                  {{"index", i}, {"witness", *r.witness}, {"file", path}});
      }
    }
    rep.check("soundness", failures == 0,
              std::to_string(soundness - failures) + "/" + std::to_string(soundness) + " random " + className(cls) +
                  " algebras validate the end-sequent",
              {{"models", soundness}, {"failures", failures}, {"class", className(cls)}});
  }
  return rep.failures() ? kViolation : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rough concept algebra toolkit", "rca"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  cfg.jobs = defaultJobs();
  app.add_flag("--json", cfg.json, "one JSON record per check");

  std::string file, dotFile, fromContext, outFile, calcName, emitDir, cexDir = "counterexamples";
  bool derive = false, amenable = false, lemmas = false;
  bool derived = false, factor = false, roundtrip = false, verbose = false;
  bool check = false, print = false, unicode = false, cutelim = false;
  std::size_t budget = 1000, soundness = 0, maxSize = 8;
  std::optional<std::string> algCheck;
  CampaignOptions camp;

  auto* concepts = app.add_subcommand("concepts", "enumerate the concept lattice of a context");
  concepts->add_option("file", file, "context file (.ctx or Burmeister .cxt)")->required();
  concepts->add_option("--dot", dotFile, "write the Hasse diagram as DOT");
  addBoundFlags(concepts, cfg.bounds);

  auto* rough = app.add_subcommand("rough", "lax and strict relations of a rough context");
  rough->add_option("file", file, "context file with a partition block")->required();
  rough->add_flag("--derive", derive, "print R and S");
  rough->add_flag("--check-amenable", amenable, "E-definability and I-compatibility");
  rough->add_flag("--verify-lemmas", lemmas, "S<=I<=R, and R;R<=R, S<=S;S when amenable");

  auto* algebra = app.add_subcommand("algebra", "axiom checks, factorization and round trips");
  algebra->add_option("file", file, "algebra file");
  algebra->add_option("--from-context", fromContext, "use the complex algebra of a rough context");
  auto* checkOpt = algebra->add_option("--check", algCheck, "class to check: aka, aka5p, kia3s, kia3l")->expected(0, 1);
  algebra->add_flag("--derived", derived, "check the derived laws");
  algebra->add_flag("--factor", factor, "emit the heterogeneous algebra");
  algebra->add_option("--out", outFile, "file for --factor");
  algebra->add_flag("--roundtrip", roundtrip, "verify both round-trip isomorphisms");
  algebra->add_option("--dot", dotFile, "write the lattice as DOT");
  algebra->add_flag("--verbose", verbose, "report passing laws too");
  addBoundFlags(algebra, cfg.bounds);

  auto* proof = app.add_subcommand("proof", "check, rewrite and model-check proofs");
  proof->add_option("file", file, "proof file");
  proof->add_option("--calc", calcName, "override the calculus: aka, aka5p, kia3l");
  proof->add_flag("--check", check, "check every step");
  proof->add_flag("--print", print, "print the proof");
  proof->add_flag("--unicode", unicode, "print with the mathematical glyphs");
  proof->add_flag("--cutelim", cutelim, "eliminate cuts and emit the rewritten proof");
  proof->add_option("--budget", budget, "cut elimination step budget")->capture_default_str();
  proof->add_option("--out", outFile, "file for --cutelim output");
  proof->add_option("--soundness", soundness, "model-check on N random algebras of the matching class");
  proof->add_option("--seed", cfg.seed, "seed for --soundness")->capture_default_str();
  proof->add_option("--max-size", maxSize, "carrier cap for --soundness")->capture_default_str();
  proof->add_option("--counterexamples", cexDir, "directory for failing algebras")->capture_default_str();
  proof->add_option("--emit-library", emitDir, "write every library proof into a directory");

  auto* fuzz = app.add_subcommand("fuzz", "deterministic property campaign");
  fuzz->add_option("--suite", camp.suite, "all, fca, rough, algebra or calculus")
      ->check(CLI::IsMember({"all", "fca", "rough", "algebra", "calculus"}))
      ->capture_default_str();
  fuzz->add_option("--seed", cfg.seed, "campaign seed")->capture_default_str();
  fuzz->add_option("--count", camp.count, "items per suite")->capture_default_str();
  fuzz->add_option("--jobs", cfg.jobs, "worker threads (default from RCA_JOBS)");
  fuzz->add_option("--max-size", camp.maxSize, "algebra carrier cap")->capture_default_str();
  fuzz->add_option("--out", camp.outDir, "directory for counterexample files")->capture_default_str();
  fuzz->add_flag("!--no-files", camp.writeFiles, "do not write counterexample files");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (concepts->parsed()) return cmdConcepts(cfg, file, dotFile, out);
    if (rough->parsed()) return cmdRough(cfg, file, derive, amenable, lemmas, out);
    if (algebra->parsed()) {
      if (checkOpt->count() > 0 && !algCheck) algCheck = "aka";
      return cmdAlgebra(cfg, file, fromContext, algCheck, derived, factor, outFile, roundtrip, dotFile, verbose, out);
    }
    if (proof->parsed())
      return cmdProof(cfg, file, calcName, check, print, unicode, cutelim, budget, outFile, soundness, maxSize, cexDir,
                      emitDir, out);
    if (fuzz->parsed()) {
      if (cfg.jobs == 0) cfg.jobs = 1;
      return runCampaign(cfg, camp, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace rca::cli
