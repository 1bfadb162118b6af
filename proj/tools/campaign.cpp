#include "cli.hpp"
#include "report.hpp"

#include "rca/calculus.hpp"
#include "rca/errors.hpp"
#include "rca/fuzz.hpp"
#include "rca/syntax.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <thread>

namespace rca::cli {

namespace {

using nlohmann::json;

struct Item {
  std::size_t index = 0;
  bool ok = true;
  std::vector<std::string> failures;
  json fields = json::object();
  std::string cexText;
  std::string cexExt;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

using SuiteFn = std::function<void(Rng&, const CampaignOptions&, Item&)>;

void fcaItem(Rng& rng, const CampaignOptions&, Item& it) {
  const std::size_t n = uniformBetween(rng, 1, 6), m = uniformBetween(rng, 1, 6);
  const double density = 0.2 + 0.15 * static_cast<double>(uniformIndex(rng, 5));
  FormalContext ctx = randomContext(rng, n, m, density);
  it.cexText = printContext(ctx);
  it.cexExt = "ctx";
  ConceptLattice cl = enumerateConcepts(ctx);

  std::set<std::vector<std::size_t>> closed;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Subset b(n);
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1u) b.set(a);
    closed.insert(members(ctx.down(ctx.up(b))));
  }
  std::set<std::vector<std::size_t>> found;
  for (const auto& c : cl.concepts()) {
    found.insert(members(c.extent));
    it.expect(ctx.up(c.extent) == c.intent && ctx.down(c.intent) == c.extent, "concept is not Galois-closed");
  }
  it.expect(found == closed && found.size() == cl.size(), "concept set differs from the subset-closure oracle");
  auto law = cl.lattice().checkLaws();
  it.expect(!law, law ? "lattice law: " + law->describe() : "");
  it.expect(checkBirkhoff(cl.lattice()).isomorphic, "Birkhoff representation is not isomorphic");
  it.fields["concepts"] = cl.size();
}

void roughItem(Rng& rng, const CampaignOptions&, Item& it) {
  RoughFormalContext g = randomRfc(rng, 5, 5);
  it.cexText = printRoughContext(g);
  it.cexExt = "ctx";
  CheckResult l1 = verifySandwich(g);
  it.expect(l1.ok, "S<=I<=R: " + l1.detail);
  bool amenable = isAmenable(g).amenable();
  it.fields["amenable"] = amenable;
  if (!amenable) return;
  CheckResult l2 = verifyKB(g);
  it.expect(l2.ok, "R;R<=R, S<=S;S: " + l2.detail);
  try {
    compose(deriveLax(g), deriveLax(g), g.ctx);
    compose(deriveStrict(g), deriveStrict(g), g.ctx);
  } catch (const std::logic_error& e) {
    it.expect(false, std::string("composition clauses disagree: ") + e.what());
  }
  ModalLattice m = complexAlgebra(g);
  AlgebraReport r = checkAKA(m);
  it.expect(r.ok(), r.ok() ? "" : "complex algebra fails " + r.firstFailure()->name);
  if (r.ok()) {
    AlgebraReport d = checkDerived(m);
    it.expect(d.ok(), d.ok() ? "" : "derived law fails: " + d.firstFailure()->name);
  }
}

bool kia3lAgree(const ModalLattice& m, bool& holds) {
  holds = checkKIA3l(m).ok;
  bool hetero = checkHKIA3l(factorize(m)).ok;
  bool single = checkInequality(m, axiomByName("kia3l-single").statement.conclusion).valid;
  return holds == hetero && holds == single;
}

void algebraItem(Rng& rng, const CampaignOptions& opts, Item& it) {
  static const AlgebraClass classes[] = {AlgebraClass::AKA, AlgebraClass::AKA5p, AlgebraClass::KIA3s,
                                         AlgebraClass::KIA3l};
  AlgebraClass cls = classes[uniformIndex(rng, 4)];
  std::optional<ModalLattice> cm;
  if (cls == AlgebraClass::AKA && coin(rng)) cm = randomComplexAKA(rng, 32);
  ModalLattice m = cm ? *cm : randomDirectAKA(rng, opts.maxSize, cls);
  it.cexText = printModalAlgebra(m);
  it.cexExt = "alg";
  it.fields["class"] = className(cls);
  it.fields["size"] = m.size();
  it.fields["complex"] = cm.has_value();

  AlgebraReport r = checkAKA(m);
  it.expect(r.ok(), r.ok() ? "" : "generated algebra fails " + r.firstFailure()->name);
  if (!r.ok()) return;
  it.expect(inClass(m, cls), "generated algebra is outside " + className(cls));
  AlgebraReport d = checkDerived(m);
  it.expect(d.ok(), d.ok() ? "" : "derived law fails: " + d.firstFailure()->name);

  HeterogeneousAlgebra h = factorize(m);
  AlgebraReport hr = checkHAKA(h);
  it.expect(hr.ok(), hr.ok() ? "" : "factorization fails " + hr.firstFailure()->name);
  ModalLattice back = recompose(h);
  auto v1 = checkModalIsomorphism(m, back, roundTripIsomorphism(m));
  it.expect(!v1, v1 ? "m vs recompose(factorize(m)): " + v1->describe() : "");
  HeterogeneousAlgebra rebuilt = factorize(back);
  auto v2 = checkHeteroIsomorphism(h, rebuilt, roundTripIsomorphism(h, rebuilt));
  it.expect(!v2, v2 ? "h vs factorize(recompose(h)): " + v2->describe() : "");

  bool holds = false, mutantHolds = true;
  it.expect(kia3lAgree(m, holds), "K-IA3l forms disagree");
  it.expect(kia3lAgree(breakKIA3l(m), mutantHolds), "K-IA3l forms disagree on the mutant");
  it.fields["kia3l"] = holds;
  it.fields["mutant_kia3l"] = mutantHolds;
}

Calculus calculusFor(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::AKA5p: return Calculus::AKA5p;
    case AlgebraClass::KIA3l: return Calculus::KIA3l;
    default: return Calculus::AKA;
  }
}

void calculusItem(Rng& rng, const CampaignOptions& opts, Item& it) {
  static const AlgebraClass classes[] = {AlgebraClass::AKA, AlgebraClass::AKA5p, AlgebraClass::KIA3l};
  AlgebraClass cls = classes[uniformIndex(rng, 3)];
  HeterogeneousAlgebra h = randomHAKA(rng, opts.maxSize, cls);
  it.cexText = printHeteroAlgebra(h);
  it.cexExt = "alg";
  it.fields["class"] = className(cls);
  std::size_t proofs = 0;
  for (const Proof& p : axiomLibrary(calculusFor(cls))) {
    SoundnessReport r = checkSoundness(p, h, true);
    it.expect(r.sound, p.name + " is not sound at node " + std::to_string(r.path.size()));
    ++proofs;
  }
  it.fields["proofs"] = proofs;

  Node f = randomFormula(rng, 2, TypeTag::L, {"p", "q"});
  while (f.op() == Op::Atom) f = randomFormula(rng, 2, TypeTag::L, {"p", "q"});
  ProofTree t = principalCutOn(f, coin(rng));
  CutElimination ce = eliminateCuts(t);
  bool decreasing = std::all_of(ce.steps.begin(), ce.steps.end(),
                                [](const CutStep& s) { return s.rankAfter < s.rankBefore; });
  it.expect(ce.complete, "cut elimination stuck on " + printNode(f) + ": " + ce.stuck);
  it.expect(ce.tree.conclusion == t.conclusion, "cut elimination changed the end-sequent");
  it.expect(decreasing, "cut rank did not decrease at every step");
  it.expect(checkProof(ce.tree, Calculus::AKA).valid, "cut-free proof does not re-check");
  it.fields["cut_formula"] = printNode(f);
  if (!ce.complete || !decreasing) {
    it.cexText = printProof(Proof{"cut", Calculus::AKA, {}, t});
    it.cexExt = "proof";
  }
}

struct Suite {
  const char* name;
  std::uint32_t id;
  SuiteFn fn;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> s = {
      {"fca", 1, fcaItem}, {"rough", 2, roughItem}, {"algebra", 3, algebraItem}, {"calculus", 4, calculusItem}};
  return s;
}

Rng itemRng(std::uint64_t seed, std::uint32_t suite, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), suite,
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

std::vector<Item> runSuite(const Suite& s, const RunConfig& cfg, const CampaignOptions& opts) {
  std::vector<Item> items(opts.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
      Item& it = items[i];
      it.index = i;
      Rng rng = itemRng(cfg.seed, s.id, i);
      try {
        s.fn(rng, opts, it);
      } catch (const std::exception& e) {
        it.expect(false, std::string("exception: ") + e.what());
      }
    }
  };
  std::size_t jobs = std::min<std::size_t>(std::max<std::size_t>(cfg.jobs, 1), std::max<std::size_t>(opts.count, 1));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return items;
}

std::string joinFailures(const std::vector<std::string>& f) {
  std::string s;
  for (const auto& x : f) s += (s.empty() ? "" : "; ") + x;
  return s;
}

}  // namespace

int runCampaign(const RunConfig& cfg, const CampaignOptions& opts, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  Reporter rep(out, cfg.json, "fuzz");
  std::size_t violations = 0;
  for (const Suite& s : suites()) {
    if (opts.suite != "all" && opts.suite != s.name) continue;
    std::vector<Item> items = runSuite(s, cfg, opts);
    std::size_t bad = 0;
    for (const Item& it : items) {
      json f = it.fields;
      f["suite"] = s.name;
      f["index"] = it.index;
      f["seed"] = cfg.seed;
      std::string cexPath;
      if (!it.ok) {
        ++bad;
        f["failures"] = it.failures;
        if (opts.writeFiles && !it.cexText.empty()) {
          cexPath = (fs::path(opts.outDir) / (std::string(s.name) + "-" + std::to_string(cfg.seed) + "-" +
                                              std::to_string(it.index) + "." + it.cexExt))
                        .string();
          fs::create_directories(opts.outDir);
          std::ofstream(cexPath, std::ios::binary) << it.cexText;
          f["counterexample"] = cexPath;
        }
      }
      if (cfg.json || !it.ok)
        rep.check(std::string(s.name) + "#" + std::to_string(it.index), it.ok,
                  joinFailures(it.failures) + (cexPath.empty() ? "" : " [" + cexPath + "]"), f);
    }
    violations += bad;
    std::string summary = std::string(s.name) + ": " + std::to_string(items.size()) + " items, " +
                          std::to_string(bad) + " violations";
    if (s.id == 2) {
      auto n = std::count_if(items.begin(), items.end(), [](const Item& i) { return i.fields.value("amenable", false); });
      summary += ", " + std::to_string(n) + " amenable";
    } else if (s.id == 3) {
      auto n = std::count_if(items.begin(), items.end(), [](const Item& i) { return !i.fields.value("kia3l", true); });
      auto mut = std::count_if(items.begin(), items.end(),
                               [](const Item& i) { return !i.fields.value("mutant_kia3l", true); });
      summary += ", " + std::to_string(n) + " fail K-IA3l, " + std::to_string(mut) + " mutants fail K-IA3l";
    }
    rep.info("summary", summary, {{"suite", s.name}, {"items", items.size()}, {"violations", bad}});
  }
  if (violations) err << violations << " property violations\n";
  return violations ? kViolation : kOk;
}

}  // namespace rca::cli
