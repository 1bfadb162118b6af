#include "rca/calculus.hpp"
#include "rca/errors.hpp"
#include "rca/syntax.hpp"

#include <algorithm>
#include <sstream>

namespace rca {

namespace {

using Cals = std::vector<Calculus>;
const Cals kAll = {Calculus::AKA, Calculus::AKA5p, Calculus::KIA3l};

struct RuleText {
  const char* id;
  const char* group;
  bool invertible;
  bool printed;
  Principal principal;
  Cals calculi;
  std::vector<std::pair<std::vector<const char*>, const char*>> variants;
  const char* note;
};

// Rule schemas in the ASCII syntax; double-line rules list the upper sequent as premise.
const std::vector<RuleText>& ruleTexts() {
  using P = Principal;
  static const std::vector<RuleText> texts = {
      {"id", "identity", false, true, P::Both, kAll, {{{}, "?p |- ?p"}}, ""},
      {"cut", "identity", false, true, P::None, kAll, {{{"?x |- ?F", "?F |- ?y"}, "?x |- ?y"}}, ""},

      {"adLSI", "display", true, true, P::None, kAll,
       {{{"s.wI ?G |- ?X"}, "?G |- s.bsI ?X"}, {{"?X |- s.wI ?G"}, "s.bdI ?X |- ?G"}}, ""},
      {"adLSC", "display", true, true, P::None, kAll,
       {{{"?X |- s.wC ?D"}, "s.bdC ?X |- ?D"}, {{"s.wC ?D |- ?X"}, "?D |- s.bsC ?X"}},
       "second variant retyped: the printed form puts a general-lattice structure under the S_C connective"},
      {"adLLI", "display", true, false, P::None, kAll,
       {{{"s.dI ?P |- ?X"}, "?P |- s.bI ?X"}, {{"s.bI ?X |- ?P"}, "?X |- s.boxI ?P"}},
       "reconstructed from the adjunctions of the lax I-kernel"},
      {"adLLC", "display", true, false, P::None, kAll,
       {{{"s.dC ?S |- ?X"}, "?S |- s.bC ?X"}, {{"s.bC ?X |- ?S"}, "?X |- s.boxC ?S"}},
       "reconstructed from the adjunctions of the lax C-kernel"},

      {"wI-tI", "strict", true, true, P::None, kAll, {{{"s.wI s.tI |- ?X"}, "s.top |- ?X"}}, ""},
      {"wI-fI", "strict", true, true, P::None, kAll, {{{"?X |- s.wI s.fI"}, "?X |- s.bot"}}, ""},
      {"wC-tC", "strict", true, true, P::None, kAll, {{{"s.wC s.tC |- ?X"}, "s.top |- ?X"}}, ""},
      {"wC-fC", "strict", true, true, P::None, kAll, {{{"?X |- s.wC s.fC"}, "?X |- s.bot"}}, ""},
      {"bdI-wI", "strict", true, true, P::None, kAll, {{{"?G |- ?G2"}, "s.bdI s.wI ?G |- ?G2"}}, ""},
      {"bsI-wI", "strict", true, true, P::None, kAll, {{{"?G2 |- ?G"}, "?G2 |- s.bsI s.wI ?G"}}, ""},
      {"bdC-wC", "strict", true, true, P::None, kAll, {{{"?D |- ?D2"}, "s.bdC s.wC ?D |- ?D2"}}, ""},
      {"bsC-wC", "strict", true, true, P::None, kAll, {{{"?D2 |- ?D"}, "?D2 |- s.bsC s.wC ?D"}}, ""},
      {"wI-bdI", "strict", false, true, P::None, kAll, {{{"s.wI s.bdI ?X |- ?Y"}, "?X |- ?Y"}}, ""},
      {"wI-bsI", "strict", false, true, P::None, kAll, {{{"?Y |- s.wI s.bsI ?X"}, "?Y |- ?X"}}, ""},
      {"wC-bdC", "strict", false, true, P::None, kAll, {{{"s.wC s.bdC ?X |- ?Y"}, "?X |- ?Y"}}, ""},
      {"wC-bsC", "strict", false, true, P::None, kAll, {{{"?Y |- s.wC s.bsC ?X"}, "?Y |- ?X"}}, ""},

      {"bI-oneI", "lax", true, true, P::None, kAll, {{{"s.bI s.top |- ?P"}, "s.oneI |- ?P"}}, ""},
      {"bI-zeroI", "lax", true, true, P::None, kAll, {{{"?P |- s.bI s.bot"}, "?P |- s.zeroI"}}, ""},
      {"bC-oneC", "lax", true, true, P::None, kAll, {{{"s.bC s.top |- ?S"}, "s.oneC |- ?S"}}, ""},
      {"bC-zeroC", "lax", true, true, P::None, kAll, {{{"?S |- s.bC s.bot"}, "?S |- s.zeroC"}}, ""},
      {"dI-bI", "lax", false, true, P::None, kAll, {{{"?X |- ?Y"}, "s.dI s.bI ?X |- ?Y"}},
       "retyped over the general lattice; the printed form applies the bullet to a kernel structure"},
      {"boxI-bI", "lax", false, true, P::None, kAll, {{{"?Y |- ?X"}, "?Y |- s.boxI s.bI ?X"}},
       "retyped over the general lattice"},
      {"dC-bC", "lax", false, true, P::None, kAll, {{{"?X |- ?Y"}, "s.dC s.bC ?X |- ?Y"}},
       "retyped over the general lattice"},
      {"boxC-bC", "lax", false, true, P::None, kAll, {{{"?Y |- ?X"}, "?Y |- s.boxC s.bC ?X"}},
       "retyped over the general lattice"},
      {"bI-dI", "lax", true, true, P::None, kAll, {{{"?P |- ?P2"}, "s.bI s.dI ?P |- ?P2"}}, ""},
      {"bI-boxI", "lax", true, true, P::None, kAll, {{{"?P2 |- ?P"}, "?P2 |- s.bI s.boxI ?P"}}, ""},
      {"bC-dC", "lax", true, true, P::None, kAll, {{{"?S |- ?S2"}, "s.bC s.dC ?S |- ?S2"}}, ""},
      {"bC-boxC", "lax", true, true, P::None, kAll, {{{"?S2 |- ?S"}, "?S2 |- s.bC s.boxC ?S"}}, ""},

      {"corr-s", "correspondence", true, true, P::None, kAll,
       {{{"s.wI s.bdI ?X |- ?Y"}, "s.wC s.bdC ?X |- ?Y"}}, ""},
      {"corr-l", "correspondence", true, true, P::None, kAll,
       {{{"?Y |- s.boxI s.bI ?X"}, "?Y |- s.boxC s.bC ?X"}}, ""},

      {"bdI_L", "logical", false, true, P::Left, kAll, {{{"s.bdI ?A |- ?G"}, "bdI ?A |- ?G"}}, ""},
      {"bdI_R", "logical", false, true, P::Right, kAll, {{{"?X |- ?A"}, "s.bdI ?X |- bdI ?A"}}, ""},
      {"bsI_L", "logical", false, false, P::Left, kAll, {{{"?A |- ?X"}, "bsI ?A |- s.bsI ?X"}},
       "added by symmetry with the printed C-side rule"},
      {"bsI_R", "logical", false, false, P::Right, kAll, {{{"?G |- s.bsI ?A"}, "?G |- bsI ?A"}},
       "added by symmetry with the printed C-side rule"},
      {"bdC_L", "logical", false, false, P::Left, kAll, {{{"s.bdC ?A |- ?D"}, "bdC ?A |- ?D"}},
       "added by symmetry with the printed I-side rule"},
      {"bdC_R", "logical", false, false, P::Right, kAll, {{{"?X |- ?A"}, "s.bdC ?X |- bdC ?A"}},
       "added by symmetry with the printed I-side rule"},
      {"bsC_L", "logical", false, true, P::Left, kAll, {{{"?A |- ?X"}, "bsC ?A |- s.bsC ?X"}}, ""},
      {"bsC_R", "logical", false, true, P::Right, kAll, {{{"?D |- s.bsC ?A"}, "?D |- bsC ?A"}}, ""},
      {"wI_L", "logical", false, true, P::Left, kAll, {{{"s.wI ?al |- ?X"}, "wI ?al |- ?X"}}, ""},
      {"wI_R", "logical", false, true, P::Right, kAll, {{{"?X |- s.wI ?al"}, "?X |- wI ?al"}}, ""},
      {"wC_L", "logical", false, true, P::Left, kAll, {{{"s.wC ?de |- ?X"}, "wC ?de |- ?X"}}, ""},
      {"wC_R", "logical", false, true, P::Right, kAll, {{{"?X |- s.wC ?de"}, "?X |- wC ?de"}}, ""},
      {"dI_L", "logical", false, true, P::Left, kAll, {{{"s.dI ?pi |- ?X"}, "dI ?pi |- ?X"}}, ""},
      {"dI_R", "logical", false, true, P::Right, kAll, {{{"?P |- ?pi"}, "s.dI ?P |- dI ?pi"}}, ""},
      {"boxC_L", "logical", false, true, P::Left, kAll, {{{"?si |- ?S"}, "boxC ?si |- s.boxC ?S"}}, ""},
      {"boxC_R", "logical", false, true, P::Right, kAll, {{{"?X |- s.boxC ?si"}, "?X |- boxC ?si"}}, ""},
      {"bI_L", "logical", false, true, P::Left, kAll, {{{"s.bI ?A |- ?P"}, "bI ?A |- ?P"}}, ""},
      {"bI_R", "logical", false, true, P::Right, kAll, {{{"?P |- s.bI ?A"}, "?P |- bI ?A"}}, ""},
      {"bC_L", "logical", false, true, P::Left, kAll, {{{"s.bC ?A |- ?S"}, "bC ?A |- ?S"}}, ""},
      {"bC_R", "logical", false, true, P::Right, kAll, {{{"?S |- s.bC ?A"}, "?S |- bC ?A"}}, ""},

      {"top_L", "lattice", false, true, P::Left, kAll, {{{"s.top |- ?X"}, "top |- ?X"}}, ""},
      {"top_R", "lattice", false, true, P::Right, kAll, {{{}, "s.top |- top"}}, ""},
      {"bot_L", "lattice", false, true, P::Left, kAll, {{{}, "bot |- s.bot"}}, ""},
      {"bot_R", "lattice", false, true, P::Right, kAll, {{{"?X |- s.bot"}, "?X |- bot"}}, ""},
      {"and_L1", "lattice", false, true, P::Left, kAll, {{{"?A |- ?X"}, "?A /\\ ?B |- ?X"}}, ""},
      {"and_L2", "lattice", false, true, P::Left, kAll, {{{"?B |- ?X"}, "?A /\\ ?B |- ?X"}}, ""},
      {"and_R", "lattice", false, true, P::Right, kAll, {{{"?X |- ?A", "?X |- ?B"}, "?X |- ?A /\\ ?B"}}, ""},
      {"or_L", "lattice", false, true, P::Left, kAll, {{{"?A |- ?X", "?B |- ?X"}, "?A \\/ ?B |- ?X"}}, ""},
      {"or_R1", "lattice", false, true, P::Right, kAll, {{{"?X |- ?A"}, "?X |- ?A \\/ ?B"}}, ""},
      {"or_R2", "lattice", false, true, P::Right, kAll, {{{"?X |- ?B"}, "?X |- ?A \\/ ?B"}}, ""},
      {"and_Ls", "lattice", false, false, P::Left, kAll, {{{"?A s.and ?B |- ?X"}, "?A /\\ ?B |- ?X"}},
       "structural-context form used by the printed derivations"},
      {"and_Rs", "lattice", false, false, P::Right, kAll,
       {{{"?X |- ?A", "?Y |- ?B"}, "?X s.and ?Y |- ?A /\\ ?B"}}, "two-context form used by the printed derivations"},
      {"or_Rs", "lattice", false, false, P::Right, kAll, {{{"?X |- ?A s.or ?B"}, "?X |- ?A \\/ ?B"}},
       "structural-context form used by the printed derivations"},
      {"or_Ls", "lattice", false, false, P::Left, kAll,
       {{{"?A |- ?X", "?B |- ?Y"}, "?A \\/ ?B |- ?X s.or ?Y"}}, "two-context form used by the printed derivations"},

      {"aka5-1", "aka5p", false, true, P::None, {Calculus::AKA5p},
       {{{"s.dI ?P |- ?X"}, "s.wI s.bdI s.dI ?P |- ?X"}}, ""},
      {"aka5-2", "aka5p", false, true, P::None, {Calculus::AKA5p},
       {{{"?X |- s.boxC ?S"}, "?X |- s.wC s.bsC s.boxC ?S"}}, ""},
      {"aka5-3", "aka5p", false, true, P::None, {Calculus::AKA5p},
       {{{"s.dI s.bI s.wI ?G |- ?X"}, "s.wI ?G |- ?X"}}, ""},
      {"aka5-4", "aka5p", false, true, P::None, {Calculus::AKA5p},
       {{{"?X |- s.boxC s.bC s.wC ?D"}, "?X |- s.wC ?D"}}, ""},

      {"kia3l", "kia3l", false, true, P::None, {Calculus::KIA3l},
       {{{"?X |- s.boxI s.bI ?Y", "s.dC s.bC ?X |- ?Y"}, "?X |- ?Y"}}, ""},
  };
  return texts;
}

Rule buildRule(const RuleText& t) {
  Rule r;
  r.id = t.id;
  r.group = t.group;
  r.invertible = t.invertible;
  r.printed = t.printed;
  r.principal = t.principal;
  r.calculi = t.calculi;
  r.note = t.note;
  for (const auto& [prems, concl] : t.variants) {
    RuleVariant v;
    for (const char* p : prems) v.premises.push_back(parseSchema(p));
    v.conclusion = parseSchema(concl);
    r.variants.push_back(std::move(v));
  }
  return r;
}

// Weakening, contraction, exchange and associativity at the root of either side, for the
// binary structural pair of each type.
void addStructuralPackage(std::vector<Rule>& rules) {
  struct Pair {
    const char* suffix;
    const char* hat;
    const char* check;
  };
  const Pair pairs[] = {{"L", "s.and", "s.or"},
                        {"SI", "s.capI", "s.cupI"},
                        {"SC", "s.capC", "s.cupC"},
                        {"LI", "s.meetI", "s.joinI"},
                        {"LC", "s.meetC", "s.joinC"}};
  for (const auto& p : pairs) {
    const std::string h = p.hat, c = p.check, sfx = p.suffix;
    auto rule = [&](const std::string& name, bool invertible,
                    std::vector<std::pair<std::vector<std::string>, std::string>> vs) {
      Rule r;
      r.id = name + "_" + sfx;
      r.group = "structural";
      r.invertible = invertible;
      r.printed = false;
      r.calculi = kAll;
      r.note = "structural package";
      for (auto& [prems, concl] : vs) {
        RuleVariant v;
        for (auto& s : prems) v.premises.push_back(parseSchema(s));
        v.conclusion = parseSchema(concl);
        r.variants.push_back(std::move(v));
      }
      rules.push_back(std::move(r));
    };
    rule("W", false,
         {{{"?x |- ?y"}, "?x " + h + " ?z |- ?y"},
          {{"?x |- ?y"}, "?z " + h + " ?x |- ?y"},
          {{"?x |- ?y"}, "?x |- ?y " + c + " ?z"},
          {{"?x |- ?y"}, "?x |- ?z " + c + " ?y"}});
    rule("C", false, {{{"?x " + h + " ?x |- ?y"}, "?x |- ?y"}, {{"?x |- ?y " + c + " ?y"}, "?x |- ?y"}});
    rule("E", false,
         {{{"?x " + h + " ?z |- ?y"}, "?z " + h + " ?x |- ?y"}, {{"?x |- ?y " + c + " ?z"}, "?x |- ?z " + c + " ?y"}});
    rule("A", true,
         {{{"(?x " + h + " ?y) " + h + " ?z |- ?w"}, "?x " + h + " (?y " + h + " ?z) |- ?w"},
          {{"?w |- (?x " + c + " ?y) " + c + " ?z"}, "?w |- ?x " + c + " (?y " + c + " ?z)"}});
  }
}

using Bindings = std::map<std::string, Node>;

bool matchNode(const Node& pat, const Node& n, Bindings& b) {
  if (pat.op() == Op::Meta) {
    switch (metaKindOf(pat.name())) {
      case MetaKind::Formula:
        if (!n.isFormula()) return false;
        break;
      case MetaKind::Atom:
        if (n.op() != Op::Atom) return false;
        break;
      case MetaKind::Structure: break;
    }
    auto it = b.find(pat.name());
    if (it != b.end()) return it->second == n;
    b.emplace(pat.name(), n);
    return true;
  }
  if (pat.op() != n.op() || pat.arity() != n.arity() || pat.name() != n.name()) return false;
  for (std::size_t i = 0; i < pat.arity(); ++i)
    if (!matchNode(pat.arg(i), n.arg(i), b)) return false;
  return true;
}

bool matchSequent(const Sequent& pat, const Sequent& s, Bindings& b) {
  return matchNode(pat.lhs, s.lhs, b) && matchNode(pat.rhs, s.rhs, b);
}

std::optional<Node> instantiate(const Node& pat, const Bindings& b) {
  if (pat.op() == Op::Meta) {
    auto it = b.find(pat.name());
    if (it == b.end()) return std::nullopt;
    return it->second;
  }
  if (pat.arity() == 0) return pat;
  std::vector<Node> args;
  for (const auto& a : pat.args()) {
    auto x = instantiate(a, b);
    if (!x) return std::nullopt;
    args.push_back(*x);
  }
  return Node::make(pat.op(), std::move(args));
}

std::optional<Sequent> instantiate(const Sequent& pat, const Bindings& b) {
  auto l = instantiate(pat.lhs, b);
  auto r = instantiate(pat.rhs, b);
  if (!l || !r) return std::nullopt;
  return Sequent{*l, *r};
}

// Tries one reading of a variant: `prems` as premises, `concl` as conclusion.
std::optional<Bindings> matchReading(const std::vector<Sequent>& prems, const Sequent& concl,
                                     const Sequent& conclusion, const std::vector<Sequent>& premises) {
  if (prems.size() != premises.size()) return std::nullopt;
  Bindings b;
  if (!matchSequent(concl, conclusion, b)) return std::nullopt;
  for (std::size_t i = 0; i < prems.size(); ++i)
    if (!matchSequent(prems[i], premises[i], b)) return std::nullopt;
  return b;
}

}  // namespace

const std::vector<Rule>& ruleTable() {
  static const std::vector<Rule> rules = [] {
    std::vector<Rule> rs;
    for (const auto& t : ruleTexts()) rs.push_back(buildRule(t));
    addStructuralPackage(rs);
    return rs;
  }();
  return rules;
}

const Rule* findRule(std::string_view id) {
  for (const auto& r : ruleTable())
    if (r.id == id) return &r;
  return nullptr;
}

bool ruleInCalculus(const Rule& r, Calculus c) {
  return std::find(r.calculi.begin(), r.calculi.end(), c) != r.calculi.end();
}

std::string stepErrorName(StepError e) {
  switch (e) {
    case StepError::None: return "ok";
    case StepError::UnknownRule: return "unknown-rule";
    case StepError::IllTyped: return "ill-typed";
    case StepError::ArityMismatch: return "arity-mismatch";
    case StepError::NotInCalculus: return "not-in-calculus";
    case StepError::NoMatch: return "no-match";
    case StepError::UnknownHypothesis: return "unknown-hypothesis";
  }
  return "?";
}

const std::vector<Sequent>& StepMatch::premisePatterns() const {
  static thread_local std::vector<Sequent> single;
  const RuleVariant& v = rule->variants[variant];
  if (!upward) return v.premises;
  single = {v.conclusion};
  return single;
}

const Sequent& StepMatch::conclusionPattern() const {
  const RuleVariant& v = rule->variants[variant];
  return upward ? v.premises.front() : v.conclusion;
}

std::optional<StepMatch> matchStep(const Sequent& conclusion, std::string_view ruleId,
                                   const std::vector<Sequent>& premises) {
  const Rule* r = findRule(ruleId);
  if (!r) return std::nullopt;
  for (std::size_t i = 0; i < r->variants.size(); ++i) {
    const RuleVariant& v = r->variants[i];
    if (auto b = matchReading(v.premises, v.conclusion, conclusion, premises))
      return StepMatch{r, i, false, std::move(*b)};
    if (r->invertible)
      if (auto b = matchReading({v.conclusion}, v.premises.front(), conclusion, premises))
        return StepMatch{r, i, true, std::move(*b)};
  }
  return std::nullopt;
}

StepVerdict checkStep(const Sequent& conclusion, std::string_view ruleId, const std::vector<Sequent>& premises,
                      Calculus calc, const std::vector<Sequent>& hypotheses) {
  try {
    typeOf(conclusion);
    for (const auto& p : premises) typeOf(p);
  } catch (const TypeError& e) {
    return {StepError::IllTyped, e.what()};
  }
  if (ruleId == kHypothesisRule) {
    if (!premises.empty()) return {StepError::ArityMismatch, "hyp takes no premises"};
    if (std::find(hypotheses.begin(), hypotheses.end(), conclusion) == hypotheses.end())
      return {StepError::UnknownHypothesis, "sequent is not a declared hypothesis"};
    return {};
  }
  const Rule* r = findRule(ruleId);
  if (!r) return {StepError::UnknownRule, "unknown rule '" + std::string(ruleId) + "'"};
  bool arityOk = std::any_of(r->variants.begin(), r->variants.end(), [&](const RuleVariant& v) {
    return v.premises.size() == premises.size() || (r->invertible && premises.size() == 1);
  });
  if (!arityOk) return {StepError::ArityMismatch, r->id + " does not take " + std::to_string(premises.size()) + " premises"};
  if (!ruleInCalculus(*r, calc))
    return {StepError::NotInCalculus, r->id + " is not a rule of D." + calculusName(calc)};
  if (!matchStep(conclusion, ruleId, premises))
    return {StepError::NoMatch, "sequents do not instantiate " + r->id};
  return {};
}

std::vector<Sequent> applyRule(std::string_view ruleId, const std::vector<Sequent>& premises) {
  std::vector<Sequent> out;
  const Rule* r = findRule(ruleId);
  if (!r) return out;
  auto attempt = [&](const std::vector<Sequent>& prems, const Sequent& concl) {
    if (prems.size() != premises.size()) return;
    Bindings b;
    for (std::size_t i = 0; i < prems.size(); ++i)
      if (!matchSequent(prems[i], premises[i], b)) return;
    if (auto s = instantiate(concl, b)) {
      try {
        typeOf(*s);
      } catch (const TypeError&) {
        return;
      }
      if (std::find(out.begin(), out.end(), *s) == out.end()) out.push_back(*s);
    }
  };
  for (const auto& v : r->variants) {
    attempt(v.premises, v.conclusion);
    if (r->invertible) attempt({v.conclusion}, v.premises.front());
  }
  return out;
}

std::string ProofVerdict::describe() const {
  if (valid) return "valid";
  std::ostringstream os;
  os << "invalid at node [";
  for (std::size_t i = 0; i < path.size(); ++i) os << (i ? "." : "") << path[i];
  os << "] (" << rule << "): " << stepErrorName(step.error) << ": " << step.message;
  return os.str();
}

namespace {

bool checkFrom(const ProofTree& t, Calculus calc, const std::vector<Sequent>& hyps, std::vector<std::size_t>& path,
               ProofVerdict& out) {
  std::vector<Sequent> prems;
  prems.reserve(t.premises.size());
  for (const auto& p : t.premises) prems.push_back(p.conclusion);
  StepVerdict v = checkStep(t.conclusion, t.rule, prems, calc, hyps);
  if (!v.ok()) {
    out.valid = false;
    out.path = path;
    out.step = v;
    out.rule = t.rule;
    return false;
  }
  for (std::size_t i = 0; i < t.premises.size(); ++i) {
    path.push_back(i);
    if (!checkFrom(t.premises[i], calc, hyps, path, out)) return false;
    path.pop_back();
  }
  return true;
}

}  // namespace

ProofVerdict checkProof(const ProofTree& tree, Calculus calc, const std::vector<Sequent>& hypotheses) {
  ProofVerdict v;
  std::vector<std::size_t> path;
  checkFrom(tree, calc, hypotheses, path, v);
  return v;
}

ProofVerdict checkProof(const Proof& p) { return checkProof(p.tree, p.calc, p.hypotheses); }

}  // namespace rca
