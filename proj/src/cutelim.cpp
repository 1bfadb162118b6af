#include "rca/calculus.hpp"
#include "rca/errors.hpp"

#include <utility>

namespace rca {

std::size_t cutCount(const ProofTree& t) {
  std::size_t n = t.rule == "cut" ? 1 : 0;
  for (const auto& p : t.premises) n += cutCount(p);
  return n;
}

std::size_t cutRank(const ProofTree& t) {
  std::size_t r = t.rule == "cut" && t.premises.size() == 2 ? t.premises[0].conclusion.rhs.size() : 0;
  for (const auto& p : t.premises) r += cutRank(p);
  return r;
}

std::size_t proofSize(const ProofTree& t) {
  std::size_t n = 1;
  for (const auto& p : t.premises) n += proofSize(p);
  return n;
}

namespace {

ProofTree node(std::string rule, Sequent concl, std::vector<ProofTree> prems = {}) {
  return ProofTree{std::move(rule), std::move(concl), std::move(prems)};
}

ProofTree cut(ProofTree l, ProofTree r) {
  Sequent s{l.conclusion.lhs, r.conclusion.rhs};
  return node("cut", std::move(s), {std::move(l), std::move(r)});
}

Node mk(Op op, Node a) { return Node::make(op, std::move(a)); }

[[noreturn]] void noReduction(const ProofTree& l, const ProofTree& r) {
  throw PreconditionError("no principal reduction for " + l.rule + " against " + r.rule);
}

}  // namespace

ProofTree reducePrincipalCut(const ProofTree& t) {
  if (t.rule != "cut" || t.premises.size() != 2) throw PreconditionError("not a cut node");
  const ProofTree& L = t.premises[0];
  const ProofTree& R = t.premises[1];
  if (L.rule == "id") return R;
  if (R.rule == "id") return L;
  const Node& F = L.conclusion.rhs;
  const Node X = L.conclusion.lhs, Y = R.conclusion.rhs;
  auto prem = [](const ProofTree& p, std::size_t i) -> const ProofTree& { return p.premises.at(i); };

  switch (F.op()) {
    case Op::And:
      if (L.rule == "and_R") {
        if (R.rule == "and_L1") return cut(prem(L, 0), prem(R, 0));
        if (R.rule == "and_L2") return cut(prem(L, 1), prem(R, 0));
      }
      if (L.rule == "and_Rs") {
        if (R.rule == "and_L1") return node("W_L", {X, Y}, {cut(prem(L, 0), prem(R, 0))});
        if (R.rule == "and_L2") return node("W_L", {X, Y}, {cut(prem(L, 1), prem(R, 0))});
      }
      noReduction(L, R);
    case Op::Or:
      if (R.rule == "or_L") {
        if (L.rule == "or_R1") return cut(prem(L, 0), prem(R, 0));
        if (L.rule == "or_R2") return cut(prem(L, 0), prem(R, 1));
      }
      if (R.rule == "or_Ls") {
        if (L.rule == "or_R1") return node("W_L", {X, Y}, {cut(prem(L, 0), prem(R, 0))});
        if (L.rule == "or_R2") return node("W_L", {X, Y}, {cut(prem(L, 0), prem(R, 1))});
      }
      noReduction(L, R);
    case Op::Top:
      if (L.rule == "top_R" && R.rule == "top_L") return prem(R, 0);
      noReduction(L, R);
    case Op::Bot:
      if (L.rule == "bot_R" && R.rule == "bot_L") return prem(L, 0);
      noReduction(L, R);
    case Op::BlackSqI:
      if (L.rule == "bsI_R" && R.rule == "bsI_L") {
        const ProofTree &q1 = prem(L, 0), &q2 = prem(R, 0);  // G |- s.bsI A, A |- Y0
        const Node &G = X, &A = F.arg(0), &y0 = q2.conclusion.rhs;
        ProofTree up = node("adLSI", {mk(Op::SWhiteI, G), A}, {q1});
        return node("adLSI", {G, mk(Op::SBlackSqI, y0)}, {cut(std::move(up), q2)});
      }
      noReduction(L, R);
    case Op::BlackSqC:
      if (L.rule == "bsC_R" && R.rule == "bsC_L") {
        const ProofTree &q1 = prem(L, 0), &q2 = prem(R, 0);
        const Node &D = X, &A = F.arg(0), &y0 = q2.conclusion.rhs;
        ProofTree up = node("adLSC", {mk(Op::SWhiteC, D), A}, {q1});
        return node("adLSC", {D, mk(Op::SBlackSqC, y0)}, {cut(std::move(up), q2)});
      }
      noReduction(L, R);
    case Op::BlackDiaI:
      if (L.rule == "bdI_R" && R.rule == "bdI_L") {
        const ProofTree &q1 = prem(L, 0), &q2 = prem(R, 0);  // X0 |- A, s.bdI A |- G
        const Node &A = F.arg(0), &x0 = q1.conclusion.lhs, &G = Y;
        ProofTree down = node("adLSI", {A, mk(Op::SWhiteI, G)}, {q2});
        return node("adLSI", {mk(Op::SBlackDiaI, x0), G}, {cut(q1, std::move(down))});
      }
      noReduction(L, R);
    case Op::BlackDiaC:
      if (L.rule == "bdC_R" && R.rule == "bdC_L") {
        const ProofTree &q1 = prem(L, 0), &q2 = prem(R, 0);
        const Node &A = F.arg(0), &x0 = q1.conclusion.lhs, &D = Y;
        ProofTree down = node("adLSC", {A, mk(Op::SWhiteC, D)}, {q2});
        return node("adLSC", {mk(Op::SBlackDiaC, x0), D}, {cut(q1, std::move(down))});
      }
      noReduction(L, R);
    case Op::WhiteI:
      if (L.rule == "wI_R" && R.rule == "wI_L") {
        const ProofTree &q1 = prem(L, 0), &q2 = prem(R, 0);  // X |- s.wI al, s.wI al |- Y
        const Node& al = F.arg(0);
        ProofTree a = node("adLSI", {mk(Op::SBlackDiaI, X), al}, {q1});
        ProofTree b = node("adLSI", {al, mk(Op::SBlackSqI, Y)}, {q2});
        ProofTree c = cut(std::move(a), std::move(b));
        ProofTree d = node("adLSI", {mk(Op::SWhiteI, mk(Op::SBlackDiaI, X)), Y}, {std::move(c)});
        return node("wI-bdI", {X, Y}, {std::move(d)});
      }
      noReduction(L, R);
    case Op::WhiteC:
      if (L.rule == "wC_R" && R.rule == "wC_L") {
        const ProofTree &q1 = prem(L, 0), &q2 = prem(R, 0);
        const Node& de = F.arg(0);
        ProofTree a = node("adLSC", {mk(Op::SBlackDiaC, X), de}, {q1});
        ProofTree b = node("adLSC", {de, mk(Op::SBlackSqC, Y)}, {q2});
        ProofTree c = cut(std::move(a), std::move(b));
        ProofTree d = node("adLSC", {mk(Op::SWhiteC, mk(Op::SBlackDiaC, X)), Y}, {std::move(c)});
        return node("wC-bdC", {X, Y}, {std::move(d)});
      }
      noReduction(L, R);
    case Op::DiaI:
      if (L.rule == "dI_R" && R.rule == "dI_L") {
        const ProofTree &q1 = prem(L, 0), &q2 = prem(R, 0);  // P |- pi, s.dI pi |- Y
        const Node &pi = F.arg(0), &P = q1.conclusion.lhs;
        ProofTree down = node("adLLI", {pi, mk(Op::SBulletI, Y)}, {q2});
        return node("adLLI", {mk(Op::SDiaI, P), Y}, {cut(q1, std::move(down))});
      }
      noReduction(L, R);
    case Op::BoxC:
      if (L.rule == "boxC_R" && R.rule == "boxC_L") {
        const ProofTree &q1 = prem(L, 0), &q2 = prem(R, 0);  // X |- s.boxC si, si |- S
        const Node &si = F.arg(0), &S = q2.conclusion.rhs;
        ProofTree up = node("adLLC", {mk(Op::SBulletC, X), si}, {q1});
        return node("adLLC", {X, mk(Op::SBoxC, S)}, {cut(std::move(up), q2)});
      }
      noReduction(L, R);
    case Op::BulletI:
      if (L.rule == "bI_R" && R.rule == "bI_L") {
        const ProofTree &q1 = prem(L, 0), &q2 = prem(R, 0);  // P |- s.bI A, s.bI A |- P2
        const Node& A = F.arg(0);
        ProofTree a = node("adLLI", {mk(Op::SDiaI, X), A}, {q1});
        ProofTree b = node("adLLI", {A, mk(Op::SBoxI, Y)}, {q2});
        ProofTree c = cut(std::move(a), std::move(b));
        ProofTree d = node("adLLI", {mk(Op::SBulletI, mk(Op::SDiaI, X)), Y}, {std::move(c)});
        return node("bI-dI", {X, Y}, {std::move(d)});
      }
      noReduction(L, R);
    case Op::BulletC:
      if (L.rule == "bC_R" && R.rule == "bC_L") {
        const ProofTree &q1 = prem(L, 0), &q2 = prem(R, 0);
        const Node& A = F.arg(0);
        ProofTree a = node("adLLC", {mk(Op::SDiaC, X), A}, {q1});
        ProofTree b = node("adLLC", {A, mk(Op::SBoxC, Y)}, {q2});
        ProofTree c = cut(std::move(a), std::move(b));
        ProofTree d = node("adLLC", {mk(Op::SBulletC, mk(Op::SDiaC, X)), Y}, {std::move(c)});
        return node("bC-dC", {X, Y}, {std::move(d)});
      }
      noReduction(L, R);
    default: noReduction(L, R);
  }
}

namespace {

// A structural position inside a sequent: side 0 is the antecedent, 1 the succedent.
struct Occurrence {
  int side;
  std::vector<std::size_t> path;
};

class LiftStuck : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const Node& sideOf(const Sequent& s, int side) { return side == 0 ? s.lhs : s.rhs; }

Sequent substitute(const Sequent& s, const std::vector<Occurrence>& occs, const Node& with) {
  Sequent out = s;
  for (const auto& o : occs) {
    if (o.side == 0) out.lhs = out.lhs.replaced(o.path, with);
    else out.rhs = out.rhs.replaced(o.path, with);
  }
  return out;
}

void metaPositions(const Node& pat, int side, std::vector<std::size_t>& path,
                   std::map<std::string, std::vector<Occurrence>>& out) {
  if (pat.op() == Op::Meta) {
    out[pat.name()].push_back({side, path});
    return;
  }
  for (std::size_t i = 0; i < pat.arity(); ++i) {
    path.push_back(i);
    metaPositions(pat.arg(i), side, path, out);
    path.pop_back();
  }
}

std::map<std::string, std::vector<Occurrence>> metaPositions(const Sequent& pat) {
  std::map<std::string, std::vector<Occurrence>> out;
  std::vector<std::size_t> path;
  metaPositions(pat.lhs, 0, path, out);
  metaPositions(pat.rhs, 1, path, out);
  return out;
}

struct Counters {
  std::size_t lifts = 0;
  std::size_t reductions = 0;
};

// Replaces the traced occurrences of the cut formula by `with` throughout `t`. At each node
// where an occurrence is introduced by a logical rule, `atIntro` builds the replacement;
// `atIdentity` handles identity leaves.
template <class Intro, class Ident>
ProofTree lift(const ProofTree& t, const std::vector<Occurrence>& occs, const Node& with, Intro atIntro,
               Ident atIdentity, Counters& c) {
  if (occs.empty()) return t;
  if (t.rule == "id") return atIdentity(t);
  if (t.rule == std::string(kHypothesisRule)) throw LiftStuck("cut formula reaches a hypothesis leaf");
  std::vector<Sequent> prems;
  for (const auto& p : t.premises) prems.push_back(p.conclusion);
  auto m = matchStep(t.conclusion, t.rule, prems);
  if (!m) throw LiftStuck("node " + t.rule + " does not match its rule");
  const Sequent conclPat = m->conclusionPattern();
  const std::vector<Sequent> premPats = m->premisePatterns();

  std::vector<std::vector<Occurrence>> upward(t.premises.size());
  for (const auto& o : occs) {
    const Node* pat = &sideOf(conclPat, o.side);
    std::size_t depth = 0;
    while (pat->op() != Op::Meta && depth < o.path.size()) pat = &pat->arg(o.path[depth++]);
    if (pat->op() != Op::Meta) return atIntro(t);
    std::vector<std::size_t> rest(o.path.begin() + static_cast<std::ptrdiff_t>(depth), o.path.end());
    for (std::size_t i = 0; i < premPats.size(); ++i) {
      auto positions = metaPositions(premPats[i]);
      auto it = positions.find(pat->name());
      if (it == positions.end()) continue;
      for (const auto& q : it->second) {
        Occurrence next{q.side, q.path};
        next.path.insert(next.path.end(), rest.begin(), rest.end());
        upward[i].push_back(std::move(next));
      }
    }
  }
  ++c.lifts;
  ProofTree out;
  out.rule = t.rule;
  out.conclusion = substitute(t.conclusion, occs, with);
  for (std::size_t i = 0; i < t.premises.size(); ++i)
    out.premises.push_back(lift(t.premises[i], upward[i], with, atIntro, atIdentity, c));
  return out;
}

bool principalRight(const ProofTree& t) {
  if (t.rule == "id") return true;
  const Rule* r = findRule(t.rule);
  return r && (r->principal == Principal::Right || r->principal == Principal::Both) && t.conclusion.rhs.isFormula();
}

// One composite step on a root cut with cut-free premises.
ProofTree eliminateRootCut(const ProofTree& t, Counters& c) {
  const ProofTree& P1 = t.premises[0];
  const ProofTree& P2 = t.premises[1];
  if (P1.rule == "id" || P2.rule == "id") {
    ++c.reductions;
    return reducePrincipalCut(t);
  }
  const Node Y = P2.conclusion.rhs;

  // Moves the cut into P2 against a node N that concludes X' |- F with F principal.
  auto intoRight = [&](const ProofTree& N) -> ProofTree {
    if (N.rule == "id") return P2;
    const Node Xp = N.conclusion.lhs;
    auto intro = [&](const ProofTree& M) {
      ++c.reductions;
      return reducePrincipalCut(cut(N, M));
    };
    auto ident = [&](const ProofTree&) { return N; };
    return lift(P2, {{0, {}}}, Xp, intro, ident, c);
  };
  auto introLeft = [&](const ProofTree& N) {
    if (!principalRight(N)) throw LiftStuck("cut formula is not introduced by " + N.rule);
    return intoRight(N);
  };
  auto identLeft = [&](const ProofTree& N) { return intoRight(N); };
  return lift(P1, {{1, {}}}, Y, introLeft, identLeft, c);
}

const ProofTree* topmostCut(const ProofTree& t, std::vector<std::size_t>& path) {
  for (std::size_t i = 0; i < t.premises.size(); ++i) {
    path.push_back(i);
    if (const ProofTree* found = topmostCut(t.premises[i], path)) return found;
    path.pop_back();
  }
  return t.rule == "cut" ? &t : nullptr;
}

ProofTree replaceAt(const ProofTree& t, const std::vector<std::size_t>& path, std::size_t depth, ProofTree with) {
  if (depth == path.size()) return with;
  ProofTree out = t;
  out.premises[path[depth]] = replaceAt(t.premises[path[depth]], path, depth + 1, std::move(with));
  return out;
}

}  // namespace

CutElimination eliminateCuts(const ProofTree& t, std::size_t budget) {
  CutElimination result;
  result.tree = t;
  while (true) {
    std::vector<std::size_t> path;
    const ProofTree* target = topmostCut(result.tree, path);
    if (!target) {
      result.complete = true;
      break;
    }
    if (result.steps.size() >= budget) {
      result.stuck = "step budget exhausted";
      break;
    }
    Counters c;
    ProofTree replacement;
    try {
      replacement = eliminateRootCut(*target, c);
    } catch (const LiftStuck& e) {
      result.stuck = e.what();
      break;
    } catch (const PreconditionError& e) {
      result.stuck = e.what();
      break;
    }
    CutStep step;
    step.path = path;
    step.rankBefore = cutRank(result.tree);
    result.tree = replaceAt(result.tree, path, 0, std::move(replacement));
    step.rankAfter = cutRank(result.tree);
    step.lifts = c.lifts;
    step.reductions = c.reductions;
    result.steps.push_back(std::move(step));
  }
  result.remainingCuts = cutCount(result.tree);
  return result;
}

// ---------------------------------------------------------------------------

ProofTree identityProof(const Node& f, bool endRight) {
  if (!f.isFormula()) throw PreconditionError("identity expansion needs a formula");
  auto seq = [](Node a, Node b) { return Sequent{std::move(a), std::move(b)}; };
  switch (f.op()) {
    case Op::Atom: return node("id", seq(f, f));
    case Op::Top: return node("top_L", seq(f, f), {node("top_R", seq(Node::make(Op::STop), f))});
    case Op::Bot: return node("bot_R", seq(f, f), {node("bot_L", seq(f, Node::make(Op::SBot)))});
    case Op::And: {
      const Node &a = f.arg(0), &b = f.arg(1);
      return node("and_R", seq(f, f),
                  {node("and_L1", seq(f, a), {identityProof(a, endRight)}),
                   node("and_L2", seq(f, b), {identityProof(b, endRight)})});
    }
    case Op::Or: {
      const Node &a = f.arg(0), &b = f.arg(1);
      return node("or_L", seq(f, f),
                  {node("or_R1", seq(a, f), {identityProof(a, endRight)}),
                   node("or_R2", seq(b, f), {identityProof(b, endRight)})});
    }
    case Op::WhiteI:
    case Op::WhiteC: {
      const bool I = f.op() == Op::WhiteI;
      const Node& g = f.arg(0);
      const Op sw = I ? Op::SWhiteI : Op::SWhiteC;
      const std::string w = I ? "wI" : "wC";
      const Node s = mk(sw, g);
      ProofTree base = identityProof(g, endRight);
      ProofTree shifted =
          I ? node("bsI-wI", seq(g, mk(Op::SBlackSqI, s)), {std::move(base)})
            : node("bdC-wC", seq(mk(Op::SBlackDiaC, s), g), {std::move(base)});
      ProofTree displayed = node(I ? "adLSI" : "adLSC", seq(s, s), {std::move(shifted)});
      if (endRight) return node(w + "_R", seq(f, f), {node(w + "_L", seq(f, s), {std::move(displayed)})});
      return node(w + "_L", seq(f, f), {node(w + "_R", seq(s, f), {std::move(displayed)})});
    }
    case Op::BulletI:
    case Op::BulletC: {
      const bool I = f.op() == Op::BulletI;
      const Node& a = f.arg(0);
      const Node s = mk(I ? Op::SBulletI : Op::SBulletC, a);
      const std::string b = I ? "bI" : "bC";
      ProofTree base = identityProof(a, endRight);
      ProofTree shifted = I ? node("dI-bI", seq(mk(Op::SDiaI, s), a), {std::move(base)})
                            : node("boxC-bC", seq(a, mk(Op::SBoxC, s)), {std::move(base)});
      ProofTree displayed = node(I ? "adLLI" : "adLLC", seq(s, s), {std::move(shifted)});
      if (endRight) return node(b + "_R", seq(f, f), {node(b + "_L", seq(f, s), {std::move(displayed)})});
      return node(b + "_L", seq(f, f), {node(b + "_R", seq(s, f), {std::move(displayed)})});
    }
    case Op::DiaI: {
      const Node& pi = f.arg(0);
      return node("dI_L", seq(f, f), {node("dI_R", seq(mk(Op::SDiaI, pi), f), {identityProof(pi, endRight)})});
    }
    case Op::BoxC: {
      const Node& si = f.arg(0);
      return node("boxC_R", seq(f, f), {node("boxC_L", seq(f, mk(Op::SBoxC, si)), {identityProof(si, endRight)})});
    }
    case Op::BlackSqI:
    case Op::BlackSqC: {
      const bool I = f.op() == Op::BlackSqI;
      const Node& a = f.arg(0);
      const std::string b = I ? "bsI" : "bsC";
      return node(b + "_R", seq(f, f),
                  {node(b + "_L", seq(f, mk(I ? Op::SBlackSqI : Op::SBlackSqC, a)), {identityProof(a, endRight)})});
    }
    case Op::BlackDiaI:
    case Op::BlackDiaC: {
      const bool I = f.op() == Op::BlackDiaI;
      const Node& a = f.arg(0);
      const std::string b = I ? "bdI" : "bdC";
      return node(b + "_L", seq(f, f),
                  {node(b + "_R", seq(mk(I ? Op::SBlackDiaI : Op::SBlackDiaC, a), f), {identityProof(a, endRight)})});
    }
    default: throw PreconditionError("identity expansion needs a formula");
  }
}

ProofTree principalCutOn(const Node& f, bool preferFirst) {
  auto seq = [](Node a, Node b) { return Sequent{std::move(a), std::move(b)}; };
  switch (f.op()) {
    case Op::Atom: throw PreconditionError("an atomic cut has no principal form");
    case Op::And: {
      const Node& side = f.arg(preferFirst ? 0 : 1);
      ProofTree r = node(preferFirst ? "and_L1" : "and_L2", seq(f, side), {identityProof(side, preferFirst)});
      return cut(identityProof(f, true), std::move(r));
    }
    case Op::Or: {
      const Node& side = f.arg(preferFirst ? 0 : 1);
      ProofTree l = node(preferFirst ? "or_R1" : "or_R2", seq(side, f), {identityProof(side, preferFirst)});
      return cut(std::move(l), identityProof(f, false));
    }
    case Op::Top:
      return cut(node("top_R", seq(Node::make(Op::STop), f)), identityProof(f, false));
    case Op::Bot:
      return cut(identityProof(f, true), node("bot_L", seq(f, Node::make(Op::SBot))));
    case Op::WhiteI:
    case Op::WhiteC:
    case Op::BulletI:
    case Op::BulletC: return cut(identityProof(f, true), identityProof(f, false));
    case Op::DiaI:
      return cut(node("dI_R", seq(mk(Op::SDiaI, f.arg(0)), f), {identityProof(f.arg(0), preferFirst)}),
                 identityProof(f, false));
    case Op::BoxC:
      return cut(identityProof(f, true),
                 node("boxC_L", seq(f, mk(Op::SBoxC, f.arg(0))), {identityProof(f.arg(0), preferFirst)}));
    case Op::BlackSqI:
    case Op::BlackSqC: {
      const bool I = f.op() == Op::BlackSqI;
      return cut(identityProof(f, true), node(I ? "bsI_L" : "bsC_L", seq(f, mk(I ? Op::SBlackSqI : Op::SBlackSqC, f.arg(0))),
                                              {identityProof(f.arg(0), preferFirst)}));
    }
    case Op::BlackDiaI:
    case Op::BlackDiaC: {
      const bool I = f.op() == Op::BlackDiaI;
      return cut(node(I ? "bdI_R" : "bdC_R", seq(mk(I ? Op::SBlackDiaI : Op::SBlackDiaC, f.arg(0)), f),
                      {identityProof(f.arg(0), preferFirst)}),
                 identityProof(f, false));
    }
    default: throw PreconditionError("principal cuts are built on formulas");
  }
}

}  // namespace rca
