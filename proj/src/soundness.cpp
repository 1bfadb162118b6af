#include "rca/calculus.hpp"
#include "rca/errors.hpp"

#include <set>

namespace rca {

std::size_t evalNode(const HeterogeneousAlgebra& h, const StructuralAdjoints& adj, const Node& n,
                     const std::map<std::string, std::size_t>& atoms) {
  auto ev = [&](std::size_t i) { return evalNode(h, adj, n.arg(i), atoms); };
  switch (n.op()) {
    case Op::Atom: {
      auto it = atoms.find(n.name());
      if (it == atoms.end()) throw EvaluationError("unbound atom '" + n.name() + "'");
      if (it->second >= h.L.size()) throw EvaluationError("value of '" + n.name() + "' out of range");
      return it->second;
    }
    case Op::Top:
    case Op::STop: return h.L.top();
    case Op::Bot:
    case Op::SBot: return h.L.bottom();
    case Op::And:
    case Op::SAnd: return h.L.meet(ev(0), ev(1));
    case Op::Or:
    case Op::SOr: return h.L.join(ev(0), ev(1));
    case Op::WhiteI:
    case Op::SWhiteI: return h.whiteI[ev(0)];
    case Op::WhiteC:
    case Op::SWhiteC: return h.whiteC[ev(0)];
    case Op::DiaI:
    case Op::SDiaI: return h.whDiaI[ev(0)];
    case Op::SBoxI: return adj.whBoxI[ev(0)];
    case Op::SDiaC: return adj.whDiaC[ev(0)];
    case Op::BoxC:
    case Op::SBoxC: return h.whBoxC[ev(0)];
    case Op::BlackDiaI:
    case Op::SBlackDiaI: return adj.blackDiaI[ev(0)];
    case Op::BlackSqI:
    case Op::SBlackSqI: return h.blackSqI[ev(0)];
    case Op::SFalseI: return h.SI.bottom();
    case Op::STrueI: return h.SI.top();
    case Op::SCapI: return h.SI.meet(ev(0), ev(1));
    case Op::SCupI: return h.SI.join(ev(0), ev(1));
    case Op::BlackDiaC:
    case Op::SBlackDiaC: return h.blackDiaC[ev(0)];
    case Op::BlackSqC:
    case Op::SBlackSqC: return adj.blackSqC[ev(0)];
    case Op::SFalseC: return h.SC.bottom();
    case Op::STrueC: return h.SC.top();
    case Op::SCapC: return h.SC.meet(ev(0), ev(1));
    case Op::SCupC: return h.SC.join(ev(0), ev(1));
    case Op::BulletI:
    case Op::SBulletI: return h.bulletI[ev(0)];
    case Op::SZeroI: return h.LI.bottom();
    case Op::SOneI: return h.LI.top();
    case Op::SMeetI: return h.LI.meet(ev(0), ev(1));
    case Op::SJoinI: return h.LI.join(ev(0), ev(1));
    case Op::BulletC:
    case Op::SBulletC: return h.bulletC[ev(0)];
    case Op::SZeroC: return h.LC.bottom();
    case Op::SOneC: return h.LC.top();
    case Op::SMeetC: return h.LC.meet(ev(0), ev(1));
    case Op::SJoinC: return h.LC.join(ev(0), ev(1));
    case Op::Meta: throw EvaluationError("metavariable ?" + n.name() + " has no value");
  }
  throw EvaluationError("unknown connective");
}

namespace {

const Lattice& carrierOf(const HeterogeneousAlgebra& h, TypeTag t) {
  switch (t) {
    case TypeTag::L: return h.L;
    case TypeTag::SI: return h.SI;
    case TypeTag::SC: return h.SC;
    case TypeTag::LI: return h.LI;
    case TypeTag::LC: return h.LC;
  }
  return h.L;
}

bool holds(const HeterogeneousAlgebra& h, const StructuralAdjoints& adj, const Sequent& s, const Assignment& v) {
  return carrierOf(h, typeOf(s)).leq(evalNode(h, adj, s.lhs, v), evalNode(h, adj, s.rhs, v));
}

void collectAtoms(const Node& n, std::set<std::string>& out) {
  if (n.op() == Op::Atom) out.insert(n.name());
  for (const auto& a : n.args()) collectAtoms(a, out);
}

void collectAtoms(const ProofTree& t, std::set<std::string>& out) {
  collectAtoms(t.conclusion.lhs, out);
  collectAtoms(t.conclusion.rhs, out);
  for (const auto& p : t.premises) collectAtoms(p, out);
}

// Pre-order path of the first node whose sequent fails under v.
bool firstFailure(const HeterogeneousAlgebra& h, const StructuralAdjoints& adj, const ProofTree& t,
                  const Assignment& v, std::vector<std::size_t>& path) {
  if (!holds(h, adj, t.conclusion, v)) return true;
  for (std::size_t i = 0; i < t.premises.size(); ++i) {
    path.push_back(i);
    if (firstFailure(h, adj, t.premises[i], v, path)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

SoundnessReport checkSoundness(const Proof& p, const HeterogeneousAlgebra& h, bool everyNode) {
  if (!inClass(h, calculusClass(p.calc)))
    throw PreconditionError("algebra is not in the class " + className(calculusClass(p.calc)));
  const StructuralAdjoints adj = structuralAdjoints(h);
  std::set<std::string> names;
  collectAtoms(p.tree, names);
  for (const auto& s : p.hypotheses) {
    collectAtoms(s.lhs, names);
    collectAtoms(s.rhs, names);
  }
  const std::vector<std::string> vars(names.begin(), names.end());
  const std::size_t n = h.L.size();
  double total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) total *= static_cast<double>(n);
  if (total > static_cast<double>(kDefaultMaxEvaluations))
    throw CapacityError("soundness check needs " + std::to_string(static_cast<std::uint64_t>(total)) + " assignments");

  SoundnessReport report;
  std::vector<std::size_t> digits(vars.size(), 0);
  Assignment v;
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) v[vars[i]] = digits[i];
    ++report.checked;
    bool premisesHold = std::all_of(p.hypotheses.begin(), p.hypotheses.end(),
                                    [&](const Sequent& s) { return holds(h, adj, s, v); });
    if (premisesHold) {
      std::vector<std::size_t> path;
      bool failed = everyNode ? firstFailure(h, adj, p.tree, v, path) : !holds(h, adj, p.tree.conclusion, v);
      if (failed) {
        report.sound = false;
        report.witness = v;
        report.path = std::move(path);
        return report;
      }
    }
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == n) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return report;
}

bool validateSoundness(const ProofTree& tree, const HeterogeneousAlgebra& h, Calculus calc,
                       const std::vector<Sequent>& hypotheses) {
  Proof p{"", calc, hypotheses, tree};
  return checkSoundness(p, h, true).sound;
}

}  // namespace rca
