#include "rca/modal.hpp"

#include "rca/errors.hpp"

#include <algorithm>

namespace rca {

ModalLattice::ModalLattice(Lattice lattice, std::vector<std::size_t> boxS, std::vector<std::size_t> diaS,
                           std::vector<std::size_t> boxL, std::vector<std::size_t> diaL)
    : lattice_(std::move(lattice)),
      boxS_(std::move(boxS)),
      diaS_(std::move(diaS)),
      boxL_(std::move(boxL)),
      diaL_(std::move(diaL)) {
  const std::size_t n = lattice_.size();
  const char* names[] = {"boxS", "diaS", "boxL", "diaL"};
  const std::vector<std::size_t>* maps[] = {&boxS_, &diaS_, &boxL_, &diaL_};
  for (int k = 0; k < 4; ++k) {
    if (maps[k]->size() != n)
      throw StructuralError(std::string(names[k]) + " has " + std::to_string(maps[k]->size()) +
                            " entries, lattice has " + std::to_string(n));
    for (std::size_t a = 0; a < n; ++a)
      if ((*maps[k])[a] >= n)
        throw StructuralError(std::string(names[k]) + " maps " + std::to_string(a) + " out of range");
  }
}

ModalLattice ModalLattice::identity(Lattice lattice) {
  std::vector<std::size_t> id(lattice.size());
  for (std::size_t a = 0; a < id.size(); ++a) id[a] = a;
  return ModalLattice(std::move(lattice), id, id, id, id);
}

const std::vector<std::size_t>& ModalLattice::map(ModalOp op) const {
  switch (op) {
    case ModalOp::BoxS: return boxS_;
    case ModalOp::DiaS: return diaS_;
    case ModalOp::BoxL: return boxL_;
    case ModalOp::DiaL: return diaL_;
  }
  return boxS_;
}

Term Term::var(std::string name) { return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}})); }
Term Term::top() { return Term(std::make_shared<const Node>(Node{Kind::Top, {}, {}})); }
Term Term::bottom() { return Term(std::make_shared<const Node>(Node{Kind::Bottom, {}, {}})); }
Term Term::meet(Term a, Term b) {
  return Term(std::make_shared<const Node>(Node{Kind::Meet, {}, {std::move(a), std::move(b)}}));
}
Term Term::join(Term a, Term b) {
  return Term(std::make_shared<const Node>(Node{Kind::Join, {}, {std::move(a), std::move(b)}}));
}
Term Term::unary(Kind k, Term a) { return Term(std::make_shared<const Node>(Node{k, {}, {std::move(a)}})); }

std::vector<std::string> Term::variables() const {
  std::vector<std::string> out;
  std::vector<const Term*> stack{this};
  while (!stack.empty()) {
    const Term* t = stack.back();
    stack.pop_back();
    if (t->kind() == Kind::Var) out.push_back(t->name());
    for (const auto& a : t->node_->args) stack.push_back(&a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t Term::size() const {
  std::size_t n = 1;
  for (const auto& a : node_->args) n += a.size();
  return n;
}

bool Term::operator==(const Term& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind() || name() != o.name() || arity() != o.arity()) return false;
  for (std::size_t i = 0; i < arity(); ++i)
    if (arg(i) != o.arg(i)) return false;
  return true;
}

std::size_t evalTerm(const ModalLattice& m, const Term& t, const Assignment& assignment) {
  const Lattice& l = m.lattice();
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = assignment.find(t.name());
      if (it == assignment.end()) throw EvaluationError("unbound variable '" + t.name() + "'");
      if (it->second >= m.size())
        throw EvaluationError("variable '" + t.name() + "' assigned out-of-range element " +
                              std::to_string(it->second));
      return it->second;
    }
    case Term::Kind::Top: return l.top();
    case Term::Kind::Bottom: return l.bottom();
    case Term::Kind::Meet: return l.meet(evalTerm(m, t.arg(0), assignment), evalTerm(m, t.arg(1), assignment));
    case Term::Kind::Join: return l.join(evalTerm(m, t.arg(0), assignment), evalTerm(m, t.arg(1), assignment));
    case Term::Kind::BoxS: return m.boxS(evalTerm(m, t.arg(0), assignment));
    case Term::Kind::DiaS: return m.diaS(evalTerm(m, t.arg(0), assignment));
    case Term::Kind::BoxL: return m.boxL(evalTerm(m, t.arg(0), assignment));
    case Term::Kind::DiaL: return m.diaL(evalTerm(m, t.arg(0), assignment));
  }
  throw EvaluationError("unknown term kind");
}

namespace {

std::vector<std::string> mergedVariables(const std::vector<const Term*>& terms) {
  std::vector<std::string> vars;
  for (const Term* t : terms) {
    auto v = t->variables();
    vars.insert(vars.end(), v.begin(), v.end());
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

// Calls body(assignment) for each assignment in lexicographic order; stops when body returns false.
template <typename Body>
ValidityResult forAllAssignments(const ModalLattice& m, const std::vector<std::string>& vars,
                                 std::uint64_t maxEvaluations, Body body) {
  const std::uint64_t n = m.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (total > maxEvaluations / std::max<std::uint64_t>(n, 1) + 1) {
      total = maxEvaluations + 1;
      break;
    }
    total *= n;
  }
  if (total > maxEvaluations)
    throw CapacityError(std::to_string(vars.size()) + " variables over " + std::to_string(n) +
                        " elements exceed the bound of " + std::to_string(maxEvaluations) + " evaluations");

  ValidityResult result;
  std::vector<std::size_t> values(vars.size(), 0);
  Assignment a;
  for (const auto& v : vars) a[v] = 0;
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = values[i];
    ++result.checked;
    if (!body(a)) {
      result.valid = false;
      result.witness = a;
      return result;
    }
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++values[i] < n) break;
      values[i] = 0;
      if (i == 0) return result;
    }
    if (vars.empty()) return result;
  }
}

}  // namespace

ValidityResult checkInequality(const ModalLattice& m, const Inequality& ineq, std::uint64_t maxEvaluations) {
  auto vars = mergedVariables({&ineq.lhs, &ineq.rhs});
  return forAllAssignments(m, vars, maxEvaluations, [&](const Assignment& a) {
    return m.lattice().leq(evalTerm(m, ineq.lhs, a), evalTerm(m, ineq.rhs, a));
  });
}

ValidityResult checkQuasiInequality(const ModalLattice& m, const QuasiInequality& q, std::uint64_t maxEvaluations) {
  std::vector<const Term*> terms{&q.conclusion.lhs, &q.conclusion.rhs};
  for (const auto& p : q.premises) {
    terms.push_back(&p.lhs);
    terms.push_back(&p.rhs);
  }
  auto vars = mergedVariables(terms);
  return forAllAssignments(m, vars, maxEvaluations, [&](const Assignment& a) {
    for (const auto& p : q.premises)
      if (!m.lattice().leq(evalTerm(m, p.lhs, a), evalTerm(m, p.rhs, a))) return true;
    return m.lattice().leq(evalTerm(m, q.conclusion.lhs, a), evalTerm(m, q.conclusion.rhs, a));
  });
}

namespace {

void requireCompatible(const BinaryRelation& rel, const FormalContext& ctx, Orientation o) {
  if (auto c = isICompatible(rel, ctx, o); !c) throw PreconditionError("relation is not I-compatible: " + c.detail);
}

Concept boxUnchecked(const BinaryRelation& rel, const FormalContext& ctx, const Concept& c) {
  Subset ext = rel.zeroImage(c.intent);
  return {ext, ctx.up(ext)};
}

Concept diamondUnchecked(const BinaryRelation& rel, const FormalContext& ctx, const Concept& c) {
  Subset in = rel.oneImage(c.extent);
  return {ctx.down(in), in};
}

}  // namespace

Concept modalBox(const BinaryRelation& rel, const FormalContext& ctx, const Concept& c) {
  requireCompatible(rel, ctx, Orientation::ObjectFeature);
  return boxUnchecked(rel, ctx, c);
}

Concept modalDiamond(const BinaryRelation& rel, const FormalContext& ctx, const Concept& c) {
  requireCompatible(rel, ctx, Orientation::ObjectFeature);
  return diamondUnchecked(rel, ctx, c);
}

Concept modalDiamondFeatureObject(const BinaryRelation& rel, const FormalContext& ctx, const Concept& c) {
  requireCompatible(rel, ctx, Orientation::FeatureObject);
  Subset in = rel.zeroImage(c.extent);
  return {ctx.down(in), in};
}

ComplexAlgebra buildComplexAlgebra(const RoughFormalContext& g, const ConceptBounds& bounds) {
  AmenabilityReport rep = isAmenable(g);
  if (!rep.amenable()) throw PreconditionError("complex algebra requires an amenable rough context");
  BinaryRelation r = deriveLax(g), s = deriveStrict(g);
  ConceptLattice cl = enumerateConcepts(g.ctx, bounds);

  const std::size_t n = cl.size();
  std::vector<std::size_t> boxS(n), diaS(n), boxL(n), diaL(n);
  auto indexOf = [&](const Concept& c) {
    auto i = cl.indexOfExtent(c.extent);
    if (!i) throw std::logic_error("modal image is not a concept");
    return *i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Concept& c = cl.at(i);
    boxS[i] = indexOf(boxUnchecked(s, g.ctx, c));
    diaS[i] = indexOf(diamondUnchecked(s, g.ctx, c));
    boxL[i] = indexOf(boxUnchecked(r, g.ctx, c));
    diaL[i] = indexOf(diamondUnchecked(r, g.ctx, c));
  }
  ModalLattice m(cl.lattice(), std::move(boxS), std::move(diaS), std::move(boxL), std::move(diaL));
  return {std::move(cl), std::move(m)};
}

ModalLattice complexAlgebra(const RoughFormalContext& g, const ConceptBounds& bounds) {
  return buildComplexAlgebra(g, bounds).algebra;
}

}  // namespace rca
