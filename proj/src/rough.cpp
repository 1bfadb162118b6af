#include "rca/rough.hpp"

#include "rca/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace rca {

Partition::Partition(std::size_t n, std::vector<std::vector<std::size_t>> classes) : classOf_(n, n) {
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw StructuralError("partition class " + std::to_string(c) + " is empty");
    for (auto a : classes[c]) {
      if (a >= n)
        throw StructuralError("partition member " + std::to_string(a) + " out of range (size " +
                              std::to_string(n) + ")");
      if (classOf_[a] != n) throw StructuralError("object " + std::to_string(a) + " appears in two classes");
      classOf_[a] = c;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (classOf_[a] == n) throw StructuralError("object " + std::to_string(a) + " is in no class");

  for (auto& cls : classes) std::sort(cls.begin(), cls.end());
  std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  classes_ = std::move(classes);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (auto a : classes_[c]) classOf_[a] = c;
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t a = 0; a < n; ++a) classes.push_back({a});
  return Partition(n, std::move(classes));
}

Partition Partition::indiscrete(std::size_t n) {
  if (n == 0) return Partition(0, {});
  std::vector<std::size_t> all(n);
  for (std::size_t a = 0; a < n; ++a) all[a] = a;
  return Partition(n, {all});
}

Partition Partition::fromEquivalence(const BinaryRelation& e) {
  const std::size_t n = e.domainSize();
  if (e.codomainSize() != n) throw StructuralError("equivalence relation must be square");
  for (std::size_t a = 0; a < n; ++a)
    if (!e.contains(a, a))
      throw StructuralError("not reflexive at pair (" + std::to_string(a) + ", " + std::to_string(a) + ")");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (e.contains(a, b) && !e.contains(b, a))
        throw StructuralError("not symmetric at pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      if (e.contains(a, b) && e.row(b) != e.row(a))
        throw StructuralError("not transitive at pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> seen(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    classes.push_back(members(e.row(a)));
    for (auto b : classes.back()) seen[b] = true;
  }
  return Partition(n, std::move(classes));
}

Subset Partition::classOf(std::size_t a) const {
  return makeSubset(universeSize(), classes_.at(classOf_.at(a)));
}

BinaryRelation Partition::toRelation() const {
  BinaryRelation e(universeSize(), universeSize());
  for (const auto& cls : classes_)
    for (auto a : cls)
      for (auto b : cls) e.set(a, b);
  return e;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.universeSize() != universeSize()) return false;
  for (const auto& cls : classes_)
    for (auto a : cls)
      if (coarser.classIndexOf(a) != coarser.classIndexOf(cls.front())) return false;
  return true;
}

RoughFormalContext::RoughFormalContext(FormalContext c, Partition p) : ctx(std::move(c)), partition(std::move(p)) {
  if (partition.universeSize() != ctx.objectCount())
    throw StructuralError("partition covers " + std::to_string(partition.universeSize()) + " objects, context has " +
                          std::to_string(ctx.objectCount()));
}

BinaryRelation deriveLax(const RoughFormalContext& g) {
  const auto& inc = g.ctx.incidence();
  BinaryRelation r(g.ctx.objectCount(), g.ctx.featureCount());
  for (const auto& cls : g.partition.classes()) {
    Subset any(g.ctx.featureCount());
    for (auto b : cls) any |= inc.row(b);
    for (auto a : cls)
      for (auto x : members(any)) r.set(a, x);
  }
  return r;
}

BinaryRelation deriveStrict(const RoughFormalContext& g) {
  const auto& inc = g.ctx.incidence();
  BinaryRelation s(g.ctx.objectCount(), g.ctx.featureCount());
  for (const auto& cls : g.partition.classes()) {
    Subset all = fullSet(g.ctx.featureCount());
    for (auto b : cls) all &= inc.row(b);
    for (auto a : cls)
      for (auto x : members(all)) s.set(a, x);
  }
  return s;
}

CheckResult isEDefinable(const BinaryRelation& rel, const Partition& e) {
  if (rel.domainSize() != e.universeSize()) throw StructuralError("relation and partition disagree on |A|");
  for (std::size_t x = 0; x < rel.codomainSize(); ++x) {
    const Subset& col = rel.column(x);
    for (const auto& cls : e.classes()) {
      bool someIn = false, someOut = false;
      std::size_t out = 0;
      for (auto a : cls) {
        if (col.test(a))
          someIn = true;
        else {
          someOut = true;
          out = a;
        }
      }
      if (someIn && someOut)
        return CheckResult::fail(out, x, "column " + std::to_string(x) + " splits the class of object " +
                                             std::to_string(out));
    }
  }
  return CheckResult::pass();
}

CheckResult isEDefinable(const BinaryRelation& rel, const BinaryRelation& e) {
  return isEDefinable(rel, Partition::fromEquivalence(e));
}

CheckResult isICompatible(const BinaryRelation& rel, const FormalContext& ctx, Orientation orientation) {
  const std::size_t na = ctx.objectCount(), nx = ctx.featureCount();
  auto closedExtent = [&](const Subset& b) { return ctx.down(ctx.up(b)) == b; };
  auto closedIntent = [&](const Subset& y) { return ctx.up(ctx.down(y)) == y; };

  std::size_t rows = 0, cols = 0;
  switch (orientation) {
    case Orientation::ObjectFeature: rows = na, cols = nx; break;
    case Orientation::FeatureObject: rows = nx, cols = na; break;
    case Orientation::ObjectObject: rows = na, cols = na; break;
  }
  if (rel.domainSize() != rows || rel.codomainSize() != cols)
    throw StructuralError("relation shape does not match the requested orientation");

  // rel⁽⁰⁾[{c}] is the column of c, a subset of the domain; rel⁽¹⁾[{r}] is the row of r.
  bool domainIsObjects = orientation != Orientation::FeatureObject;
  bool codomainIsObjects = orientation != Orientation::ObjectFeature;
  for (std::size_t c = 0; c < cols; ++c) {
    const Subset& pre = rel.column(c);
    bool ok = domainIsObjects ? closedExtent(pre) : closedIntent(pre);
    if (!ok) return CheckResult::fail(c, 0, "zero-image of singleton " + std::to_string(c) + " is not Galois-stable");
  }
  for (std::size_t r = 0; r < rows; ++r) {
    const Subset& post = rel.row(r);
    bool ok = codomainIsObjects ? closedExtent(post) : closedIntent(post);
    if (!ok) return CheckResult::fail(r, 1, "one-image of singleton " + std::to_string(r) + " is not Galois-stable");
  }
  return CheckResult::pass();
}

AmenabilityReport isAmenable(const RoughFormalContext& g) {
  AmenabilityReport rep;
  rep.e = isICompatible(g.partition.toRelation(), g.ctx, Orientation::ObjectObject);
  rep.r = isICompatible(deriveLax(g), g.ctx, Orientation::ObjectFeature);
  rep.s = isICompatible(deriveStrict(g), g.ctx, Orientation::ObjectFeature);
  return rep;
}

BinaryRelation composeByColumns(const BinaryRelation& r, const BinaryRelation& t, const FormalContext& ctx) {
  BinaryRelation out(ctx.objectCount(), ctx.featureCount());
  for (std::size_t x = 0; x < ctx.featureCount(); ++x) {
    Subset col = r.zeroImage(ctx.up(t.column(x)));
    for (auto a : members(col)) out.set(a, x);
  }
  return out;
}

BinaryRelation composeByRows(const BinaryRelation& r, const BinaryRelation& t, const FormalContext& ctx) {
  BinaryRelation out(ctx.objectCount(), ctx.featureCount());
  for (std::size_t a = 0; a < ctx.objectCount(); ++a) {
    Subset row = t.oneImage(ctx.down(r.row(a)));
    for (auto x : members(row)) out.set(a, x);
  }
  return out;
}

BinaryRelation compose(const BinaryRelation& r, const BinaryRelation& t, const FormalContext& ctx) {
  if (auto c = isICompatible(r, ctx, Orientation::ObjectFeature); !c)
    throw PreconditionError("left relation is not I-compatible: " + c.detail);
  if (auto c = isICompatible(t, ctx, Orientation::ObjectFeature); !c)
    throw PreconditionError("right relation is not I-compatible: " + c.detail);
  BinaryRelation byCols = composeByColumns(r, t, ctx);
  BinaryRelation byRows = composeByRows(r, t, ctx);
  if (!(byCols == byRows)) throw std::logic_error("composition clauses disagree");
  return byCols;
}

CheckResult verifySandwich(const RoughFormalContext& g) {
  const auto& inc = g.ctx.incidence();
  BinaryRelation r = deriveLax(g), s = deriveStrict(g);
  if (auto p = s.firstPairNotIn(inc)) return CheckResult::fail(p->first, p->second, "S is not contained in I");
  if (auto p = inc.firstPairNotIn(r)) return CheckResult::fail(p->first, p->second, "I is not contained in R");
  return CheckResult::pass();
}

CheckResult verifyKB(const RoughFormalContext& g) {
  AmenabilityReport rep = isAmenable(g);
  if (!rep.amenable()) {
    std::string which = !rep.e.ok ? "E" : (!rep.r.ok ? "R" : "S");
    throw PreconditionError("the context is not amenable (" + which + " is not I-compatible)");
  }
  BinaryRelation r = deriveLax(g), s = deriveStrict(g);
  BinaryRelation rr = compose(r, r, g.ctx);
  if (auto p = rr.firstPairNotIn(r)) return CheckResult::fail(p->first, p->second, "R;R is not contained in R");
  BinaryRelation ss = compose(s, s, g.ctx);
  if (auto p = s.firstPairNotIn(ss)) return CheckResult::fail(p->first, p->second, "S is not contained in S;S");
  return CheckResult::pass();
}

}  // namespace rca
