#include "rca/kent.hpp"

#include "rca/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace rca {

bool AlgebraReport::ok() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const AxiomVerdict& v) { return v.ok; });
}

const AxiomVerdict* AlgebraReport::firstFailure() const {
  for (const auto& v : verdicts)
    if (!v.ok) return &v;
  return nullptr;
}

const AxiomVerdict* AlgebraReport::find(const std::string& name) const {
  for (const auto& v : verdicts)
    if (v.name == name) return &v;
  return nullptr;
}

namespace {

using Map = std::vector<std::size_t>;
using Unary = std::function<std::size_t(std::size_t)>;

AxiomVerdict pass(std::string name) { return {std::move(name), true, {}, {}}; }
AxiomVerdict fail(std::string name, std::vector<std::size_t> w, std::string detail) {
  return {std::move(name), false, std::move(w), std::move(detail)};
}

// ∀a: lhs(a) ≤ rhs(a)
AxiomVerdict forAll1(const Lattice& l, std::string name, const Unary& lhs, const Unary& rhs) {
  for (std::size_t a = 0; a < l.size(); ++a)
    if (!l.leq(lhs(a), rhs(a))) return fail(name, {a}, "fails at a = " + std::to_string(a));
  return pass(std::move(name));
}

// ∀a,b: left(a) ≤ b ⇔ a ≤ right(b), where left: A → B and right: B → A.
AxiomVerdict adjunction(const Lattice& A, const Lattice& B, std::string name, const Map& left, const Map& right) {
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = 0; b < B.size(); ++b)
      if (B.leq(left[a], b) != A.leq(a, right[b]))
        return fail(name, {a, b}, "adjunction fails at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  return pass(std::move(name));
}

AxiomVerdict quasiPair(const Lattice& l, std::string name, const Unary& f, const Unary& g) {
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      if (l.leq(f(a), f(b)) && l.leq(g(a), g(b)) && !l.leq(a, b))
        return fail(name, {a, b},
                    "premises hold but " + std::to_string(a) + " is not below " + std::to_string(b));
  return pass(std::move(name));
}

Term v(const char* n) { return Term::var(n); }
Inequality le(Term a, Term b) { return {std::move(a), std::move(b)}; }
QuasiInequality plain(Term a, Term b) { return {{}, le(std::move(a), std::move(b))}; }

std::vector<NamedAxiom> buildCatalogue() {
  const Term a = v("a"), b = v("b");
  using T = Term;
  std::vector<NamedAxiom> c;
  c.push_back({"adj-s-1", {{le(T::diaS(a), b)}, le(a, T::boxS(b))}});
  c.push_back({"adj-s-2", {{le(a, T::boxS(b))}, le(T::diaS(a), b)}});
  c.push_back({"adj-l-1", {{le(T::diaL(a), b)}, le(a, T::boxL(b))}});
  c.push_back({"adj-l-2", {{le(a, T::boxL(b))}, le(T::diaL(a), b)}});
  c.push_back({"refl-boxS", plain(T::boxS(a), a)});
  c.push_back({"refl-diaS", plain(a, T::diaS(a))});
  c.push_back({"refl-boxL", plain(a, T::boxL(a))});
  c.push_back({"refl-diaL", plain(T::diaL(a), a)});
  c.push_back({"trans-boxS", plain(T::boxS(a), T::boxS(T::boxS(a)))});
  c.push_back({"trans-diaS", plain(T::diaS(T::diaS(a)), T::diaS(a))});
  c.push_back({"trans-boxL", plain(T::boxL(T::boxL(a)), T::boxL(a))});
  c.push_back({"trans-diaL", plain(T::diaL(a), T::diaL(T::diaL(a)))});
  c.push_back({"approx", plain(T::join(T::boxS(a), T::diaL(a)), T::meet(T::boxL(a), T::diaS(a)))});
  c.push_back({"sym-1", plain(a, T::boxS(T::diaS(a)))});
  c.push_back({"sym-2", plain(T::diaS(T::boxS(a)), a)});
  c.push_back({"sym-3", plain(a, T::boxL(T::diaL(a)))});
  c.push_back({"sym-4", plain(T::diaL(T::boxL(a)), a)});
  c.push_back({"p5-1", plain(T::boxS(a), T::boxS(T::diaS(a)))});
  c.push_back({"p5-2", plain(T::diaS(T::boxS(a)), T::diaS(a))});
  c.push_back({"p5-3", plain(T::diaL(a), T::boxL(T::diaL(a)))});
  c.push_back({"p5-4", plain(T::diaL(T::boxL(a)), T::boxL(a))});
  c.push_back({"aka5-1", plain(T::diaS(T::boxS(a)), T::boxS(a))});
  c.push_back({"aka5-2", plain(T::diaS(a), T::boxS(T::diaS(a)))});
  c.push_back({"aka5-3", plain(T::diaL(T::boxL(a)), T::boxL(a))});
  c.push_back({"aka5-4", plain(T::diaL(a), T::boxL(T::diaL(a)))});
  c.push_back({"aka5p-1", plain(T::diaL(a), T::boxS(T::diaL(a)))});
  c.push_back({"aka5p-2", plain(T::diaS(T::boxL(a)), T::boxL(a))});
  c.push_back({"aka5p-3", plain(T::boxS(a), T::diaL(T::boxS(a)))});
  c.push_back({"aka5p-4", plain(T::boxL(T::diaS(a)), T::diaS(a))});
  c.push_back({"kia3s", {{le(T::boxS(a), T::boxS(b)), le(T::diaS(a), T::diaS(b))}, le(a, b)}});
  c.push_back({"kia3l", {{le(T::boxL(a), T::boxL(b)), le(T::diaL(a), T::diaL(b))}, le(a, b)}});
  c.push_back({"kia3l-single", plain(T::meet(a, T::boxL(b)), T::join(T::diaL(a), b))});
  return c;
}

}  // namespace

const std::vector<NamedAxiom>& axiomCatalogue() {
  static const std::vector<NamedAxiom> catalogue = buildCatalogue();
  return catalogue;
}

const NamedAxiom& axiomByName(const std::string& name) {
  for (const auto& ax : axiomCatalogue())
    if (ax.name == name) return ax;
  throw StructuralError("unknown axiom '" + name + "'");
}

AlgebraReport checkAKA(const ModalLattice& m) {
  const Lattice& l = m.lattice();
  auto bS = [&](std::size_t a) { return m.boxS(a); };
  auto dS = [&](std::size_t a) { return m.diaS(a); };
  auto bL = [&](std::size_t a) { return m.boxL(a); };
  auto dL = [&](std::size_t a) { return m.diaL(a); };
  auto id = [](std::size_t a) { return a; };
  AlgebraReport r;
  r.verdicts.push_back(adjunction(l, l, "adj-s", m.map(ModalOp::DiaS), m.map(ModalOp::BoxS)));
  r.verdicts.push_back(adjunction(l, l, "adj-l", m.map(ModalOp::DiaL), m.map(ModalOp::BoxL)));
  r.verdicts.push_back(forAll1(l, "refl-boxS", bS, id));
  r.verdicts.push_back(forAll1(l, "refl-diaS", id, dS));
  r.verdicts.push_back(forAll1(l, "refl-boxL", id, bL));
  r.verdicts.push_back(forAll1(l, "refl-diaL", dL, id));
  r.verdicts.push_back(forAll1(l, "trans-boxS", bS, [&](std::size_t a) { return m.boxS(m.boxS(a)); }));
  r.verdicts.push_back(forAll1(l, "trans-diaS", [&](std::size_t a) { return m.diaS(m.diaS(a)); }, dS));
  r.verdicts.push_back(forAll1(l, "trans-boxL", [&](std::size_t a) { return m.boxL(m.boxL(a)); }, bL));
  r.verdicts.push_back(forAll1(l, "trans-diaL", dL, [&](std::size_t a) { return m.diaL(m.diaL(a)); }));
  return r;
}

AlgebraReport checkDerived(const ModalLattice& m) {
  if (auto aka = checkAKA(m); !aka.ok())
    throw PreconditionError("not an abstract Kent algebra: " + aka.firstFailure()->name + " fails");
  const Lattice& l = m.lattice();
  auto id = [](std::size_t a) { return a; };
  auto bS = [&](std::size_t a) { return m.boxS(a); };
  auto dS = [&](std::size_t a) { return m.diaS(a); };
  auto bL = [&](std::size_t a) { return m.boxL(a); };
  auto dL = [&](std::size_t a) { return m.diaL(a); };
  auto bSdS = [&](std::size_t a) { return m.boxS(m.diaS(a)); };
  auto dSbS = [&](std::size_t a) { return m.diaS(m.boxS(a)); };
  auto bLdL = [&](std::size_t a) { return m.boxL(m.diaL(a)); };
  auto dLbL = [&](std::size_t a) { return m.diaL(m.boxL(a)); };

  AlgebraReport r;
  r.verdicts.push_back(forAll1(
      l, "approx", [&](std::size_t a) { return l.join(m.boxS(a), m.diaL(a)); },
      [&](std::size_t a) { return l.meet(m.boxL(a), m.diaS(a)); }));
  r.verdicts.push_back(forAll1(l, "sym-1", id, bSdS));
  r.verdicts.push_back(forAll1(l, "sym-2", dSbS, id));
  r.verdicts.push_back(forAll1(l, "sym-3", id, bLdL));
  r.verdicts.push_back(forAll1(l, "sym-4", dLbL, id));
  r.verdicts.push_back(forAll1(l, "p5-1", bS, bSdS));
  r.verdicts.push_back(forAll1(l, "p5-2", dSbS, dS));
  r.verdicts.push_back(forAll1(l, "p5-3", dL, bLdL));
  r.verdicts.push_back(forAll1(l, "p5-4", dLbL, bL));
  r.verdicts.push_back(forAll1(l, "aka5-1", dSbS, bS));
  r.verdicts.push_back(forAll1(l, "aka5-2", dS, bSdS));
  r.verdicts.push_back(forAll1(l, "aka5-3", dLbL, bL));
  r.verdicts.push_back(forAll1(l, "aka5-4", dL, bLdL));
  for (auto& v : r.verdicts)
    if (!v.ok) v.detail = "internal inconsistency: " + v.detail;
  return r;
}

AxiomVerdict checkAKA5p(const ModalLattice& m) {
  const Lattice& l = m.lattice();
  const std::pair<Unary, Unary> laws[] = {
      {[&](std::size_t a) { return m.diaL(a); }, [&](std::size_t a) { return m.boxS(m.diaL(a)); }},
      {[&](std::size_t a) { return m.diaS(m.boxL(a)); }, [&](std::size_t a) { return m.boxL(a); }},
      {[&](std::size_t a) { return m.boxS(a); }, [&](std::size_t a) { return m.diaL(m.boxS(a)); }},
      {[&](std::size_t a) { return m.boxL(m.diaS(a)); }, [&](std::size_t a) { return m.diaS(a); }},
  };
  for (int i = 0; i < 4; ++i) {
    auto vd = forAll1(l, "aka5p-" + std::to_string(i + 1), laws[i].first, laws[i].second);
    if (!vd.ok) {
      vd.detail = vd.name + " " + vd.detail;
      vd.name = "aka5p";
      return vd;
    }
  }
  return pass("aka5p");
}

AxiomVerdict checkKIA3s(const ModalLattice& m) {
  return quasiPair(
      m.lattice(), "kia3s", [&](std::size_t a) { return m.boxS(a); }, [&](std::size_t a) { return m.diaS(a); });
}

AxiomVerdict checkKIA3l(const ModalLattice& m) {
  return quasiPair(
      m.lattice(), "kia3l", [&](std::size_t a) { return m.boxL(a); }, [&](std::size_t a) { return m.diaL(a); });
}

std::string className(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::AKA: return "aka";
    case AlgebraClass::AKA5p: return "aka5p";
    case AlgebraClass::KIA3s: return "kia3s";
    case AlgebraClass::KIA3l: return "kia3l";
  }
  return "?";
}

bool inClass(const ModalLattice& m, AlgebraClass c) {
  if (!checkAKA(m).ok()) return false;
  switch (c) {
    case AlgebraClass::AKA: return true;
    case AlgebraClass::AKA5p: return checkAKA5p(m).ok;
    case AlgebraClass::KIA3s: return checkKIA3s(m).ok;
    case AlgebraClass::KIA3l: return checkKIA3l(m).ok;
  }
  return false;
}

std::optional<Map> leftAdjoint(const Lattice& a, const Lattice& b, const Map& f) {
  Map g(b.size());
  for (std::size_t y = 0; y < b.size(); ++y) {
    std::size_t best = a.top();
    bool any = false;
    for (std::size_t x = 0; x < a.size(); ++x)
      if (b.leq(y, f[x])) {
        best = any ? a.meet(best, x) : x;
        any = true;
      }
    if (!any || !b.leq(y, f[best])) return std::nullopt;
    g[y] = best;
  }
  for (std::size_t y = 0; y < b.size(); ++y)
    for (std::size_t x = 0; x < a.size(); ++x)
      if (a.leq(g[y], x) != b.leq(y, f[x])) return std::nullopt;
  return g;
}

std::optional<Map> rightAdjoint(const Lattice& a, const Lattice& b, const Map& f) {
  Map g(b.size());
  for (std::size_t y = 0; y < b.size(); ++y) {
    std::size_t best = a.bottom();
    bool any = false;
    for (std::size_t x = 0; x < a.size(); ++x)
      if (b.leq(f[x], y)) {
        best = any ? a.join(best, x) : x;
        any = true;
      }
    if (!any || !b.leq(f[best], y)) return std::nullopt;
    g[y] = best;
  }
  for (std::size_t y = 0; y < b.size(); ++y)
    for (std::size_t x = 0; x < a.size(); ++x)
      if (b.leq(f[x], y) != a.leq(x, g[y])) return std::nullopt;
  return g;
}

StructuralAdjoints structuralAdjoints(const HeterogeneousAlgebra& h) {
  auto require = [](std::optional<Map> m, const char* what) {
    if (!m) throw PreconditionError(std::string("the adjoint ") + what + " does not exist");
    return std::move(*m);
  };
  StructuralAdjoints s;
  s.blackDiaI = require(leftAdjoint(h.SI, h.L, h.whiteI), "of the strict interior inclusion");
  s.blackSqC = require(rightAdjoint(h.SC, h.L, h.whiteC), "of the strict closure inclusion");
  s.whBoxI = require(rightAdjoint(h.L, h.LI, h.bulletI), "of the lax interior projection");
  s.whDiaC = require(leftAdjoint(h.L, h.LC, h.bulletC), "of the lax closure projection");
  return s;
}

namespace {

AxiomVerdict checkShape(const std::string& name, const Map& f, std::size_t dom, std::size_t cod) {
  if (f.size() != dom)
    return fail(name, {}, "has " + std::to_string(f.size()) + " entries, domain has " + std::to_string(dom));
  for (std::size_t x = 0; x < dom; ++x)
    if (f[x] >= cod) return fail(name, {x}, "value at " + std::to_string(x) + " out of range");
  return pass(name);
}

AxiomVerdict checkHomomorphism(const std::string& name, const Lattice& a, const Lattice& b, const Map& f) {
  if (f[a.top()] != b.top()) return fail(name, {a.top()}, "does not preserve top");
  if (f[a.bottom()] != b.bottom()) return fail(name, {a.bottom()}, "does not preserve bottom");
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (f[a.meet(x, y)] != b.meet(f[x], f[y]))
        return fail(name, {x, y}, "does not preserve the meet of " + std::to_string(x) + " and " + std::to_string(y));
      if (f[a.join(x, y)] != b.join(f[x], f[y]))
        return fail(name, {x, y}, "does not preserve the join of " + std::to_string(x) + " and " + std::to_string(y));
    }
  return pass(name);
}

// g ∘ f = id on the domain of f.
AxiomVerdict checkRetraction(const std::string& name, std::size_t n, const Map& f, const Map& g) {
  for (std::size_t x = 0; x < n; ++x)
    if (g[f[x]] != x) return fail(name, {x}, "not the identity at " + std::to_string(x));
  return pass(name);
}

Map compose(const Map& outer, const Map& inner) {
  Map r(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) r[x] = outer[inner[x]];
  return r;
}

}  // namespace

AlgebraReport checkHAKA(const HeterogeneousAlgebra& h) {
  AlgebraReport r;
  const std::pair<const char*, const Lattice*> carriers[] = {
      {"L", &h.L}, {"S_I", &h.SI}, {"S_C", &h.SC}, {"L_I", &h.LI}, {"L_C", &h.LC}};
  AxiomVerdict h1 = pass("H1");
  for (auto [name, lat] : carriers)
    if (auto v = lat->checkLaws()) {
      h1 = fail("H1", v->elements, std::string(name) + ": " + v->describe());
      break;
    }
  r.verdicts.push_back(h1);

  const std::size_t nL = h.L.size(), nSI = h.SI.size(), nSC = h.SC.size(), nLI = h.LI.size(), nLC = h.LC.size();
  AxiomVerdict shape = pass("shape");
  for (const auto& v : {checkShape("whiteI", h.whiteI, nSI, nL), checkShape("blackSqI", h.blackSqI, nL, nSI),
                        checkShape("whiteC", h.whiteC, nSC, nL), checkShape("blackDiaC", h.blackDiaC, nL, nSC),
                        checkShape("bulletI", h.bulletI, nL, nLI), checkShape("whDiaI", h.whDiaI, nLI, nL),
                        checkShape("bulletC", h.bulletC, nL, nLC), checkShape("whBoxC", h.whBoxC, nLC, nL)})
    if (!v.ok) {
      shape = fail("shape", v.witness, v.name + " " + v.detail);
      break;
    }
  r.verdicts.push_back(shape);
  if (!h1.ok || !shape.ok) return r;

  auto firstFailing = [](std::string name, std::initializer_list<AxiomVerdict> vs) {
    for (const auto& v : vs)
      if (!v.ok) return fail(name, v.witness, v.name + " " + v.detail);
    return pass(name);
  };

  r.verdicts.push_back(firstFailing("H2", {checkHomomorphism("whiteI", h.SI, h.L, h.whiteI),
                                           checkHomomorphism("whiteC", h.SC, h.L, h.whiteC),
                                           checkHomomorphism("bulletI", h.L, h.LI, h.bulletI),
                                           checkHomomorphism("bulletC", h.L, h.LC, h.bulletC)}));
  r.verdicts.push_back(firstFailing("H3", {adjunction(h.SI, h.L, "whiteI-blackSqI", h.whiteI, h.blackSqI),
                                           adjunction(h.L, h.SC, "blackDiaC-whiteC", h.blackDiaC, h.whiteC),
                                           adjunction(h.L, h.LC, "bulletC-whBoxC", h.bulletC, h.whBoxC),
                                           adjunction(h.LI, h.L, "whDiaI-bulletI", h.whDiaI, h.bulletI)}));
  r.verdicts.push_back(firstFailing("H4", {checkRetraction("blackSqI.whiteI", nSI, h.whiteI, h.blackSqI),
                                           checkRetraction("blackDiaC.whiteC", nSC, h.whiteC, h.blackDiaC),
                                           checkRetraction("bulletC.whBoxC", nLC, h.whBoxC, h.bulletC),
                                           checkRetraction("bulletI.whDiaI", nLI, h.whDiaI, h.bulletI)}));

  auto dI = leftAdjoint(h.SI, h.L, h.whiteI);
  auto bI = rightAdjoint(h.L, h.LI, h.bulletI);
  if (!dI || !bI) {
    r.verdicts.push_back(fail("H5", {}, "a structural adjoint does not exist"));
    return r;
  }
  Map strictI = compose(h.whiteI, *dI), strictC = compose(h.whiteC, h.blackDiaC);
  Map laxI = compose(*bI, h.bulletI), laxC = compose(h.whBoxC, h.bulletC);
  AxiomVerdict h5 = pass("H5");
  for (std::size_t a = 0; a < nL && h5.ok; ++a) {
    if (strictI[a] != strictC[a])
      h5 = fail("H5", {a}, "strict closures disagree at " + std::to_string(a));
    else if (laxI[a] != laxC[a])
      h5 = fail("H5", {a}, "lax closures disagree at " + std::to_string(a));
  }
  r.verdicts.push_back(h5);
  return r;
}

AxiomVerdict checkHAKA5p(const HeterogeneousAlgebra& h) {
  const Lattice& l = h.L;
  for (std::size_t p = 0; p < h.LI.size(); ++p) {
    std::size_t x = h.whDiaI[p];
    if (!l.leq(x, h.whiteI[h.blackSqI[x]])) return fail("haka5p", {p}, "first condition fails at pi = " + std::to_string(p));
  }
  for (std::size_t s = 0; s < h.LC.size(); ++s) {
    std::size_t x = h.whBoxC[s];
    if (!l.leq(h.whiteC[h.blackDiaC[x]], x))
      return fail("haka5p", {s}, "second condition fails at sigma = " + std::to_string(s));
  }
  for (std::size_t a = 0; a < h.SI.size(); ++a) {
    std::size_t x = h.whiteI[a];
    if (!l.leq(x, h.whDiaI[h.bulletI[x]]))
      return fail("haka5p", {a}, "third condition fails at alpha = " + std::to_string(a));
  }
  for (std::size_t d = 0; d < h.SC.size(); ++d) {
    std::size_t x = h.whiteC[d];
    if (!l.leq(h.whBoxC[h.bulletC[x]], x))
      return fail("haka5p", {d}, "fourth condition fails at delta = " + std::to_string(d));
  }
  return pass("haka5p");
}

AxiomVerdict checkHKIA3s(const HeterogeneousAlgebra& h) {
  for (std::size_t a = 0; a < h.L.size(); ++a)
    for (std::size_t b = 0; b < h.L.size(); ++b)
      if (h.SI.leq(h.blackSqI[a], h.blackSqI[b]) && h.SC.leq(h.blackDiaC[a], h.blackDiaC[b]) && !h.L.leq(a, b))
        return fail("hkia3s", {a, b}, "premises hold but " + std::to_string(a) + " is not below " + std::to_string(b));
  return pass("hkia3s");
}

AxiomVerdict checkHKIA3l(const HeterogeneousAlgebra& h) {
  const Lattice& l = h.L;
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      if (l.leq(h.whBoxC[h.bulletC[a]], h.whBoxC[h.bulletC[b]]) && l.leq(h.whDiaI[h.bulletI[a]], h.whDiaI[h.bulletI[b]]) &&
          !l.leq(a, b))
        return fail("hkia3l", {a, b}, "premises hold but " + std::to_string(a) + " is not below " + std::to_string(b));
  return pass("hkia3l");
}

bool inClass(const HeterogeneousAlgebra& h, AlgebraClass c) {
  if (!checkHAKA(h).ok()) return false;
  switch (c) {
    case AlgebraClass::AKA: return true;
    case AlgebraClass::AKA5p: return checkHAKA5p(h).ok;
    case AlgebraClass::KIA3s: return checkHKIA3s(h).ok;
    case AlgebraClass::KIA3l: return checkHKIA3l(h).ok;
  }
  return false;
}

namespace {

struct Kernel {
  Lattice lattice;
  Map members;   // kernel index -> L index
  Map project;   // L index -> kernel index of op(a)
};

// Kernel of the idempotent operator `op` with operations a ∘ b := op(a ∘_L b) and
// bounds op(⊤), op(⊥), as in the kernel definitions.
Kernel buildKernel(const Lattice& l, const Map& op, const char* name) {
  Map members;
  for (std::size_t a = 0; a < l.size(); ++a)
    if (op[a] == a) members.push_back(a);
  std::map<std::size_t, std::size_t> indexOf;
  for (std::size_t i = 0; i < members.size(); ++i) indexOf[members[i]] = i;
  auto idx = [&](std::size_t a) {
    auto it = indexOf.find(a);
    if (it == indexOf.end())
      throw PreconditionError(std::string(name) + " is not idempotent at " + std::to_string(a));
    return it->second;
  };

  const std::size_t k = members.size();
  std::vector<std::uint8_t> leq(k * k);
  std::vector<std::uint32_t> meet(k * k), join(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      leq[i * k + j] = l.leq(members[i], members[j]);
      meet[i * k + j] = static_cast<std::uint32_t>(idx(op[l.meet(members[i], members[j])]));
      join[i * k + j] = static_cast<std::uint32_t>(idx(op[l.join(members[i], members[j])]));
    }
  Kernel kern{Lattice::fromTables(k, std::move(leq), std::move(meet), std::move(join)), members, Map(l.size())};
  if (kern.lattice.top() != idx(op[l.top()]) || kern.lattice.bottom() != idx(op[l.bottom()]))
    throw PreconditionError(std::string(name) + " kernel bounds are not the images of the bounds");
  for (std::size_t a = 0; a < l.size(); ++a) kern.project[a] = idx(op[a]);
  return kern;
}

}  // namespace

HeterogeneousAlgebra factorize(const ModalLattice& m) {
  if (auto aka = checkAKA(m); !aka.ok())
    throw PreconditionError("factorize requires an abstract Kent algebra: " + aka.firstFailure()->name + " fails");
  const Lattice& l = m.lattice();
  Kernel si = buildKernel(l, m.map(ModalOp::BoxS), "boxS");
  Kernel sc = buildKernel(l, m.map(ModalOp::DiaS), "diaS");
  Kernel li = buildKernel(l, m.map(ModalOp::DiaL), "diaL");
  Kernel lc = buildKernel(l, m.map(ModalOp::BoxL), "boxL");
  HeterogeneousAlgebra h{l,          si.lattice, sc.lattice, li.lattice, lc.lattice, si.members, si.project,
                         sc.members, sc.project, li.project, li.members, lc.project, lc.members};
  return h;
}

ModalLattice recompose(const HeterogeneousAlgebra& h) {
  if (auto rep = checkHAKA(h); !rep.ok()) {
    const auto* f = rep.firstFailure();
    throw PreconditionError("not a heterogeneous Kent algebra: " + f->name + " fails (" + f->detail + ")");
  }
  return ModalLattice(h.L, compose(h.whiteI, h.blackSqI), compose(h.whiteC, h.blackDiaC),
                      compose(h.whBoxC, h.bulletC), compose(h.whDiaI, h.bulletI));
}

std::optional<Violation> checkModalIsomorphism(const ModalLattice& a, const ModalLattice& b, const Map& map) {
  if (auto v = checkOrderIsomorphism(a.lattice(), b.lattice(), map)) return v;
  const std::pair<ModalOp, const char*> ops[] = {
      {ModalOp::BoxS, "boxS"}, {ModalOp::DiaS, "diaS"}, {ModalOp::BoxL, "boxL"}, {ModalOp::DiaL, "diaL"}};
  for (auto [op, name] : ops)
    for (std::size_t x = 0; x < a.size(); ++x)
      if (map[a.apply(op, x)] != b.apply(op, map[x]))
        return Violation{std::string("isomorphism does not commute with ") + name, {x}};
  return std::nullopt;
}

std::optional<Violation> checkHeteroIsomorphism(const HeterogeneousAlgebra& a, const HeterogeneousAlgebra& b,
                                                const HeteroIsomorphism& iso) {
  const std::tuple<const char*, const Lattice*, const Lattice*, const Map*> carriers[] = {
      {"L", &a.L, &b.L, &iso.L},
      {"S_I", &a.SI, &b.SI, &iso.SI},
      {"S_C", &a.SC, &b.SC, &iso.SC},
      {"L_I", &a.LI, &b.LI, &iso.LI},
      {"L_C", &a.LC, &b.LC, &iso.LC}};
  for (auto [name, la, lb, map] : carriers)
    if (auto v = checkOrderIsomorphism(*la, *lb, *map)) {
      v->law = std::string(name) + ": " + v->law;
      return v;
    }
  // f : X → Y commutes when isoY(fa(x)) = fb(isoX(x)).
  auto commutes = [](const char* name, const Map& fa, const Map& fb, const Map& isoX,
                     const Map& isoY) -> std::optional<Violation> {
    for (std::size_t x = 0; x < fa.size(); ++x)
      if (isoY[fa[x]] != fb[isoX[x]]) return Violation{std::string("isomorphism does not commute with ") + name, {x}};
    return std::nullopt;
  };
  if (auto v = commutes("whiteI", a.whiteI, b.whiteI, iso.SI, iso.L)) return v;
  if (auto v = commutes("blackSqI", a.blackSqI, b.blackSqI, iso.L, iso.SI)) return v;
  if (auto v = commutes("whiteC", a.whiteC, b.whiteC, iso.SC, iso.L)) return v;
  if (auto v = commutes("blackDiaC", a.blackDiaC, b.blackDiaC, iso.L, iso.SC)) return v;
  if (auto v = commutes("bulletI", a.bulletI, b.bulletI, iso.L, iso.LI)) return v;
  if (auto v = commutes("whDiaI", a.whDiaI, b.whDiaI, iso.LI, iso.L)) return v;
  if (auto v = commutes("bulletC", a.bulletC, b.bulletC, iso.L, iso.LC)) return v;
  if (auto v = commutes("whBoxC", a.whBoxC, b.whBoxC, iso.LC, iso.L)) return v;
  return std::nullopt;
}

Map roundTripIsomorphism(const ModalLattice& m) {
  Map id(m.size());
  for (std::size_t a = 0; a < id.size(); ++a) id[a] = a;
  return id;
}

HeteroIsomorphism roundTripIsomorphism(const HeterogeneousAlgebra& h, const HeterogeneousAlgebra& rebuilt) {
  if (!(h.L == rebuilt.L)) throw PreconditionError("rebuilt algebra has a different first carrier");
  // Element x ∈ K of h goes to the element of the rebuilt kernel embedded at the same point of L.
  auto viaEmbedding = [](const Map& embedA, const Map& embedB, const char* name) {
    std::map<std::size_t, std::size_t> inverse;
    for (std::size_t i = 0; i < embedB.size(); ++i) inverse[embedB[i]] = i;
    Map out(embedA.size());
    for (std::size_t x = 0; x < embedA.size(); ++x) {
      auto it = inverse.find(embedA[x]);
      if (it == inverse.end())
        throw PreconditionError(std::string(name) + " element " + std::to_string(x) + " has no counterpart");
      out[x] = it->second;
    }
    return out;
  };
  HeteroIsomorphism iso;
  iso.L = roundTripIsomorphism(ModalLattice::identity(h.L));
  iso.SI = viaEmbedding(h.whiteI, rebuilt.whiteI, "S_I");
  iso.SC = viaEmbedding(h.whiteC, rebuilt.whiteC, "S_C");
  iso.LI = viaEmbedding(h.whDiaI, rebuilt.whDiaI, "L_I");
  iso.LC = viaEmbedding(h.whBoxC, rebuilt.whBoxC, "L_C");
  return iso;
}

}  // namespace rca
