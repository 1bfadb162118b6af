#pragma once

// Brute-force reference computations used as test oracles. They read only the raw
// incidence and order tables and share no code with the library algorithms.

#include "rca/context.hpp"
#include "rca/lattice.hpp"
#include "rca/modal.hpp"
#include "rca/rough.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Set = std::vector<bool>;

inline Set upOf(const rca::BinaryRelation& I, const Set& b) {
  Set out(I.codomainSize(), true);
  for (std::size_t x = 0; x < I.codomainSize(); ++x)
    for (std::size_t a = 0; a < I.domainSize(); ++a)
      if (b[a] && !I.contains(a, x)) out[x] = false;
  return out;
}

inline Set downOf(const rca::BinaryRelation& I, const Set& y) {
  Set out(I.domainSize(), true);
  for (std::size_t a = 0; a < I.domainSize(); ++a)
    for (std::size_t x = 0; x < I.codomainSize(); ++x)
      if (y[x] && !I.contains(a, x)) out[a] = false;
  return out;
}

inline Set fromMask(std::size_t n, std::uint32_t mask) {
  Set s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1u;
  return s;
}

inline Set fromSubset(const rca::Subset& s) {
  Set out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s.test(i);
  return out;
}

// Every closed extent, found by testing all 2^|A| object sets.
inline std::set<Set> closedExtents(const rca::FormalContext& ctx) {
  const auto& I = ctx.incidence();
  const std::size_t n = I.domainSize();
  std::set<Set> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Set b = fromMask(n, mask);
    if (downOf(I, upOf(I, b)) == b) out.insert(b);
  }
  return out;
}

// R and S straight from their definitions.
inline rca::BinaryRelation lax(const rca::RoughFormalContext& g) {
  const auto& I = g.ctx.incidence();
  rca::BinaryRelation r(I.domainSize(), I.codomainSize());
  for (std::size_t a = 0; a < I.domainSize(); ++a)
    for (std::size_t x = 0; x < I.codomainSize(); ++x)
      for (std::size_t b = 0; b < I.domainSize(); ++b)
        if (g.partition.classIndexOf(a) == g.partition.classIndexOf(b) && I.contains(b, x)) r.set(a, x);
  return r;
}

inline rca::BinaryRelation strict(const rca::RoughFormalContext& g) {
  const auto& I = g.ctx.incidence();
  rca::BinaryRelation s(I.domainSize(), I.codomainSize());
  for (std::size_t a = 0; a < I.domainSize(); ++a)
    for (std::size_t x = 0; x < I.codomainSize(); ++x) {
      bool all = true;
      for (std::size_t b = 0; b < I.domainSize(); ++b)
        if (g.partition.classIndexOf(a) == g.partition.classIndexOf(b) && !I.contains(b, x)) all = false;
      if (all) s.set(a, x);
    }
  return s;
}

inline Set column(const rca::BinaryRelation& r, std::size_t x) {
  Set s(r.domainSize());
  for (std::size_t a = 0; a < r.domainSize(); ++a) s[a] = r.contains(a, x);
  return s;
}

inline Set row(const rca::BinaryRelation& r, std::size_t a) {
  Set s(r.codomainSize());
  for (std::size_t x = 0; x < r.codomainSize(); ++x) s[x] = r.contains(a, x);
  return s;
}

// T⁽⁰⁾[Y] and T⁽¹⁾[B] by quantification.
inline Set zeroImage(const rca::BinaryRelation& t, const Set& y) { return downOf(t, y); }
inline Set oneImage(const rca::BinaryRelation& t, const Set& b) { return upOf(t, b); }

// Column clause: a (R;T) x iff a ∈ R⁽⁰⁾[I⁽¹⁾[T⁽⁰⁾[x]]].
inline rca::BinaryRelation composeColumns(const rca::BinaryRelation& r, const rca::BinaryRelation& t,
                                          const rca::BinaryRelation& I) {
  rca::BinaryRelation out(r.domainSize(), t.codomainSize());
  for (std::size_t x = 0; x < t.codomainSize(); ++x) {
    Set col = zeroImage(r, oneImage(I, column(t, x)));
    for (std::size_t a = 0; a < r.domainSize(); ++a)
      if (col[a]) out.set(a, x);
  }
  return out;
}

// Row clause: a (R;T) x iff x ∈ T⁽¹⁾[I⁽⁰⁾[R⁽¹⁾[a]]].
inline rca::BinaryRelation composeRows(const rca::BinaryRelation& r, const rca::BinaryRelation& t,
                                       const rca::BinaryRelation& I) {
  rca::BinaryRelation out(r.domainSize(), t.codomainSize());
  for (std::size_t a = 0; a < r.domainSize(); ++a) {
    Set rw = oneImage(t, zeroImage(I, row(r, a)));
    for (std::size_t x = 0; x < t.codomainSize(); ++x)
      if (rw[x]) out.set(a, x);
  }
  return out;
}

inline bool galoisStableExtent(const rca::BinaryRelation& I, const Set& b) { return downOf(I, upOf(I, b)) == b; }
inline bool galoisStableIntent(const rca::BinaryRelation& I, const Set& y) { return upOf(I, downOf(I, y)) == y; }

// Amenability by definition: E, R, S have Galois-stable singleton images, R and S have
// E-closed column preimages.
inline bool amenable(const rca::RoughFormalContext& g) {
  const auto& I = g.ctx.incidence();
  const std::size_t n = I.domainSize(), m = I.codomainSize();
  auto compatible = [&](const rca::BinaryRelation& rel) {
    for (std::size_t x = 0; x < m; ++x)
      if (!galoisStableExtent(I, column(rel, x))) return false;
    for (std::size_t a = 0; a < n; ++a)
      if (!galoisStableIntent(I, row(rel, a))) return false;
    return true;
  };
  auto eDefinable = [&](const rca::BinaryRelation& rel) {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (g.partition.classIndexOf(a) == g.partition.classIndexOf(b) && rel.contains(a, x) != rel.contains(b, x))
            return false;
    return true;
  };
  // E ⊆ A×A: its classes must be closed extents.
  for (const auto& cls : g.partition.classes()) {
    Set s(n);
    for (auto a : cls) s[a] = true;
    if (!galoisStableExtent(I, s)) return false;
  }
  auto r = lax(g), s = strict(g);
  return compatible(r) && compatible(s) && eDefinable(r) && eDefinable(s);
}

// Every permutation a → b, tried until one is an order isomorphism.
inline bool isomorphicByBijection(const rca::Lattice& a, const rca::Lattice& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> p(a.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < p.size(); ++i)
      for (std::size_t j = 0; ok && j < p.size(); ++j)
        if (a.leq(i, j) != b.leq(p[i], p[j])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// x ≤ y with the order read from the table only.
inline bool leq(const rca::Lattice& l, std::size_t x, std::size_t y) { return l.orderTable()[x * l.size() + y] != 0; }

// Greatest lower bound from the order table.
inline std::size_t glb(const rca::Lattice& l, std::size_t x, std::size_t y) {
  const std::size_t n = l.size();
  for (std::size_t z = 0; z < n; ++z) {
    if (!leq(l, z, x) || !leq(l, z, y)) continue;
    bool greatest = true;
    for (std::size_t w = 0; w < n; ++w)
      if (leq(l, w, x) && leq(l, w, y) && !leq(l, w, z)) greatest = false;
    if (greatest) return z;
  }
  return n;
}

inline std::size_t lub(const rca::Lattice& l, std::size_t x, std::size_t y) {
  const std::size_t n = l.size();
  for (std::size_t z = 0; z < n; ++z) {
    if (!leq(l, x, z) || !leq(l, y, z)) continue;
    bool least = true;
    for (std::size_t w = 0; w < n; ++w)
      if (leq(l, x, w) && leq(l, y, w) && !leq(l, z, w)) least = false;
    if (least) return z;
  }
  return n;
}

// K-IA3ₗ by direct quantification over element pairs.
inline bool kia3l(const rca::ModalLattice& m) {
  const auto& l = m.lattice();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b)
      if (leq(l, m.boxL(a), m.boxL(b)) && leq(l, m.diaL(a), m.diaL(b)) && !leq(l, a, b)) return false;
  return true;
}

// a ∧ □ₗb ≤ ◇ₗa ∨ b for all a, b.
inline bool kia3lSingle(const rca::ModalLattice& m) {
  const auto& l = m.lattice();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b)
      if (!leq(l, glb(l, a, m.boxL(b)), lub(l, m.diaL(a), b))) return false;
  return true;
}

}  // namespace oracle
