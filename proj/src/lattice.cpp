#include "rca/lattice.hpp"

#include "rca/errors.hpp"

#include <sstream>

namespace rca {

std::string Violation::describe() const {
  std::ostringstream os;
  os << law;
  if (!elements.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < elements.size(); ++i) os << (i ? ", " : "") << elements[i];
    os << ")";
  }
  return os.str();
}

std::optional<Violation> checkPartialOrder(std::size_t n, const std::vector<std::uint8_t>& leq) {
  if (leq.size() != n * n) return Violation{"order table has wrong size", {}};
  auto le = [&](std::size_t a, std::size_t b) { return leq[a * n + b] != 0; };
  for (std::size_t a = 0; a < n; ++a)
    if (!le(a, a)) return Violation{"reflexivity", {a}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (le(a, b) && le(b, a)) return Violation{"antisymmetry", {a, b}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!le(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (le(b, c) && !le(a, c)) return Violation{"transitivity", {a, b, c}};
    }
  return std::nullopt;
}

Lattice Lattice::fromOrder(std::size_t n, const std::vector<std::uint8_t>& leq) {
  if (n == 0) throw StructuralError("a lattice needs at least one element");
  if (auto v = checkPartialOrder(n, leq)) throw StructuralError("not a partial order: " + v->describe());
  auto le = [&](std::size_t a, std::size_t b) { return leq[a * n + b] != 0; };

  std::vector<std::uint32_t> meet(n * n), join(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      std::size_t glb = n, lub = n;
      for (std::size_t c = 0; c < n; ++c) {
        if (le(c, a) && le(c, b) && (glb == n || le(glb, c))) glb = c;
        if (le(a, c) && le(b, c) && (lub == n || le(c, lub))) lub = c;
      }
      // The scan keeps the last maximal candidate; confirm it dominates every lower bound.
      bool okMeet = glb != n, okJoin = lub != n;
      for (std::size_t c = 0; c < n && (okMeet || okJoin); ++c) {
        if (okMeet && le(c, a) && le(c, b) && !le(c, glb)) okMeet = false;
        if (okJoin && le(a, c) && le(b, c) && !le(lub, c)) okJoin = false;
      }
      if (!okMeet)
        throw StructuralError("not a lattice: no greatest lower bound for pair (" + std::to_string(a) + ", " +
                              std::to_string(b) + ")");
      if (!okJoin)
        throw StructuralError("not a lattice: no least upper bound for pair (" + std::to_string(a) + ", " +
                              std::to_string(b) + ")");
      meet[a * n + b] = meet[b * n + a] = static_cast<std::uint32_t>(glb);
      join[a * n + b] = join[b * n + a] = static_cast<std::uint32_t>(lub);
    }
  }
  std::size_t top = 0, bottom = 0;
  for (std::size_t a = 1; a < n; ++a) {
    top = join[top * n + a];
    bottom = meet[bottom * n + a];
  }
  return trusted(n, leq, std::move(meet), std::move(join), top, bottom);
}

Lattice Lattice::fromTables(std::size_t n, std::vector<std::uint8_t> leq, std::vector<std::uint32_t> meet,
                            std::vector<std::uint32_t> join) {
  if (meet.size() != n * n || join.size() != n * n) throw StructuralError("meet/join table has wrong size");
  for (auto v : meet)
    if (v >= n) throw StructuralError("meet table value out of range");
  for (auto v : join)
    if (v >= n) throw StructuralError("join table value out of range");
  Lattice reference = fromOrder(n, leq);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (meet[a * n + b] != reference.meet(a, b))
        throw StructuralError("meet table disagrees with the order at pair (" + std::to_string(a) + ", " +
                              std::to_string(b) + ")");
      if (join[a * n + b] != reference.join(a, b))
        throw StructuralError("join table disagrees with the order at pair (" + std::to_string(a) + ", " +
                              std::to_string(b) + ")");
    }
  return reference;
}

Lattice Lattice::trusted(std::size_t n, std::vector<std::uint8_t> leq, std::vector<std::uint32_t> meet,
                         std::vector<std::uint32_t> join, std::size_t top, std::size_t bottom) {
  Lattice l;
  l.n_ = n;
  l.leq_ = std::move(leq);
  l.meet_ = std::move(meet);
  l.join_ = std::move(join);
  l.top_ = top;
  l.bottom_ = bottom;
  return l;
}

std::vector<std::pair<std::size_t, std::size_t>> Lattice::hasseEdges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n_ && cover; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
      if (cover) edges.emplace_back(a, b);
    }
  return edges;
}

std::optional<Violation> Lattice::checkLaws() const {
  if (auto v = checkPartialOrder(n_, leq_)) return v;
  for (std::size_t a = 0; a < n_; ++a) {
    if (!leq(bottom_, a)) return Violation{"bottom is least", {bottom_, a}};
    if (!leq(a, top_)) return Violation{"top is greatest", {a, top_}};
    if (meet(a, a) != a || join(a, a) != a) return Violation{"idempotence", {a}};
    for (std::size_t b = 0; b < n_; ++b) {
      std::size_t m = meet(a, b), j = join(a, b);
      if (m != meet(b, a)) return Violation{"meet commutativity", {a, b}};
      if (j != join(b, a)) return Violation{"join commutativity", {a, b}};
      if (join(a, m) != a) return Violation{"absorption a v (a ^ b) = a", {a, b}};
      if (meet(a, j) != a) return Violation{"absorption a ^ (a v b) = a", {a, b}};
      if ((m == a) != leq(a, b)) return Violation{"meet agrees with order", {a, b}};
      if ((j == b) != leq(a, b)) return Violation{"join agrees with order", {a, b}};
      for (std::size_t c = 0; c < n_; ++c) {
        if (meet(m, c) != meet(a, meet(b, c))) return Violation{"meet associativity", {a, b, c}};
        if (join(j, c) != join(a, join(b, c))) return Violation{"join associativity", {a, b, c}};
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> checkOrderIsomorphism(const Lattice& a, const Lattice& b,
                                               const std::vector<std::size_t>& map) {
  if (a.size() != b.size() || map.size() != a.size()) return Violation{"size mismatch", {}};
  std::vector<bool> hit(b.size(), false);
  for (std::size_t x = 0; x < map.size(); ++x) {
    if (map[x] >= b.size()) return Violation{"map value out of range", {x}};
    if (hit[map[x]]) return Violation{"map is not injective", {x}};
    hit[map[x]] = true;
  }
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(map[x], map[y])) return Violation{"order not preserved and reflected", {x, y}};
  return std::nullopt;
}

}  // namespace rca
