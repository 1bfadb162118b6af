#include "rca/fuzz.hpp"

#include "rca/errors.hpp"

#include <algorithm>
#include <numeric>

namespace rca {

std::size_t uniformIndex(Rng& rng, std::size_t n) {
  if (n == 0) return 0;
  // Rejection keeps the draw unbiased and identical on every platform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

std::size_t uniformBetween(Rng& rng, std::size_t lo, std::size_t hi) { return lo + uniformIndex(rng, hi - lo + 1); }

bool coin(Rng& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

std::vector<std::size_t> randomPermutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[uniformIndex(rng, i)]);
  return p;
}

FormalContext randomContext(Rng& rng, std::size_t objects, std::size_t features, double density) {
  BinaryRelation inc(objects, features);
  for (std::size_t a = 0; a < objects; ++a)
    for (std::size_t x = 0; x < features; ++x)
      if (coin(rng, density)) inc.set(a, x);
  return FormalContext(std::move(inc));
}

Partition randomPartition(Rng& rng, std::size_t n) {
  // Each object joins an existing class or opens a new one with equal odds per option.
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t c = uniformIndex(rng, classes.size() + 1);
    if (c == classes.size()) classes.emplace_back();
    classes[c].push_back(a);
  }
  return Partition(n, std::move(classes));
}

RoughFormalContext randomRfc(Rng& rng, std::size_t maxObjects, std::size_t maxFeatures) {
  std::size_t na = uniformBetween(rng, 1, maxObjects), nx = uniformBetween(rng, 1, maxFeatures);
  double density = 0.2 + 0.6 * static_cast<double>(uniformIndex(rng, 4)) / 3.0;
  FormalContext ctx = randomContext(rng, na, nx, density);
  return RoughFormalContext(std::move(ctx), randomPartition(rng, na));
}

std::optional<AmenableSample> randomAmenableRfc(Rng& rng, std::size_t maxObjects, std::size_t maxFeatures,
                                                std::size_t maxAttempts) {
  for (std::size_t attempt = 1; attempt <= maxAttempts; ++attempt) {
    RoughFormalContext g = randomRfc(rng, maxObjects, maxFeatures);
    if (isAmenable(g).amenable()) return AmenableSample{std::move(g), attempt};
  }
  return std::nullopt;
}

Lattice permuteLattice(const Lattice& l, const std::vector<std::size_t>& perm) {
  const std::size_t n = l.size();
  std::vector<std::uint8_t> leq(n * n);
  std::vector<std::uint32_t> meet(n * n), join(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      leq[perm[a] * n + perm[b]] = l.leq(a, b);
      meet[perm[a] * n + perm[b]] = static_cast<std::uint32_t>(perm[l.meet(a, b)]);
      join[perm[a] * n + perm[b]] = static_cast<std::uint32_t>(perm[l.join(a, b)]);
    }
  return Lattice::trusted(n, std::move(leq), std::move(meet), std::move(join), perm[l.top()], perm[l.bottom()]);
}

ModalLattice permuteModal(const ModalLattice& m, const std::vector<std::size_t>& perm) {
  const std::size_t n = m.size();
  std::vector<std::size_t> maps[4];
  const ModalOp ops[] = {ModalOp::BoxS, ModalOp::DiaS, ModalOp::BoxL, ModalOp::DiaL};
  for (int k = 0; k < 4; ++k) {
    maps[k].resize(n);
    for (std::size_t a = 0; a < n; ++a) maps[k][perm[a]] = perm[m.apply(ops[k], a)];
  }
  return ModalLattice(permuteLattice(m.lattice(), perm), maps[0], maps[1], maps[2], maps[3]);
}

Lattice randomLattice(Rng& rng, std::size_t minSize, std::size_t maxSize) {
  if (minSize < 1 || minSize > maxSize) throw PreconditionError("invalid lattice size range");
  std::size_t side = 2;
  while ((std::size_t{1} << side) < maxSize && side < 6) ++side;
  // Aim at a uniformly drawn size first; small contexts otherwise make tiny lattices dominate.
  const std::size_t target = uniformBetween(rng, minSize, maxSize);
  for (std::size_t attempt = 0;; ++attempt) {
    std::size_t na = uniformBetween(rng, 1, side + 1), nx = uniformBetween(rng, 1, side + 1);
    ConceptLattice cl = enumerateConcepts(randomContext(rng, na, nx, 0.5));
    if (cl.size() < minSize || cl.size() > maxSize) continue;
    if (cl.size() != target && attempt < 2000) continue;
    return permuteLattice(cl.lattice(), randomPermutation(rng, cl.size()));
  }
}

namespace {

using Map = std::vector<std::size_t>;

bool preservesMeets(const Lattice& l, const Map& f) {
  if (f[l.top()] != l.top()) return false;
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = a + 1; b < l.size(); ++b)
      if (f[l.meet(a, b)] != l.meet(f[a], f[b])) return false;
  return true;
}

// Random subset of L together with `seeds`, closed under the binary operation `op`.
std::vector<bool> randomClosedFamily(Rng& rng, const Lattice& l, bool useJoin, std::initializer_list<std::size_t> seeds) {
  const std::size_t n = l.size();
  std::vector<bool> in(n, false);
  double p = static_cast<double>(uniformIndex(rng, 4)) / 4.0;
  for (std::size_t a = 0; a < n; ++a) in[a] = coin(rng, p);
  for (auto s : seeds) in[s] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (in[a] && in[b]) {
          std::size_t c = useJoin ? l.join(a, b) : l.meet(a, b);
          if (!in[c]) in[c] = changed = true;
        }
  }
  return in;
}

// Pair (□, ◇) with ◇ ⊣ □; `interior` selects □ₛ-style (deflationary □) versus □ₗ-style.
std::pair<Map, Map> randomAdjointPair(Rng& rng, const Lattice& l, bool interior) {
  const std::size_t n = l.size();
  for (int attempt = 0; attempt < 16; ++attempt) {
    Map box(n);
    if (interior) {
      auto fam = randomClosedFamily(rng, l, true, {l.top(), l.bottom()});
      for (std::size_t a = 0; a < n; ++a) {
        std::size_t best = l.bottom();
        for (std::size_t f = 0; f < n; ++f)
          if (fam[f] && l.leq(f, a)) best = l.join(best, f);
        box[a] = best;
      }
    } else {
      auto fam = randomClosedFamily(rng, l, false, {l.top()});
      for (std::size_t a = 0; a < n; ++a) {
        std::size_t best = l.top();
        for (std::size_t g = 0; g < n; ++g)
          if (fam[g] && l.leq(a, g)) best = l.meet(best, g);
        box[a] = best;
      }
    }
    if (!preservesMeets(l, box)) continue;
    if (auto dia = leftAdjoint(l, l, box)) return {box, *dia};
  }
  Map id(n);
  std::iota(id.begin(), id.end(), 0);
  return {id, id};
}

Map identityMap(std::size_t n) {
  Map id(n);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

}  // namespace

ModalLattice randomDirectAKA(Rng& rng, std::size_t maxSize, AlgebraClass target) {
  while (true) {
    Lattice l = randomLattice(rng, 1, maxSize);
    const std::size_t n = l.size();
    if (target == AlgebraClass::AKA5p) {
      // Every aKa5′ has identity operators (see checkAKA5p tests), so only the lattice varies.
      Map id = identityMap(n);
      return ModalLattice(std::move(l), id, id, id, id);
    }
    bool trivialStrict = target == AlgebraClass::KIA3s && coin(rng, 0.5);
    bool trivialLax = target == AlgebraClass::KIA3l && coin(rng, 0.5);
    auto [bS, dS] = trivialStrict ? std::pair{identityMap(n), identityMap(n)} : randomAdjointPair(rng, l, true);
    auto [bL, dL] = trivialLax ? std::pair{identityMap(n), identityMap(n)} : randomAdjointPair(rng, l, false);
    ModalLattice m(std::move(l), bS, dS, bL, dL);
    if (inClass(m, target)) return m;
  }
}

std::optional<ModalLattice> randomComplexAKA(Rng& rng, std::size_t maxSize, std::size_t maxObjects,
                                             std::size_t maxFeatures) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto sample = randomAmenableRfc(rng, maxObjects, maxFeatures);
    if (!sample) return std::nullopt;
    ModalLattice m = complexAlgebra(sample->rfc);
    if (m.size() <= maxSize) return m;
  }
  return std::nullopt;
}

ModalLattice breakKIA3l(const ModalLattice& m) {
  const std::size_t n = m.size();
  Map top(n, m.lattice().top()), bottom(n, m.lattice().bottom());
  return ModalLattice(m.lattice(), m.map(ModalOp::BoxS), m.map(ModalOp::DiaS), top, bottom);
}

HeterogeneousAlgebra randomHAKA(Rng& rng, std::size_t maxSize, AlgebraClass target) {
  return factorize(randomDirectAKA(rng, maxSize, target));
}

Term randomTerm(Rng& rng, std::size_t depth, const std::vector<std::string>& vars) {
  if (depth == 0 || coin(rng, 0.25)) {
    std::size_t k = uniformIndex(rng, vars.size() + 2);
    if (k == vars.size()) return Term::top();
    if (k == vars.size() + 1) return Term::bottom();
    return Term::var(vars[k]);
  }
  switch (uniformIndex(rng, 6)) {
    case 0: return Term::meet(randomTerm(rng, depth - 1, vars), randomTerm(rng, depth - 1, vars));
    case 1: return Term::join(randomTerm(rng, depth - 1, vars), randomTerm(rng, depth - 1, vars));
    case 2: return Term::boxS(randomTerm(rng, depth - 1, vars));
    case 3: return Term::diaS(randomTerm(rng, depth - 1, vars));
    case 4: return Term::boxL(randomTerm(rng, depth - 1, vars));
    default: return Term::diaL(randomTerm(rng, depth - 1, vars));
  }
}

Node randomFormula(Rng& rng, std::size_t depth, TypeTag t, const std::vector<std::string>& vars) {
  // Non-L types have no constants, so they always take one constructor step.
  auto sub = [&](TypeTag u) { return randomFormula(rng, depth == 0 ? 0 : depth - 1, u, vars); };
  switch (t) {
    case TypeTag::SI: return Node::make(coin(rng) ? Op::BlackSqI : Op::BlackDiaI, sub(TypeTag::L));
    case TypeTag::SC: return Node::make(coin(rng) ? Op::BlackDiaC : Op::BlackSqC, sub(TypeTag::L));
    case TypeTag::LI: return Node::make(Op::BulletI, sub(TypeTag::L));
    case TypeTag::LC: return Node::make(Op::BulletC, sub(TypeTag::L));
    case TypeTag::L: break;
  }
  if (depth == 0 || coin(rng, 0.25)) {
    std::size_t k = uniformIndex(rng, vars.size() + 2);
    if (k == vars.size()) return Node::make(Op::Top);
    if (k == vars.size() + 1) return Node::make(Op::Bot);
    return Node::atom(vars[k]);
  }
  switch (uniformIndex(rng, 6)) {
    case 0: return Node::make(Op::And, sub(TypeTag::L), sub(TypeTag::L));
    case 1: return Node::make(Op::Or, sub(TypeTag::L), sub(TypeTag::L));
    case 2: return Node::make(Op::WhiteI, sub(TypeTag::SI));
    case 3: return Node::make(Op::WhiteC, sub(TypeTag::SC));
    case 4: return Node::make(Op::DiaI, sub(TypeTag::LI));
    default: return Node::make(Op::BoxC, sub(TypeTag::LC));
  }
}

}  // namespace rca
