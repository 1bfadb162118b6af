#include "rca/context.hpp"

#include "rca/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rca {

namespace {

void requireIndex(std::size_t i, std::size_t n, const char* what) {
  if (i >= n)
    throw StructuralError(std::string(what) + " index " + std::to_string(i) + " out of range (size " +
                          std::to_string(n) + ")");
}

}  // namespace

BinaryRelation::BinaryRelation(std::size_t domainSize, std::size_t codomainSize)
    : rows_(domainSize, Subset(codomainSize)), cols_(codomainSize, Subset(domainSize)) {}

BinaryRelation BinaryRelation::fromPairs(std::size_t domainSize, std::size_t codomainSize,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  BinaryRelation r(domainSize, codomainSize);
  for (auto [u, v] : pairs) r.set(u, v);
  return r;
}

BinaryRelation BinaryRelation::identity(std::size_t n) {
  BinaryRelation r(n, n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

BinaryRelation BinaryRelation::full(std::size_t rows, std::size_t cols) {
  BinaryRelation r(rows, cols);
  for (auto& s : r.rows_) s.set();
  for (auto& s : r.cols_) s.set();
  return r;
}

bool BinaryRelation::contains(std::size_t u, std::size_t v) const {
  requireIndex(u, domainSize(), "domain");
  requireIndex(v, codomainSize(), "codomain");
  return rows_[u].test(v);
}

void BinaryRelation::set(std::size_t u, std::size_t v, bool value) {
  requireIndex(u, domainSize(), "domain");
  requireIndex(v, codomainSize(), "codomain");
  rows_[u].set(v, value);
  cols_[v].set(u, value);
}

const Subset& BinaryRelation::row(std::size_t u) const {
  requireIndex(u, domainSize(), "domain");
  return rows_[u];
}

const Subset& BinaryRelation::column(std::size_t v) const {
  requireIndex(v, codomainSize(), "codomain");
  return cols_[v];
}

Subset BinaryRelation::zeroImage(const Subset& vs) const {
  if (vs.size() != codomainSize()) throw StructuralError("subset does not match the codomain size");
  Subset out = fullSet(domainSize());
  for (auto v = vs.find_first(); v != Subset::npos; v = vs.find_next(v)) out &= cols_[v];
  return out;
}

Subset BinaryRelation::oneImage(const Subset& us) const {
  if (us.size() != domainSize()) throw StructuralError("subset does not match the domain size");
  Subset out = fullSet(codomainSize());
  for (auto u = us.find_first(); u != Subset::npos; u = us.find_next(u)) out &= rows_[u];
  return out;
}

BinaryRelation BinaryRelation::transpose() const {
  BinaryRelation t;
  t.rows_ = cols_;
  t.cols_ = rows_;
  return t;
}

std::vector<std::pair<std::size_t, std::size_t>> BinaryRelation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < rows_.size(); ++u)
    for (auto v = rows_[u].find_first(); v != Subset::npos; v = rows_[u].find_next(v)) out.emplace_back(u, v);
  return out;
}

std::size_t BinaryRelation::pairCount() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.count();
  return n;
}

bool BinaryRelation::isSubsetOf(const BinaryRelation& o) const { return !firstPairNotIn(o).has_value(); }

std::optional<std::pair<std::size_t, std::size_t>> BinaryRelation::firstPairNotIn(const BinaryRelation& o) const {
  if (domainSize() != o.domainSize() || codomainSize() != o.codomainSize())
    throw StructuralError("relations of different shapes cannot be compared");
  for (std::size_t u = 0; u < rows_.size(); ++u) {
    Subset extra = rows_[u] - o.rows_[u];
    if (extra.any()) return std::make_pair(u, extra.find_first());
  }
  return std::nullopt;
}

Subset FormalContext::up(const Subset& objects) const { return incidence_.oneImage(objects); }

Subset FormalContext::down(const Subset& features) const { return incidence_.zeroImage(features); }

ConceptLattice::ConceptLattice(std::vector<Concept> concepts, Lattice lattice)
    : concepts_(std::move(concepts)), lattice_(std::move(lattice)) {
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    byExtent_.emplace(concepts_[i].extent, i);
    byIntent_.emplace(concepts_[i].intent, i);
  }
}

std::optional<std::size_t> ConceptLattice::indexOfExtent(const Subset& extent) const {
  auto it = byExtent_.find(extent);
  if (it == byExtent_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ConceptLattice::indexOfIntent(const Subset& intent) const {
  auto it = byIntent_.find(intent);
  if (it == byIntent_.end()) return std::nullopt;
  return it->second;
}

ConceptLattice enumerateConcepts(const FormalContext& ctx, const ConceptBounds& bounds) {
  const std::size_t na = ctx.objectCount();
  if (na > bounds.maxObjects || ctx.featureCount() > bounds.maxFeatures)
    throw CapacityError("context " + std::to_string(na) + "x" + std::to_string(ctx.featureCount()) +
                        " exceeds the bound " + std::to_string(bounds.maxObjects) + "x" +
                        std::to_string(bounds.maxFeatures));

  auto close = [&](const Subset& b) { return ctx.down(ctx.up(b)); };

  // NextClosure over object sets, in lectic order where index 0 is the most significant.
  std::vector<Subset> extents;
  Subset current = close(Subset(na));
  extents.push_back(current);
  while (current.count() < na) {
    bool advanced = false;
    for (std::size_t k = na; k-- > 0;) {
      if (current.test(k)) continue;
      Subset candidate = current;
      for (std::size_t j = k + 1; j < na; ++j) candidate.reset(j);
      candidate.set(k);
      Subset closed = close(candidate);
      bool canonical = true;
      for (std::size_t j = 0; j < k; ++j)
        if (closed.test(j) != current.test(j)) {
          canonical = false;
          break;
        }
      if (canonical) {
        current = std::move(closed);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    extents.push_back(current);
    if (extents.size() > bounds.maxConcepts)
      throw CapacityError("more than " + std::to_string(bounds.maxConcepts) + " concepts");
  }

  std::sort(extents.begin(), extents.end(), subsetLess);
  const std::size_t n = extents.size();
  std::vector<Concept> concepts;
  concepts.reserve(n);
  std::unordered_map<Subset, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    concepts.push_back({extents[i], ctx.up(extents[i])});
    index.emplace(extents[i], i);
  }
  std::unordered_map<Subset, std::size_t> byIntent;
  for (std::size_t i = 0; i < n; ++i) byIntent.emplace(concepts[i].intent, i);

  std::vector<std::uint8_t> leq(n * n, 0);
  std::vector<std::uint32_t> meet(n * n), join(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto& ei = concepts[i].extent;
      const auto& ej = concepts[j].extent;
      leq[i * n + j] = ei.is_subset_of(ej);
      leq[j * n + i] = ej.is_subset_of(ei);
      auto m = static_cast<std::uint32_t>(index.at(ei & ej));
      auto s = static_cast<std::uint32_t>(byIntent.at(concepts[i].intent & concepts[j].intent));
      meet[i * n + j] = meet[j * n + i] = m;
      join[i * n + j] = join[j * n + i] = s;
    }
  }
  // Sorting by cardinality puts (X↓, X) first and (A, A↑) last.
  Lattice lat = Lattice::trusted(n, std::move(leq), std::move(meet), std::move(join), n - 1, 0);
  return ConceptLattice(std::move(concepts), std::move(lat));
}

BirkhoffResult checkBirkhoff(const Lattice& lat) {
  const std::size_t n = lat.size();
  BinaryRelation le(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (lat.leq(a, b)) le.set(a, b);

  BirkhoffResult result;
  result.context = FormalContext(le);
  ConceptBounds bounds{n, n, std::max<std::size_t>(n, 1) * 4};
  ConceptLattice concepts = enumerateConcepts(result.context, bounds);

  result.map.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    auto idx = concepts.indexOfExtent(le.column(e));
    if (!idx) {
      result.counterexample = std::make_pair(e, e);
      return result;
    }
    result.map[e] = *idx;
  }
  if (concepts.size() != n) {
    // Some concept is not principal; report the pair whose meet generates it, if any.
    result.counterexample = std::make_pair(std::size_t{0}, n ? n - 1 : 0);
    return result;
  }
  if (auto v = checkOrderIsomorphism(lat, concepts.lattice(), result.map)) {
    auto a = v->elements.empty() ? 0 : v->elements.front();
    auto b = v->elements.size() > 1 ? v->elements[1] : a;
    result.counterexample = std::make_pair(a, b);
    return result;
  }
  result.isomorphic = true;
  return result;
}

BirkhoffResult checkBirkhoff(std::size_t n, const std::vector<std::uint8_t>& leq) {
  return checkBirkhoff(Lattice::fromOrder(n, leq));
}

}  // namespace rca
