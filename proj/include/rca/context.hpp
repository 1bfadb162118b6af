#pragma once

#include "rca/lattice.hpp"
#include "rca/subset.hpp"

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rca {

/// T ⊆ U×V over dense index sets, stored both row-wise and column-wise.
class BinaryRelation {
 public:
  BinaryRelation() = default;
  BinaryRelation(std::size_t domainSize, std::size_t codomainSize);

  static BinaryRelation fromPairs(std::size_t domainSize, std::size_t codomainSize,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  static BinaryRelation identity(std::size_t n);
  static BinaryRelation full(std::size_t rows, std::size_t cols);

  std::size_t domainSize() const { return rows_.size(); }
  std::size_t codomainSize() const { return cols_.size(); }

  bool contains(std::size_t u, std::size_t v) const;
  void set(std::size_t u, std::size_t v, bool value = true);

  /// {v | uTv}
  const Subset& row(std::size_t u) const;
  /// {u | uTv}
  const Subset& column(std::size_t v) const;

  /// T⁽⁰⁾[V'] = {u | ∀v∈V': uTv}
  Subset zeroImage(const Subset& vs) const;
  /// T⁽¹⁾[U'] = {v | ∀u∈U': uTv}
  Subset oneImage(const Subset& us) const;

  BinaryRelation transpose() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  std::size_t pairCount() const;

  bool isSubsetOf(const BinaryRelation& o) const;
  /// First pair of *this that is missing from o.
  std::optional<std::pair<std::size_t, std::size_t>> firstPairNotIn(const BinaryRelation& o) const;

  bool operator==(const BinaryRelation& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

 private:
  std::vector<Subset> rows_;  // rows_[u] ⊆ V
  std::vector<Subset> cols_;  // cols_[v] ⊆ U
};

/// The polarity (A, X, I).
class FormalContext {
 public:
  FormalContext() = default;
  explicit FormalContext(BinaryRelation incidence) : incidence_(std::move(incidence)) {}

  std::size_t objectCount() const { return incidence_.domainSize(); }
  std::size_t featureCount() const { return incidence_.codomainSize(); }
  const BinaryRelation& incidence() const { return incidence_; }

  /// B↑ = I⁽¹⁾[B]
  Subset up(const Subset& objects) const;
  /// Y↓ = I⁽⁰⁾[Y]
  Subset down(const Subset& features) const;

  bool isClosedExtent(const Subset& objects) const { return down(up(objects)) == objects; }
  bool isClosedIntent(const Subset& features) const { return up(down(features)) == features; }

  bool operator==(const FormalContext& o) const { return incidence_ == o.incidence_; }

 private:
  BinaryRelation incidence_;
};

struct Concept {
  Subset extent;
  Subset intent;

  bool operator==(const Concept& o) const { return extent == o.extent && intent == o.intent; }
};

struct ConceptBounds {
  std::size_t maxObjects = 20;
  std::size_t maxFeatures = 20;
  std::size_t maxConcepts = 4096;
};

/// All concepts of a context, sorted by (extent size, extent members), with lattice tables.
class ConceptLattice {
 public:
  ConceptLattice(std::vector<Concept> concepts, Lattice lattice);

  std::size_t size() const { return concepts_.size(); }
  const std::vector<Concept>& concepts() const { return concepts_; }
  const Concept& at(std::size_t i) const { return concepts_[i]; }
  const Lattice& lattice() const { return lattice_; }

  std::optional<std::size_t> indexOfExtent(const Subset& extent) const;
  std::optional<std::size_t> indexOfIntent(const Subset& intent) const;

 private:
  std::vector<Concept> concepts_;
  Lattice lattice_;
  std::unordered_map<Subset, std::size_t> byExtent_;
  std::unordered_map<Subset, std::size_t> byIntent_;
};

/// NextClosure enumeration of every Galois-closed pair.
/// Throws CapacityError when the context or the result exceeds `bounds`.
ConceptLattice enumerateConcepts(const FormalContext& ctx, const ConceptBounds& bounds = {});

/// Outcome of the finite Birkhoff representation check.
struct BirkhoffResult {
  bool isomorphic = false;
  /// map[e] = index of the concept whose extent is the principal down-set of e.
  std::vector<std::size_t> map;
  /// Set on failure: the offending pair of elements.
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
  FormalContext context;
};

/// Builds (L, L, ≤), enumerates its concepts and returns the order-isomorphism e ↦ (↓e, ↑e).
BirkhoffResult checkBirkhoff(const Lattice& lat);

/// Same, starting from a bare order table; a non-lattice order raises StructuralError
/// naming the pair without a meet or join.
BirkhoffResult checkBirkhoff(std::size_t n, const std::vector<std::uint8_t>& leq);

}  // namespace rca
