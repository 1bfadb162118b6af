#pragma once

#include "rca/context.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rca {

/// Partition of 0..n-1 into nonempty classes. Classes are kept sorted by their least member.
class Partition {
 public:
  Partition() = default;
  /// Throws StructuralError unless every index appears in exactly one class.
  Partition(std::size_t n, std::vector<std::vector<std::size_t>> classes);

  static Partition discrete(std::size_t n);
  static Partition indiscrete(std::size_t n);
  /// Normalizes an equivalence relation; throws StructuralError with the failing pair otherwise.
  static Partition fromEquivalence(const BinaryRelation& e);

  std::size_t universeSize() const { return classOf_.size(); }
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  std::size_t classIndexOf(std::size_t a) const { return classOf_.at(a); }
  /// (a)_E as a subset
  Subset classOf(std::size_t a) const;
  BinaryRelation toRelation() const;

  /// True iff every class of *this lies inside a class of `coarser`.
  bool refines(const Partition& coarser) const;

  bool operator==(const Partition& o) const { return classes_ == o.classes_; }

 private:
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> classOf_;
};

/// A rough formal context (ℙ, E).
struct RoughFormalContext {
  FormalContext ctx;
  Partition partition;

  RoughFormalContext(FormalContext c, Partition p);
};

/// Witnessed boolean verdict.
struct CheckResult {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string detail;

  explicit operator bool() const { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::size_t a, std::size_t b, std::string detail) {
    return {false, std::make_pair(a, b), std::move(detail)};
  }
};

/// R = {(a,x) | ∃b∈(a)_E: bIx}
BinaryRelation deriveLax(const RoughFormalContext& g);
/// S = {(a,x) | ∀b∈(a)_E: bIx}
BinaryRelation deriveStrict(const RoughFormalContext& g);

/// Every column preimage rel⁽⁰⁾[x] is a union of E-classes. Witness: (object, feature).
CheckResult isEDefinable(const BinaryRelation& rel, const Partition& e);
/// Same; throws StructuralError if `e` is not an equivalence relation.
CheckResult isEDefinable(const BinaryRelation& rel, const BinaryRelation& e);

/// How a relation sits relative to the polarity.
enum class Orientation {
  ObjectFeature,  // rel ⊆ A×X
  FeatureObject,  // rel ⊆ X×A
  ObjectObject,   // rel ⊆ A×A, e.g. the equivalence E
};

/// All singleton pre- and post-images are Galois-stable.
/// Witness: (i, side) where i is the offending singleton and side is 0 for the ⁽⁰⁾ image, 1 for ⁽¹⁾.
CheckResult isICompatible(const BinaryRelation& rel, const FormalContext& ctx, Orientation orientation);

struct AmenabilityReport {
  CheckResult e;
  CheckResult r;
  CheckResult s;

  bool amenable() const { return e.ok && r.ok && s.ok; }
};

AmenabilityReport isAmenable(const RoughFormalContext& g);

/// Column clause (R;T)⁽⁰⁾[x] = R⁽⁰⁾[I⁽¹⁾[T⁽⁰⁾[x]]].
BinaryRelation composeByColumns(const BinaryRelation& r, const BinaryRelation& t, const FormalContext& ctx);
/// Row clause (R;T)⁽¹⁾[a] = T⁽¹⁾[I⁽⁰⁾[R⁽¹⁾[a]]].
BinaryRelation composeByRows(const BinaryRelation& r, const BinaryRelation& t, const FormalContext& ctx);

/// R;T for I-compatible A×X relations. Computes both clauses and throws std::logic_error
/// if they disagree. Throws PreconditionError if either relation is not I-compatible.
BinaryRelation compose(const BinaryRelation& r, const BinaryRelation& t, const FormalContext& ctx);

/// S ⊆ I ⊆ R. Witness names the first missing pair.
CheckResult verifySandwich(const RoughFormalContext& g);
/// R;R ⊆ R and S ⊆ S;S. Throws PreconditionError when g is not amenable.
CheckResult verifyKB(const RoughFormalContext& g);

}  // namespace rca
