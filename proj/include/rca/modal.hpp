#pragma once

#include "rca/context.hpp"
#include "rca/lattice.hpp"
#include "rca/rough.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rca {

enum class ModalOp { BoxS, DiaS, BoxL, DiaL };

/// A finite bounded lattice with four unary maps. No law is assumed; see kent.hpp.
class ModalLattice {
 public:
  /// Throws StructuralError if any map is not total or has an out-of-range value.
  ModalLattice(Lattice lattice, std::vector<std::size_t> boxS, std::vector<std::size_t> diaS,
               std::vector<std::size_t> boxL, std::vector<std::size_t> diaL);

  /// All four maps are the identity.
  static ModalLattice identity(Lattice lattice);

  const Lattice& lattice() const { return lattice_; }
  std::size_t size() const { return lattice_.size(); }

  std::size_t apply(ModalOp op, std::size_t a) const { return map(op)[a]; }
  std::size_t boxS(std::size_t a) const { return boxS_[a]; }
  std::size_t diaS(std::size_t a) const { return diaS_[a]; }
  std::size_t boxL(std::size_t a) const { return boxL_[a]; }
  std::size_t diaL(std::size_t a) const { return diaL_[a]; }
  const std::vector<std::size_t>& map(ModalOp op) const;

  bool operator==(const ModalLattice& o) const {
    return lattice_ == o.lattice_ && boxS_ == o.boxS_ && diaS_ == o.diaS_ && boxL_ == o.boxL_ && diaL_ == o.diaL_;
  }

 private:
  Lattice lattice_;
  std::vector<std::size_t> boxS_, diaS_, boxL_, diaL_;
};

/// Terms of the single-type modal lattice signature.
class Term {
 public:
  enum class Kind { Var, Top, Bottom, Meet, Join, BoxS, DiaS, BoxL, DiaL };

  static Term var(std::string name);
  static Term top();
  static Term bottom();
  static Term meet(Term a, Term b);
  static Term join(Term a, Term b);
  static Term unary(Kind k, Term a);
  static Term boxS(Term a) { return unary(Kind::BoxS, std::move(a)); }
  static Term diaS(Term a) { return unary(Kind::DiaS, std::move(a)); }
  static Term boxL(Term a) { return unary(Kind::BoxL, std::move(a)); }
  static Term diaL(Term a) { return unary(Kind::DiaL, std::move(a)); }

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  std::size_t arity() const { return node_->args.size(); }
  const Term& arg(std::size_t i) const { return node_->args.at(i); }

  /// Sorted, without duplicates.
  std::vector<std::string> variables() const;
  std::size_t size() const;

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Inequality {
  Term lhs;
  Term rhs;
};

struct QuasiInequality {
  std::vector<Inequality> premises;
  Inequality conclusion;
};

using Assignment = std::map<std::string, std::size_t>;

struct ValidityResult {
  bool valid = true;
  std::uint64_t checked = 0;
  std::optional<Assignment> witness;
};

/// Throws EvaluationError on an unbound variable or out-of-range value.
std::size_t evalTerm(const ModalLattice& m, const Term& t, const Assignment& assignment);

constexpr std::uint64_t kDefaultMaxEvaluations = 10'000'000;

/// Universally quantifies over all assignments of the statement's variables.
/// Throws CapacityError if |L|^#vars exceeds `maxEvaluations`.
ValidityResult checkInequality(const ModalLattice& m, const Inequality& ineq,
                               std::uint64_t maxEvaluations = kDefaultMaxEvaluations);
ValidityResult checkQuasiInequality(const ModalLattice& m, const QuasiInequality& q,
                                    std::uint64_t maxEvaluations = kDefaultMaxEvaluations);

/// [rel]c for rel ⊆ A×X: extent rel⁽⁰⁾[intent c], closed upward. Throws PreconditionError
/// unless rel is I-compatible.
Concept modalBox(const BinaryRelation& rel, const FormalContext& ctx, const Concept& c);
/// ⟨rel⟩c for rel ⊆ A×X: intent rel⁽¹⁾[extent c], closed downward.
Concept modalDiamond(const BinaryRelation& rel, const FormalContext& ctx, const Concept& c);
/// ⟨rel⟩c for rel ⊆ X×A: intent rel⁽⁰⁾[extent c], closed downward.
Concept modalDiamondFeatureObject(const BinaryRelation& rel, const FormalContext& ctx, const Concept& c);

struct ComplexAlgebra {
  ConceptLattice concepts;
  ModalLattice algebra;
};

/// Concept lattice of g.ctx with boxS = [S], diaS = ⟨S⟩, boxL = [R], diaL = ⟨R⟩.
/// Throws PreconditionError unless g is amenable.
ComplexAlgebra buildComplexAlgebra(const RoughFormalContext& g, const ConceptBounds& bounds = {});
ModalLattice complexAlgebra(const RoughFormalContext& g, const ConceptBounds& bounds = {});

}  // namespace rca
