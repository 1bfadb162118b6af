#pragma once

#include "rca/lattice.hpp"
#include "rca/modal.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rca {

/// Verdict for one named law. `witness` holds the element indices of the first failure.
struct AxiomVerdict {
  std::string name;
  bool ok = true;
  std::vector<std::size_t> witness;
  std::string detail;
};

struct AlgebraReport {
  std::vector<AxiomVerdict> verdicts;

  bool ok() const;
  const AxiomVerdict* firstFailure() const;
  const AxiomVerdict* find(const std::string& name) const;
};

/// Adjunctions ◇ₛ ⊣ □ₛ, ◇ₗ ⊣ □ₗ, the reflexive family and the transitive family.
AlgebraReport checkAKA(const ModalLattice& m);

/// The consequences every aKa satisfies. Throws PreconditionError if checkAKA fails.
AlgebraReport checkDerived(const ModalLattice& m);

/// The four aKa5′ inequalities.
AxiomVerdict checkAKA5p(const ModalLattice& m);
/// □ₛa ≤ □ₛb and ◇ₛa ≤ ◇ₛb imply a ≤ b. Witness (a, b).
AxiomVerdict checkKIA3s(const ModalLattice& m);
/// □ₗa ≤ □ₗb and ◇ₗa ≤ ◇ₗb imply a ≤ b. Witness (a, b).
AxiomVerdict checkKIA3l(const ModalLattice& m);

/// The laws above as term statements, for the generic checker and the CLI.
struct NamedAxiom {
  std::string name;
  QuasiInequality statement;
};
const std::vector<NamedAxiom>& axiomCatalogue();
const NamedAxiom& axiomByName(const std::string& name);

/// Subvarieties recognised by the checkers and the calculus.
enum class AlgebraClass { AKA, AKA5p, KIA3s, KIA3l };
std::string className(AlgebraClass c);
bool inClass(const ModalLattice& m, AlgebraClass c);

/// Maps are stored as index vectors: whiteI[α] is the L-index of ∘_Iα, and so on.
struct HeterogeneousAlgebra {
  Lattice L, SI, SC, LI, LC;
  std::vector<std::size_t> whiteI;     // ∘_I : S_I → L
  std::vector<std::size_t> blackSqI;   // ■_I : L → S_I
  std::vector<std::size_t> whiteC;     // ∘_C : S_C → L
  std::vector<std::size_t> blackDiaC;  // ◆_C : L → S_C
  std::vector<std::size_t> bulletI;    // •_I : L → L_I
  std::vector<std::size_t> whDiaI;     // ◇_I : L_I → L
  std::vector<std::size_t> bulletC;    // •_C : L → L_C
  std::vector<std::size_t> whBoxC;     // □_C : L_C → L
};

/// The adjoints that exist only at the structural level.
struct StructuralAdjoints {
  std::vector<std::size_t> blackDiaI;  // ◆_I : L → S_I, ◆_I ⊣ ∘_I
  std::vector<std::size_t> blackSqC;   // ■_C : L → S_C, ∘_C ⊣ ■_C
  std::vector<std::size_t> whBoxI;     // □_I : L_I → L, •_I ⊣ □_I
  std::vector<std::size_t> whDiaC;     // ◇_C : L_C → L, ◇_C ⊣ •_C
};

/// Left adjoint of f : A → B (g : B → A with g(y) ≤ x ⇔ y ≤ f(x)), if it exists.
std::optional<std::vector<std::size_t>> leftAdjoint(const Lattice& a, const Lattice& b,
                                                     const std::vector<std::size_t>& f);
/// Right adjoint of f : A → B (g : B → A with f(x) ≤ y ⇔ x ≤ g(y)), if it exists.
std::optional<std::vector<std::size_t>> rightAdjoint(const Lattice& a, const Lattice& b,
                                                      const std::vector<std::size_t>& f);

/// Throws PreconditionError if one of the adjoints does not exist.
StructuralAdjoints structuralAdjoints(const HeterogeneousAlgebra& h);

/// H1 bounded lattices, H2 homomorphisms, H3 adjunctions, H4 retractions, and
/// H5: ∘_I◆_I = ∘_C◆_C and □_I•_I = □_C•_C, which makes the recomposed diamonds
/// adjoint to the recomposed boxes.
AlgebraReport checkHAKA(const HeterogeneousAlgebra& h);

AxiomVerdict checkHAKA5p(const HeterogeneousAlgebra& h);
AxiomVerdict checkHKIA3s(const HeterogeneousAlgebra& h);
AxiomVerdict checkHKIA3l(const HeterogeneousAlgebra& h);
bool inClass(const HeterogeneousAlgebra& h, AlgebraClass c);

/// Kernels are the operator images ordered as in L, with the induced operations.
/// Throws PreconditionError if m is not an aKa.
HeterogeneousAlgebra factorize(const ModalLattice& m);

/// □ₛ = ∘_I■_I, ◇ₛ = ∘_C◆_C, □ₗ = □_C•_C, ◇ₗ = ◇_I•_I.
/// Throws PreconditionError if h fails checkHAKA.
ModalLattice recompose(const HeterogeneousAlgebra& h);

/// `map` must be an order isomorphism commuting with the four operators.
std::optional<Violation> checkModalIsomorphism(const ModalLattice& a, const ModalLattice& b,
                                               const std::vector<std::size_t>& map);

struct HeteroIsomorphism {
  std::vector<std::size_t> L, SI, SC, LI, LC;
};

/// Every carrier map is an order isomorphism and all eight maps commute with it.
std::optional<Violation> checkHeteroIsomorphism(const HeterogeneousAlgebra& a, const HeterogeneousAlgebra& b,
                                                const HeteroIsomorphism& iso);

/// m ≅ recompose(factorize(m)): the carrier is unchanged, so the map is the identity.
std::vector<std::size_t> roundTripIsomorphism(const ModalLattice& m);

/// h ≅ factorize(recompose(h)), built from the white maps of h and the inclusions of the
/// rebuilt kernels. Throws PreconditionError if `rebuilt` does not have the expected shape.
HeteroIsomorphism roundTripIsomorphism(const HeterogeneousAlgebra& h, const HeterogeneousAlgebra& rebuilt);

}  // namespace rca
