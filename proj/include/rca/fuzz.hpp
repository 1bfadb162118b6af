#pragma once

#include "rca/calculus.hpp"
#include "rca/context.hpp"
#include "rca/kent.hpp"
#include "rca/modal.hpp"
#include "rca/rough.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace rca {

/// All generators draw from this engine through uniformIndex, so a seed fixes the corpus
/// independently of the standard library's distribution implementations.
using Rng = std::mt19937_64;

/// Uniform in [0, n).
std::size_t uniformIndex(Rng& rng, std::size_t n);
/// Uniform in [lo, hi].
std::size_t uniformBetween(Rng& rng, std::size_t lo, std::size_t hi);
bool coin(Rng& rng, double p = 0.5);
std::vector<std::size_t> randomPermutation(Rng& rng, std::size_t n);

FormalContext randomContext(Rng& rng, std::size_t objects, std::size_t features, double density = 0.5);
Partition randomPartition(Rng& rng, std::size_t n);
/// |A| and |X| uniform in [1, max].
RoughFormalContext randomRfc(Rng& rng, std::size_t maxObjects, std::size_t maxFeatures);

struct AmenableSample {
  RoughFormalContext rfc;
  std::size_t attempts;
};

/// Rejection sampling over randomRfc; nullopt when maxAttempts draws are all rejected.
std::optional<AmenableSample> randomAmenableRfc(Rng& rng, std::size_t maxObjects, std::size_t maxFeatures,
                                                std::size_t maxAttempts = 100000);

/// Relabels element i as perm[i].
Lattice permuteLattice(const Lattice& l, const std::vector<std::size_t>& perm);
ModalLattice permuteModal(const ModalLattice& m, const std::vector<std::size_t>& perm);

/// Concept lattice of a random small context with shuffled labels, size in [minSize, maxSize].
Lattice randomLattice(Rng& rng, std::size_t minSize, std::size_t maxSize);

/// An aKa built directly: □ₛ is the interior onto a random join-closed family and □ₗ the
/// closure onto a random meet-closed family, each kept only if it preserves meets; the
/// diamonds are their left adjoints. Draws are repeated until the result lies in `target`.
ModalLattice randomDirectAKA(Rng& rng, std::size_t maxSize, AlgebraClass target = AlgebraClass::AKA);

/// Complex algebra of a random amenable Rfc with at most maxSize concepts.
std::optional<ModalLattice> randomComplexAKA(Rng& rng, std::size_t maxSize, std::size_t maxObjects = 5,
                                             std::size_t maxFeatures = 5);

/// Replaces the lax pair by □ₗ = ⊤, ◇ₗ = ⊥. The result is still an aKa and fails K-IA3ₗ
/// whenever the lattice has two elements.
ModalLattice breakKIA3l(const ModalLattice& m);

/// factorize(randomDirectAKA(...)), so every carrier has at most maxSize elements.
HeterogeneousAlgebra randomHAKA(Rng& rng, std::size_t maxSize, AlgebraClass target = AlgebraClass::AKA);

/// Single-type term over the given variable names; depth 0 yields a leaf.
Term randomTerm(Rng& rng, std::size_t depth, const std::vector<std::string>& vars);

/// Operational multi-type formula of type t (no structural connectives), atoms drawn from vars.
Node randomFormula(Rng& rng, std::size_t depth, TypeTag t, const std::vector<std::string>& vars);

}  // namespace rca
