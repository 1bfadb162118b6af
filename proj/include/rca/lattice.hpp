#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rca {

/// A failed law together with the elements that witness the failure.
struct Violation {
  std::string law;
  std::vector<std::size_t> elements;

  std::string describe() const;
};

/// Finite bounded lattice held extensionally: order, meet and join tables.
class Lattice {
 public:
  /// Builds the lattice from a partial order given as a row-major n*n table.
  /// Throws StructuralError naming the failing pair if the order is not a lattice order.
  static Lattice fromOrder(std::size_t n, const std::vector<std::uint8_t>& leq);

  /// Builds from explicit tables and verifies that meet/join are the glb/lub of the order.
  static Lattice fromTables(std::size_t n, std::vector<std::uint8_t> leq, std::vector<std::uint32_t> meet,
                            std::vector<std::uint32_t> join);

  /// No validation; the caller guarantees consistency (used by constructions that are
  /// correct by design and checked separately in tests).
  static Lattice trusted(std::size_t n, std::vector<std::uint8_t> leq, std::vector<std::uint32_t> meet,
                         std::vector<std::uint32_t> join, std::size_t top, std::size_t bottom);

  std::size_t size() const { return n_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * n_ + b] != 0; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * n_ + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * n_ + b]; }
  std::size_t top() const { return top_; }
  std::size_t bottom() const { return bottom_; }

  const std::vector<std::uint8_t>& orderTable() const { return leq_; }
  const std::vector<std::uint32_t>& meetTable() const { return meet_; }
  const std::vector<std::uint32_t>& joinTable() const { return join_; }

  /// Covering pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> hasseEdges() const;

  /// Exhaustive check of the lattice laws and of table/order agreement.
  std::optional<Violation> checkLaws() const;

  bool operator==(const Lattice& o) const {
    return n_ == o.n_ && leq_ == o.leq_ && meet_ == o.meet_ && join_ == o.join_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
  std::size_t top_ = 0;
  std::size_t bottom_ = 0;
};

/// Checks reflexivity, antisymmetry and transitivity; returns the first failure.
std::optional<Violation> checkPartialOrder(std::size_t n, const std::vector<std::uint8_t>& leq);

/// True iff `map` is a bijection a -> b that preserves and reflects the order.
/// On failure the violation names the offending elements.
std::optional<Violation> checkOrderIsomorphism(const Lattice& a, const Lattice& b,
                                               const std::vector<std::size_t>& map);

}  // namespace rca
