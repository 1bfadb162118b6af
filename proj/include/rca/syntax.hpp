#pragma once

#include "rca/calculus.hpp"
#include "rca/context.hpp"
#include "rca/errors.hpp"
#include "rca/kent.hpp"
#include "rca/modal.hpp"
#include "rca/rough.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rca {

/// Single: the modal symbols boxS diaS boxL diaL are accepted and expanded by τ.
/// Multi: the strict multi-type grammar only.
enum class ParseMode { Multi, Single };
enum class Glyphs { Ascii, Unicode };

// Single-type terms: variables, top, bot, /\, \/, boxS, diaS, boxL, diaL.
Term parseTerm(std::string_view text, const std::string& file = {});
std::string printTerm(const Term& t);
/// "lhs <= rhs"
Inequality parseInequality(std::string_view text, const std::string& file = {});
/// "p1 <= q1, p2 <= q2 => lhs <= rhs"; premises optional.
QuasiInequality parseQuasiInequality(std::string_view text, const std::string& file = {});
std::string printInequality(const Inequality& i);
std::string printQuasiInequality(const QuasiInequality& q);

// Multi-type formulas and structures.
Node parseNode(std::string_view text, ParseMode mode = ParseMode::Multi, const std::string& file = {});
Sequent parseSequent(std::string_view text, ParseMode mode = ParseMode::Multi, const std::string& file = {});
/// Rule-table syntax: `?name` metavariables are allowed and no typing is enforced.
Sequent parseSchema(std::string_view text);
std::string printNode(const Node& n, Glyphs g = Glyphs::Ascii);
std::string printSequent(const Sequent& s, Glyphs g = Glyphs::Ascii);

/// Header lines `format: 1`, `calc: <calc>`, `mode: multi|single`, optional `name:` and any
/// number of `hypothesis: <sequent>`, then one node `(rule <id> <sequent> <premise>*)`.
Proof parseProof(std::string_view text, const std::string& file = {});
std::string printProof(const Proof& p);
std::string printProofTree(const ProofTree& t, std::size_t indent = 0);

struct ContextFile {
  FormalContext ctx;
  std::optional<Partition> partition;
};

/// `context n m`, n rows of `.`/`X`, then an optional `partition:` block with one class
/// of space-separated object indices per line. `format: 1` and `#` comments are allowed.
ContextFile parseContextFile(std::string_view text, const std::string& file = {});
FormalContext parseContext(std::string_view text, const std::string& file = {});
/// Requires the partition block.
RoughFormalContext parseRoughContext(std::string_view text, const std::string& file = {});
std::string printContext(const FormalContext& ctx, const Partition* partition = nullptr);
inline std::string printRoughContext(const RoughFormalContext& g) { return printContext(g.ctx, &g.partition); }
/// Burmeister .cxt, import only.
FormalContext parseBurmeister(std::string_view text, const std::string& file = {});

enum class AlgebraKind { Modal, Heterogeneous };
/// From the `kind:` header line.
AlgebraKind detectAlgebraKind(std::string_view text, const std::string& file = {});

/// `kind: modal`, `carrier L: <names>`, `leq L: a<=b ...` (reflexive-transitive closure is
/// taken), and one `map <op>: <values>` line per operator with one value per element.
ModalLattice parseModalAlgebra(std::string_view text, const std::string& file = {});
std::string printModalAlgebra(const ModalLattice& m);
/// `kind: heterogeneous` with carriers L, S_I, S_C, L_I, L_C and maps wI bsI wC bdC bI dI bC boxC.
HeterogeneousAlgebra parseHeteroAlgebra(std::string_view text, const std::string& file = {});
std::string printHeteroAlgebra(const HeterogeneousAlgebra& h);

/// Hasse diagram in DOT.
std::string latticeToDot(const Lattice& l, const std::vector<std::string>& labels = {});

}  // namespace rca
