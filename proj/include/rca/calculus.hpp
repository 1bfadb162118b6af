#pragma once

#include "rca/kent.hpp"
#include "rca/modal.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rca {

enum class TypeTag : std::uint8_t { L, SI, SC, LI, LC };
std::string typeName(TypeTag t);

/// Operational connectives first, then their structural counterparts, then schema
/// metavariables. Structural tokens carry the `s.` prefix in the ASCII syntax.
enum class Op : std::uint8_t {
  Atom, Top, Bot, And, Or,
  WhiteI, WhiteC, DiaI, BoxC,          // L-valued
  BlackDiaI, BlackSqI,                 // S_I-valued
  BlackDiaC, BlackSqC,                 // S_C-valued
  BulletI, BulletC,                    // L_I, L_C-valued
  STop, SBot, SAnd, SOr,
  SWhiteI, SWhiteC, SDiaI, SBoxI, SDiaC, SBoxC,
  SBlackDiaI, SBlackSqI, SFalseI, STrueI, SCapI, SCupI,
  SBlackDiaC, SBlackSqC, SFalseC, STrueC, SCapC, SCupC,
  SBulletI, SZeroI, SOneI, SMeetI, SJoinI,
  SBulletC, SZeroC, SOneC, SMeetC, SJoinC,
  Meta,
};

/// Binary connectives bind by level: 2 for meet-like, 1 for join-like; 0 for the rest.
struct OpInfo {
  Op op;
  const char* ascii;
  const char* unicode;
  std::uint8_t arity;
  TypeTag result;
  TypeTag args[2];
  bool structural;
  std::uint8_t level;
};

const OpInfo& opInfo(Op op);
const std::vector<OpInfo>& opTable();
std::optional<Op> opFromAscii(std::string_view token);

/// Schema metavariables: A, B, F, al, de, pi, si match formulas; p matches atoms; any
/// other name matches arbitrary structures.
enum class MetaKind : std::uint8_t { Structure, Formula, Atom };
MetaKind metaKindOf(std::string_view name);

/// Immutable shared tree for formulas, structures and rule patterns.
class Node {
 public:
  /// The constant top; placeholder for default-constructed aggregates.
  Node() : Node(make(Op::Top)) {}
  static Node atom(std::string name);
  static Node meta(std::string name);
  static Node make(Op op, std::vector<Node> args = {});
  static Node make(Op op, Node a) { return make(op, std::vector<Node>{std::move(a)}); }
  static Node make(Op op, Node a, Node b) { return make(op, std::vector<Node>{std::move(a), std::move(b)}); }

  Op op() const { return data_->op; }
  const std::string& name() const { return data_->name; }
  std::size_t arity() const { return data_->args.size(); }
  const Node& arg(std::size_t i) const { return data_->args.at(i); }
  const std::vector<Node>& args() const { return data_->args; }

  /// No structural connective and no metavariable anywhere in the tree.
  bool isFormula() const { return data_->formula; }
  std::size_t size() const { return data_->size; }

  bool operator==(const Node& o) const;
  bool operator!=(const Node& o) const { return !(*this == o); }

  /// Node at `path` (child indices from this node).
  const Node& at(const std::vector<std::size_t>& path) const;
  /// Copy with the subtree at `path` replaced.
  Node replaced(const std::vector<std::size_t>& path, const Node& with) const;

 private:
  struct Data {
    Op op;
    std::string name;
    std::vector<Node> args;
    bool formula;
    std::size_t size;
  };
  explicit Node(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// Throws TypeError at the first grammar violation. Metavariables are rejected.
TypeTag typeOf(const Node& n);

struct Sequent {
  Node lhs;
  Node rhs;

  bool operator==(const Sequent& o) const { return lhs == o.lhs && rhs == o.rhs; }
  bool operator!=(const Sequent& o) const { return !(*this == o); }
};

/// Type of a type-uniform sequent; throws TypeError otherwise.
TypeTag typeOf(const Sequent& s);

enum class Calculus { AKA, AKA5p, KIA3l };
std::string calculusName(Calculus c);
/// Accepts "aka", "aka5p", "kia3l" and the long forms "D.AKA", "D.aKa5'", "D.K-IA3l".
std::optional<Calculus> parseCalculus(std::string_view s);
/// The algebra class on which the calculus is sound.
AlgebraClass calculusClass(Calculus c);

/// Which side of the conclusion the rule introduces a formula on.
enum class Principal : std::uint8_t { None, Left, Right, Both };

struct RuleVariant {
  std::vector<Sequent> premises;
  Sequent conclusion;
};

struct Rule {
  std::string id;
  std::string group;
  /// Double-line: every variant is single-premise and may be read upwards too.
  bool invertible = false;
  /// False for the structural package and for rules reconstructed or added by symmetry.
  bool printed = true;
  Principal principal = Principal::None;
  std::vector<RuleVariant> variants;
  std::vector<Calculus> calculi;
  std::string note;
};

const std::vector<Rule>& ruleTable();
const Rule* findRule(std::string_view id);
bool ruleInCalculus(const Rule& r, Calculus c);

/// The rule id for hypothesis leaves; the conclusion must be one of the declared hypotheses.
inline constexpr std::string_view kHypothesisRule = "hyp";

enum class StepError { None, UnknownRule, IllTyped, ArityMismatch, NotInCalculus, NoMatch, UnknownHypothesis };
std::string stepErrorName(StepError e);

struct StepVerdict {
  StepError error = StepError::None;
  std::string message;

  bool ok() const { return error == StepError::None; }
};

StepVerdict checkStep(const Sequent& conclusion, std::string_view rule, const std::vector<Sequent>& premises,
                      Calculus calc, const std::vector<Sequent>& hypotheses = {});

/// How a checked step matched its rule.
struct StepMatch {
  const Rule* rule = nullptr;
  std::size_t variant = 0;
  bool upward = false;  // double-line rule read from conclusion to premise
  std::map<std::string, Node> bindings;

  const std::vector<Sequent>& premisePatterns() const;
  const Sequent& conclusionPattern() const;
};

/// Ignores calculus membership. nullopt when no variant matches.
std::optional<StepMatch> matchStep(const Sequent& conclusion, std::string_view rule,
                                   const std::vector<Sequent>& premises);

/// Every conclusion obtainable from `premises` by `rule`, reading double-line rules both
/// ways. Variants whose conclusion mentions a metavariable absent from the premises are skipped.
std::vector<Sequent> applyRule(std::string_view rule, const std::vector<Sequent>& premises);

struct ProofTree {
  std::string rule;
  Sequent conclusion;
  std::vector<ProofTree> premises;

  bool operator==(const ProofTree& o) const {
    return rule == o.rule && conclusion == o.conclusion && premises == o.premises;
  }
};

struct ProofVerdict {
  bool valid = true;
  /// Child indices from the root to the first invalid node (pre-order).
  std::vector<std::size_t> path;
  StepVerdict step;
  std::string rule;

  std::string describe() const;
};

ProofVerdict checkProof(const ProofTree& tree, Calculus calc, const std::vector<Sequent>& hypotheses = {});

/// A proof together with its calculus and the hypotheses its `hyp` leaves may cite.
struct Proof {
  std::string name;
  Calculus calc = Calculus::AKA;
  std::vector<Sequent> hypotheses;
  ProofTree tree;
};

ProofVerdict checkProof(const Proof& p);

/// τ: □ₛ ↦ ∘_I■_I, ◇ₛ ↦ ∘_C◆_C, □ₗ ↦ □_C•_C, ◇ₗ ↦ ◇_I•_I, homomorphic elsewhere.
Node translate(const Term& t);
Sequent translate(const Inequality& i);

/// Every shipped derivation, each tagged with the least calculus it needs.
const std::vector<Proof>& axiomLibrary();
/// The derivations admissible in `calc`.
std::vector<Proof> axiomLibrary(Calculus calc);
const Proof& libraryProof(std::string_view name);

std::size_t cutCount(const ProofTree& t);
/// Sum over cut nodes of the size of the cut formula.
std::size_t cutRank(const ProofTree& t);
std::size_t proofSize(const ProofTree& t);

/// One rewrite of a root cut whose cut formula is principal in both premises, or whose
/// premise is an identity axiom. Throws PreconditionError otherwise.
ProofTree reducePrincipalCut(const ProofTree& t);

struct CutStep {
  std::vector<std::size_t> path;
  std::size_t rankBefore = 0;
  std::size_t rankAfter = 0;
  std::size_t lifts = 0;       // parametric moves made before the principal reduction
  std::size_t reductions = 0;  // principal reductions and identity absorptions
};

struct CutElimination {
  ProofTree tree;
  bool complete = false;
  std::size_t remainingCuts = 0;
  std::vector<CutStep> steps;
  std::string stuck;  // why no further step applies, when incomplete within budget
};

/// Repeatedly takes the leftmost topmost cut, moves it up through the parametric ancestors
/// of the cut formula until both sides are principal, and reduces it.
CutElimination eliminateCuts(const ProofTree& t, std::size_t budget = 1000);

/// Value of a structure under an atom assignment, reading structural connectives as their
/// operations in h, including the adjoints that exist only structurally.
std::size_t evalNode(const HeterogeneousAlgebra& h, const StructuralAdjoints& adj, const Node& n,
                     const std::map<std::string, std::size_t>& atoms);

struct SoundnessReport {
  bool sound = true;
  std::uint64_t checked = 0;
  std::optional<std::map<std::string, std::size_t>> witness;
  /// Path of the failing node when every node is checked.
  std::vector<std::size_t> path;
};

/// Every assignment satisfying the hypotheses satisfies the end-sequent (and, with
/// `everyNode`, every sequent of the tree). Throws PreconditionError if h is not in the
/// calculus's algebra class.
SoundnessReport checkSoundness(const Proof& p, const HeterogeneousAlgebra& h, bool everyNode = false);
bool validateSoundness(const ProofTree& tree, const HeterogeneousAlgebra& h, Calculus calc,
                       const std::vector<Sequent>& hypotheses = {});

/// Proof of F ⊢ F by identity expansion; the last rule introduces F on the right when
/// `endRight` is set and such an expansion exists, on the left otherwise.
ProofTree identityProof(const Node& f, bool endRight);
/// A root cut on f whose premises end with introductions of f (f not an atom).
ProofTree principalCutOn(const Node& f, bool preferFirst = true);

}  // namespace rca
