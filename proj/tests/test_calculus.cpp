#include "rca/calculus.hpp"
#include "rca/errors.hpp"
#include "rca/fuzz.hpp"
#include "rca/syntax.hpp"

#include <gtest/gtest.h>

using namespace rca;

namespace {

Sequent seq(const char* s) { return parseSequent(s); }

ProofTree tree(const char* text) { return parseProof(std::string("calc: aka\n") + text).tree; }

bool strictlyDecreasing(const CutElimination& r) {
  for (const auto& s : r.steps)
    if (s.rankAfter >= s.rankBefore) return false;
  return true;
}

}  // namespace

TEST(Typing, Grammar) {
  EXPECT_EQ(typeOf(parseNode("wI bsI p")), TypeTag::L);
  EXPECT_EQ(typeOf(parseNode("bsI p")), TypeTag::SI);
  EXPECT_EQ(typeOf(parseNode("bdC p")), TypeTag::SC);
  EXPECT_EQ(typeOf(parseNode("bI p")), TypeTag::LI);
  EXPECT_EQ(typeOf(parseNode("s.bI p s.meetI s.bI q")), TypeTag::LI);
  EXPECT_THROW(typeOf(Node::make(Op::BlackSqI, Node::make(Op::BlackSqI, Node::atom("p")))), TypeError);
  EXPECT_THROW(typeOf(Sequent{parseNode("p"), parseNode("bsI p")}), TypeError);
}

TEST(Translate, SingleTypeToMultiType) {
  EXPECT_EQ(translate(parseTerm("boxS p")), parseNode("wI bsI p"));
  EXPECT_EQ(translate(parseTerm("p")), parseNode("p"));
  EXPECT_EQ(translate(parseTerm("diaL boxL p")), parseNode("dI bI boxC bC p"));
  EXPECT_EQ(translate(parseTerm("diaS p /\\ top")), parseNode("wC bdC p /\\ top"));
  EXPECT_EQ(translate(parseInequality("boxS p <= p")), seq("wI bsI p |- p"));
}

TEST(CheckStep, IdentityAndDisplay) {
  EXPECT_TRUE(checkStep(seq("p |- p"), "id", {}, Calculus::AKA).ok());
  EXPECT_EQ(checkStep(seq("p |- q"), "id", {}, Calculus::AKA).error, StepError::NoMatch);
  EXPECT_EQ(checkStep(seq("top |- top"), "id", {}, Calculus::AKA).error, StepError::NoMatch);
  // ad_LS_I read downwards and upwards
  Sequent upper = seq("s.wI bsI p |- q"), lower = seq("bsI p |- s.bsI q");
  EXPECT_TRUE(checkStep(lower, "adLSI", {upper}, Calculus::AKA).ok());
  EXPECT_TRUE(checkStep(upper, "adLSI", {lower}, Calculus::AKA).ok());
}

TEST(CheckStep, ErrorKinds) {
  Sequent s = seq("p |- p");
  EXPECT_EQ(checkStep(s, "no-such-rule", {}, Calculus::AKA).error, StepError::UnknownRule);
  EXPECT_EQ(checkStep(s, "cut", {s}, Calculus::AKA).error, StepError::ArityMismatch);
  EXPECT_EQ(checkStep(Sequent{parseNode("p"), parseNode("bsI p")}, "id", {}, Calculus::AKA).error, StepError::IllTyped);
  EXPECT_EQ(checkStep(s, "hyp", {}, Calculus::AKA).error, StepError::UnknownHypothesis);
  EXPECT_TRUE(checkStep(s, "hyp", {}, Calculus::AKA, {s}).ok());
}

TEST(CheckStep, KIA3lOnlyInItsCalculus) {
  Sequent x = seq("p |- q");
  std::vector<Sequent> prem = {seq("p |- s.boxI s.bI q"), seq("s.dC s.bC p |- q")};
  EXPECT_TRUE(checkStep(x, "kia3l", prem, Calculus::KIA3l).ok());
  EXPECT_EQ(checkStep(x, "kia3l", prem, Calculus::AKA).error, StepError::NotInCalculus);
  EXPECT_EQ(checkStep(x, "kia3l", prem, Calculus::AKA5p).error, StepError::NotInCalculus);
}

TEST(CheckProof, SingleIdentity) {
  EXPECT_TRUE(checkProof(tree("(rule id p |- p)"), Calculus::AKA).valid);
}

TEST(CheckProof, ReportsFirstFailingPath) {
  ProofTree t = tree("(rule bsI_R bsI p |- bsI q (rule bsI_L bsI p |- s.bsI q (rule id p |- q)))");
  ProofVerdict v = checkProof(t, Calculus::AKA);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.path, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(v.rule, "id");
}

TEST(Library, Inventory) {
  const auto& lib = axiomLibrary();
  EXPECT_GE(lib.size(), 16u);
  for (const char* name : {"reflexive-boxS", "reflexive-diaS", "reflexive-boxL", "reflexive-diaL", "transitive-boxS",
                           "transitive-diaS", "transitive-boxL", "transitive-diaL", "symmetric-1", "symmetric-2",
                           "symmetric-3", "symmetric-4", "kia3l-main", "kia3l-cut"})
    EXPECT_NO_THROW(libraryProof(name)) << name;
  EXPECT_THROW(libraryProof("nope"), PreconditionError);
  EXPECT_EQ(libraryProof("reflexive-boxS").tree.conclusion, seq("wI bsI p |- p"));
  EXPECT_EQ(libraryProof("kia3l-main").tree.conclusion, seq("p /\\ boxC bC q |- dI bI p \\/ q"));
}

TEST(Library, EveryProofChecksAndRoundTrips) {
  for (const Proof& p : axiomLibrary()) {
    ProofVerdict v = checkProof(p);
    EXPECT_TRUE(v.valid) << p.name << ": " << v.describe();
    Proof back = parseProof(printProof(p));
    EXPECT_EQ(back.tree, p.tree) << p.name;
    EXPECT_EQ(back.hypotheses, p.hypotheses) << p.name;
    EXPECT_TRUE(checkProof(back).valid) << p.name;
    EXPECT_TRUE(checkProof(p).valid) << p.name;  // idempotent
  }
}

TEST(Library, KIA3lDerivationRejectedWithoutTheRule) {
  const Proof& d = libraryProof("kia3l-main");
  EXPECT_EQ(d.calc, Calculus::KIA3l);
  ProofVerdict v = checkProof(d.tree, Calculus::AKA);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.rule, "kia3l");
  EXPECT_EQ(v.step.error, StepError::NotInCalculus);
  EXPECT_EQ(axiomLibrary(Calculus::AKA).size() + 2 + 4, axiomLibrary().size());
}

TEST(Soundness, IdentityAndLibrary) {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    HeterogeneousAlgebra h = randomHAKA(rng, 8);
    EXPECT_TRUE(validateSoundness(tree("(rule id p |- p)"), h, Calculus::AKA));
    for (const Proof& p : axiomLibrary(Calculus::AKA)) EXPECT_TRUE(checkSoundness(p, h, true).sound) << p.name;
  }
}

TEST(Soundness, ClassMismatchIsRefused) {
  Rng rng(32);
  HeterogeneousAlgebra h;
  do {
    h = factorize(breakKIA3l(randomDirectAKA(rng, 6)));
  } while (checkHKIA3l(h).ok);
  EXPECT_THROW(checkSoundness(libraryProof("kia3l-main"), h), PreconditionError);
}

TEST(Soundness, KIA3lEndSequentTracksTheClass) {
  // The end-sequent of the derivation holds exactly on algebras satisfying hK-IA3l.
  Rng rng(33);
  const Sequent end = libraryProof("kia3l-main").tree.conclusion;
  int failing = 0;
  for (int i = 0; i < 60; ++i) {
    ModalLattice m = i % 2 ? breakKIA3l(randomDirectAKA(rng, 6)) : randomDirectAKA(rng, 6);
    HeterogeneousAlgebra h = factorize(m);
    StructuralAdjoints adj = structuralAdjoints(h);
    bool valid = true;
    for (std::size_t p = 0; p < h.L.size(); ++p)
      for (std::size_t q = 0; q < h.L.size(); ++q) {
        std::map<std::string, std::size_t> v{{"p", p}, {"q", q}};
        if (!h.L.leq(evalNode(h, adj, end.lhs, v), evalNode(h, adj, end.rhs, v))) valid = false;
      }
    EXPECT_EQ(valid, checkHKIA3l(h).ok);
    failing += !valid;
  }
  EXPECT_GT(failing, 0);
}

TEST(Identity, ExpansionsCheck) {
  Rng rng(34);
  for (int i = 0; i < 100; ++i) {
    Node f = randomFormula(rng, 3, TypeTag::L, {"p", "q"});
    for (bool right : {true, false}) {
      ProofTree t = identityProof(f, right);
      EXPECT_EQ(t.conclusion, (Sequent{f, f}));
      EXPECT_TRUE(checkProof(t, Calculus::AKA).valid) << printNode(f);
      EXPECT_EQ(cutCount(t), 0u);
    }
  }
  EXPECT_THROW(identityProof(parseNode("s.top"), true), PreconditionError);
}

TEST(CutElim, AtomicCutAgainstIdentityIsDeleted) {
  ProofTree t = tree("(rule cut p |- p (rule id p |- p) (rule id p |- p))");
  EXPECT_EQ(reducePrincipalCut(t), tree("(rule id p |- p)"));
  CutElimination r = eliminateCuts(t);
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.tree, tree("(rule id p |- p)"));
}

TEST(CutElim, CutFreeInputUnchanged) {
  const ProofTree& t = libraryProof("reflexive-boxS").tree;
  ASSERT_EQ(cutCount(t), 0u);
  CutElimination r = eliminateCuts(t);
  EXPECT_TRUE(r.complete);
  EXPECT_TRUE(r.steps.empty());
  EXPECT_EQ(r.tree, t);
}

TEST(CutElim, BlackSquareShape) {
  Proof p = parseProof(R"(calc: aka
hypothesis: bsI q |- s.bsI p
hypothesis: p |- r
(rule cut bsI q |- s.bsI r
  (rule bsI_R bsI q |- bsI p (rule hyp bsI q |- s.bsI p))
  (rule bsI_L bsI p |- s.bsI r (rule hyp p |- r)))
)");
  ASSERT_TRUE(checkProof(p).valid);
  ProofTree expected = tree(R"(
(rule adLSI bsI q |- s.bsI r
  (rule cut s.wI bsI q |- r
    (rule adLSI s.wI bsI q |- p (rule hyp bsI q |- s.bsI p))
    (rule hyp p |- r)))
)");
  ProofTree got = reducePrincipalCut(p.tree);
  EXPECT_EQ(got, expected) << printProofTree(got);
  EXPECT_TRUE(checkProof(Proof{"", Calculus::AKA, p.hypotheses, got}).valid);
}

TEST(CutElim, WhiteCircleShape) {
  Proof p = parseProof(R"(calc: aka
hypothesis: q |- s.wI bsI p
hypothesis: s.wI bsI p |- r
(rule cut q |- r
  (rule wI_R q |- wI bsI p (rule hyp q |- s.wI bsI p))
  (rule wI_L wI bsI p |- r (rule hyp s.wI bsI p |- r)))
)");
  ASSERT_TRUE(checkProof(p).valid);
  // The displayed cut on α between ◆̂X ⊢ α and α ⊢ ■̌Y; the final unlabelled step to X ⊢ Y
  // is the display step followed by the ∘̃◆̂ contraction.
  ProofTree expected = tree(R"(
(rule wI-bdI q |- r
  (rule adLSI s.wI s.bdI q |- r
    (rule cut s.bdI q |- s.bsI r
      (rule adLSI s.bdI q |- bsI p (rule hyp q |- s.wI bsI p))
      (rule adLSI bsI p |- s.bsI r (rule hyp s.wI bsI p |- r)))))
)");
  ProofTree got = reducePrincipalCut(p.tree);
  EXPECT_EQ(got, expected) << printProofTree(got);
  EXPECT_TRUE(checkProof(Proof{"", Calculus::AKA, p.hypotheses, got}).valid);
}

TEST(CutElim, NonPrincipalCutIsNotReducedDirectly) {
  // The root cut of kia3l-cut has a contraction above its left premise.
  const ProofTree& t = libraryProof("kia3l-cut").tree;
  ASSERT_EQ(t.rule, "cut");
  EXPECT_THROW(reducePrincipalCut(t), PreconditionError);
  EXPECT_NO_THROW(reducePrincipalCut(principalCutOn(parseNode("p /\\ q"))));
}

TEST(CutElim, GeneratedPrincipalCuts) {
  Rng rng(35);
  int done = 0;
  while (done < 40) {
    Node f = randomFormula(rng, 3, TypeTag::L, {"p", "q"});
    if (f.op() == Op::Atom) continue;
    ProofTree t = principalCutOn(f, coin(rng));
    ASSERT_TRUE(checkProof(t, Calculus::AKA).valid) << printNode(f);
    CutElimination r = eliminateCuts(t);
    EXPECT_TRUE(r.complete) << printNode(f) << ": " << r.stuck;
    EXPECT_EQ(cutCount(r.tree), 0u);
    EXPECT_EQ(r.tree.conclusion, t.conclusion);
    EXPECT_TRUE(strictlyDecreasing(r)) << printNode(f);
    EXPECT_TRUE(checkProof(r.tree, Calculus::AKA).valid) << printNode(f);
    ++done;
  }
}

TEST(CutElim, LibraryCutsEliminated) {
  const Proof& p = libraryProof("kia3l-cut");
  ASSERT_GT(cutCount(p.tree), 0u);
  CutElimination r = eliminateCuts(p.tree);
  // Cuts against hypothesis leaves cannot be moved above the hypothesis.
  EXPECT_EQ(r.tree.conclusion, p.tree.conclusion);
  EXPECT_TRUE(checkProof(Proof{p.name, p.calc, p.hypotheses, r.tree}).valid);
  EXPECT_TRUE(strictlyDecreasing(r));
}

TEST(CutElim, BudgetExhaustion) {
  ProofTree t = principalCutOn(parseNode("wI bsI (p /\\ q)"));
  CutElimination r = eliminateCuts(t, 1);
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(r.steps.size(), 1u);
  EXPECT_FALSE(r.stuck.empty());
  EXPECT_EQ(r.tree.conclusion, t.conclusion);
}
