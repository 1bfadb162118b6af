#include "rca/calculus.hpp"
#include "rca/errors.hpp"
#include "rca/fuzz.hpp"
#include "rca/syntax.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

using namespace rca;

namespace {

SourceSpan spanOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.span();
  }
  ADD_FAILURE() << "expected ParseError";
  return {};
}

}  // namespace

TEST(ContextFormat, Examples) {
  FormalContext full = parseContext("context 1 1\nX\n");
  EXPECT_EQ(full, FormalContext(BinaryRelation::full(1, 1)));
  FormalContext diag = parseContext("context 2 2\nX.\n.X\n");
  EXPECT_EQ(diag, FormalContext(BinaryRelation::identity(2)));
  EXPECT_EQ(enumerateConcepts(diag).size(), 4u);
}

TEST(ContextFormat, Normalization) {
  const char* messy = "format: 1\n# comment\ncontext 2 3\nx.1\n0X.\npartition:\n1 0\n";
  ContextFile cf = parseContextFile(messy);
  std::string canonical = printContext(cf.ctx, &*cf.partition);
  EXPECT_EQ(canonical, "format: 1\ncontext 2 3\nX.X\n.X.\npartition:\n0 1\n");
  ContextFile again = parseContextFile(canonical);
  EXPECT_EQ(again.ctx, cf.ctx);
  EXPECT_EQ(*again.partition, *cf.partition);
  EXPECT_EQ(printContext(again.ctx, &*again.partition), canonical);
}

TEST(ContextFormat, RoundTripRandom) {
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    RoughFormalContext g = randomRfc(rng, 6, 6);
    RoughFormalContext back = parseRoughContext(printRoughContext(g));
    EXPECT_EQ(back.ctx, g.ctx);
    EXPECT_EQ(back.partition, g.partition);
  }
}

TEST(ContextFormat, Diagnostics) {
  SourceSpan s = spanOf([] { parseContext("contxt 1 1\nX\n", "a.ctx"); });
  EXPECT_EQ(s.file, "a.ctx");
  EXPECT_EQ(s.line, 1u);
  s = spanOf([] { parseContext("context 2 2\nX.\nX\n"); });
  EXPECT_EQ(s.line, 3u);
  s = spanOf([] { parseContext("context 2 2\nX.\n.X\npartition:\n0 5\n1\n"); });
  EXPECT_EQ(s.line, 5u);
  EXPECT_EQ(s.column, 3u);
  EXPECT_THROW(parseRoughContext("context 1 1\nX\n"), ParseError);
}

TEST(ContextFormat, Burmeister) {
  FormalContext c = parseBurmeister("B\n\n2\n2\n\ng\nh\nm\nn\nX.\n.X\n");
  EXPECT_EQ(c, FormalContext(BinaryRelation::identity(2)));
}

TEST(TermSyntax, RoundTrip) {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    Term t = randomTerm(rng, 4, {"a", "b", "c"});
    EXPECT_EQ(parseTerm(printTerm(t)), t) << printTerm(t);
  }
  EXPECT_EQ(printTerm(parseTerm("(a /\\ b) \\/ c")), "a /\\ b \\/ c");
  EXPECT_EQ(printTerm(parseTerm("a /\\ (b \\/ c)")), "a /\\ (b \\/ c)");
  EXPECT_EQ(printTerm(parseTerm("boxS (a /\\ b)")), "boxS (a /\\ b)");
  QuasiInequality q = parseQuasiInequality("boxL a <= boxL b, diaL a <= diaL b => a <= b");
  EXPECT_EQ(q.premises.size(), 2u);
  EXPECT_EQ(parseQuasiInequality(printQuasiInequality(q)).conclusion.lhs, q.conclusion.lhs);
}

TEST(SequentSyntax, Modes) {
  EXPECT_THROW(parseSequent("boxS p |- p"), ParseError);
  Sequent s = parseSequent("boxS p |- p", ParseMode::Single);
  EXPECT_EQ(s, parseSequent("wI bsI p |- p"));
  EXPECT_EQ(printSequent(s), "wI bsI p |- p");
  EXPECT_EQ(printSequent(s, Glyphs::Unicode), "∘_I ■_I p ⊢ p");
}

TEST(SequentSyntax, TypeErrorAtArgument) {
  SourceSpan s = spanOf([] { parseNode("bsI (bsI p)"); });
  EXPECT_EQ(s.line, 1u);
  EXPECT_EQ(s.column, 5u);
  s = spanOf([] { parseSequent("p |- bsI p"); });
  EXPECT_EQ(s.column, 6u);
}

TEST(SequentSyntax, FormulaRoundTrip) {
  Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    Node f = randomFormula(rng, 4, TypeTag::L, {"p", "q"});
    EXPECT_EQ(parseNode(printNode(f)), f) << printNode(f);
  }
}

TEST(ProofSyntax, RoundTripAndRecheck) {
  for (const Proof& p : axiomLibrary()) {
    std::string text = printProof(p);
    Proof back = parseProof(text, p.name);
    EXPECT_EQ(printProof(back), text);
    EXPECT_EQ(checkProof(back).valid, checkProof(p).valid);
  }
}

TEST(ProofSyntax, HeaderErrors) {
  EXPECT_THROW(parseProof("(rule id p |- p)"), ParseError);
  EXPECT_THROW(parseProof("calc: nope\n(rule id p |- p)"), ParseError);
  SourceSpan s = spanOf([] { parseProof("calc: aka\n(rule id p |- p", "x.proof"); });
  EXPECT_EQ(s.file, "x.proof");
  EXPECT_EQ(s.line, 2u);
}

TEST(AlgebraSyntax, ModalRoundTrip) {
  Rng rng(44);
  for (int i = 0; i < 50; ++i) {
    ModalLattice m = randomDirectAKA(rng, 8);
    ModalLattice back = parseModalAlgebra(printModalAlgebra(m));
    EXPECT_EQ(back, m);
  }
}

TEST(AlgebraSyntax, HeteroRoundTrip) {
  Rng rng(45);
  for (int i = 0; i < 30; ++i) {
    HeterogeneousAlgebra h = randomHAKA(rng, 8);
    HeterogeneousAlgebra back = parseHeteroAlgebra(printHeteroAlgebra(h));
    EXPECT_EQ(back.L, h.L);
    EXPECT_EQ(back.SI, h.SI);
    EXPECT_EQ(back.LC, h.LC);
    EXPECT_EQ(back.whiteI, h.whiteI);
    EXPECT_EQ(back.whBoxC, h.whBoxC);
    EXPECT_EQ(printHeteroAlgebra(back), printHeteroAlgebra(h));
  }
}

TEST(AlgebraSyntax, Diagnostics) {
  const char* notLattice = "kind: modal\ncarrier L: a b c\nleq L: a<=b a<=c\nmap boxS: a b c\n";
  SourceSpan s = spanOf([=] { parseModalAlgebra(notLattice); });
  EXPECT_EQ(s.line, 3u);
  const char* badValue = "kind: modal\ncarrier L: a b\nleq L: a<=b\nmap boxS: a z\nmap diaS: a b\nmap boxL: a b\nmap diaL: a b\n";
  s = spanOf([=] { parseModalAlgebra(badValue); });
  EXPECT_EQ(s.line, 4u);
  EXPECT_EQ(detectAlgebraKind("kind: heterogeneous\n"), AlgebraKind::Heterogeneous);
}

TEST(Dot, HasseDiagram) {
  Lattice l = enumerateConcepts(FormalContext(BinaryRelation::identity(2))).lattice();
  std::string dot = latticeToDot(l);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), 4);
}

// Random byte mutations of valid texts only ever raise library errors.
TEST(Robustness, MutatedInputsNeverCrash) {
  std::vector<std::string> corpus = {printProof(libraryProof("kia3l-cut")), printProof(libraryProof("reflexive-boxS")),
                                     "format: 1\ncontext 3 2\nX.\n.X\nXX\npartition:\n0 2\n1\n",
                                     printModalAlgebra(ModalLattice::identity(enumerateConcepts(
                                         FormalContext(BinaryRelation::identity(2))).lattice())),
                                     "boxL a <= boxL b, diaL a <= diaL b => a <= b"};
  Rng rng(46);
  const std::string alphabet = "()|-<=>/\\ \n.X?#:spqbsIdwCx0123456789";
  for (int i = 0; i < 4000; ++i) {
    std::string text = corpus[uniformIndex(rng, corpus.size())];
    std::size_t edits = uniformBetween(rng, 1, 4);
    for (std::size_t e = 0; e < edits && !text.empty(); ++e) {
      std::size_t at = uniformIndex(rng, text.size());
      switch (uniformIndex(rng, 3)) {
        case 0: text[at] = alphabet[uniformIndex(rng, alphabet.size())]; break;
        case 1: text.erase(at, 1); break;
        default: text.insert(at, 1, static_cast<char>(uniformIndex(rng, 256))); break;
      }
    }
    try {
      switch (i % 5) {
        case 0: parseProof(text); break;
        case 1: parseProof(text); break;
        case 2: parseContextFile(text); break;
        case 3: parseModalAlgebra(text); break;
        default: parseQuasiInequality(text); break;
      }
    } catch (const Error&) {
    }
  }
  SUCCEED();
}
