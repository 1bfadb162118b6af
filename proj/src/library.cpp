#include "rca/calculus.hpp"
#include "rca/errors.hpp"
#include "rca/syntax.hpp"

namespace rca {

namespace {

// Shared sub-derivations, spliced into several proofs below.

std::string reflBoxL(const std::string& a) {
  return "(rule boxC_R " + a + " |- boxC bC " + a + "\n"
         "  (rule adLLC " + a + " |- s.boxC bC " + a + "\n"
         "    (rule bC_R s.bC " + a + " |- bC " + a + "\n"
         "      (rule adLLC s.bC " + a + " |- s.bC " + a + "\n"
         "        (rule boxC-bC " + a + " |- s.boxC s.bC " + a + "\n"
         "          (rule id " + a + " |- " + a + "))))))";
}

std::string reflDiaL(const std::string& a) {
  return "(rule dI_L dI bI " + a + " |- " + a + "\n"
         "  (rule adLLI s.dI bI " + a + " |- " + a + "\n"
         "    (rule bI_L bI " + a + " |- s.bI " + a + "\n"
         "      (rule adLLI s.bI " + a + " |- s.bI " + a + "\n"
         "        (rule dI-bI s.dI s.bI " + a + " |- " + a + "\n"
         "          (rule id " + a + " |- " + a + "))))))";
}

// s.dI bI p |- dI bI p
const char* kDiaLUnit = R"(
(rule dI_R s.dI bI p |- dI bI p
  (rule bI_R bI p |- bI p
    (rule bI_L bI p |- s.bI p
      (rule adLLI s.bI p |- s.bI p
        (rule dI-bI s.dI s.bI p |- p
          (rule id p |- p))))))
)";

// boxC bC p |- s.boxC bC p
const char* kBoxLUnit = R"(
(rule boxC_L boxC bC p |- s.boxC bC p
  (rule bC_L bC p |- bC p
    (rule bC_R s.bC p |- bC p
      (rule adLLC s.bC p |- s.bC p
        (rule boxC-bC p |- s.boxC s.bC p
          (rule id p |- p))))))
)";

// s.wI bsI p |- wI bsI p
const char* kBoxSUnit = R"(
(rule wI_R s.wI bsI p |- wI bsI p
  (rule adLSI s.wI bsI p |- s.wI bsI p
    (rule bsI-wI bsI p |- s.bsI s.wI bsI p
      (rule bsI_R bsI p |- bsI p
        (rule bsI_L bsI p |- s.bsI p
          (rule id p |- p))))))
)";

// wC bdC p |- s.wC bdC p
const char* kDiaSUnit = R"(
(rule wC_L wC bdC p |- s.wC bdC p
  (rule adLSC s.wC bdC p |- s.wC bdC p
    (rule bdC-wC s.bdC s.wC bdC p |- bdC p
      (rule bdC_L bdC p |- bdC p
        (rule bdC_R s.bdC p |- bdC p
          (rule id p |- p))))))
)";

// s.wC s.bdC p |- wC bdC p
const char* kStrictLeft = R"(
(rule wC_R s.wC s.bdC p |- wC bdC p
  (rule adLSC s.wC s.bdC p |- s.wC bdC p
    (rule bdC-wC s.bdC s.wC s.bdC p |- bdC p
      (rule bdC_R s.bdC p |- bdC p
        (rule id p |- p)))))
)";

std::string strictRight(const std::string& a) {
  return "(rule wI_L wI bsI " + a + " |- s.wI s.bsI " + a + "\n"
         "  (rule adLSI s.wI bsI " + a + " |- s.wI s.bsI " + a + "\n"
         "    (rule bsI-wI bsI " + a + " |- s.bsI s.wI s.bsI " + a + "\n"
         "      (rule bsI_L bsI " + a + " |- s.bsI " + a + "\n"
         "        (rule id " + a + " |- " + a + ")))))";
}

// s.dI s.bI p |- dI bI p
const char* kLaxLeft = R"(
(rule dI_R s.dI s.bI p |- dI bI p
  (rule bI_R s.bI p |- bI p
    (rule adLLI s.bI p |- s.bI p
      (rule dI-bI s.dI s.bI p |- p
        (rule id p |- p)))))
)";

std::string laxRight(const std::string& a) {
  return "(rule boxC_L boxC bC " + a + " |- s.boxC s.bC " + a + "\n"
         "  (rule bC_L bC " + a + " |- s.bC " + a + "\n"
         "    (rule adLLC s.bC " + a + " |- s.bC " + a + "\n"
         "      (rule boxC-bC " + a + " |- s.boxC s.bC " + a + "\n"
         "        (rule id " + a + " |- " + a + ")))))";
}

const char* kKia3lMain = R"(
(rule kia3l p /\ boxC bC q |- dI bI p \/ q
  (rule corr-l p /\ boxC bC q |- s.boxI s.bI (dI bI p \/ q)
    (rule and_Ls p /\ boxC bC q |- s.boxC s.bC (dI bI p \/ q)
      (rule W_L p s.and boxC bC q |- s.boxC s.bC (dI bI p \/ q)
        (rule boxC_L boxC bC q |- s.boxC s.bC (dI bI p \/ q)
          (rule bC_L bC q |- s.bC (dI bI p \/ q)
            (rule adLLC s.bC q |- s.bC (dI bI p \/ q)
              (rule boxC-bC q |- s.boxC s.bC (dI bI p \/ q)
                (rule or_Rs q |- dI bI p \/ q
                  (rule W_L q |- dI bI p s.or q
                    (rule id q |- q))))))))))
  (rule adLLC s.dC s.bC (p /\ boxC bC q) |- dI bI p \/ q
    (rule adLLC s.bC (p /\ boxC bC q) |- s.bC (dI bI p \/ q)
      (rule corr-l p /\ boxC bC q |- s.boxC s.bC (dI bI p \/ q)
        (rule adLLI p /\ boxC bC q |- s.boxI s.bI (dI bI p \/ q)
          (rule adLLI s.bI (p /\ boxC bC q) |- s.bI (dI bI p \/ q)
            (rule or_Rs s.dI s.bI (p /\ boxC bC q) |- dI bI p \/ q
              (rule W_L s.dI s.bI (p /\ boxC bC q) |- dI bI p s.or q
                (rule dI_R s.dI s.bI (p /\ boxC bC q) |- dI bI p
                  (rule bI_R s.bI (p /\ boxC bC q) |- bI p
                    (rule adLLI s.bI (p /\ boxC bC q) |- s.bI p
                      (rule dI-bI s.dI s.bI (p /\ boxC bC q) |- p
                        (rule and_Ls p /\ boxC bC q |- p
                          (rule W_L p s.and boxC bC q |- p
                            (rule id p |- p)))))))))))))))
)";

struct Entry {
  const char* name;
  const char* calc;
  std::vector<const char*> hypotheses;
  std::string body;
};

std::vector<Entry> entries() {
  const std::string diaLUnit = kDiaLUnit, boxLUnit = kBoxLUnit, boxSUnit = kBoxSUnit, diaSUnit = kDiaSUnit;
  const std::string strictLeft = kStrictLeft, laxLeft = kLaxLeft;
  return {
      {"reflexive-boxS", "aka", {}, R"(
(rule wI_L wI bsI p |- p
  (rule adLSI s.wI bsI p |- p
    (rule bsI_L bsI p |- s.bsI p
      (rule id p |- p))))
)"},
      {"reflexive-diaS", "aka", {}, R"(
(rule wC_R p |- wC bdC p
  (rule adLSC p |- s.wC bdC p
    (rule bdC_R s.bdC p |- bdC p
      (rule id p |- p))))
)"},
      {"reflexive-boxL", "aka", {}, reflBoxL("p")},
      {"reflexive-diaL", "aka", {}, reflDiaL("p")},
      {"transitive-boxS", "aka", {}, R"(
(rule wI_L wI bsI p |- wI bsI wI bsI p
  (rule wI_R s.wI bsI p |- wI bsI wI bsI p
    (rule adLSI s.wI bsI p |- s.wI bsI wI bsI p
      (rule bsI-wI bsI p |- s.bsI s.wI bsI wI bsI p
        (rule bsI_R bsI p |- bsI wI bsI p
          (rule adLSI bsI p |- s.bsI wI bsI p
)" + boxSUnit + "))))))"},
      {"transitive-diaS", "aka", {}, R"(
(rule wC_R wC bdC wC bdC p |- wC bdC p
  (rule wC_L wC bdC wC bdC p |- s.wC bdC p
    (rule adLSC s.wC bdC wC bdC p |- s.wC bdC p
      (rule bdC-wC s.bdC s.wC bdC wC bdC p |- bdC p
        (rule bdC_L bdC wC bdC p |- bdC p
          (rule adLSC s.bdC wC bdC p |- bdC p
)" + diaSUnit + "))))))"},
      {"transitive-boxL", "aka", {}, R"(
(rule boxC_R boxC bC boxC bC p |- boxC bC p
  (rule boxC_L boxC bC boxC bC p |- s.boxC bC p
    (rule bC_L bC boxC bC p |- bC p
      (rule adLLC s.bC boxC bC p |- bC p
)" + boxLUnit + "))))"},
      {"transitive-diaL", "aka", {}, R"(
(rule dI_L dI bI p |- dI bI dI bI p
  (rule dI_R s.dI bI p |- dI bI dI bI p
    (rule bI_R bI p |- bI dI bI p
      (rule adLLI bI p |- s.bI dI bI p
)" + diaLUnit + "))))"},
      {"adj-strict-1", "aka", {"wC bdC p |- q"}, R"(
(rule wI_R p |- wI bsI q
  (rule adLSI p |- s.wI bsI q
    (rule bsI_R s.bdI p |- bsI q
      (rule adLSI s.bdI p |- s.bsI q
        (rule corr-s s.wI s.bdI p |- q
          (rule cut s.wC s.bdC p |- q
)" + strictLeft + R"(
            (rule hyp wC bdC p |- q)))))))
)"},
      {"adj-strict-2", "aka", {"p |- wI bsI q"}, R"(
(rule wC_L wC bdC p |- q
  (rule adLSC s.wC bdC p |- q
    (rule bdC_L bdC p |- s.bsC q
      (rule adLSC s.bdC p |- s.bsC q
        (rule corr-s s.wC s.bdC p |- q
          (rule adLSI s.wI s.bdI p |- q
            (rule adLSI s.bdI p |- s.bsI q
              (rule cut p |- s.wI s.bsI q
                (rule hyp p |- wI bsI q)
)" + strictRight("q") + "))))))))"},
      {"adj-lax-1", "aka", {"dI bI p |- q"}, R"(
(rule boxC_R p |- boxC bC q
  (rule adLLC p |- s.boxC bC q
    (rule bC_R s.bC p |- bC q
      (rule adLLC s.bC p |- s.bC q
        (rule corr-l p |- s.boxC s.bC q
          (rule adLLI p |- s.boxI s.bI q
            (rule adLLI s.bI p |- s.bI q
              (rule cut s.dI s.bI p |- q
)" + laxLeft + R"(
                (rule hyp dI bI p |- q)))))))))
)"},
      {"adj-lax-2", "aka", {"p |- boxC bC q"}, R"(
(rule dI_L dI bI p |- q
  (rule adLLI s.dI bI p |- q
    (rule bI_L bI p |- s.bI q
      (rule adLLI s.bI p |- s.bI q
        (rule corr-l p |- s.boxI s.bI q
          (rule cut p |- s.boxC s.bC q
            (rule hyp p |- boxC bC q)
)" + laxRight("q") + "))))))"},
      {"symmetric-1", "aka", {}, R"(
(rule wI_R p |- wI bsI wC bdC p
  (rule adLSI p |- s.wI bsI wC bdC p
    (rule bsI_R s.bdI p |- bsI wC bdC p
      (rule adLSI s.bdI p |- s.bsI wC bdC p
        (rule corr-s s.wI s.bdI p |- wC bdC p
)" + strictLeft + ")))))"},
      {"symmetric-2", "aka", {}, R"(
(rule wC_L wC bdC wI bsI p |- p
  (rule adLSC s.wC bdC wI bsI p |- p
    (rule bdC_L bdC wI bsI p |- s.bsC p
      (rule adLSC s.bdC wI bsI p |- s.bsC p
        (rule corr-s s.wC s.bdC wI bsI p |- p
          (rule adLSI s.wI s.bdI wI bsI p |- p
            (rule adLSI s.bdI wI bsI p |- s.bsI p
)" + strictRight("p") + ")))))))"},
      {"symmetric-3", "aka", {}, R"(
(rule boxC_R p |- boxC bC dI bI p
  (rule adLLC p |- s.boxC bC dI bI p
    (rule bC_R s.bC p |- bC dI bI p
      (rule adLLC s.bC p |- s.bC dI bI p
        (rule corr-l p |- s.boxC s.bC dI bI p
          (rule adLLI p |- s.boxI s.bI dI bI p
            (rule adLLI s.bI p |- s.bI dI bI p
)" + laxLeft + ")))))))"},
      {"symmetric-4", "aka", {}, R"(
(rule dI_L dI bI boxC bC p |- p
  (rule adLLI s.dI bI boxC bC p |- p
    (rule bI_L bI boxC bC p |- s.bI p
      (rule adLLI s.bI boxC bC p |- s.bI p
        (rule corr-l boxC bC p |- s.boxI s.bI p
)" + laxRight("p") + ")))))"},
      {"aka5p-1", "aka5p", {}, R"(
(rule dI_L dI bI p |- wI bsI dI bI p
  (rule wI_R s.dI bI p |- wI bsI dI bI p
    (rule adLSI s.dI bI p |- s.wI bsI dI bI p
      (rule bsI_R s.bdI s.dI bI p |- bsI dI bI p
        (rule adLSI s.bdI s.dI bI p |- s.bsI dI bI p
          (rule aka5-1 s.wI s.bdI s.dI bI p |- dI bI p
)" + diaLUnit + "))))))"},
      {"aka5p-2", "aka5p", {}, R"(
(rule boxC_R wC bdC boxC bC p |- boxC bC p
  (rule wC_L wC bdC boxC bC p |- s.boxC bC p
    (rule adLSC s.wC bdC boxC bC p |- s.boxC bC p
      (rule bdC_L bdC boxC bC p |- s.bsC s.boxC bC p
        (rule adLSC s.bdC boxC bC p |- s.bsC s.boxC bC p
          (rule aka5-2 boxC bC p |- s.wC s.bsC s.boxC bC p
)" + boxLUnit + "))))))"},
      {"aka5p-3", "aka5p", {}, R"(
(rule wI_L wI bsI p |- dI bI wI bsI p
  (rule aka5-3 s.wI bsI p |- dI bI wI bsI p
    (rule dI_R s.dI s.bI s.wI bsI p |- dI bI wI bsI p
      (rule bI_R s.bI s.wI bsI p |- bI wI bsI p
        (rule adLLI s.bI s.wI bsI p |- s.bI wI bsI p
          (rule dI-bI s.dI s.bI s.wI bsI p |- wI bsI p
)" + boxSUnit + "))))))"},
      {"aka5p-4", "aka5p", {}, R"(
(rule wC_R boxC bC wC bdC p |- wC bdC p
  (rule aka5-4 boxC bC wC bdC p |- s.wC bdC p
    (rule boxC_L boxC bC wC bdC p |- s.boxC s.bC s.wC bdC p
      (rule bC_L bC wC bdC p |- s.bC s.wC bdC p
        (rule adLLC s.bC wC bdC p |- s.bC s.wC bdC p
          (rule boxC-bC wC bdC p |- s.boxC s.bC s.wC bdC p
)" + diaSUnit + "))))))"},
      {"kia3l-main", "kia3l", {}, kKia3lMain},
      {"kia3l-cut", "kia3l", {"dI bI p |- dI bI q", "boxC bC p |- boxC bC q"}, R"(
(rule cut p |- q
  (rule C_L p |- p /\ boxC bC q
    (rule and_Rs p s.and p |- p /\ boxC bC q
      (rule id p |- p)
      (rule cut p |- boxC bC q
)" + reflBoxL("p") + R"(
        (rule hyp boxC bC p |- boxC bC q))))
  (rule cut p /\ boxC bC q |- q
)" + std::string(kKia3lMain) + R"(
    (rule C_L dI bI p \/ q |- q
      (rule or_Ls dI bI p \/ q |- q s.or q
        (rule cut dI bI p |- q
          (rule hyp dI bI p |- dI bI q)
)" + reflDiaL("q") + R"()
        (rule id q |- q)))))
)"},
  };
}

}  // namespace

const std::vector<Proof>& axiomLibrary() {
  static const std::vector<Proof> library = [] {
    std::vector<Proof> out;
    for (const auto& e : entries()) {
      std::string text = std::string("format: 1\ncalc: ") + e.calc + "\nname: " + e.name + "\n";
      for (const char* h : e.hypotheses) text += std::string("hypothesis: ") + h + "\n";
      text += e.body;
      out.push_back(parseProof(text, std::string("library:") + e.name));
    }
    return out;
  }();
  return library;
}

std::vector<Proof> axiomLibrary(Calculus calc) {
  std::vector<Proof> out;
  for (const auto& p : axiomLibrary()) {
    bool admissible = p.calc == Calculus::AKA || p.calc == calc;
    if (admissible) out.push_back(p);
  }
  return out;
}

const Proof& libraryProof(std::string_view name) {
  for (const auto& p : axiomLibrary())
    if (p.name == name) return p;
  throw PreconditionError("no library proof named '" + std::string(name) + "'");
}

}  // namespace rca
