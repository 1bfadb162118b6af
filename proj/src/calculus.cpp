#include "rca/calculus.hpp"

#include "rca/errors.hpp"

#include <unordered_map>

namespace rca {

std::string typeName(TypeTag t) {
  switch (t) {
    case TypeTag::L: return "L";
    case TypeTag::SI: return "S_I";
    case TypeTag::SC: return "S_C";
    case TypeTag::LI: return "L_I";
    case TypeTag::LC: return "L_C";
  }
  return "?";
}

namespace {

using T = TypeTag;

// Keep in the order of the Op enumeration.
const std::vector<OpInfo> kOps = {
    {Op::Atom, "", "", 0, T::L, {T::L, T::L}, false, 0},
    {Op::Top, "top", "⊤", 0, T::L, {T::L, T::L}, false, 0},
    {Op::Bot, "bot", "⊥", 0, T::L, {T::L, T::L}, false, 0},
    {Op::And, "/\\", "∧", 2, T::L, {T::L, T::L}, false, 2},
    {Op::Or, "\\/", "∨", 2, T::L, {T::L, T::L}, false, 1},
    {Op::WhiteI, "wI", "∘_I", 1, T::L, {T::SI, T::L}, false, 0},
    {Op::WhiteC, "wC", "∘_C", 1, T::L, {T::SC, T::L}, false, 0},
    {Op::DiaI, "dI", "◇_I", 1, T::L, {T::LI, T::L}, false, 0},
    {Op::BoxC, "boxC", "□_C", 1, T::L, {T::LC, T::L}, false, 0},
    {Op::BlackDiaI, "bdI", "◆_I", 1, T::SI, {T::L, T::L}, false, 0},
    {Op::BlackSqI, "bsI", "■_I", 1, T::SI, {T::L, T::L}, false, 0},
    {Op::BlackDiaC, "bdC", "◆_C", 1, T::SC, {T::L, T::L}, false, 0},
    {Op::BlackSqC, "bsC", "■_C", 1, T::SC, {T::L, T::L}, false, 0},
    {Op::BulletI, "bI", "•_I", 1, T::LI, {T::L, T::L}, false, 0},
    {Op::BulletC, "bC", "•_C", 1, T::LC, {T::L, T::L}, false, 0},
    {Op::STop, "s.top", "⊤̂", 0, T::L, {T::L, T::L}, true, 0},
    {Op::SBot, "s.bot", "⊥̌", 0, T::L, {T::L, T::L}, true, 0},
    {Op::SAnd, "s.and", "∧̂", 2, T::L, {T::L, T::L}, true, 2},
    {Op::SOr, "s.or", "∨̌", 2, T::L, {T::L, T::L}, true, 1},
    {Op::SWhiteI, "s.wI", "∘̃_I", 1, T::L, {T::SI, T::L}, true, 0},
    {Op::SWhiteC, "s.wC", "∘̃_C", 1, T::L, {T::SC, T::L}, true, 0},
    {Op::SDiaI, "s.dI", "◇̂_I", 1, T::L, {T::LI, T::L}, true, 0},
    {Op::SBoxI, "s.boxI", "□̌_I", 1, T::L, {T::LI, T::L}, true, 0},
    {Op::SDiaC, "s.dC", "◇̂_C", 1, T::L, {T::LC, T::L}, true, 0},
    {Op::SBoxC, "s.boxC", "□̌_C", 1, T::L, {T::LC, T::L}, true, 0},
    {Op::SBlackDiaI, "s.bdI", "◆̂_I", 1, T::SI, {T::L, T::L}, true, 0},
    {Op::SBlackSqI, "s.bsI", "■̌_I", 1, T::SI, {T::L, T::L}, true, 0},
    {Op::SFalseI, "s.fI", "f̌_I", 0, T::SI, {T::L, T::L}, true, 0},
    {Op::STrueI, "s.tI", "t̂_I", 0, T::SI, {T::L, T::L}, true, 0},
    {Op::SCapI, "s.capI", "∩̂_I", 2, T::SI, {T::SI, T::SI}, true, 2},
    {Op::SCupI, "s.cupI", "∪̌_I", 2, T::SI, {T::SI, T::SI}, true, 1},
    {Op::SBlackDiaC, "s.bdC", "◆̂_C", 1, T::SC, {T::L, T::L}, true, 0},
    {Op::SBlackSqC, "s.bsC", "■̌_C", 1, T::SC, {T::L, T::L}, true, 0},
    {Op::SFalseC, "s.fC", "f̌_C", 0, T::SC, {T::L, T::L}, true, 0},
    {Op::STrueC, "s.tC", "t̂_C", 0, T::SC, {T::L, T::L}, true, 0},
    {Op::SCapC, "s.capC", "∩̂_C", 2, T::SC, {T::SC, T::SC}, true, 2},
    {Op::SCupC, "s.cupC", "∪̌_C", 2, T::SC, {T::SC, T::SC}, true, 1},
    {Op::SBulletI, "s.bI", "•̃_I", 1, T::LI, {T::L, T::L}, true, 0},
    {Op::SZeroI, "s.zeroI", "0̌_I", 0, T::LI, {T::L, T::L}, true, 0},
    {Op::SOneI, "s.oneI", "1̂_I", 0, T::LI, {T::L, T::L}, true, 0},
    {Op::SMeetI, "s.meetI", "⊓̂_I", 2, T::LI, {T::LI, T::LI}, true, 2},
    {Op::SJoinI, "s.joinI", "⊔̌_I", 2, T::LI, {T::LI, T::LI}, true, 1},
    {Op::SBulletC, "s.bC", "•̃_C", 1, T::LC, {T::L, T::L}, true, 0},
    {Op::SZeroC, "s.zeroC", "0̌_C", 0, T::LC, {T::L, T::L}, true, 0},
    {Op::SOneC, "s.oneC", "1̂_C", 0, T::LC, {T::L, T::L}, true, 0},
    {Op::SMeetC, "s.meetC", "⊓̂_C", 2, T::LC, {T::LC, T::LC}, true, 2},
    {Op::SJoinC, "s.joinC", "⊔̌_C", 2, T::LC, {T::LC, T::LC}, true, 1},
    {Op::Meta, "?", "?", 0, T::L, {T::L, T::L}, true, 0},
};

}  // namespace

const std::vector<OpInfo>& opTable() { return kOps; }
const OpInfo& opInfo(Op op) { return kOps[static_cast<std::size_t>(op)]; }

std::optional<Op> opFromAscii(std::string_view token) {
  static const std::unordered_map<std::string_view, Op> index = [] {
    std::unordered_map<std::string_view, Op> m;
    for (const auto& info : kOps)
      if (info.op != Op::Atom && info.op != Op::Meta) m.emplace(info.ascii, info.op);
    return m;
  }();
  auto it = index.find(token);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

MetaKind metaKindOf(std::string_view name) {
  if (name == "p" || name == "q") return MetaKind::Atom;
  if (name == "A" || name == "B" || name == "F" || name == "al" || name == "de" || name == "pi" || name == "si")
    return MetaKind::Formula;
  return MetaKind::Structure;
}

Node Node::atom(std::string name) {
  return Node(std::make_shared<const Data>(Data{Op::Atom, std::move(name), {}, true, 1}));
}

Node Node::meta(std::string name) {
  return Node(std::make_shared<const Data>(Data{Op::Meta, std::move(name), {}, false, 1}));
}

Node Node::make(Op op, std::vector<Node> args) {
  const OpInfo& info = opInfo(op);
  if (op == Op::Atom || op == Op::Meta) throw std::logic_error("use Node::atom or Node::meta");
  if (args.size() != info.arity)
    throw TypeError(std::string(info.ascii) + " takes " + std::to_string(info.arity) + " arguments, got " +
                    std::to_string(args.size()));
  bool formula = !info.structural;
  std::size_t size = 1;
  for (const auto& a : args) {
    formula = formula && a.isFormula();
    size += a.size();
  }
  return Node(std::make_shared<const Data>(Data{op, {}, std::move(args), formula, size}));
}

bool Node::operator==(const Node& o) const {
  if (data_ == o.data_) return true;
  if (op() != o.op() || size() != o.size() || name() != o.name()) return false;
  for (std::size_t i = 0; i < arity(); ++i)
    if (arg(i) != o.arg(i)) return false;
  return true;
}

const Node& Node::at(const std::vector<std::size_t>& path) const {
  const Node* n = this;
  for (auto i : path) n = &n->arg(i);
  return *n;
}

namespace {

Node replaceFrom(const Node& n, const std::vector<std::size_t>& path, std::size_t depth, const Node& with) {
  if (depth == path.size()) return with;
  std::vector<Node> args = n.args();
  args.at(path[depth]) = replaceFrom(n.arg(path[depth]), path, depth + 1, with);
  return Node::make(n.op(), std::move(args));
}

}  // namespace

Node Node::replaced(const std::vector<std::size_t>& path, const Node& with) const {
  return replaceFrom(*this, path, 0, with);
}

TypeTag typeOf(const Node& n) {
  if (n.op() == Op::Meta) throw TypeError("metavariable ?" + n.name() + " has no type");
  const OpInfo& info = opInfo(n.op());
  for (std::size_t i = 0; i < n.arity(); ++i) {
    TypeTag t = typeOf(n.arg(i));
    if (t != info.args[i])
      throw TypeError(std::string(info.ascii) + " expects " + typeName(info.args[i]) + " argument, got " +
                      typeName(t));
  }
  return info.result;
}

TypeTag typeOf(const Sequent& s) {
  TypeTag l = typeOf(s.lhs), r = typeOf(s.rhs);
  if (l != r) throw TypeError("sequent is not type-uniform: " + typeName(l) + " |- " + typeName(r));
  return l;
}

std::string calculusName(Calculus c) {
  switch (c) {
    case Calculus::AKA: return "aka";
    case Calculus::AKA5p: return "aka5p";
    case Calculus::KIA3l: return "kia3l";
  }
  return "?";
}

std::optional<Calculus> parseCalculus(std::string_view s) {
  if (s == "aka" || s == "D.AKA" || s == "D.aKa") return Calculus::AKA;
  if (s == "aka5p" || s == "D.aKa5'" || s == "D.aKa5p" || s == "D.AKA5'") return Calculus::AKA5p;
  if (s == "kia3l" || s == "D.K-IA3l" || s == "D.K-IA3_l") return Calculus::KIA3l;
  return std::nullopt;
}

AlgebraClass calculusClass(Calculus c) {
  switch (c) {
    case Calculus::AKA: return AlgebraClass::AKA;
    case Calculus::AKA5p: return AlgebraClass::AKA5p;
    case Calculus::KIA3l: return AlgebraClass::KIA3l;
  }
  return AlgebraClass::AKA;
}

Node translate(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: return Node::atom(t.name());
    case Term::Kind::Top: return Node::make(Op::Top);
    case Term::Kind::Bottom: return Node::make(Op::Bot);
    case Term::Kind::Meet: return Node::make(Op::And, translate(t.arg(0)), translate(t.arg(1)));
    case Term::Kind::Join: return Node::make(Op::Or, translate(t.arg(0)), translate(t.arg(1)));
    case Term::Kind::BoxS: return Node::make(Op::WhiteI, Node::make(Op::BlackSqI, translate(t.arg(0))));
    case Term::Kind::DiaS: return Node::make(Op::WhiteC, Node::make(Op::BlackDiaC, translate(t.arg(0))));
    case Term::Kind::BoxL: return Node::make(Op::BoxC, Node::make(Op::BulletC, translate(t.arg(0))));
    case Term::Kind::DiaL: return Node::make(Op::DiaI, Node::make(Op::BulletI, translate(t.arg(0))));
  }
  throw std::logic_error("unknown term kind");
}

Sequent translate(const Inequality& i) { return {translate(i.lhs), translate(i.rhs)}; }

}  // namespace rca
