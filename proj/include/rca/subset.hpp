#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace rca {

/// A subset of a dense index set 0..n-1.
using Subset = boost::dynamic_bitset<>;

inline Subset emptySet(std::size_t n) { return Subset(n); }

inline Subset fullSet(std::size_t n) {
  Subset s(n);
  s.set();
  return s;
}

inline Subset makeSubset(std::size_t n, std::initializer_list<std::size_t> members) {
  Subset s(n);
  for (auto m : members) s.set(m);
  return s;
}

inline Subset makeSubset(std::size_t n, const std::vector<std::size_t>& members) {
  Subset s(n);
  for (auto m : members) s.set(m);
  return s;
}

inline std::vector<std::size_t> members(const Subset& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

/// Canonical order on subsets of the same universe: by cardinality, then by the
/// sorted member lists compared lexicographically.
inline bool subsetLess(const Subset& a, const Subset& b) {
  auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != Subset::npos && j != Subset::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return false;
}

/// "{0,2,3}" style rendering.
inline std::string formatSubset(const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (auto m : members(s)) {
    if (!first) out += ",";
    out += std::to_string(m);
    first = false;
  }
  return out + "}";
}

}  // namespace rca
