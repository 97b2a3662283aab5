// Brute-force reference implementations. Nothing here touches the lattice
// or predicate code: submodules are plain sorted element lists obtained by
// naive closure, and every predicate is evaluated from its definition.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "deltasup/algebra.hpp"

namespace oracle {

using deltasup::ElemId;
using deltasup::ModuleRep;
using Set = std::vector<ElemId>;  // sorted

inline Set closure(const ModuleRep& m, const Set& seed) {
  std::vector<char> in(m.size(), 0);
  Set cur{0};
  in[0] = 1;
  for (ElemId x : seed)
    if (!in[x]) {
      in[x] = 1;
      cur.push_back(x);
    }
  const std::size_t rn = m.ring()->size();
  bool grew = true;
  while (grew) {
    grew = false;
    const Set snapshot = cur;
    for (ElemId a : snapshot) {
      for (ElemId b : snapshot) {
        const ElemId s = m.add(a, b);
        if (!in[s]) in[s] = 1, cur.push_back(s), grew = true;
      }
      for (ElemId r = 0; r < rn; ++r) {
        const ElemId s = m.act(r, a);
        if (!in[s]) in[s] = 1, cur.push_back(s), grew = true;
      }
    }
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

/// Closure of every subset of M. Only for |M| <= 16.
inline std::set<Set> subset_closure_lattice(const ModuleRep& m) {
  std::set<Set> out;
  const std::size_t n = m.size();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (mask & 1u) continue;  // 0 is always added by closure
    Set seed;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) seed.push_back(static_cast<ElemId>(i));
    out.insert(closure(m, seed));
  }
  return out;
}

/// Every submodule is reached from 0 by adding one element at a time, so
/// closing each found submodule with each single element finds them all.
inline std::set<Set> element_closure_lattice(const ModuleRep& m) {
  std::set<Set> out{closure(m, {})};
  std::vector<Set> frontier{*out.begin()};
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (const Set& s : frontier)
      for (ElemId x = 0; x < m.size(); ++x) {
        if (std::binary_search(s.begin(), s.end(), x)) continue;
        Set seed = s;
        seed.push_back(x);
        Set c = closure(m, seed);
        if (out.insert(c).second) next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  return out;
}

inline std::set<Set> all_submodules(const ModuleRep& m) {
  return m.size() <= 16 ? subset_closure_lattice(m) : element_closure_lattice(m);
}

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline Set meet(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Set sum(const ModuleRep& m, const Set& a, const Set& b) {
  Set u = a;
  u.insert(u.end(), b.begin(), b.end());
  return closure(m, u);
}

/// Reference evaluation of the elementary predicates on a module.
class Reference {
 public:
  explicit Reference(deltasup::ModulePtr m)
      : m_(std::move(m)), subs_(all_submodules(*m_)), whole_(closure(*m_, all_elements())) {
    const auto r = deltasup::regular_module(m_->ring());
    ideals_ = all_submodules(*r);
  }

  const std::set<Set>& submodules() const { return subs_; }
  const Set& whole() const { return whole_; }
  Set zero() const { return {0}; }

  bool essential_ideal(const Set& ideal) const {
    for (const Set& j : ideals_)
      if (j.size() > 1 && meet(ideal, j).size() == 1) return false;
    return true;
  }

  /// top/bottom singular: every annihilator ann(x + bottom) is essential in R.
  bool singular(const Set& bottom, const Set& top) const {
    for (ElemId x : top) {
      Set ann;
      for (ElemId r = 0; r < m_->ring()->size(); ++r)
        if (std::binary_search(bottom.begin(), bottom.end(), m_->act(r, x))) ann.push_back(r);
      if (!essential_ideal(ann)) return false;
    }
    return true;
  }

  bool small(const Set& n) const {
    for (const Set& l : subs_)
      if (l != whole_ && sum(*m_, n, l) == whole_) return false;
    return true;
  }

  bool delta_small(const Set& n) const {
    for (const Set& z : subs_)
      if (z != whole_ && singular(z, whole_) && sum(*m_, n, z) == whole_) return false;
    return true;
  }

  bool essential(const Set& n) const {
    for (const Set& l : subs_)
      if (l.size() > 1 && meet(n, l).size() == 1) return false;
    return true;
  }

  std::vector<Set> maximal() const {
    std::vector<Set> out;
    for (const Set& k : subs_) {
      if (k == whole_) continue;
      bool is_max = true;
      for (const Set& l : subs_)
        if (l != k && l != whole_ && subset(k, l)) is_max = false;
      if (is_max) out.push_back(k);
    }
    return out;
  }

  std::vector<Set> minimal() const {
    std::vector<Set> out;
    for (const Set& k : subs_) {
      if (k.size() == 1) continue;
      bool is_min = true;
      for (const Set& l : subs_)
        if (l != k && l.size() > 1 && subset(l, k)) is_min = false;
      if (is_min) out.push_back(k);
    }
    return out;
  }

  Set radical() const {
    Set out = whole_;
    for (const Set& k : maximal()) out = meet(out, k);
    return out;
  }

  Set socle() const {
    Set out = zero();
    for (const Set& s : minimal()) out = sum(*m_, out, s);
    return out;
  }

  Set delta() const {
    Set out = whole_;
    for (const Set& k : maximal())
      if (singular(k, whole_)) out = meet(out, k);
    return out;
  }

 private:
  Set all_elements() const {
    Set s(m_->size());
    for (ElemId i = 0; i < m_->size(); ++i) s[i] = i;
    return s;
  }

  deltasup::ModulePtr m_;
  std::set<Set> subs_;
  Set whole_;
  std::set<Set> ideals_;
};

}  // namespace oracle
