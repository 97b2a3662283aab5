#pragma once

#include <string>

#include "deltasup/corpus.hpp"
#include "deltasup/lattice.hpp"
#include "oracle.hpp"

namespace fx {

using namespace deltasup;

inline RingPtr ring(const std::string& name) {
  for (auto& r : builtin_rings())
    if (r->name() == name) return r;
  throw Error("no ring " + name);
}

inline ModulePtr module_of(const std::string& ring_name, const std::string& module_name) {
  for (auto& e : builtin_corpus())
    if (e.name() == ring_name)
      for (auto& m : e.modules)
        if (m->name() == module_name) return m;
  throw Error("no module " + module_name + " over " + ring_name);
}

/// Simple module with the requested singularity over Z4xF2: Z/2 from the
/// first factor is singular, F2 from the second is not.
inline ModulePtr z4xf2_simple(bool singular) {
  const auto r = ring("Z4xF2");
  if (singular) return ModuleRep::create(r, {"S'", {2}, {{{1}}, {{0}}}});
  return ModuleRep::create(r, {"S", {2}, {{{0}}, {{1}}}});
}

inline oracle::Set as_set(const SubmoduleLattice& lat, NodeId id) { return lat.members(id).members(); }

inline NodeId node_of(const SubmoduleLattice& lat, std::initializer_list<Coeffs> gens) {
  std::vector<ElemId> ids;
  for (const auto& g : gens) ids.push_back(lat.module()->encode(g));
  return lat.id_of(generate(lat.module(), ids));
}

inline std::vector<ModulePtr> corpus_modules() {
  std::vector<ModulePtr> out;
  for (auto& e : builtin_corpus())
    for (auto& m : e.modules) out.push_back(m);
  return out;
}

}  // namespace fx
