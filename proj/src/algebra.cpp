#include "deltasup/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace deltasup {

namespace {

// Above this many elementary checks per axiom, module validation falls back
// to generator-level checks, which are equivalent by linearity.
constexpr std::size_t kExhaustiveBudget = std::size_t{1} << 25;

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

Coeffs unit_vector(std::size_t k, std::size_t i) {
  Coeffs c(k, 0);
  c[i] = 1;
  return c;
}

std::size_t checked_product(const std::vector<std::int64_t>& orders, std::size_t bound,
                            const char* what) {
  std::size_t size = 1;
  for (auto d : orders) {
    size *= static_cast<std::size_t>(d);
    if (size > bound)
      throw SizeBoundExceeded(std::string(what) + " size exceeds bound " + std::to_string(bound));
  }
  return size;
}

template <class Add>
void extend_group(ElementSet& set, std::vector<ElemId>& list, ElemId c, Add&& add) {
  if (set.contains(c)) return;
  const std::vector<ElemId> base = list;
  ElemId cur = c;
  while (!set.contains(cur)) {
    for (ElemId h : base) {
      const ElemId x = add(h, cur);
      set.insert(x);
      list.push_back(x);
    }
    cur = add(cur, c);
  }
}

std::vector<std::int64_t> prime_factors(std::size_t n) {
  std::vector<std::int64_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<std::int64_t>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<std::int64_t>(n));
  return out;
}

bool is_power_of(std::int64_t n, std::int64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// CyclicCoordinates

CyclicCoordinates::CyclicCoordinates(std::vector<std::int64_t> orders)
    : orders_(std::move(orders)) {
  strides_.resize(orders_.size());
  size_ = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    strides_[i] = size_;
    size_ *= static_cast<std::size_t>(orders_[i]);
  }
}

ElemId CyclicCoordinates::encode(std::span<const std::int64_t> coeffs) const {
  std::size_t id = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    id += static_cast<std::size_t>(mod(coeffs[i], orders_[i])) * strides_[i];
  return static_cast<ElemId>(id);
}

Coeffs CyclicCoordinates::decode(ElemId id) const {
  Coeffs out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) out[i] = digit(id, i);
  return out;
}

ElemId CyclicCoordinates::add(ElemId a, ElemId b) const {
  std::size_t id = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::int64_t d = digit(a, i) + digit(b, i);
    if (d >= orders_[i]) d -= orders_[i];
    id += static_cast<std::size_t>(d) * strides_[i];
  }
  return static_cast<ElemId>(id);
}

ElemId CyclicCoordinates::neg(ElemId a) const {
  std::size_t id = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::int64_t d = digit(a, i);
    id += static_cast<std::size_t>(d == 0 ? 0 : orders_[i] - d) * strides_[i];
  }
  return static_cast<ElemId>(id);
}

ElemId CyclicCoordinates::scale(ElemId a, std::int64_t k) const {
  std::size_t id = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    id += static_cast<std::size_t>(mod(digit(a, i) * k, orders_[i])) * strides_[i];
  return static_cast<ElemId>(id);
}

// ---------------------------------------------------------------------------
// RingTable

std::shared_ptr<const RingTable> RingTable::create(RingSpec spec, const Bounds& bounds) {
  const std::size_t k = spec.additive_orders.size();
  if (k == 0) throw ParseError("ring '" + spec.name + "': additive_orders is empty", 0);
  for (auto d : spec.additive_orders)
    if (d < 2) throw ParseError("ring '" + spec.name + "': additive orders must be >= 2", 0);
  if (spec.one.size() != k) throw ParseError("ring '" + spec.name + "': 'one' has wrong length", 0);
  if (spec.mul.size() != k) throw ParseError("ring '" + spec.name + "': 'mul' must be k x k", 0);
  for (const auto& row : spec.mul) {
    if (row.size() != k) throw ParseError("ring '" + spec.name + "': 'mul' must be k x k", 0);
    for (const auto& v : row)
      if (v.size() != k)
        throw ParseError("ring '" + spec.name + "': structure constant has wrong length", 0);
  }
  const std::size_t n = checked_product(spec.additive_orders, bounds.max_ring_size, "ring");

  const auto& d = spec.additive_orders;
  for (std::size_t l = 0; l < k; ++l) spec.one[l] = mod(spec.one[l], d[l]);
  for (auto& row : spec.mul)
    for (auto& v : row)
      for (std::size_t l = 0; l < k; ++l) v[l] = mod(v[l], d[l]);

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        const auto c = spec.mul[i][j][l];
        if (mod(d[i] * c, d[l]) != 0 || mod(d[j] * c, d[l]) != 0)
          throw AxiomViolation("structure constants respect additive orders",
                               {unit_vector(k, i), unit_vector(k, j)});
      }

  std::shared_ptr<RingTable> r(new RingTable());
  r->coords_ = CyclicCoordinates(d);
  const auto& cc = r->coords_;
  r->one_ = cc.encode(spec.one);

  r->add_.resize(n * n);
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = 0; b < n; ++b) r->add_[a * n + b] = cc.add(a, b);

  std::vector<ElemId> basis_prod(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) basis_prod[i * k + j] = cc.encode(spec.mul[i][j]);

  // a·e_j for every a, then a·b = Σ_j b_j (a·e_j).
  std::vector<ElemId> times_basis(n * k);
  for (ElemId a = 0; a < n; ++a)
    for (std::size_t j = 0; j < k; ++j) {
      ElemId acc = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const auto ai = cc.digit(a, i);
        if (ai) acc = cc.add(acc, cc.scale(basis_prod[i * k + j], ai));
      }
      times_basis[a * k + j] = acc;
    }
  r->mul_.resize(n * n);
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = 0; b < n; ++b) {
      ElemId acc = 0;
      for (std::size_t j = 0; j < k; ++j) {
        const auto bj = cc.digit(b, j);
        if (bj) acc = cc.add(acc, cc.scale(times_basis[a * k + j], bj));
      }
      r->mul_[a * n + b] = acc;
    }

  const auto triple = [&](ElemId a, ElemId b, ElemId c) {
    return std::vector<Coeffs>{cc.decode(a), cc.decode(b), cc.decode(c)};
  };
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = 0; b < n; ++b) {
      const ElemId ab = r->mul(a, b);
      for (ElemId c = 0; c < n; ++c)
        if (r->mul(ab, c) != r->mul(a, r->mul(b, c)))
          throw AxiomViolation("associativity", triple(a, b, c));
    }
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = 0; b < n; ++b)
      for (ElemId c = 0; c < n; ++c) {
        if (r->mul(a, r->add(b, c)) != r->add(r->mul(a, b), r->mul(a, c)))
          throw AxiomViolation("left distributivity", triple(a, b, c));
        if (r->mul(r->add(a, b), c) != r->add(r->mul(a, c), r->mul(b, c)))
          throw AxiomViolation("right distributivity", triple(a, b, c));
      }
  for (ElemId a = 0; a < n; ++a)
    if (r->mul(r->one_, a) != a || r->mul(a, r->one_) != a)
      throw AxiomViolation("two-sided unit", {cc.decode(r->one_), cc.decode(a)});

  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (ElemId x = 1; x < n; ++x) {
    ElementSet ideal(n);
    for (ElemId s = 0; s < n; ++s) ideal.insert(r->mul(s, x));
    if (seen.insert(ideal).second) r->cyclic_ideals_.push_back(std::move(ideal));
  }
  std::sort(r->cyclic_ideals_.begin(), r->cyclic_ideals_.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.lex_less(b); });

  r->spec_ = std::move(spec);
  return r;
}

bool RingTable::is_essential_left_ideal(const ElementSet& ideal) const {
  for (const auto& c : cyclic_ideals_)
    if (c.intersection_count(ideal) <= 1) return false;
  return true;
}

bool operator==(const RingTable& a, const RingTable& b) {
  return a.spec_.additive_orders == b.spec_.additive_orders && a.spec_.one == b.spec_.one &&
         a.spec_.mul == b.spec_.mul;
}

// ---------------------------------------------------------------------------
// ModuleRep

std::shared_ptr<const ModuleRep> ModuleRep::create(RingPtr ring, ModuleSpec spec,
                                                   const Bounds& bounds) {
  const std::size_t k = ring->rank();
  const std::size_t l = spec.additive_orders.size();
  const std::string& nm = spec.name;
  for (auto d : spec.additive_orders)
    if (d < 2) throw ParseError("module '" + nm + "': additive orders must be >= 2", 0);
  if (spec.actions.size() != k)
    throw ParseError("module '" + nm + "': expected one action matrix per ring basis element", 0);
  for (const auto& a : spec.actions) {
    if (a.size() != l) throw ParseError("module '" + nm + "': action matrix must be square", 0);
    for (const auto& row : a)
      if (row.size() != l) throw ParseError("module '" + nm + "': action matrix must be square", 0);
  }
  const std::size_t n = checked_product(spec.additive_orders, bounds.max_module_size, "module");
  const auto& m = spec.additive_orders;
  const auto& d = ring->additive_orders();

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t row = 0; row < l; ++row)
      for (std::size_t col = 0; col < l; ++col) {
        auto& a = spec.actions[i][row][col];
        a = mod(a, m[row]);
        if (mod(m[col] * a, m[row]) != 0)
          throw AxiomViolation("action respects module additive orders",
                               {unit_vector(k, i), Coeffs{static_cast<std::int64_t>(row),
                                                          static_cast<std::int64_t>(col)}});
        if (mod(d[i] * a, m[row]) != 0)
          throw AxiomViolation("action respects ring additive orders",
                               {unit_vector(k, i), Coeffs{static_cast<std::int64_t>(row),
                                                          static_cast<std::int64_t>(col)}});
      }

  std::shared_ptr<ModuleRep> mod_ptr(new ModuleRep());
  ModuleRep& M = *mod_ptr;
  M.ring_ = ring;
  M.coords_ = CyclicCoordinates(m);
  const auto& cc = M.coords_;
  if (n <= 2048) {
    M.add_.resize(n * n);
    for (ElemId a = 0; a < n; ++a)
      for (ElemId b = 0; b < n; ++b) M.add_[a * n + b] = cc.add(a, b);
  }

  const std::size_t rn = ring->size();
  M.act_.assign(rn * n, 0);
  std::vector<std::vector<ElemId>> basis_act(k, std::vector<ElemId>(n));
  for (std::size_t i = 0; i < k; ++i)
    for (ElemId x = 0; x < n; ++x) {
      Coeffs out(l, 0);
      for (std::size_t row = 0; row < l; ++row) {
        std::int64_t acc = 0;
        for (std::size_t col = 0; col < l; ++col)
          acc += spec.actions[i][row][col] * cc.digit(x, col);
        out[row] = acc;
      }
      basis_act[i][x] = cc.encode(out);
    }
  // act(r) = act(r - e_i) + act(e_i) with i the lowest nonzero coordinate of r.
  for (ElemId r = 1; r < rn; ++r) {
    std::size_t i = 0;
    while (ring->coords().digit(r, i) == 0) ++i;
    const ElemId prev = r - ring->coords().stride(i);
    for (ElemId x = 0; x < n; ++x)
      M.act_[r * n + x] = M.add(M.act_[prev * n + x], basis_act[i][x]);
  }

  const auto& rc = ring->coords();
  const auto wit = [&](std::initializer_list<ElemId> rs, std::initializer_list<ElemId> ms) {
    std::vector<Coeffs> w;
    for (auto r : rs) w.push_back(rc.decode(r));
    for (auto x : ms) w.push_back(cc.decode(x));
    return w;
  };

  for (ElemId x = 0; x < n; ++x)
    if (M.act(ring->one(), x) != x) throw AxiomViolation("unit acts as identity", wit({ring->one()}, {x}));

  std::vector<ElemId> ring_gens, module_gens;
  for (std::size_t i = 0; i < k; ++i) ring_gens.push_back(ring->basis(i));
  for (std::size_t j = 0; j < l; ++j) module_gens.push_back(cc.stride(j));
  std::vector<ElemId> all_ring(rn), all_module(n);
  std::iota(all_ring.begin(), all_ring.end(), 0);
  std::iota(all_module.begin(), all_module.end(), 0);

  const bool exhaustive_rr = rn * rn * n <= kExhaustiveBudget;
  const bool exhaustive_mm = rn * n * n <= kExhaustiveBudget;
  M.exhaustive_ = exhaustive_rr && exhaustive_mm;
  const auto& rs_outer = exhaustive_rr ? all_ring : ring_gens;
  const auto& ms_inner = exhaustive_mm ? all_module : module_gens;

  for (ElemId r : rs_outer)
    for (ElemId s : (exhaustive_rr ? all_ring : ring_gens))
      for (ElemId x = 0; x < n; ++x) {
        if (M.act(ring->mul(r, s), x) != M.act(r, M.act(s, x)))
          throw AxiomViolation("(rs)m = r(sm)", wit({r, s}, {x}));
        if (M.act(ring->add(r, s), x) != M.add(M.act(r, x), M.act(s, x)))
          throw AxiomViolation("(r+s)m = rm + sm", wit({r, s}, {x}));
      }
  for (ElemId r = 0; r < rn; ++r)
    for (ElemId x = 0; x < n; ++x)
      for (ElemId y : ms_inner)
        if (M.act(r, M.add(x, y)) != M.add(M.act(r, x), M.act(r, y)))
          throw AxiomViolation("r(m+n) = rm + rn", wit({r}, {x, y}));

  M.spec_ = std::move(spec);
  return mod_ptr;
}

ModuleSpec ModuleRep::spec_with_name(std::string name) const {
  ModuleSpec s = spec_;
  s.name = std::move(name);
  return s;
}

// ---------------------------------------------------------------------------
// Submodules

void extend_subgroup(const ModuleRep& m, ElementSet& set, std::vector<ElemId>& list, ElemId c) {
  extend_group(set, list, c, [&](ElemId a, ElemId b) { return m.add(a, b); });
}

void extend_submodule(const ModuleRep& m, ElementSet& set, std::vector<ElemId>& list, ElemId g) {
  if (set.contains(g)) return;
  const std::size_t k = m.ring()->rank();
  for (std::size_t i = 0; i < k; ++i) extend_subgroup(m, set, list, m.act_basis(i, g));
}

Submodule generate(const ModulePtr& m, std::span<const ElemId> gens) {
  Submodule out{m, ElementSet(m->size()), {}};
  out.members.insert(0);
  std::vector<ElemId> list{0};
  for (ElemId g : gens) {
    if (out.members.contains(g)) continue;
    extend_submodule(*m, out.members, list, g);
    out.generators.push_back(g);
  }
  return out;
}

Submodule submodule_from_members(const ModulePtr& m, const ElementSet& members) {
  if (members.universe() != m->size())
    throw ParentMismatch("element set universe does not match module size");
  if (!members.contains(0)) throw AxiomViolation("submodule contains zero", {});
  const auto list = members.members();
  const std::size_t k = m->ring()->rank();
  for (ElemId a : list) {
    for (ElemId b : list)
      if (!members.contains(m->add(a, b)))
        throw AxiomViolation("submodule closed under addition", {m->decode(a), m->decode(b)});
    for (std::size_t i = 0; i < k; ++i)
      if (!members.contains(m->act_basis(i, a)))
        throw AxiomViolation("submodule closed under ring action",
                             {m->ring()->decode(m->ring()->basis(i)), m->decode(a)});
  }
  Submodule out = generate(m, list);
  return out;
}

Submodule zero_submodule(const ModulePtr& m) { return generate(m, {}); }

Submodule whole_submodule(const ModulePtr& m) {
  std::vector<ElemId> gens;
  for (std::size_t j = 0; j < m->coords().rank(); ++j) gens.push_back(m->coords().stride(j));
  return generate(m, gens);
}

// ---------------------------------------------------------------------------
// Sections, quotients, sums

SectionModule section_module(const ModulePtr& parent, const ElementSet& top,
                             const ElementSet& bottom, std::string name, const Bounds& bounds) {
  constexpr ElemId kNone = SectionModule::kNotInSection;
  const ModuleRep& M = *parent;
  if (!bottom.is_subset_of(top)) throw PreconditionViolation("section requires bottom within top");

  std::vector<ElemId> coset(M.size(), kNone);
  std::vector<ElemId> rep;
  const auto bottom_list = bottom.members();
  top.for_each([&](ElemId x) {
    if (coset[x] != kNone) return;
    const auto id = static_cast<ElemId>(rep.size());
    rep.push_back(x);
    for (ElemId b : bottom_list) coset[M.add(x, b)] = id;
  });
  const std::size_t q = rep.size();
  const auto qadd = [&](ElemId a, ElemId b) { return coset[M.add(rep[a], rep[b])]; };

  std::vector<std::int64_t> order(q, 1);
  for (ElemId c = 1; c < q; ++c) {
    ElemId cur = c;
    std::int64_t k = 1;
    while (cur != 0) {
      cur = qadd(cur, c);
      ++k;
    }
    order[c] = k;
  }

  // Greedy basis per primary component: an element of largest order modulo
  // the span so far, lifted to an element of that exact order, splits off.
  std::vector<ElemId> basis;
  std::vector<std::int64_t> basis_orders;
  for (auto p : prime_factors(q)) {
    std::vector<ElemId> part;
    for (ElemId c = 0; c < q; ++c)
      if (is_power_of(order[c], p)) part.push_back(c);
    ElementSet span(q);
    span.insert(0);
    std::vector<ElemId> span_list{0};
    while (span_list.size() < part.size()) {
      ElemId best = 0;
      std::int64_t best_ord = 0;
      for (ElemId c : part) {
        if (span.contains(c)) continue;
        std::int64_t k = 1;
        ElemId cur = c;
        while (!span.contains(cur)) {
          cur = qadd(cur, c);
          ++k;
        }
        if (k > best_ord) {
          best_ord = k;
          best = c;
        }
      }
      ElemId lift = kNone;
      for (ElemId h : span_list) {
        const ElemId x = qadd(best, h);
        if (order[x] == best_ord) {
          lift = x;
          break;
        }
      }
      if (lift == kNone) throw InternalInconsistency("cyclic decomposition failed to lift");
      extend_group(span, span_list, lift, qadd);
      basis.push_back(lift);
      basis_orders.push_back(best_ord);
    }
  }

  const CyclicCoordinates qc(basis_orders);
  std::vector<ElemId> element_of(q, 0), coord_of(q, kNone);
  for (ElemId idx = 1; idx < q; ++idx) {
    std::size_t j = 0;
    while (qc.digit(idx, j) == 0) ++j;
    element_of[idx] = qadd(element_of[idx - qc.stride(j)], basis[j]);
  }
  for (ElemId idx = 0; idx < q; ++idx) {
    if (coord_of[element_of[idx]] != kNone)
      throw InternalInconsistency("cyclic decomposition is not direct");
    coord_of[element_of[idx]] = idx;
  }

  ModuleSpec spec;
  spec.name = std::move(name);
  spec.additive_orders = basis_orders;
  const std::size_t k = M.ring()->rank();
  const std::size_t l = basis.size();
  spec.actions.assign(k, std::vector<std::vector<std::int64_t>>(l, std::vector<std::int64_t>(l, 0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t col = 0; col < l; ++col) {
      const ElemId image = coord_of[coset[M.act_basis(i, rep[basis[col]])]];
      for (std::size_t row = 0; row < l; ++row) spec.actions[i][row][col] = qc.digit(image, row);
    }

  SectionModule out;
  out.module = ModuleRep::create(M.ring(), std::move(spec), bounds);
  out.projection.assign(M.size(), kNone);
  top.for_each([&](ElemId x) { out.projection[x] = coord_of[coset[x]]; });

  // The projection must be a surjective homomorphism.
  const ModuleRep& Q = *out.module;
  const auto top_list = top.members();
  const bool all_pairs = top_list.size() * top_list.size() <= kExhaustiveBudget;
  for (ElemId x : top_list) {
    for (std::size_t i = 0; i < k; ++i)
      if (out.projection[M.act_basis(i, x)] != Q.act_basis(i, out.projection[x]))
        throw InternalInconsistency("section projection does not commute with the action");
    const std::size_t limit = all_pairs ? top_list.size() : std::min<std::size_t>(top_list.size(), 64);
    for (std::size_t t = 0; t < limit; ++t) {
      const ElemId y = top_list[t];
      if (out.projection[M.add(x, y)] != Q.add(out.projection[x], out.projection[y]))
        throw InternalInconsistency("section projection is not additive");
    }
  }
  return out;
}

ModulePtr regular_module(const RingPtr& ring, const Bounds& bounds) {
  ModuleSpec spec;
  spec.name = "R";
  spec.additive_orders = ring->additive_orders();
  const std::size_t k = ring->rank();
  spec.actions.assign(k, std::vector<std::vector<std::int64_t>>(k, std::vector<std::int64_t>(k, 0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t col = 0; col < k; ++col) {
      const auto prod = ring->decode(ring->mul(ring->basis(i), ring->basis(col)));
      for (std::size_t row = 0; row < k; ++row) spec.actions[i][row][col] = prod[row];
    }
  return ModuleRep::create(ring, std::move(spec), bounds);
}

namespace {
std::string generator_label(const Submodule& n) {
  std::string s = "<";
  for (std::size_t i = 0; i < n.generators.size(); ++i) {
    if (i) s += ",";
    s += format_coeffs(n.parent->decode(n.generators[i]));
  }
  return s + ">";
}
}  // namespace

SectionModule quotient_module(const Submodule& n, const Bounds& bounds) {
  return section_module(n.parent, ElementSet::full(n.parent->size()), n.members,
                        n.parent->name() + "/" + generator_label(n), bounds);
}

SectionModule submodule_as_module(const Submodule& n, const Bounds& bounds) {
  ElementSet zero(n.parent->size());
  zero.insert(0);
  return section_module(n.parent, n.members, zero, generator_label(n), bounds);
}

DirectSum direct_sum(const ModulePtr& a, const ModulePtr& b, std::string name, const Bounds& bounds) {
  if (a->ring() != b->ring() && !(*a->ring() == *b->ring()))
    throw RingMismatch("direct sum of modules over different rings");
  ModuleSpec spec;
  spec.name = name.empty() ? a->name() + "(+)" + b->name() : std::move(name);
  const auto& oa = a->spec().additive_orders;
  const auto& ob = b->spec().additive_orders;
  spec.additive_orders = oa;
  spec.additive_orders.insert(spec.additive_orders.end(), ob.begin(), ob.end());
  const std::size_t la = oa.size(), l = la + ob.size();
  const std::size_t k = a->ring()->rank();
  spec.actions.assign(k, std::vector<std::vector<std::int64_t>>(l, std::vector<std::int64_t>(l, 0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < la; ++r)
      for (std::size_t c = 0; c < la; ++c) spec.actions[i][r][c] = a->spec().actions[i][r][c];
    for (std::size_t r = 0; r < ob.size(); ++r)
      for (std::size_t c = 0; c < ob.size(); ++c)
        spec.actions[i][la + r][la + c] = b->spec().actions[i][r][c];
  }
  DirectSum out;
  out.module = ModuleRep::create(a->ring(), std::move(spec), bounds);
  // Coordinates of A come first, so a ↦ a and b ↦ |A|·b.
  out.embed_left.resize(a->size());
  std::iota(out.embed_left.begin(), out.embed_left.end(), 0);
  out.embed_right.resize(b->size());
  for (ElemId y = 0; y < b->size(); ++y) out.embed_right[y] = static_cast<ElemId>(y * a->size());
  return out;
}

bool cyclic_modules_isomorphic(const ModuleRep& a, const ModuleRep& b) {
  if (a.size() != b.size() || !(*a.ring() == *b.ring())) return false;
  const std::size_t rn = a.ring()->size();
  const auto generates = [&](const ModuleRep& m, ElemId x) {
    ElementSet s(m.size());
    for (ElemId r = 0; r < rn; ++r) s.insert(m.act(r, x));
    return s.count() == m.size();
  };
  const auto annihilator = [&](const ModuleRep& m, ElemId x) {
    ElementSet s(rn);
    for (ElemId r = 0; r < rn; ++r)
      if (m.act(r, x) == 0) s.insert(r);
    return s;
  };
  ElemId gen_a = 0;
  bool found = false;
  for (ElemId x = 0; x < a.size() && !found; ++x)
    if (generates(a, x)) {
      gen_a = x;
      found = true;
    }
  if (!found) throw PreconditionViolation("module '" + a.name() + "' is not cyclic");
  const ElementSet ann_a = annihilator(a, gen_a);
  for (ElemId y = 0; y < b.size(); ++y)
    if (generates(b, y) && annihilator(b, y) == ann_a) return true;
  return false;
}

}  // namespace deltasup
