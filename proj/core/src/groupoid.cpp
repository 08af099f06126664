#include "burnside/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "burnside/perm_group.hpp"

namespace burnside {

// --- FiniteGroupoid -----------------------------------------------------------

void check_morphism_cap(std::size_t morphisms, const Limits& limits) {
  if (morphisms > limits.max_morphisms)
    throw CapExceeded("groupoid morphisms", morphisms, limits.max_morphisms);
}

FiniteGroupoid FiniteGroupoid::build(std::size_t object_count, std::vector<Arrow> arrows,
                                     std::vector<MorphismId> identities,
                                     std::vector<MorphismId> inverses, const ComposeFn& compose,
                                     const Limits& limits, Validation validation) {
  check_morphism_cap(arrows.size(), limits);
  const std::size_t m_count = arrows.size();
  if (identities.size() != object_count)
    throw ValidationError("groupoid: one identity per object required");
  if (inverses.size() != m_count) throw ValidationError("groupoid: one inverse per morphism required");
  for (const Arrow& a : arrows)
    if (a.src >= object_count || a.tgt >= object_count)
      throw ValidationError("groupoid: morphism endpoint out of range");

  FiniteGroupoid g;
  g.object_count_ = object_count;
  g.arrows_ = std::move(arrows);
  g.identities_ = std::move(identities);
  g.inverses_ = std::move(inverses);

  g.out_list_.resize(m_count);
  std::iota(g.out_list_.begin(), g.out_list_.end(), MorphismId{0});
  std::sort(g.out_list_.begin(), g.out_list_.end(), [&](MorphismId a, MorphismId b) {
    const Arrow& x = g.arrows_[a];
    const Arrow& y = g.arrows_[b];
    if (x.src != y.src) return x.src < y.src;
    if (x.tgt != y.tgt) return x.tgt < y.tgt;
    return a < b;
  });
  g.out_offsets_.assign(object_count + 1, 0);
  for (const Arrow& a : g.arrows_) ++g.out_offsets_[a.src + 1];
  std::partial_sum(g.out_offsets_.begin(), g.out_offsets_.end(), g.out_offsets_.begin());
  g.out_position_.resize(m_count);
  for (std::size_t k = 0; k < m_count; ++k) {
    const MorphismId m = g.out_list_[k];
    g.out_position_[m] = k - g.out_offsets_[g.arrows_[m].src];
  }

  g.composition_offsets_.assign(m_count + 1, 0);
  for (MorphismId m = 0; m < m_count; ++m) {
    const ObjectId t = g.arrows_[m].tgt;
    g.composition_offsets_[m + 1] =
        g.composition_offsets_[m] + (g.out_offsets_[t + 1] - g.out_offsets_[t]);
  }
  const std::size_t pairs = g.composition_offsets_.back();
  if (pairs > limits.max_compositions)
    throw CapExceeded("groupoid composable pairs", pairs, limits.max_compositions);
  g.compositions_.resize(pairs);
  for (MorphismId m = 0; m < m_count; ++m) {
    const auto next = g.out(g.arrows_[m].tgt);
    for (std::size_t k = 0; k < next.size(); ++k) {
      const MorphismId r = compose(m, next[k]);
      if (r >= m_count || g.arrows_[r].src != g.arrows_[m].src ||
          g.arrows_[r].tgt != g.arrows_[next[k]].tgt)
        throw ValidationError("groupoid: composite has wrong endpoints");
      g.compositions_[g.composition_offsets_[m] + k] = r;
    }
  }

  for (ObjectId x = 0; x < object_count; ++x) {
    const MorphismId id = g.identities_[x];
    if (id >= m_count || g.arrows_[id].src != x || g.arrows_[id].tgt != x)
      throw ValidationError("groupoid: identity is not an endomorphism of its object");
  }
  for (MorphismId m = 0; m < m_count; ++m) {
    const Arrow& a = g.arrows_[m];
    if (g.compose(g.identities_[a.src], m) != m || g.compose(m, g.identities_[a.tgt]) != m)
      throw ValidationError("groupoid: identity law fails");
    const MorphismId inv = g.inverses_[m];
    if (inv >= m_count || g.arrows_[inv].src != a.tgt || g.arrows_[inv].tgt != a.src ||
        g.compose(m, inv) != g.identities_[a.src] || g.compose(inv, m) != g.identities_[a.tgt])
      throw ValidationError("groupoid: inverse law fails");
  }
  if (validation == Validation::full && !g.is_associative())
    throw ValidationError("groupoid: composition is not associative");
  return g;
}

MorphismId FiniteGroupoid::compose(MorphismId m, MorphismId n) const {
  if (tgt(m) != src(n)) throw ValidationError("groupoid: morphisms are not composable");
  return compositions_[composition_offsets_[m] + out_position_[n]];
}

std::span<const MorphismId> FiniteGroupoid::out(ObjectId x) const {
  if (x >= object_count_) throw ValidationError("groupoid: object out of range");
  return std::span<const MorphismId>(out_list_).subspan(out_offsets_[x],
                                                         out_offsets_[x + 1] - out_offsets_[x]);
}

std::span<const MorphismId> FiniteGroupoid::hom(ObjectId x, ObjectId y) const {
  const auto all = out(x);
  auto lo = std::partition_point(all.begin(), all.end(),
                                 [&](MorphismId m) { return arrows_[m].tgt < y; });
  auto hi = std::partition_point(lo, all.end(), [&](MorphismId m) { return arrows_[m].tgt == y; });
  return {lo, hi};
}

bool FiniteGroupoid::is_associative() const {
  for (MorphismId a = 0; a < morphism_count(); ++a)
    for (MorphismId b : out(tgt(a))) {
      const MorphismId ab = compose(a, b);
      for (MorphismId c : out(tgt(b)))
        if (compose(ab, c) != compose(a, compose(b, c))) return false;
    }
  return true;
}

// --- functors -------------------------------------------------------------------

GroupoidFunctor::GroupoidFunctor(GroupoidPtr source, GroupoidPtr target,
                                 std::vector<ObjectId> object_map,
                                 std::vector<MorphismId> morphism_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      object_map_(std::move(object_map)),
      morphism_map_(std::move(morphism_map)) {
  if (!source_ || !target_) throw ValidationError("functor: null groupoid");
  const FiniteGroupoid& s = *source_;
  const FiniteGroupoid& t = *target_;
  if (object_map_.size() != s.object_count() || morphism_map_.size() != s.morphism_count())
    throw ValidationError("functor: map sizes do not match the source");
  for (ObjectId y : object_map_)
    if (y >= t.object_count()) throw ValidationError("functor: object image out of range");
  for (MorphismId m = 0; m < s.morphism_count(); ++m) {
    const MorphismId fm = morphism_map_[m];
    if (fm >= t.morphism_count() || t.src(fm) != object_map_[s.src(m)] ||
        t.tgt(fm) != object_map_[s.tgt(m)])
      throw ValidationError("functor: endpoints not preserved");
  }
  for (ObjectId x = 0; x < s.object_count(); ++x)
    if (morphism_map_[s.identity(x)] != t.identity(object_map_[x]))
      throw ValidationError("functor: identities not preserved");
  for (MorphismId m = 0; m < s.morphism_count(); ++m)
    for (MorphismId n : s.out(s.tgt(m)))
      if (morphism_map_[s.compose(m, n)] != t.compose(morphism_map_[m], morphism_map_[n]))
        throw ValidationError("functor: composition not preserved");
}

bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b) {
  return a == b || (a && b && *a == *b);
}

GroupoidFunctor identity_functor(const GroupoidPtr& x) {
  std::vector<ObjectId> objs(x->object_count());
  std::iota(objs.begin(), objs.end(), ObjectId{0});
  std::vector<MorphismId> mors(x->morphism_count());
  std::iota(mors.begin(), mors.end(), MorphismId{0});
  return GroupoidFunctor(x, x, std::move(objs), std::move(mors));
}

GroupoidFunctor compose_functors(const GroupoidFunctor& f, const GroupoidFunctor& g) {
  if (!same_groupoid(f.target_ptr(), g.source_ptr()))
    throw ValidationError("compose_functors: target of first is not source of second");
  std::vector<ObjectId> objs(f.source().object_count());
  for (ObjectId x = 0; x < objs.size(); ++x) objs[x] = g.on_object(f.on_object(x));
  std::vector<MorphismId> mors(f.source().morphism_count());
  for (MorphismId m = 0; m < mors.size(); ++m) mors[m] = g.on_morphism(f.on_morphism(m));
  return GroupoidFunctor(f.source_ptr(), g.target_ptr(), std::move(objs), std::move(mors));
}

GroupoidFunctor point_inclusion(const GroupoidPtr& x, ObjectId object) {
  if (object >= x->object_count()) throw ValidationError("point_inclusion: object out of range");
  return GroupoidFunctor(discrete(1), x, {object}, {x->identity(object)});
}

GroupoidFunctor to_terminal(const GroupoidPtr& x) {
  return GroupoidFunctor(x, discrete(1), std::vector<ObjectId>(x->object_count(), 0),
                         std::vector<MorphismId>(x->morphism_count(), 0));
}

// --- constructions ----------------------------------------------------------------

GroupoidPtr discrete(std::size_t n) {
  std::vector<Arrow> arrows(n);
  std::vector<MorphismId> ids(n);
  for (ObjectId x = 0; x < n; ++x) {
    arrows[x] = {x, x};
    ids[x] = x;
  }
  auto inverses = ids;
  return std::make_shared<const FiniteGroupoid>(FiniteGroupoid::build(
      n, std::move(arrows), std::move(ids), std::move(inverses),
      [](MorphismId m, MorphismId) { return m; }));
}

GroupoidPtr delooping(const FiniteGroup& group, const Limits& limits) {
  const std::size_t n = group.order();
  check_morphism_cap(n, limits);
  std::vector<Arrow> arrows(n, Arrow{0, 0});
  std::vector<MorphismId> inverses(n);
  for (ElementIndex g = 0; g < n; ++g) inverses[g] = group.inverse(g);
  return std::make_shared<const FiniteGroupoid>(FiniteGroupoid::build(
      1, std::move(arrows), {FiniteGroup::identity()}, std::move(inverses),
      [&](MorphismId a, MorphismId b) { return group.multiply(a, b); }, limits));
}

GroupoidPtr disjoint_sum(const FiniteGroupoid& x, const FiniteGroupoid& y, const Limits& limits) {
  const auto ox = static_cast<ObjectId>(x.object_count());
  const auto mx = static_cast<MorphismId>(x.morphism_count());
  check_morphism_cap(x.morphism_count() + y.morphism_count(), limits);
  std::vector<Arrow> arrows;
  std::vector<MorphismId> ids, inverses;
  for (MorphismId m = 0; m < mx; ++m) {
    arrows.push_back(x.arrow(m));
    inverses.push_back(x.inverse(m));
  }
  for (MorphismId m = 0; m < y.morphism_count(); ++m) {
    arrows.push_back({y.src(m) + ox, y.tgt(m) + ox});
    inverses.push_back(y.inverse(m) + mx);
  }
  for (ObjectId o = 0; o < x.object_count(); ++o) ids.push_back(x.identity(o));
  for (ObjectId o = 0; o < y.object_count(); ++o) ids.push_back(y.identity(o) + mx);
  return std::make_shared<const FiniteGroupoid>(FiniteGroupoid::build(
      x.object_count() + y.object_count(), std::move(arrows), std::move(ids), std::move(inverses),
      [&](MorphismId a, MorphismId b) {
        return a < mx ? x.compose(a, b) : y.compose(a - mx, b - mx) + mx;
      },
      limits));
}

GroupoidPtr product(const FiniteGroupoid& x, const FiniteGroupoid& y, const Limits& limits) {
  const std::size_t oy = y.object_count();
  const std::size_t my = y.morphism_count();
  check_morphism_cap(x.morphism_count() * my, limits);
  std::vector<Arrow> arrows;
  std::vector<MorphismId> inverses;
  arrows.reserve(x.morphism_count() * my);
  for (MorphismId a = 0; a < x.morphism_count(); ++a)
    for (MorphismId b = 0; b < my; ++b) {
      arrows.push_back({static_cast<ObjectId>(x.src(a) * oy + y.src(b)),
                        static_cast<ObjectId>(x.tgt(a) * oy + y.tgt(b))});
      inverses.push_back(static_cast<MorphismId>(x.inverse(a) * my + y.inverse(b)));
    }
  std::vector<MorphismId> ids;
  for (ObjectId a = 0; a < x.object_count(); ++a)
    for (ObjectId b = 0; b < oy; ++b)
      ids.push_back(static_cast<MorphismId>(x.identity(a) * my + y.identity(b)));
  return std::make_shared<const FiniteGroupoid>(FiniteGroupoid::build(
      x.object_count() * oy, std::move(arrows), std::move(ids), std::move(inverses),
      [&](MorphismId p, MorphismId q) {
        return static_cast<MorphismId>(x.compose(p / my, q / my) * my +
                                       y.compose(p % my, q % my));
      },
      limits));
}

GroupoidFunctor pair_functor(const GroupoidFunctor& f, const GroupoidFunctor& g,
                             const Limits& limits) {
  if (!same_groupoid(f.source_ptr(), g.source_ptr()))
    throw ValidationError("pair_functor: functors have different sources");
  GroupoidPtr target = product(f.target(), g.target(), limits);
  const std::size_t oy = g.target().object_count();
  const std::size_t my = g.target().morphism_count();
  std::vector<ObjectId> objs(f.source().object_count());
  for (ObjectId x = 0; x < objs.size(); ++x)
    objs[x] = static_cast<ObjectId>(f.on_object(x) * oy + g.on_object(x));
  std::vector<MorphismId> mors(f.source().morphism_count());
  for (MorphismId m = 0; m < mors.size(); ++m)
    mors[m] = static_cast<MorphismId>(f.on_morphism(m) * my + g.on_morphism(m));
  return GroupoidFunctor(f.source_ptr(), std::move(target), std::move(objs), std::move(mors));
}

GroupoidFunctor diagonal(const GroupoidPtr& x, const Limits& limits) {
  const auto id = identity_functor(x);
  return pair_functor(id, id, limits);
}

// --- skeleta --------------------------------------------------------------------------

std::pair<std::vector<std::size_t>, std::size_t> components(const FiniteGroupoid& x) {
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(x.object_count(), kUnseen);
  std::size_t count = 0;
  std::vector<ObjectId> stack;
  for (ObjectId start = 0; start < x.object_count(); ++start) {
    if (comp[start] != kUnseen) continue;
    comp[start] = count;
    stack.push_back(start);
    while (!stack.empty()) {
      const ObjectId o = stack.back();
      stack.pop_back();
      // Every morphism has an inverse, so out-going edges reach the whole component.
      for (MorphismId m : x.out(o)) {
        const ObjectId t = x.tgt(m);
        if (comp[t] == kUnseen) {
          comp[t] = count;
          stack.push_back(t);
        }
      }
    }
    ++count;
  }
  return {std::move(comp), count};
}

Skeleton skeleton(const FiniteGroupoid& x, const Limits& limits) {
  auto [comp, count] = components(x);
  Skeleton s;
  s.components.resize(count);
  for (ObjectId o = 0; o < x.object_count(); ++o) s.components[comp[o]].members.push_back(o);
  for (auto& c : s.components) {
    c.representative = c.members.front();
    const auto aut = x.automorphisms(c.representative);
    c.automorphisms.assign(aut.begin(), aut.end());
    c.automorphism_order = aut.size();
    if (aut.size() <= limits.cayley_table_order) {
      const std::size_t n = aut.size();
      std::unordered_map<MorphismId, CayleyGroup::Element> index;
      for (std::size_t i = 0; i < n; ++i) index.emplace(aut[i], static_cast<CayleyGroup::Element>(i));
      std::vector<CayleyGroup::Element> table(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = index.at(x.compose(aut[i], aut[j]));
      c.automorphism_group.emplace(n, std::move(table));
    }
  }
  s.component_of = std::move(comp);
  return s;
}

Rational cardinality(const FiniteGroupoid& x) {
  const auto [comp, count] = components(x);
  std::vector<bool> done(count, false);
  Rational total;
  for (ObjectId o = 0; o < x.object_count(); ++o) {
    if (done[comp[o]]) continue;
    done[comp[o]] = true;
    total += Rational(1, static_cast<std::int64_t>(x.automorphisms(o).size()));
  }
  return total;
}

// --- equivalence -------------------------------------------------------------------------

EquivalenceResult groupoid_equivalent(const FiniteGroupoid& x, const FiniteGroupoid& y,
                                      const Limits& limits) {
  Limits skel_limits = limits;
  skel_limits.cayley_table_order = limits.max_iso_order;
  const Skeleton sx = skeleton(x, skel_limits);
  const Skeleton sy = skeleton(y, skel_limits);
  if (sx.components.size() != sy.components.size())
    return {Equivalence::inequivalent, "component counts differ: " +
                                           std::to_string(sx.components.size()) + " vs " +
                                           std::to_string(sy.components.size())};

  // Order profiles first: a mismatch there is decisive at any group order.
  using Key = std::pair<std::size_t, std::vector<std::size_t>>;
  auto key_of = [](const SkeletonComponent& c) -> Key {
    if (c.automorphism_group) return {c.automorphism_order, c.automorphism_group->order_profile()};
    return {c.automorphism_order, {}};
  };
  std::vector<Key> kx, ky;
  for (const auto& c : sx.components) kx.push_back(key_of(c));
  for (const auto& c : sy.components) ky.push_back(key_of(c));
  {
    auto a = kx, b = ky;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      return {Equivalence::inequivalent, "automorphism group orders or order profiles differ"};
  }

  // Isomorphism is transitive, so greedy matching within a key class is complete.
  bool undecided = false;
  std::vector<bool> matched(sy.components.size(), false);
  for (std::size_t i = 0; i < sx.components.size(); ++i) {
    const auto& cx = sx.components[i];
    if (cx.automorphism_order > limits.max_iso_order) {
      undecided = true;
      continue;
    }
    bool found = false;
    for (std::size_t j = 0; j < sy.components.size() && !found; ++j) {
      if (matched[j] || ky[j] != kx[i]) continue;
      if (find_isomorphism(*cx.automorphism_group, *sy.components[j].automorphism_group)) {
        matched[j] = true;
        found = true;
      }
    }
    if (!found)
      return {Equivalence::inequivalent,
              "no component matches component of object " + std::to_string(cx.representative) +
                  " (automorphism order " + std::to_string(cx.automorphism_order) + ")"};
  }
  if (undecided)
    return {Equivalence::undecided, "automorphism group exceeds isomorphism-search cap " +
                                        std::to_string(limits.max_iso_order)};
  return {Equivalence::equivalent, ""};
}

// --- homotopy pullbacks --------------------------------------------------------------------

namespace {

struct TripleHash {
  std::size_t operator()(const PullbackObject& o) const noexcept {
    std::size_t h = o.left;
    h = h * 0x9E3779B97F4A7C15ull + o.right;
    h = h * 0x9E3779B97F4A7C15ull + o.comparison;
    return h ^ (h >> 29);
  }
};

}  // namespace

HomotopyPullback homotopy_pullback(const GroupoidFunctor& f, const GroupoidFunctor& g,
                                   const Limits& limits) {
  if (!same_groupoid(f.target_ptr(), g.target_ptr()))
    throw ValidationError("homotopy_pullback: functors have different targets");
  const FiniteGroupoid& X = f.source();
  const FiniteGroupoid& Y = g.source();
  const FiniteGroupoid& Z = f.target();

  std::vector<std::vector<ObjectId>> by_image(Z.object_count());
  for (ObjectId y = 0; y < Y.object_count(); ++y) by_image[g.on_object(y)].push_back(y);

  std::vector<PullbackObject> objects;
  std::size_t morphism_total = 0;
  for (ObjectId x = 0; x < X.object_count(); ++x) {
    std::vector<PullbackObject> row;
    for (MorphismId phi : Z.out(f.on_object(x)))
      for (ObjectId y : by_image[Z.tgt(phi)]) row.push_back({x, y, phi});
    std::sort(row.begin(), row.end(), [](const PullbackObject& a, const PullbackObject& b) {
      return a.right != b.right ? a.right < b.right : a.comparison < b.comparison;
    });
    for (const auto& o : row) {
      morphism_total += X.out(x).size() * Y.out(o.right).size();
      check_morphism_cap(morphism_total, limits);
      objects.push_back(o);
    }
  }

  std::unordered_map<PullbackObject, ObjectId, TripleHash> index;
  index.reserve(objects.size());
  for (ObjectId o = 0; o < objects.size(); ++o) index.emplace(objects[o], o);

  std::vector<std::size_t> offsets(objects.size() + 1, 0);
  for (ObjectId o = 0; o < objects.size(); ++o)
    offsets[o + 1] = offsets[o] + X.out(objects[o].left).size() * Y.out(objects[o].right).size();

  std::vector<Arrow> arrows(morphism_total);
  std::vector<std::pair<MorphismId, MorphismId>> pairs(morphism_total);
  for (ObjectId o = 0; o < objects.size(); ++o) {
    const auto& [x, y, phi] = objects[o];
    const auto ax = X.out(x);
    const auto by = Y.out(y);
    for (std::size_t i = 0; i < ax.size(); ++i)
      for (std::size_t j = 0; j < by.size(); ++j) {
        const MorphismId a = ax[i], b = by[j];
        const MorphismId phi2 =
            Z.compose(Z.compose(Z.inverse(f.on_morphism(a)), phi), g.on_morphism(b));
        const ObjectId t = index.at({X.tgt(a), Y.tgt(b), phi2});
        const std::size_t id = offsets[o] + i * by.size() + j;
        arrows[id] = {o, t};
        pairs[id] = {a, b};
      }
  }

  auto morphism_at = [&](ObjectId o, MorphismId a, MorphismId b) {
    return static_cast<MorphismId>(offsets[o] + X.out_position(a) * Y.out(objects[o].right).size() +
                                   Y.out_position(b));
  };
  std::vector<MorphismId> ids(objects.size());
  for (ObjectId o = 0; o < objects.size(); ++o)
    ids[o] = morphism_at(o, X.identity(objects[o].left), Y.identity(objects[o].right));
  std::vector<MorphismId> inverses(morphism_total);
  for (MorphismId m = 0; m < morphism_total; ++m)
    inverses[m] = morphism_at(arrows[m].tgt, X.inverse(pairs[m].first), Y.inverse(pairs[m].second));

  auto groupoid = std::make_shared<const FiniteGroupoid>(FiniteGroupoid::build(
      objects.size(), arrows, std::move(ids), std::move(inverses),
      [&](MorphismId m, MorphismId n) {
        return morphism_at(arrows[m].src, X.compose(pairs[m].first, pairs[n].first),
                           Y.compose(pairs[m].second, pairs[n].second));
      },
      limits));

  std::vector<ObjectId> left_objs(objects.size()), right_objs(objects.size());
  for (ObjectId o = 0; o < objects.size(); ++o) {
    left_objs[o] = objects[o].left;
    right_objs[o] = objects[o].right;
  }
  std::vector<MorphismId> left_mors(morphism_total), right_mors(morphism_total);
  for (MorphismId m = 0; m < morphism_total; ++m) {
    left_mors[m] = pairs[m].first;
    right_mors[m] = pairs[m].second;
  }
  GroupoidFunctor first(groupoid, f.source_ptr(), std::move(left_objs), std::move(left_mors));
  GroupoidFunctor second(groupoid, g.source_ptr(), std::move(right_objs), std::move(right_mors));
  return HomotopyPullback{groupoid, std::move(first), std::move(second), std::move(objects),
                          std::move(pairs)};
}

HomotopyPullback homotopy_fiber(const GroupoidFunctor& f, ObjectId b, const Limits& limits) {
  return homotopy_pullback(f, point_inclusion(f.target_ptr(), b), limits);
}

// --- inertia ------------------------------------------------------------------------------

namespace {

ObjectId inertia_object(const FiniteGroupoid& X, std::span<const std::size_t> object_offsets,
                        ObjectId x, MorphismId a) {
  const auto aut = X.automorphisms(x);
  auto it = std::lower_bound(aut.begin(), aut.end(), a);
  if (it == aut.end() || *it != a)
    throw ValidationError("inertia: not an automorphism of the object");
  return static_cast<ObjectId>(object_offsets[x] + static_cast<std::size_t>(it - aut.begin()));
}

MorphismId inertia_morphism(const FiniteGroupoid& X, std::span<const std::size_t> morphism_offsets,
                            std::span<const ObjectId> base, ObjectId from, MorphismId f) {
  if (X.src(f) != base[from])
    throw ValidationError("inertia: morphism does not start at the base object");
  return static_cast<MorphismId>(morphism_offsets[from] + X.out_position(f));
}

}  // namespace

ObjectId Inertia::object_of(ObjectId x, MorphismId a) const {
  if (x >= object_offsets.size()) throw ValidationError("inertia: object out of range");
  return inertia_object(projection.target(), object_offsets, x, a);
}

MorphismId Inertia::morphism_of(ObjectId from, MorphismId f) const {
  if (from >= base.size()) throw ValidationError("inertia: object out of range");
  return inertia_morphism(projection.target(), morphism_offsets, base, from, f);
}

Inertia inertia(const GroupoidPtr& xp, const Limits& limits) {
  const FiniteGroupoid& X = *xp;
  std::vector<ObjectId> base;
  std::vector<MorphismId> loop;
  std::vector<std::size_t> object_offsets(X.object_count());
  std::vector<std::size_t> morphism_offsets;
  std::size_t morphism_total = 0;
  for (ObjectId x = 0; x < X.object_count(); ++x) {
    object_offsets[x] = base.size();
    for (MorphismId a : X.automorphisms(x)) {
      base.push_back(x);
      loop.push_back(a);
      morphism_offsets.push_back(morphism_total);
      morphism_total += X.out(x).size();
      check_morphism_cap(morphism_total, limits);
    }
  }
  const std::size_t n_obj = base.size();
  auto object_of = [&](ObjectId x, MorphismId a) {
    return inertia_object(X, object_offsets, x, a);
  };
  auto morphism_of = [&](ObjectId from, MorphismId f) {
    return inertia_morphism(X, morphism_offsets, base, from, f);
  };

  std::vector<Arrow> arrows(morphism_total);
  std::vector<MorphismId> under(morphism_total);
  for (ObjectId o = 0; o < n_obj; ++o) {
    const auto fs = X.out(base[o]);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const MorphismId f = fs[i];
      const MorphismId conj = X.compose(X.compose(X.inverse(f), loop[o]), f);
      const std::size_t id = morphism_offsets[o] + i;
      arrows[id] = {o, object_of(X.tgt(f), conj)};
      under[id] = f;
    }
  }
  std::vector<MorphismId> ids(n_obj);
  for (ObjectId o = 0; o < n_obj; ++o) ids[o] = morphism_of(o, X.identity(base[o]));
  std::vector<MorphismId> inverses(morphism_total);
  for (MorphismId m = 0; m < morphism_total; ++m)
    inverses[m] = morphism_of(arrows[m].tgt, X.inverse(under[m]));

  auto groupoid = std::make_shared<const FiniteGroupoid>(FiniteGroupoid::build(
      n_obj, arrows, std::move(ids), std::move(inverses),
      [&](MorphismId m, MorphismId n) {
        return morphism_of(arrows[m].src, X.compose(under[m], under[n]));
      },
      limits));
  GroupoidFunctor projection(groupoid, xp, base, std::move(under));
  return Inertia{std::move(groupoid), std::move(projection), std::move(base), std::move(loop),
                 std::move(object_offsets), std::move(morphism_offsets)};
}

GroupoidFunctor inertia_map(const GroupoidFunctor& f, const Inertia& source, const Inertia& target) {
  if (!same_groupoid(source.projection.target_ptr(), f.source_ptr()) ||
      !same_groupoid(target.projection.target_ptr(), f.target_ptr()))
    throw ValidationError("inertia_map: inertia groupoids do not match the functor");
  const FiniteGroupoid& L = *source.groupoid;
  std::vector<ObjectId> objs(L.object_count());
  for (ObjectId o = 0; o < objs.size(); ++o)
    objs[o] = target.object_of(f.on_object(source.base[o]), f.on_morphism(source.loop[o]));
  std::vector<MorphismId> mors(L.morphism_count());
  for (MorphismId m = 0; m < mors.size(); ++m)
    mors[m] = target.morphism_of(objs[L.src(m)], f.on_morphism(source.projection.on_morphism(m)));
  return GroupoidFunctor(source.groupoid, target.groupoid, std::move(objs), std::move(mors));
}

InertiaMap inertia_map(const GroupoidFunctor& f, const Limits& limits) {
  Inertia s = inertia(f.source_ptr(), limits);
  Inertia t = inertia(f.target_ptr(), limits);
  GroupoidFunctor map = inertia_map(f, s, t);
  return InertiaMap{std::move(s), std::move(t), std::move(map)};
}

}  // namespace burnside
