#include "fibcat/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace fibcat {

std::string joined(std::initializer_list<std::string> parts) {
  std::string out;
  bool first = true;
  for (const auto& p : parts) {
    if (!first) out += "·";
    out += p;
    first = false;
  }
  return out;
}

int FinCategory::compose(int g, int f) const {
  int r = comp_table[static_cast<size_t>(g) * morphisms.size() + f];
  if (r < 0)
    throw InternalError("compose called on non-composable pair " +
                        morphisms[g].id + " after " + morphisms[f].id);
  return r;
}

int FinCategory::obj(const std::string& name) const {
  auto it = obj_index.find(name);
  if (it == obj_index.end())
    throw ValidationError("UnknownObject", "no object named '" + name + "'");
  return it->second;
}

int FinCategory::mor(const std::string& name) const {
  auto it = mor_index.find(name);
  if (it == mor_index.end())
    throw ValidationError("UnknownMorphism",
                          "no morphism named '" + name + "'");
  return it->second;
}

namespace {

// Expands synthesized identities (and their forced composites) into the data.
CategoryData desugar(CategoryData data) {
  std::set<std::string> listed;
  for (const auto& m : data.morphisms) listed.insert(m.id);
  std::vector<std::string> synthesized;
  for (const auto& o : data.objects) {
    auto it = data.identities.find(o);
    std::string idname = it == data.identities.end() ? "id_" + o : it->second;
    if (!listed.count(idname)) {
      data.morphisms.push_back({idname, o, o});
      synthesized.push_back(idname);
      data.identities[o] = idname;
      listed.insert(idname);
    }
  }
  if (synthesized.empty()) return data;
  std::set<std::string> synth(synthesized.begin(), synthesized.end());
  // Forced composites with synthesized identities.
  for (const auto& m : data.morphisms) {
    auto s = data.identities.find(m.src);
    auto t = data.identities.find(m.tgt);
    if (s != data.identities.end() && synth.count(s->second))
      data.comp.push_back({m.id, s->second, m.id});
    if (t != data.identities.end() && synth.count(t->second) && m.id != t->second)
      data.comp.push_back({t->second, m.id, m.id});
  }
  return data;
}

}  // namespace

CatPtr validate_category(const CategoryData& raw) {
  CategoryData data = desugar(raw);
  auto cat = std::make_shared<FinCategory>();

  cat->objects = data.objects;
  std::sort(cat->objects.begin(), cat->objects.end());
  for (int i = 0; i < cat->num_objects(); ++i) {
    const auto& name = cat->objects[i];
    if (name.empty())
      throw ValidationError("DanglingId", "empty object identifier");
    if (!cat->obj_index.emplace(name, i).second)
      throw ValidationError("NameCollision", "duplicate object '" + name + "'");
  }

  std::vector<MorData> mors = data.morphisms;
  std::sort(mors.begin(), mors.end(),
            [](const MorData& a, const MorData& b) { return a.id < b.id; });
  for (int i = 0; i < static_cast<int>(mors.size()); ++i) {
    const auto& m = mors[i];
    if (m.id.empty())
      throw ValidationError("DanglingId", "empty morphism identifier");
    if (cat->obj_index.count(m.id))
      throw ValidationError(
          "NameCollision", "morphism '" + m.id + "' collides with an object");
    if (!cat->mor_index.emplace(m.id, i).second)
      throw ValidationError("NameCollision", "duplicate morphism '" + m.id + "'");
    auto s = cat->obj_index.find(m.src);
    auto t = cat->obj_index.find(m.tgt);
    if (s == cat->obj_index.end() || t == cat->obj_index.end())
      throw ValidationError("DanglingId", "morphism '" + m.id +
                                              "' references unknown object '" +
                                              (s == cat->obj_index.end() ? m.src : m.tgt) + "'");
    cat->morphisms.push_back({m.id, s->second, t->second});
  }

  const int M = cat->num_morphisms();
  cat->identity.assign(cat->num_objects(), -1);
  for (const auto& [obj, morname] : data.identities) {
    auto o = cat->obj_index.find(obj);
    if (o == cat->obj_index.end())
      throw ValidationError("DanglingId",
                            "identity entry for unknown object '" + obj + "'");
    auto m = cat->mor_index.find(morname);
    if (m == cat->mor_index.end())
      throw ValidationError("DanglingId",
                            "identity '" + morname + "' is not a morphism");
    const auto& mm = cat->morphisms[m->second];
    if (mm.src != o->second || mm.tgt != o->second)
      throw ValidationError("IdentityViolation",
                            "identity '" + morname + "' is not an endomorphism of '" + obj + "'");
    cat->identity[o->second] = m->second;
  }
  for (int o = 0; o < cat->num_objects(); ++o)
    if (cat->identity[o] < 0)
      throw ValidationError("IdentityViolation",
                            "object '" + cat->objects[o] + "' has no identity");

  cat->comp_table.assign(static_cast<size_t>(M) * M, -1);
  auto slot = [&](int g, int f) -> int& {
    return cat->comp_table[static_cast<size_t>(g) * M + f];
  };
  for (const auto& triple : data.comp) {
    int g = -1, f = -1, gf = -1;
    for (int k = 0; k < 3; ++k) {
      auto it = cat->mor_index.find(triple[k]);
      if (it == cat->mor_index.end())
        throw ValidationError("DanglingId", "composition entry references unknown morphism '" +
                                                triple[k] + "'");
      (k == 0 ? g : k == 1 ? f : gf) = it->second;
    }
    if (cat->morphisms[f].tgt != cat->morphisms[g].src)
      throw ValidationError("MissingComposite",
                            "pair (" + triple[0] + ", " + triple[1] + ") is not composable");
    if (cat->morphisms[gf].src != cat->morphisms[f].src ||
        cat->morphisms[gf].tgt != cat->morphisms[g].tgt)
      throw ValidationError("MissingComposite",
                            "composite '" + triple[2] + "' has wrong endpoints for (" +
                                triple[0] + ", " + triple[1] + ")");
    int& s = slot(g, f);
    if (s >= 0 && s != gf)
      throw ValidationError("MissingComposite",
                            "conflicting composites for (" + triple[0] + ", " + triple[1] + ")");
    s = gf;
  }

  // Totality on composable pairs.
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f)
      if (cat->morphisms[f].tgt == cat->morphisms[g].src && slot(g, f) < 0)
        throw ValidationError("MissingComposite",
                              "no composite for (" + cat->morphisms[g].id + ", " +
                                  cat->morphisms[f].id + ")");

  // Identity laws.
  for (int f = 0; f < M; ++f) {
    int ids = cat->identity[cat->morphisms[f].src];
    int idt = cat->identity[cat->morphisms[f].tgt];
    if (slot(f, ids) != f || slot(idt, f) != f)
      throw ValidationError("IdentityViolation",
                            "identity law fails at '" + cat->morphisms[f].id + "'");
  }

  // Associativity, exhaustively.
  for (int h = 0; h < M; ++h)
    for (int g = 0; g < M; ++g) {
      if (cat->morphisms[g].tgt != cat->morphisms[h].src) continue;
      int hg = slot(h, g);
      for (int f = 0; f < M; ++f) {
        if (cat->morphisms[f].tgt != cat->morphisms[g].src) continue;
        int gf = slot(g, f);
        if (slot(h, gf) != slot(hg, f))
          throw ValidationError(
              "AssociativityViolation",
              "associativity fails on (" + cat->morphisms[h].id + ", " +
                  cat->morphisms[g].id + ", " + cat->morphisms[f].id + ")");
      }
    }

  cat->homs.assign(cat->num_objects(),
                   std::vector<std::vector<int>>(cat->num_objects()));
  for (int m = 0; m < M; ++m)
    cat->homs[cat->morphisms[m].src][cat->morphisms[m].tgt].push_back(m);

  return cat;
}

bool same_category(const FinCategory& a, const FinCategory& b) {
  if (a.objects != b.objects) return false;
  if (a.morphisms.size() != b.morphisms.size()) return false;
  for (size_t i = 0; i < a.morphisms.size(); ++i) {
    if (a.morphisms[i].id != b.morphisms[i].id ||
        a.morphisms[i].src != b.morphisms[i].src ||
        a.morphisms[i].tgt != b.morphisms[i].tgt)
      return false;
  }
  return a.identity == b.identity && a.comp_table == b.comp_table;
}

// ---------------------------------------------------------------------------
// Functors.
// ---------------------------------------------------------------------------

FinFunctor make_functor(CatPtr dom, CatPtr cod, const FunctorData& data) {
  FinFunctor f;
  f.dom = std::move(dom);
  f.cod = std::move(cod);
  f.obj_map.assign(f.dom->num_objects(), -1);
  f.mor_map.assign(f.dom->num_morphisms(), -1);
  for (const auto& [from, to] : data.obj_map)
    f.obj_map[f.dom->obj(from)] = f.cod->obj(to);
  for (int o = 0; o < f.dom->num_objects(); ++o)
    if (f.obj_map[o] < 0)
      throw ValidationError("NotFunctorial",
                            "object '" + f.dom->objects[o] + "' has no image");
  for (const auto& [from, to] : data.mor_map)
    f.mor_map[f.dom->mor(from)] = f.cod->mor(to);
  // Identity images are forced; fill them in when omitted.
  for (int o = 0; o < f.dom->num_objects(); ++o) {
    int& im = f.mor_map[f.dom->id_of(o)];
    int forced = f.cod->id_of(f.obj_map[o]);
    if (im < 0) im = forced;
  }
  for (int m = 0; m < f.dom->num_morphisms(); ++m)
    if (f.mor_map[m] < 0)
      throw ValidationError("NotFunctorial", "morphism '" +
                                                 f.dom->morphisms[m].id +
                                                 "' has no image");
  validate_functor(f);
  return f;
}

void validate_functor(const FinFunctor& f) {
  const auto& C = *f.dom;
  const auto& D = *f.cod;
  for (int m = 0; m < C.num_morphisms(); ++m) {
    int im = f.mor_map[m];
    if (D.src(im) != f.obj_map[C.src(m)] || D.tgt(im) != f.obj_map[C.tgt(m)])
      throw ValidationError("NotFunctorial",
                            "image of '" + C.morphisms[m].id + "' has wrong endpoints");
  }
  for (int o = 0; o < C.num_objects(); ++o)
    if (f.mor_map[C.id_of(o)] != D.id_of(f.obj_map[o]))
      throw ValidationError("NotFunctorial",
                            "identity of '" + C.objects[o] + "' not preserved");
  for (int g = 0; g < C.num_morphisms(); ++g)
    for (int m = 0; m < C.num_morphisms(); ++m) {
      if (C.tgt(m) != C.src(g)) continue;
      if (f.mor_map[C.compose(g, m)] != D.compose(f.mor_map[g], f.mor_map[m]))
        throw ValidationError("NotFunctorial",
                              "composition not preserved on (" + C.morphisms[g].id +
                                  ", " + C.morphisms[m].id + ")");
    }
}

FinFunctor identity_functor(CatPtr c) {
  FinFunctor f;
  f.dom = c;
  f.cod = c;
  f.obj_map.resize(c->num_objects());
  std::iota(f.obj_map.begin(), f.obj_map.end(), 0);
  f.mor_map.resize(c->num_morphisms());
  std::iota(f.mor_map.begin(), f.mor_map.end(), 0);
  return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (!same_category(*f.cod, *g.dom))
    throw ValidationError("Incompatible",
                          "functor composition: codomain/domain mismatch");
  FinFunctor h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.obj_map.reserve(f.obj_map.size());
  for (int o : f.obj_map) h.obj_map.push_back(g.obj_map[o]);
  h.mor_map.reserve(f.mor_map.size());
  for (int m : f.mor_map) h.mor_map.push_back(g.mor_map[m]);
  return h;
}

bool same_functor(const FinFunctor& f, const FinFunctor& g) {
  return same_category(*f.dom, *g.dom) && same_category(*f.cod, *g.cod) &&
         f.obj_map == g.obj_map && f.mor_map == g.mor_map;
}

bool is_isomorphism_functor(const FinFunctor& f) {
  if (f.dom->num_objects() != f.cod->num_objects() ||
      f.dom->num_morphisms() != f.cod->num_morphisms())
    return false;
  std::vector<bool> oseen(f.cod->num_objects(), false);
  for (int o : f.obj_map) {
    if (oseen[o]) return false;
    oseen[o] = true;
  }
  std::vector<bool> mseen(f.cod->num_morphisms(), false);
  for (int m : f.mor_map) {
    if (mseen[m]) return false;
    mseen[m] = true;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Natural transformations.
// ---------------------------------------------------------------------------

void validate_nat_trans(const NatTrans& t) {
  if (!same_category(*t.source.dom, *t.target.dom) ||
      !same_category(*t.source.cod, *t.target.cod))
    throw ValidationError("Incompatible", "transformation between non-parallel functors");
  const auto& C = *t.source.dom;
  const auto& D = *t.source.cod;
  if (static_cast<int>(t.components.size()) != C.num_objects())
    throw ValidationError("Incompatible", "component count mismatch");
  for (int x = 0; x < C.num_objects(); ++x) {
    int c = t.components[x];
    if (D.src(c) != t.source.obj_map[x] || D.tgt(c) != t.target.obj_map[x])
      throw ValidationError("Incompatible",
                            "component at '" + C.objects[x] + "' has wrong endpoints");
  }
  for (int m = 0; m < C.num_morphisms(); ++m) {
    int x = C.src(m), y = C.tgt(m);
    if (D.compose(t.components[y], t.source.mor_map[m]) !=
        D.compose(t.target.mor_map[m], t.components[x]))
      throw ValidationError("Incompatible",
                            "naturality fails at '" + C.morphisms[m].id + "'");
  }
}

NatTrans identity_nat(const FinFunctor& f) {
  NatTrans t{f, f, {}};
  t.components.reserve(f.obj_map.size());
  for (int o : f.obj_map) t.components.push_back(f.cod->id_of(o));
  return t;
}

NatTrans vcompose(const NatTrans& b, const NatTrans& a) {
  NatTrans t{a.source, b.target, {}};
  t.components.reserve(a.components.size());
  for (size_t x = 0; x < a.components.size(); ++x)
    t.components.push_back(
        a.source.cod->compose(b.components[x], a.components[x]));
  return t;
}

NatTrans whisker_left(const FinFunctor& h, const NatTrans& t) {
  NatTrans r{compose_functors(h, t.source), compose_functors(h, t.target), {}};
  r.components.reserve(t.components.size());
  for (int c : t.components) r.components.push_back(h.mor_map[c]);
  return r;
}

NatTrans whisker_right(const NatTrans& t, const FinFunctor& k) {
  NatTrans r{compose_functors(t.source, k), compose_functors(t.target, k), {}};
  r.components.reserve(k.obj_map.size());
  for (int o : k.obj_map) r.components.push_back(t.components[o]);
  return r;
}

bool nat_trans_invertible(const NatTrans& t) {
  for (int c : t.components)
    if (!is_isomorphism_mor(*t.source.cod, c)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Finite sets.
// ---------------------------------------------------------------------------

int FinSet::at(const std::string& e) const {
  auto it = index.find(e);
  if (it == index.end())
    throw ValidationError("DanglingId", "no element named '" + e + "'");
  return it->second;
}

FinSet make_fin_set(std::vector<std::string> elems) {
  FinSet s;
  std::sort(elems.begin(), elems.end());
  s.elems = std::move(elems);
  for (int i = 0; i < s.size(); ++i)
    if (!s.index.emplace(s.elems[i], i).second)
      throw ValidationError("NameCollision", "duplicate element '" + s.elems[i] + "'");
  return s;
}

// ---------------------------------------------------------------------------
// opposite / product / arrow category.
// ---------------------------------------------------------------------------

CatPtr opposite(const CatPtr& c) {
  auto op = std::make_shared<FinCategory>(*c);
  const int M = c->num_morphisms();
  for (auto& m : op->morphisms) std::swap(m.src, m.tgt);
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f)
      op->comp_table[static_cast<size_t>(g) * M + f] =
          c->comp_table[static_cast<size_t>(f) * M + g];
  op->homs.assign(op->num_objects(),
                  std::vector<std::vector<int>>(op->num_objects()));
  for (int m = 0; m < M; ++m)
    op->homs[op->morphisms[m].src][op->morphisms[m].tgt].push_back(m);
  return op;
}

FinFunctor opposite_functor(const FinFunctor& f) {
  FinFunctor g;
  g.dom = opposite(f.dom);
  g.cod = opposite(f.cod);
  g.obj_map = f.obj_map;
  g.mor_map = f.mor_map;
  return g;
}

ProductResult product(const CatPtr& c, const CatPtr& d, StepBudget& budget) {
  CategoryData data;
  ProductResult res;
  std::map<std::string, std::pair<int, int>> oname, mname;
  for (int i = 0; i < c->num_objects(); ++i)
    for (int j = 0; j < d->num_objects(); ++j) {
      budget.spend();
      std::string n = joined({c->objects[i], d->objects[j]});
      data.objects.push_back(n);
      oname[n] = {i, j};
    }
  auto obj_name = [&](int i, int j) {
    return joined({c->objects[i], d->objects[j]});
  };
  for (int i = 0; i < c->num_morphisms(); ++i)
    for (int j = 0; j < d->num_morphisms(); ++j) {
      budget.spend();
      std::string n;
      if (c->is_identity(i) && d->is_identity(j))
        n = "id_" + obj_name(c->src(i), d->src(j));
      else
        n = joined({c->morphisms[i].id, d->morphisms[j].id});
      data.morphisms.push_back({n, obj_name(c->src(i), d->src(j)),
                                obj_name(c->tgt(i), d->tgt(j))});
      mname[n] = {i, j};
      if (c->is_identity(i) && d->is_identity(j))
        data.identities[obj_name(c->src(i), d->src(j))] = n;
    }
  auto mor_name = [&](int i, int j) {
    if (c->is_identity(i) && d->is_identity(j))
      return "id_" + obj_name(c->src(i), d->src(j));
    return joined({c->morphisms[i].id, d->morphisms[j].id});
  };
  for (int g1 = 0; g1 < c->num_morphisms(); ++g1)
    for (int f1 = 0; f1 < c->num_morphisms(); ++f1) {
      if (c->tgt(f1) != c->src(g1)) continue;
      for (int g2 = 0; g2 < d->num_morphisms(); ++g2)
        for (int f2 = 0; f2 < d->num_morphisms(); ++f2) {
          if (d->tgt(f2) != d->src(g2)) continue;
          budget.spend();
          data.comp.push_back({mor_name(g1, g2), mor_name(f1, f2),
                               mor_name(c->compose(g1, f1), d->compose(g2, f2))});
        }
    }
  res.cat = validate_category(data);
  res.obj_pairs.resize(res.cat->num_objects());
  for (const auto& [n, p] : oname) res.obj_pairs[res.cat->obj(n)] = p;
  res.mor_pairs.resize(res.cat->num_morphisms());
  for (const auto& [n, p] : mname) res.mor_pairs[res.cat->mor(n)] = p;
  res.proj1.dom = res.cat;
  res.proj1.cod = c;
  res.proj2.dom = res.cat;
  res.proj2.cod = d;
  for (const auto& [i, j] : res.obj_pairs) {
    res.proj1.obj_map.push_back(i);
    res.proj2.obj_map.push_back(j);
  }
  for (const auto& [i, j] : res.mor_pairs) {
    res.proj1.mor_map.push_back(i);
    res.proj2.mor_map.push_back(j);
  }
  validate_functor(res.proj1);
  validate_functor(res.proj2);
  return res;
}

ArrowCategory arrow_category(const CatPtr& c, StepBudget& budget) {
  CategoryData data;
  const auto& C = *c;
  for (int m = 0; m < C.num_morphisms(); ++m) data.objects.push_back(C.morphisms[m].id);
  // Morphisms are commuting squares (u, v): f -> f' with f'∘u = v∘f.
  struct Sq {
    std::string name;
    int u, v, from, to;
  };
  std::vector<Sq> squares;
  for (int f = 0; f < C.num_morphisms(); ++f)
    for (int f2 = 0; f2 < C.num_morphisms(); ++f2)
      for (int u : C.hom(C.src(f), C.src(f2)))
        for (int v : C.hom(C.tgt(f), C.tgt(f2))) {
          budget.spend();
          if (C.compose(f2, u) != C.compose(v, f)) continue;
          std::string name;
          if (C.is_identity(u) && C.is_identity(v))
            name = "id_" + C.morphisms[f].id;
          else
            name = joined({C.morphisms[u].id, C.morphisms[v].id,
                           C.morphisms[f].id, C.morphisms[f2].id});
          squares.push_back({name, u, v, f, f2});
          data.morphisms.push_back({name, C.morphisms[f].id, C.morphisms[f2].id});
          if (C.is_identity(u) && C.is_identity(v))
            data.identities[C.morphisms[f].id] = name;
        }
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, std::string> byname;
  for (const auto& s : squares) byname[{{s.u, s.v}, {s.from, s.to}}] = s.name;
  for (const auto& a : squares)
    for (const auto& b : squares) {
      if (b.to != a.from) continue;
      budget.spend();
      data.comp.push_back(
          {a.name, b.name,
           byname.at({{C.compose(a.u, b.u), C.compose(a.v, b.v)}, {b.from, a.to}})});
    }
  ArrowCategory res;
  res.cat = validate_category(data);
  res.object_to_mor.resize(res.cat->num_objects());
  for (int m = 0; m < C.num_morphisms(); ++m)
    res.object_to_mor[res.cat->obj(C.morphisms[m].id)] = m;
  res.squares.resize(res.cat->num_morphisms());
  res.dom_proj.dom = res.cat;
  res.dom_proj.cod = c;
  res.cod_proj.dom = res.cat;
  res.cod_proj.cod = c;
  res.dom_proj.obj_map.resize(res.cat->num_objects());
  res.cod_proj.obj_map.resize(res.cat->num_objects());
  for (int o = 0; o < res.cat->num_objects(); ++o) {
    res.dom_proj.obj_map[o] = C.src(res.object_to_mor[o]);
    res.cod_proj.obj_map[o] = C.tgt(res.object_to_mor[o]);
  }
  res.dom_proj.mor_map.resize(res.cat->num_morphisms());
  res.cod_proj.mor_map.resize(res.cat->num_morphisms());
  for (const auto& s : squares) {
    int m = res.cat->mor(s.name);
    res.squares[m] = {s.u, s.v};
    res.dom_proj.mor_map[m] = s.u;
    res.cod_proj.mor_map[m] = s.v;
  }
  validate_functor(res.dom_proj);
  validate_functor(res.cod_proj);
  return res;
}

// ---------------------------------------------------------------------------
// Enumerations.
// ---------------------------------------------------------------------------

namespace {

// Shared backtracking enumeration: object images in index order, then
// non-identity morphism images in index order, checking every composition
// constraint among assigned morphisms.
std::vector<FinFunctor> enumerate_impl(
    const CatPtr& c, const CatPtr& d,
    const std::function<bool(int, int)>* obj_ok,
    const std::function<bool(int, int)>* mor_ok, StepBudget& budget) {
  const auto& C = *c;
  const auto& D = *d;
  std::vector<FinFunctor> out;
  std::vector<int> omap(C.num_objects(), -1), mmap(C.num_morphisms(), -1);
  std::vector<int> free_mors;  // non-identity morphisms
  for (int m = 0; m < C.num_morphisms(); ++m)
    if (!C.is_identity(m)) free_mors.push_back(m);

  // Every composable pair with both factors and the composite assigned must
  // agree; scanning all pairs keeps triples whose composite was assigned
  // before its factors honest too.
  auto comp_consistent = [&]() {
    for (int g = 0; g < C.num_morphisms(); ++g) {
      if (mmap[g] < 0) continue;
      for (int f = 0; f < C.num_morphisms(); ++f) {
        if (mmap[f] < 0 || C.tgt(f) != C.src(g)) continue;
        int gf = C.comp_table[static_cast<size_t>(g) * C.num_morphisms() + f];
        if (mmap[gf] >= 0 && mmap[gf] != D.compose(mmap[g], mmap[f]))
          return false;
      }
    }
    return true;
  };

  std::function<void(size_t)> assign_mor = [&](size_t k) {
    if (k == free_mors.size()) {
      FinFunctor f;
      f.dom = c;
      f.cod = d;
      f.obj_map = omap;
      f.mor_map = mmap;
      out.push_back(std::move(f));
      return;
    }
    int m = free_mors[k];
    for (int cand : D.hom(omap[C.src(m)], omap[C.tgt(m)])) {
      budget.spend();
      if (mor_ok && !(*mor_ok)(m, cand)) continue;
      mmap[m] = cand;
      if (comp_consistent()) assign_mor(k + 1);
      mmap[m] = -1;
    }
  };

  std::function<void(int)> assign_obj = [&](int o) {
    if (o == C.num_objects()) {
      for (int oo = 0; oo < C.num_objects(); ++oo)
        mmap[C.id_of(oo)] = D.id_of(omap[oo]);
      assign_mor(0);
      for (int oo = 0; oo < C.num_objects(); ++oo) mmap[C.id_of(oo)] = -1;
      return;
    }
    for (int cand = 0; cand < D.num_objects(); ++cand) {
      budget.spend();
      if (obj_ok && !(*obj_ok)(o, cand)) continue;
      omap[o] = cand;
      assign_obj(o + 1);
      omap[o] = -1;
    }
  };

  assign_obj(0);
  return out;
}

}  // namespace

std::vector<FinFunctor> enumerate_functors(const CatPtr& c, const CatPtr& d,
                                           StepBudget& budget) {
  return enumerate_impl(c, d, nullptr, nullptr, budget);
}

std::vector<FinFunctor> enumerate_functors_where(
    const CatPtr& c, const CatPtr& d,
    const std::function<bool(int, int)>& obj_ok,
    const std::function<bool(int, int)>& mor_ok, StepBudget& budget) {
  return enumerate_impl(c, d, &obj_ok, &mor_ok, budget);
}

std::vector<NatTrans> enumerate_nat_trans(const FinFunctor& f,
                                          const FinFunctor& g,
                                          StepBudget& budget) {
  const auto& C = *f.dom;
  const auto& D = *f.cod;
  std::vector<NatTrans> out;
  std::vector<int> comp(C.num_objects(), -1);
  auto natural_so_far = [&](int x) {
    for (int m = 0; m < C.num_morphisms(); ++m) {
      int s = C.src(m), t = C.tgt(m);
      if (comp[s] < 0 || comp[t] < 0) continue;
      if (s != x && t != x) continue;
      if (D.compose(comp[t], f.mor_map[m]) != D.compose(g.mor_map[m], comp[s]))
        return false;
    }
    return true;
  };
  std::function<void(int)> go = [&](int x) {
    if (x == C.num_objects()) {
      out.push_back(NatTrans{f, g, comp});
      return;
    }
    for (int cand : D.hom(f.obj_map[x], g.obj_map[x])) {
      budget.spend();
      comp[x] = cand;
      if (natural_so_far(x)) go(x + 1);
      comp[x] = -1;
    }
  };
  go(0);
  return out;
}

std::optional<NatTrans> find_nat_trans_where(
    const FinFunctor& f, const FinFunctor& g,
    const std::function<bool(int, int)>& comp_ok, StepBudget& budget) {
  const auto& C = *f.dom;
  const auto& D = *f.cod;
  std::vector<int> comp(C.num_objects(), -1);
  auto natural_so_far = [&](int x) {
    for (int m = 0; m < C.num_morphisms(); ++m) {
      int s = C.src(m), t = C.tgt(m);
      if (comp[s] < 0 || comp[t] < 0) continue;
      if (s != x && t != x) continue;
      if (D.compose(comp[t], f.mor_map[m]) != D.compose(g.mor_map[m], comp[s]))
        return false;
    }
    return true;
  };
  std::optional<NatTrans> found;
  std::function<bool(int)> go = [&](int x) {
    if (x == C.num_objects()) {
      found = NatTrans{f, g, comp};
      return true;
    }
    for (int cand : D.hom(f.obj_map[x], g.obj_map[x])) {
      budget.spend();
      if (comp_ok && !comp_ok(x, cand)) continue;
      comp[x] = cand;
      if (natural_so_far(x) && go(x + 1)) return true;
      comp[x] = -1;
    }
    return false;
  };
  go(0);
  return found;
}

std::optional<NatTrans> is_naturally_isomorphic(const FinFunctor& f,
                                                const FinFunctor& g,
                                                StepBudget& budget) {
  const auto& C = *f.dom;
  const auto& D = *f.cod;
  std::vector<int> comp(C.num_objects(), -1);
  auto natural_so_far = [&](int x) {
    for (int m = 0; m < C.num_morphisms(); ++m) {
      int s = C.src(m), t = C.tgt(m);
      if (comp[s] < 0 || comp[t] < 0) continue;
      if (s != x && t != x) continue;
      if (D.compose(comp[t], f.mor_map[m]) != D.compose(g.mor_map[m], comp[s]))
        return false;
    }
    return true;
  };
  std::optional<NatTrans> found;
  std::function<bool(int)> go = [&](int x) {
    if (x == C.num_objects()) {
      found = NatTrans{f, g, comp};
      return true;
    }
    for (int cand : D.hom(f.obj_map[x], g.obj_map[x])) {
      budget.spend();
      if (!is_isomorphism_mor(D, cand)) continue;
      comp[x] = cand;
      if (natural_so_far(x) && go(x + 1)) return true;
      comp[x] = -1;
    }
    return false;
  };
  go(0);
  return found;
}

std::optional<FinFunctor> find_isomorphism_where(
    const CatPtr& c, const CatPtr& d,
    const std::function<bool(int, int)>& obj_ok,
    const std::function<bool(int, int)>& mor_ok, StepBudget& budget) {
  const auto& C = *c;
  const auto& D = *d;
  if (C.num_objects() != D.num_objects() ||
      C.num_morphisms() != D.num_morphisms())
    return std::nullopt;

  std::vector<int> omap(C.num_objects(), -1), mmap(C.num_morphisms(), -1);
  std::vector<bool> oused(D.num_objects(), false), mused(D.num_morphisms(), false);

  auto hom_profiles_ok = [&](int just) {
    for (int y = 0; y < C.num_objects(); ++y) {
      if (omap[y] < 0) continue;
      if (C.hom(just, y).size() != D.hom(omap[just], omap[y]).size()) return false;
      if (C.hom(y, just).size() != D.hom(omap[y], omap[just]).size()) return false;
    }
    return true;
  };
  auto comp_consistent = [&]() {
    for (int g = 0; g < C.num_morphisms(); ++g) {
      if (mmap[g] < 0) continue;
      for (int f = 0; f < C.num_morphisms(); ++f) {
        if (mmap[f] < 0 || C.tgt(f) != C.src(g)) continue;
        int gf = C.comp_table[static_cast<size_t>(g) * C.num_morphisms() + f];
        if (mmap[gf] >= 0 && mmap[gf] != D.compose(mmap[g], mmap[f]))
          return false;
      }
    }
    return true;
  };

  std::vector<int> free_mors;
  for (int m = 0; m < C.num_morphisms(); ++m)
    if (!C.is_identity(m)) free_mors.push_back(m);

  std::optional<FinFunctor> found;
  std::function<bool(size_t)> assign_mor = [&](size_t k) {
    if (k == free_mors.size()) {
      FinFunctor f;
      f.dom = c;
      f.cod = d;
      f.obj_map = omap;
      f.mor_map = mmap;
      found = std::move(f);
      return true;
    }
    int m = free_mors[k];
    for (int cand : D.hom(omap[C.src(m)], omap[C.tgt(m)])) {
      budget.spend();
      if (mused[cand]) continue;
      if (mor_ok && !mor_ok(m, cand)) continue;
      mmap[m] = cand;
      mused[cand] = true;
      if (comp_consistent() && assign_mor(k + 1)) return true;
      mmap[m] = -1;
      mused[cand] = false;
    }
    return false;
  };
  std::function<bool(int)> assign_obj = [&](int o) {
    if (o == C.num_objects()) {
      bool ok = true;
      for (int oo = 0; oo < C.num_objects() && ok; ++oo) {
        int im = D.id_of(omap[oo]);
        if (mor_ok && !mor_ok(C.id_of(oo), im)) ok = false;
        mmap[C.id_of(oo)] = im;
        mused[im] = true;
      }
      if (ok && assign_mor(0)) return true;
      for (int oo = 0; oo < C.num_objects(); ++oo) {
        if (mmap[C.id_of(oo)] >= 0) mused[mmap[C.id_of(oo)]] = false;
        mmap[C.id_of(oo)] = -1;
      }
      return false;
    }
    for (int cand = 0; cand < D.num_objects(); ++cand) {
      budget.spend();
      if (oused[cand]) continue;
      if (obj_ok && !obj_ok(o, cand)) continue;
      omap[o] = cand;
      oused[cand] = true;
      if (hom_profiles_ok(o) && assign_obj(o + 1)) return true;
      omap[o] = -1;
      oused[cand] = false;
    }
    return false;
  };
  assign_obj(0);
  return found;
}

std::optional<FinFunctor> find_isomorphism(const CatPtr& c, const CatPtr& d,
                                           StepBudget& budget) {
  return find_isomorphism_where(c, d, nullptr, nullptr, budget);
}

bool is_isomorphism_mor(const FinCategory& c, int m) {
  return inverse_mor(c, m).has_value();
}

std::optional<int> inverse_mor(const FinCategory& c, int m) {
  for (int n : c.hom(c.tgt(m), c.src(m)))
    if (c.compose(n, m) == c.id_of(c.src(m)) &&
        c.compose(m, n) == c.id_of(c.tgt(m)))
      return n;
  return std::nullopt;
}

bool objects_isomorphic(const FinCategory& c, int x, int y) {
  if (x == y) return true;
  for (int m : c.hom(x, y))
    if (is_isomorphism_mor(c, m)) return true;
  return false;
}

bool check_adjunction(const FinFunctor& f, const FinFunctor& g,
                      const NatTrans& unit, const NatTrans& counit) {
  const auto& C = *f.dom;
  const auto& D = *f.cod;
  validate_nat_trans(unit);
  validate_nat_trans(counit);
  if (!same_functor(unit.source, identity_functor(f.dom)) ||
      !same_functor(unit.target, compose_functors(g, f)) ||
      !same_functor(counit.source, compose_functors(f, g)) ||
      !same_functor(counit.target, identity_functor(f.cod)))
    return false;
  // Triangle identities.
  for (int c = 0; c < C.num_objects(); ++c) {
    int fc = f.obj_map[c];
    if (D.compose(counit.components[fc], f.mor_map[unit.components[c]]) !=
        D.id_of(fc))
      return false;
  }
  for (int d = 0; d < D.num_objects(); ++d) {
    int gd = g.obj_map[d];
    if (C.compose(g.mor_map[counit.components[d]], unit.components[gd]) !=
        C.id_of(gd))
      return false;
  }
  return true;
}

std::optional<Adjunction> find_left_adjoint(const FinFunctor& g,
                                            StepBudget& budget) {
  // g : D -> C; searched left adjoint f : C -> D.
  CatPtr d = g.dom, c = g.cod;
  const auto& C = *c;
  const auto& D = *d;
  auto candidates = enumerate_functors(c, d, budget);
  for (const auto& f : candidates) {
    // Units Id_C => g∘f, each component universal from the object to g.
    auto gf = compose_functors(g, f);
    auto units = enumerate_nat_trans(identity_functor(c), gf, budget);
    for (const auto& unit : units) {
      bool universal = true;
      for (int x = 0; x < C.num_objects() && universal; ++x) {
        for (int dd = 0; dd < D.num_objects() && universal; ++dd) {
          for (int h : C.hom(x, g.obj_map[dd])) {
            budget.spend();
            int count = 0;
            for (int k : D.hom(f.obj_map[x], dd)) {
              if (C.compose(g.mor_map[k], unit.components[x]) == h) ++count;
            }
            if (count != 1) {
              universal = false;
              break;
            }
          }
        }
      }
      if (!universal) continue;
      // Counit components: the unique k with g(k) ∘ unit = id.
      NatTrans counit{compose_functors(f, g), identity_functor(d), {}};
      counit.components.assign(D.num_objects(), -1);
      for (int dd = 0; dd < D.num_objects(); ++dd) {
        int x = g.obj_map[dd];
        for (int k : D.hom(f.obj_map[x], dd))
          if (C.compose(g.mor_map[k], unit.components[x]) == C.id_of(x)) {
            counit.components[dd] = k;
            break;
          }
      }
      if (check_adjunction(f, g, unit, counit))
        return Adjunction{f, unit, counit};
    }
  }
  return std::nullopt;
}

bool is_fully_faithful(const FinFunctor& f) {
  const auto& C = *f.dom;
  for (int x = 0; x < C.num_objects(); ++x)
    for (int y = 0; y < C.num_objects(); ++y) {
      const auto& from = C.hom(x, y);
      const auto& to = f.cod->hom(f.obj_map[x], f.obj_map[y]);
      std::set<int> images;
      for (int m : from) images.insert(f.mor_map[m]);
      if (images.size() != from.size() || images.size() != to.size())
        return false;
    }
  return true;
}

bool is_essentially_surjective(const FinFunctor& f) {
  const auto& D = *f.cod;
  for (int y = 0; y < D.num_objects(); ++y) {
    bool hit = false;
    for (int x = 0; x < f.dom->num_objects() && !hit; ++x)
      hit = objects_isomorphic(D, f.obj_map[x], y);
    if (!hit) return false;
  }
  return true;
}

bool is_equivalence(const FinFunctor& f) {
  return is_fully_faithful(f) && is_essentially_surjective(f);
}

std::vector<std::vector<int>> pi0(const FinCategory& c) {
  std::vector<int> parent(c.num_objects());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& m : c.morphisms) {
    int a = find(m.src), b = find(m.tgt);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> classes;
  for (int o = 0; o < c.num_objects(); ++o) classes[find(o)].push_back(o);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

bool is_connected(const FinCategory& c) { return pi0(c).size() == 1; }

// ---------------------------------------------------------------------------
// Functor categories.
// ---------------------------------------------------------------------------

namespace {

std::string functor_obj_name(const FinFunctor& f, int index) {
  (void)f;
  std::ostringstream os;
  os << "F" << index;
  return os.str();
}

}  // namespace

FunctorCategory functor_category(const CatPtr& x, const CatPtr& c,
                                 StepBudget& budget) {
  FunctorCategory res;
  res.objects = enumerate_functors(x, c, budget);
  CategoryData data;
  for (size_t i = 0; i < res.objects.size(); ++i)
    data.objects.push_back(functor_obj_name(res.objects[i], static_cast<int>(i)));
  struct Entry {
    std::string name;
    size_t from, to;
    NatTrans t;
  };
  std::vector<Entry> entries;
  for (size_t i = 0; i < res.objects.size(); ++i)
    for (size_t j = 0; j < res.objects.size(); ++j) {
      auto ts = enumerate_nat_trans(res.objects[i], res.objects[j], budget);
      for (auto& t : ts) {
        bool is_id = i == j;
        if (is_id)
          for (size_t o = 0; o < t.components.size(); ++o)
            if (!c->is_identity(t.components[o])) {
              is_id = false;
              break;
            }
        std::string name;
        if (is_id) {
          name = "id_" + data.objects[i];
        } else {
          name = "t·" + data.objects[i] + "·" + data.objects[j];
          for (int comp : t.components) name += "·" + c->morphisms[comp].id;
        }
        entries.push_back({name, i, j, std::move(t)});
        data.morphisms.push_back({name, data.objects[i], data.objects[j]});
        if (is_id) data.identities[data.objects[i]] = name;
      }
    }
  std::map<std::pair<std::pair<size_t, size_t>, std::vector<int>>, std::string>
      bykey;
  for (const auto& e : entries)
    bykey[{{e.from, e.to}, e.t.components}] = e.name;
  for (const auto& b : entries)
    for (const auto& a : entries) {
      if (a.from != b.to) continue;
      budget.spend();
      std::vector<int> comps;
      comps.reserve(a.t.components.size());
      for (size_t o = 0; o < a.t.components.size(); ++o)
        comps.push_back(c->compose(a.t.components[o], b.t.components[o]));
      data.comp.push_back({a.name, b.name, bykey.at({{b.from, a.to}, comps})});
    }
  res.cat = validate_category(data);
  // Re-align library objects with the (sorted) category ordering.
  std::vector<FinFunctor> objs(res.objects.size());
  for (size_t i = 0; i < res.objects.size(); ++i)
    objs[res.cat->obj(data.objects[i])] = res.objects[i];
  res.objects = std::move(objs);
  res.morphisms.resize(entries.size());
  for (auto& e : entries) res.morphisms[res.cat->mor(e.name)] = std::move(e.t);
  return res;
}

FinFunctor postcompose_functor(const FunctorCategory& xe,
                               const FunctorCategory& xb,
                               const FinFunctor& p) {
  FinFunctor r;
  r.dom = xe.cat;
  r.cod = xb.cat;
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> obj_key;
  for (size_t i = 0; i < xb.objects.size(); ++i)
    obj_key[{xb.objects[i].obj_map, xb.objects[i].mor_map}] = static_cast<int>(i);
  r.obj_map.reserve(xe.objects.size());
  for (const auto& f : xe.objects) {
    auto pf = compose_functors(p, f);
    r.obj_map.push_back(obj_key.at({pf.obj_map, pf.mor_map}));
  }
  std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> mor_key;
  for (size_t i = 0; i < xb.morphisms.size(); ++i) {
    const auto& t = xb.morphisms[i];
    mor_key[{{xb.cat->src(static_cast<int>(i)), xb.cat->tgt(static_cast<int>(i))},
             t.components}] = static_cast<int>(i);
  }
  r.mor_map.reserve(xe.morphisms.size());
  for (size_t i = 0; i < xe.morphisms.size(); ++i) {
    const auto& t = xe.morphisms[i];
    std::vector<int> comps;
    comps.reserve(t.components.size());
    for (int cmp : t.components) comps.push_back(p.mor_map[cmp]);
    int src = r.obj_map[xe.cat->src(static_cast<int>(i))];
    int tgt = r.obj_map[xe.cat->tgt(static_cast<int>(i))];
    r.mor_map.push_back(mor_key.at({{src, tgt}, comps}));
  }
  validate_functor(r);
  return r;
}

}  // namespace fibcat
