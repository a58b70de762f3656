#include "fibcat/limits.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "fibcat/union_find.hpp"

namespace fibcat {

void validate_opspan(const Opspan& s) {
  validate_functor(s.left);
  validate_functor(s.right);
  if (!same_category(*s.left.cod, *s.right.cod))
    throw ValidationError("Incompatible", "opspan legs have different codomains");
}

void validate_span(const Span& s) {
  validate_functor(s.left);
  validate_functor(s.right);
  if (!same_category(*s.left.dom, *s.apex) ||
      !same_category(*s.right.dom, *s.apex))
    throw ValidationError("Incompatible", "span legs do not share the apex");
}

CommaResult comma(const Opspan& s) {
  validate_opspan(s);
  const FinFunctor& f = s.left;   // B -> C
  const FinFunctor& g = s.right;  // A -> C
  const auto& B = *f.dom;
  const auto& A = *g.dom;
  const auto& C = *f.cod;

  CategoryData data;
  // Objects: triples (b, theta: fb -> ga, a).
  std::map<std::tuple<int, int, int>, std::string> oname;
  for (int b = 0; b < B.num_objects(); ++b)
    for (int a = 0; a < A.num_objects(); ++a)
      for (int theta : C.hom(f.obj_map[b], g.obj_map[a])) {
        std::string n = joined({B.objects[b], C.morphisms[theta].id, A.objects[a]});
        oname[{b, theta, a}] = n;
        data.objects.push_back(n);
      }
  // Morphisms: pairs (u: b -> b', v: a -> a') with theta' ∘ f(u) = g(v) ∘ theta.
  struct Entry {
    std::string name;
    std::tuple<int, int, int> from, to;
    int u, v;
  };
  std::vector<Entry> entries;
  std::map<std::tuple<int, int, std::tuple<int, int, int>, std::tuple<int, int, int>>,
           std::string>
      mname;
  for (const auto& [from, from_name] : oname) {
    auto [b, theta, a] = from;
    for (const auto& [to, to_name] : oname) {
      auto [b2, theta2, a2] = to;
      for (int u : B.hom(b, b2))
        for (int v : A.hom(a, a2)) {
          if (C.compose(theta2, f.mor_map[u]) != C.compose(g.mor_map[v], theta))
            continue;
          bool is_id = B.is_identity(u) && A.is_identity(v);
          std::string n =
              is_id ? "id_" + from_name
                    : joined({B.morphisms[u].id, A.morphisms[v].id,
                              C.morphisms[theta].id, C.morphisms[theta2].id});
          entries.push_back({n, from, to, u, v});
          data.morphisms.push_back({n, from_name, to_name});
          if (is_id) data.identities[from_name] = n;
          mname[{u, v, from, to}] = n;
        }
    }
  }
  for (const auto& e2 : entries)
    for (const auto& e1 : entries) {
      if (e1.to != e2.from) continue;
      data.comp.push_back(
          {e2.name, e1.name,
           mname.at({B.compose(e2.u, e1.u), A.compose(e2.v, e1.v), e1.from, e2.to})});
    }

  CommaResult res;
  res.cat = validate_category(data);
  res.objects.resize(res.cat->num_objects());
  for (const auto& [key, n] : oname) {
    auto [b, theta, a] = key;
    res.objects[res.cat->obj(n)] = {b, theta, a};
  }
  res.morphisms.resize(res.cat->num_morphisms());
  res.d.dom = res.cat;
  res.d.cod = f.dom;
  res.c.dom = res.cat;
  res.c.cod = g.dom;
  res.d.obj_map.resize(res.cat->num_objects());
  res.c.obj_map.resize(res.cat->num_objects());
  for (int o = 0; o < res.cat->num_objects(); ++o) {
    res.d.obj_map[o] = res.objects[o][0];
    res.c.obj_map[o] = res.objects[o][2];
  }
  res.d.mor_map.resize(res.cat->num_morphisms());
  res.c.mor_map.resize(res.cat->num_morphisms());
  for (const auto& e : entries) {
    int m = res.cat->mor(e.name);
    res.morphisms[m] = {e.u, e.v};
    res.d.mor_map[m] = e.u;
    res.c.mor_map[m] = e.v;
  }
  validate_functor(res.d);
  validate_functor(res.c);

  // Universal 2-cell alpha : f∘d => g∘c with component theta at (b, theta, a).
  res.alpha.source = compose_functors(f, res.d);
  res.alpha.target = compose_functors(g, res.c);
  res.alpha.components.resize(res.cat->num_objects());
  for (int o = 0; o < res.cat->num_objects(); ++o)
    res.alpha.components[o] = res.objects[o][1];
  validate_nat_trans(res.alpha);
  return res;
}

CommaResult slice(const CatPtr& c, const std::string& obj) {
  c->obj(obj);  // throws UnknownObject
  CategoryData one;
  one.objects = {"*"};
  auto pt = validate_category(one);
  FunctorData incl;
  incl.obj_map["*"] = obj;
  return comma(Opspan{identity_functor(c), make_functor(pt, c, incl)});
}

CommaResult coslice(const CatPtr& c, const std::string& obj) {
  c->obj(obj);
  CategoryData one;
  one.objects = {"*"};
  auto pt = validate_category(one);
  FunctorData incl;
  incl.obj_map["*"] = obj;
  return comma(Opspan{make_functor(pt, c, incl), identity_functor(c)});
}

PullbackResult pullback_cat(const FinFunctor& f, const FinFunctor& g) {
  validate_functor(f);
  validate_functor(g);
  if (!same_category(*f.cod, *g.cod))
    throw ValidationError("Incompatible", "pullback legs have different codomains");
  const auto& A = *f.dom;
  const auto& B = *g.dom;

  CategoryData data;
  std::map<std::pair<int, int>, std::string> oname, mname;
  for (int a = 0; a < A.num_objects(); ++a)
    for (int b = 0; b < B.num_objects(); ++b) {
      if (f.obj_map[a] != g.obj_map[b]) continue;
      std::string n = joined({A.objects[a], B.objects[b]});
      oname[{a, b}] = n;
      data.objects.push_back(n);
    }
  for (int u = 0; u < A.num_morphisms(); ++u)
    for (int v = 0; v < B.num_morphisms(); ++v) {
      if (f.mor_map[u] != g.mor_map[v]) continue;
      bool is_id = A.is_identity(u) && B.is_identity(v);
      std::string from = oname.at({A.src(u), B.src(v)});
      std::string n = is_id ? "id_" + from
                            : joined({A.morphisms[u].id, B.morphisms[v].id});
      mname[{u, v}] = n;
      data.morphisms.push_back({n, from, oname.at({A.tgt(u), B.tgt(v)})});
      if (is_id) data.identities[from] = n;
    }
  for (const auto& [gp, gname] : mname)
    for (const auto& [fp, fname] : mname) {
      if (A.tgt(fp.first) != A.src(gp.first) || B.tgt(fp.second) != B.src(gp.second))
        continue;
      data.comp.push_back(
          {gname, fname,
           mname.at({A.compose(gp.first, fp.first), B.compose(gp.second, fp.second)})});
    }

  PullbackResult res;
  res.cat = validate_category(data);
  res.proj1.dom = res.cat;
  res.proj1.cod = f.dom;
  res.proj2.dom = res.cat;
  res.proj2.cod = g.dom;
  res.proj1.obj_map.resize(res.cat->num_objects());
  res.proj2.obj_map.resize(res.cat->num_objects());
  for (const auto& [key, n] : oname) {
    int o = res.cat->obj(n);
    res.proj1.obj_map[o] = key.first;
    res.proj2.obj_map[o] = key.second;
  }
  res.proj1.mor_map.resize(res.cat->num_morphisms());
  res.proj2.mor_map.resize(res.cat->num_morphisms());
  for (const auto& [key, n] : mname) {
    int m = res.cat->mor(n);
    res.proj1.mor_map[m] = key.first;
    res.proj2.mor_map[m] = key.second;
  }
  validate_functor(res.proj1);
  validate_functor(res.proj2);
  return res;
}

// ---------------------------------------------------------------------------
// Cocomma.
// ---------------------------------------------------------------------------

namespace {

struct CrossTriple {
  int e, beta, alpha;  // beta in B(b, pe), alpha in A(qe, a)
};

}  // namespace

CocommaResult cocomma(const Span& s) {
  validate_span(s);
  const FinFunctor& q = s.left;   // E -> A
  const FinFunctor& p = s.right;  // E -> B
  const auto& E = *s.apex;
  const auto& A = *q.cod;
  const auto& B = *p.cod;

  // Enumerate all cross triples, grouped by (b, a).
  std::vector<CrossTriple> triples;
  std::map<std::tuple<int, int, int>, int> triple_index;  // (e, beta, alpha)
  for (int e = 0; e < E.num_objects(); ++e) {
    int qe = q.obj_map[e], pe = p.obj_map[e];
    for (int b = 0; b < B.num_objects(); ++b)
      for (int beta : B.hom(b, pe))
        for (int a = 0; a < A.num_objects(); ++a)
          for (int alpha : A.hom(qe, a)) {
            triple_index[{e, beta, alpha}] = static_cast<int>(triples.size());
            triples.push_back({e, beta, alpha});
          }
  }

  // Zigzag relation over morphisms of E: for m : e -> e',
  //   (p(m)∘beta, alpha')_over_e'  ~  (beta, alpha'∘q(m))_over_e.
  UnionFind uf(static_cast<int>(triples.size()));
  for (int m = 0; m < E.num_morphisms(); ++m) {
    int e = E.src(m), e2 = E.tgt(m);
    int pe = p.obj_map[e];
    for (int b = 0; b < B.num_objects(); ++b)
      for (int beta : B.hom(b, pe))
        for (int a = 0; a < A.num_objects(); ++a)
          for (int alpha2 : A.hom(q.obj_map[e2], a)) {
            int lhs = triple_index.at(
                {e2, B.compose(p.mor_map[m], beta), alpha2});
            int rhs = triple_index.at({e, beta, A.compose(alpha2, q.mor_map[m])});
            uf.unite(lhs, rhs);
          }
  }

  // Representative = lexicographically least (e, beta, alpha) by names; with
  // sorted tables the triple enumeration order is already lexicographic per
  // slot, and UnionFind keeps minimal indices, but triples of one class can
  // cross slots only never (beta, alpha fix b and a), so the class minimum is
  // the lex-min member of its (b, a) slot.
  std::map<int, int> class_rep;  // root -> least triple index
  for (int i = 0; i < static_cast<int>(triples.size()); ++i) {
    int r = uf.find(i);
    auto it = class_rep.find(r);
    if (it == class_rep.end() || i < it->second) class_rep.emplace(r, i);
  }

  auto aside = [&](const std::string& n) { return joined({"a", n}); };
  auto bside = [&](const std::string& n) { return joined({"b", n}); };
  auto cross_name = [&](int rep) {
    const auto& t = triples[rep];
    return joined({"x", E.objects[t.e], B.morphisms[t.beta].id,
                   A.morphisms[t.alpha].id});
  };

  CategoryData data;
  for (const auto& o : A.objects) data.objects.push_back(aside(o));
  for (const auto& o : B.objects) data.objects.push_back(bside(o));
  for (int m = 0; m < A.num_morphisms(); ++m) {
    bool is_id = A.is_identity(m);
    std::string n = is_id ? "id_" + aside(A.objects[A.src(m)])
                          : aside(A.morphisms[m].id);
    data.morphisms.push_back({n, aside(A.objects[A.src(m)]), aside(A.objects[A.tgt(m)])});
    if (is_id) data.identities[aside(A.objects[A.src(m)])] = n;
  }
  for (int m = 0; m < B.num_morphisms(); ++m) {
    bool is_id = B.is_identity(m);
    std::string n = is_id ? "id_" + bside(B.objects[B.src(m)])
                          : bside(B.morphisms[m].id);
    data.morphisms.push_back({n, bside(B.objects[B.src(m)]), bside(B.objects[B.tgt(m)])});
    if (is_id) data.identities[bside(B.objects[B.src(m)])] = n;
  }
  for (const auto& [root, rep] : class_rep) {
    (void)root;
    const auto& t = triples[rep];
    data.morphisms.push_back({cross_name(rep), bside(B.objects[B.src(t.beta)]),
                              aside(A.objects[A.tgt(t.alpha)])});
  }

  auto class_of = [&](int e, int beta, int alpha) {
    return class_rep.at(uf.find(triple_index.at({e, beta, alpha})));
  };

  // Side compositions.
  auto a_name = [&](int m) {
    return A.is_identity(m) ? "id_" + aside(A.objects[A.src(m)])
                            : aside(A.morphisms[m].id);
  };
  auto b_name = [&](int m) {
    return B.is_identity(m) ? "id_" + bside(B.objects[B.src(m)])
                            : bside(B.morphisms[m].id);
  };
  for (int g = 0; g < A.num_morphisms(); ++g)
    for (int f = 0; f < A.num_morphisms(); ++f)
      if (A.tgt(f) == A.src(g))
        data.comp.push_back({a_name(g), a_name(f), a_name(A.compose(g, f))});
  for (int g = 0; g < B.num_morphisms(); ++g)
    for (int f = 0; f < B.num_morphisms(); ++f)
      if (B.tgt(f) == B.src(g))
        data.comp.push_back({b_name(g), b_name(f), b_name(B.compose(g, f))});
  // Cross with sides, defined on representatives.
  for (const auto& [root, rep] : class_rep) {
    (void)root;
    const auto& t = triples[rep];
    std::string xn = cross_name(rep);
    // u ∘ x for u : tgt(alpha) -> a1 on the A side.
    for (int u = 0; u < A.num_morphisms(); ++u) {
      if (A.src(u) != A.tgt(t.alpha)) continue;
      data.comp.push_back(
          {a_name(u), xn,
           cross_name(class_of(t.e, t.beta, A.compose(u, t.alpha)))});
    }
    // x ∘ v for v : b0 -> src(beta) on the B side.
    for (int v = 0; v < B.num_morphisms(); ++v) {
      if (B.tgt(v) != B.src(t.beta)) continue;
      data.comp.push_back(
          {xn, b_name(v), cross_name(class_of(t.e, B.compose(t.beta, v), t.alpha))});
    }
  }

  CocommaResult res;
  res.cat = validate_category(data);

  // Well-definedness of cross composition on every class member, not just the
  // representative. Must be unreachable; a failure is an internal bug.
  for (int i = 0; i < static_cast<int>(triples.size()); ++i) {
    const auto& t = triples[i];
    int rep = class_rep.at(uf.find(i));
    for (int u = 0; u < A.num_morphisms(); ++u) {
      if (A.src(u) != A.tgt(t.alpha)) continue;
      if (class_of(t.e, t.beta, A.compose(u, t.alpha)) !=
          class_rep.at(uf.find(triple_index.at(
              {triples[rep].e, triples[rep].beta,
               A.compose(u, triples[rep].alpha)}))))
        throw InternalError("IllDefinedComposition: cocomma post-composition");
    }
    for (int v = 0; v < B.num_morphisms(); ++v) {
      if (B.tgt(v) != B.src(t.beta)) continue;
      if (class_of(t.e, B.compose(t.beta, v), t.alpha) !=
          class_rep.at(uf.find(triple_index.at(
              {triples[rep].e, B.compose(triples[rep].beta, v),
               triples[rep].alpha}))))
        throw InternalError("IllDefinedComposition: cocomma pre-composition");
    }
  }

  res.include_a.dom = q.cod;
  res.include_a.cod = res.cat;
  for (const auto& o : A.objects)
    res.include_a.obj_map.push_back(res.cat->obj(aside(o)));
  for (int m = 0; m < A.num_morphisms(); ++m)
    res.include_a.mor_map.push_back(res.cat->mor(a_name(m)));
  res.include_b.dom = p.cod;
  res.include_b.cod = res.cat;
  for (const auto& o : B.objects)
    res.include_b.obj_map.push_back(res.cat->obj(bside(o)));
  for (int m = 0; m < B.num_morphisms(); ++m)
    res.include_b.mor_map.push_back(res.cat->mor(b_name(m)));
  validate_functor(res.include_a);
  validate_functor(res.include_b);

  // Universal 2-cell i_B ∘ p => i_A ∘ q, component [(id_{pe}, id_{qe})] at e.
  res.lambda.source = compose_functors(res.include_b, p);
  res.lambda.target = compose_functors(res.include_a, q);
  res.lambda.components.resize(E.num_objects());
  for (int e = 0; e < E.num_objects(); ++e)
    res.lambda.components[e] = res.cat->mor(cross_name(
        class_of(e, B.id_of(p.obj_map[e]), A.id_of(q.obj_map[e]))));
  validate_nat_trans(res.lambda);
  return res;
}

}  // namespace fibcat
