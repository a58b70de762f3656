#include "fibcat/fibrations.hpp"

#include <algorithm>
#include <tuple>

#include "fibcat/limits.hpp"

namespace fibcat {

bool is_cartesian(const FinFunctor& p, int g) {
  const auto& E = *p.dom;
  const auto& B = *p.cod;
  if (g < 0 || g >= E.num_morphisms())
    throw ValidationError("UnknownMorphism", "cartesian check out of range");
  int e_from = E.src(g), e_to = E.tgt(g);
  int pg = p.mor_map[g];
  for (int gp = 0; gp < E.num_morphisms(); ++gp) {
    if (E.tgt(gp) != e_to) continue;
    for (int h : B.hom(p.obj_map[E.src(gp)], p.obj_map[e_from])) {
      if (p.mor_map[gp] != B.compose(pg, h)) continue;
      int count = 0;
      for (int k : E.hom(E.src(gp), e_from))
        if (p.mor_map[k] == h && E.compose(g, k) == gp) ++count;
      if (count != 1) return false;
    }
  }
  return true;
}

bool is_cartesian_named(const FinFunctor& p, const std::string& g) {
  return is_cartesian(p, p.dom->mor(g));
}

bool is_opcartesian(const FinFunctor& p, int g) {
  // Same morphism indices: opposite keeps names, and names fix the order.
  return is_cartesian(opposite_functor(p), g);
}

std::vector<int> cartesian_lifts(const FinFunctor& p, int f, int e) {
  const auto& E = *p.dom;
  const auto& B = *p.cod;
  if (p.obj_map[e] != B.tgt(f))
    throw ValidationError("Incompatible",
                          "object '" + E.objects[e] + "' does not sit over the codomain of '" +
                              B.morphisms[f].id + "'");
  std::vector<int> out;
  for (int g = 0; g < E.num_morphisms(); ++g)
    if (E.tgt(g) == e && p.mor_map[g] == f && is_cartesian(p, g))
      out.push_back(g);
  return out;
}

namespace {

void set_witness(LiftWitness* w, const std::string& obj, const std::string& mor,
                 const std::string& detail) {
  if (!w) return;
  w->object = obj;
  w->morphism = mor;
  w->detail = detail;
}

}  // namespace

bool is_discrete_fibration(const FinFunctor& p, LiftWitness* witness) {
  const auto& E = *p.dom;
  const auto& B = *p.cod;
  for (int e = 0; e < E.num_objects(); ++e)
    for (int b = 0; b < B.num_objects(); ++b)
      for (int f : B.hom(b, p.obj_map[e])) {
        int count = 0;
        for (int g = 0; g < E.num_morphisms(); ++g)
          if (E.tgt(g) == e && p.mor_map[g] == f) ++count;
        if (count != 1) {
          set_witness(witness, E.objects[e], B.morphisms[f].id,
                      std::to_string(count) + " lifts with that codomain");
          return false;
        }
      }
  return true;
}

bool is_discrete_fibration_internal(const FinFunctor& p, LiftWitness* witness) {
  const auto& E = *p.dom;
  const auto& B = *p.cod;
  // (p1, cod) : E1 -> B1 x_{B0} E0 must be a bijection.
  std::map<std::pair<int, int>, int> hits;
  for (int g = 0; g < E.num_morphisms(); ++g) {
    auto key = std::make_pair(p.mor_map[g], E.tgt(g));
    if (++hits[key] > 1) {
      set_witness(witness, E.objects[E.tgt(g)], B.morphisms[p.mor_map[g]].id,
                  "fiber of (p1, cod) has more than one morphism");
      return false;
    }
  }
  for (int f = 0; f < B.num_morphisms(); ++f)
    for (int e = 0; e < E.num_objects(); ++e) {
      if (p.obj_map[e] != B.tgt(f)) continue;
      if (!hits.count({f, e})) {
        set_witness(witness, E.objects[e], B.morphisms[f].id,
                    "fiber of (p1, cod) is empty");
        return false;
      }
    }
  return true;
}

bool is_fibration(const FinFunctor& p, LiftWitness* witness) {
  const auto& E = *p.dom;
  const auto& B = *p.cod;
  for (int e = 0; e < E.num_objects(); ++e)
    for (int b = 0; b < B.num_objects(); ++b)
      for (int f : B.hom(b, p.obj_map[e])) {
        bool found = false;
        for (int g = 0; g < E.num_morphisms() && !found; ++g)
          found = E.tgt(g) == e && p.mor_map[g] == f && is_cartesian(p, g);
        if (!found) {
          set_witness(witness, E.objects[e], B.morphisms[f].id,
                      "no cartesian lift with that codomain");
          return false;
        }
      }
  return true;
}

bool is_opfibration(const FinFunctor& p, LiftWitness* witness) {
  return is_fibration(opposite_functor(p), witness);
}

bool is_bifibration(const FinFunctor& p, LiftWitness* witness) {
  return is_fibration(p, witness) && is_opfibration(p, witness);
}

bool is_street_fibration(const FinFunctor& p, LiftWitness* witness) {
  const auto& E = *p.dom;
  const auto& B = *p.cod;
  for (int e = 0; e < E.num_objects(); ++e)
    for (int b = 0; b < B.num_objects(); ++b)
      for (int f : B.hom(b, p.obj_map[e])) {
        bool found = false;
        for (int g = 0; g < E.num_morphisms() && !found; ++g) {
          if (E.tgt(g) != e || !is_cartesian(p, g)) continue;
          for (int h : B.hom(b, p.obj_map[E.src(g)])) {
            if (!is_isomorphism_mor(B, h)) continue;
            if (B.compose(p.mor_map[g], h) == f) {
              found = true;
              break;
            }
          }
        }
        if (!found) {
          set_witness(witness, E.objects[e], B.morphisms[f].id,
                      "no cartesian lift up to isomorphism");
          return false;
        }
      }
  return true;
}

Cleavage cleavage(const FinFunctor& p, CleavagePolicy policy) {
  LiftWitness w;
  if (!is_fibration(p, &w))
    throw ValidationError("NotAFibration",
                          "no cartesian lift of '" + w.morphism + "' at '" + w.object + "'");
  const auto& E = *p.dom;
  const auto& B = *p.cod;
  Cleavage cl;
  cl.p = p;
  for (int e = 0; e < E.num_objects(); ++e)
    for (int b = 0; b < B.num_objects(); ++b)
      for (int f : B.hom(b, p.obj_map[e])) {
        auto lifts = cartesian_lifts(p, f, e);
        int choice;
        if (policy == CleavagePolicy::LexMin) {
          // Normalized: the identity lift is chosen over identities.
          choice = lifts.front();
          if (B.is_identity(f) &&
              std::find(lifts.begin(), lifts.end(), E.id_of(e)) != lifts.end())
            choice = E.id_of(e);
        } else {
          choice = lifts.back();
        }
        cl.lift[{f, e}] = choice;
      }
  return cl;
}

std::pair<int, int> vertical_cartesian_factorization(const FinFunctor& p,
                                                     const Cleavage& cl,
                                                     int m) {
  const auto& E = *p.dom;
  const auto& B = *p.cod;
  int chi = cl.at(p.mor_map[m], E.tgt(m));
  int vertical = -1;
  int count = 0;
  for (int k : E.hom(E.src(m), E.src(chi)))
    if (B.is_identity(p.mor_map[k]) &&
        p.mor_map[k] == B.id_of(p.obj_map[E.src(m)]) &&
        E.compose(chi, k) == m) {
      vertical = k;
      ++count;
    }
  if (count != 1)
    throw InternalError("vertical factor not unique through a cartesian lift");
  return {vertical, chi};
}

Fiber fiber(const FinFunctor& p, int b) {
  const auto& E = *p.dom;
  const auto& B = *p.cod;
  CategoryData data;
  std::vector<int> objs, mors;
  for (int e = 0; e < E.num_objects(); ++e)
    if (p.obj_map[e] == b) {
      data.objects.push_back(E.objects[e]);
      objs.push_back(e);
    }
  for (int m = 0; m < E.num_morphisms(); ++m)
    if (p.mor_map[m] == B.id_of(b)) {
      data.morphisms.push_back({E.morphisms[m].id, E.objects[E.src(m)],
                                E.objects[E.tgt(m)]});
      mors.push_back(m);
      if (E.is_identity(m)) data.identities[E.objects[E.src(m)]] = E.morphisms[m].id;
    }
  for (int g : mors)
    for (int f : mors)
      if (E.tgt(f) == E.src(g))
        data.comp.push_back({E.morphisms[g].id, E.morphisms[f].id,
                             E.morphisms[E.compose(g, f)].id});
  Fiber res;
  res.cat = validate_category(data);
  res.object_of.resize(res.cat->num_objects());
  for (int e : objs) res.object_of[res.cat->obj(E.objects[e])] = e;
  res.morphism_of.resize(res.cat->num_morphisms());
  for (int m : mors) res.morphism_of[res.cat->mor(E.morphisms[m].id)] = m;
  res.include.dom = res.cat;
  res.include.cod = p.dom;
  res.include.obj_map = res.object_of;
  res.include.mor_map = res.morphism_of;
  validate_functor(res.include);
  return res;
}

FinFunctor reindexing_functor(const FinFunctor& p, const Cleavage& cl, int f,
                              const Fiber& fiber_b, const Fiber& fiber_b_prime) {
  const auto& E = *p.dom;
  const auto& B = *p.cod;
  int b_prime = B.src(f);
  FinFunctor r;
  r.dom = fiber_b.cat;
  r.cod = fiber_b_prime.cat;
  r.obj_map.resize(fiber_b.cat->num_objects());
  for (int o = 0; o < fiber_b.cat->num_objects(); ++o) {
    int e = fiber_b.object_of[o];
    int chi = cl.at(f, e);
    r.obj_map[o] = fiber_b_prime.cat->obj(E.objects[E.src(chi)]);
  }
  r.mor_map.resize(fiber_b.cat->num_morphisms());
  for (int m = 0; m < fiber_b.cat->num_morphisms(); ++m) {
    int phi = fiber_b.morphism_of[m];
    int e1 = E.src(phi), e2 = E.tgt(phi);
    int chi1 = cl.at(f, e1), chi2 = cl.at(f, e2);
    // Unique psi over id_{b'} with chi2 ∘ psi = phi ∘ chi1.
    int composite = E.compose(phi, chi1);
    int psi = -1, count = 0;
    for (int k : E.hom(E.src(chi1), E.src(chi2)))
      if (p.mor_map[k] == B.id_of(b_prime) && E.compose(chi2, k) == composite) {
        psi = k;
        ++count;
      }
    if (count != 1)
      throw InternalError("reindexing factor not unique through a cartesian lift");
    r.mor_map[m] = fiber_b_prime.cat->mor(E.morphisms[psi].id);
  }
  validate_functor(r);
  return r;
}

bool rari_characterization(const FinFunctor& p, StepBudget& budget) {
  const auto& E = *p.dom;
  const auto& B = *p.cod;
  auto arrow = arrow_category(p.dom, budget);
  auto slice_over_p = comma(Opspan{identity_functor(p.cod), p});

  // Canonical Phi : E^2 -> B/p, (g : e' -> e) |-> (p e', p g, e).
  std::map<std::array<int, 3>, int> obj_of_triple;
  for (int o = 0; o < slice_over_p.cat->num_objects(); ++o)
    obj_of_triple[slice_over_p.objects[o]] = o;
  std::map<std::tuple<int, int, int, int>, int> mor_of_square;
  for (int m = 0; m < slice_over_p.cat->num_morphisms(); ++m) {
    auto [u, v] = slice_over_p.morphisms[m];
    mor_of_square[{u, v, slice_over_p.cat->src(m), slice_over_p.cat->tgt(m)}] = m;
  }
  FinFunctor phi;
  phi.dom = arrow.cat;
  phi.cod = slice_over_p.cat;
  phi.obj_map.resize(arrow.cat->num_objects());
  for (int o = 0; o < arrow.cat->num_objects(); ++o) {
    int g = arrow.object_to_mor[o];
    phi.obj_map[o] =
        obj_of_triple.at({p.obj_map[E.src(g)], p.mor_map[g], E.tgt(g)});
  }
  phi.mor_map.resize(arrow.cat->num_morphisms());
  for (int m = 0; m < arrow.cat->num_morphisms(); ++m) {
    auto [u, v] = arrow.squares[m];
    phi.mor_map[m] = mor_of_square.at({p.mor_map[u], v,
                                       phi.obj_map[arrow.cat->src(m)],
                                       phi.obj_map[arrow.cat->tgt(m)]});
  }
  validate_functor(phi);

  // Sections R with Phi ∘ R = 1 (strict right inverse).
  auto sections = enumerate_functors_where(
      slice_over_p.cat, arrow.cat,
      [&](int o, int cand) { return phi.obj_map[cand] == o; },
      [&](int m, int cand) { return phi.mor_map[cand] == m; }, budget);

  for (const auto& r : sections) {
    // Adjunction Phi -| R with identity counit: a natural unit
    // eta : Id => R∘Phi with Phi(eta) = id and eta_{R(y)} = id.
    std::vector<bool> in_image(arrow.cat->num_objects(), false);
    for (int y = 0; y < slice_over_p.cat->num_objects(); ++y)
      in_image[r.obj_map[y]] = true;
    auto unit = find_nat_trans_where(
        identity_functor(arrow.cat), compose_functors(r, phi),
        [&](int x, int cand) {
          if (in_image[x] && !arrow.cat->is_identity(cand)) return false;
          return slice_over_p.cat->is_identity(phi.mor_map[cand]);
        },
        budget);
    if (unit) return true;
  }
  return false;
}

}  // namespace fibcat
