#pragma once

#include <map>
#include <string>
#include <vector>

#include "fibcat/core.hpp"
#include "fibcat/corpus.hpp"

namespace fibcat::testing {

// Independent brute-force functor enumeration: walks every raw assignment
// with odometers and filters by the functor laws directly. Exponential and
// only for tiny inputs; exists to keep the backtracking enumerator honest.
inline int oracle_count_functors(const CatPtr& cp, const CatPtr& dp) {
  const auto& C = *cp;
  const auto& D = *dp;
  if (C.num_objects() == 0) return 1;
  if (D.num_objects() == 0) return 0;
  int count = 0;
  std::vector<int> omap(C.num_objects(), 0);
  while (true) {
    // All morphism assignments for this object map.
    std::vector<int> mmap(C.num_morphisms(), 0);
    bool mdone = C.num_morphisms() == 0;
    if (D.num_morphisms() == 0 && C.num_morphisms() > 0) mdone = true, mmap.clear();
    while (true) {
      if (C.num_morphisms() > 0 && !mmap.empty()) {
        bool ok = true;
        for (int m = 0; m < C.num_morphisms() && ok; ++m)
          ok = D.src(mmap[m]) == omap[C.src(m)] && D.tgt(mmap[m]) == omap[C.tgt(m)];
        for (int o = 0; o < C.num_objects() && ok; ++o)
          ok = mmap[C.id_of(o)] == D.id_of(omap[o]);
        for (int g = 0; g < C.num_morphisms() && ok; ++g)
          for (int f = 0; f < C.num_morphisms() && ok; ++f)
            if (C.tgt(f) == C.src(g))
              ok = mmap[C.compose(g, f)] == D.compose(mmap[g], mmap[f]);
        if (ok) ++count;
        int k = 0;
        while (k < C.num_morphisms() && ++mmap[k] == D.num_morphisms()) {
          mmap[k] = 0;
          ++k;
        }
        if (k == C.num_morphisms()) break;
      } else {
        if (mdone && C.num_morphisms() == 0) ++count;
        break;
      }
    }
    int k = 0;
    while (k < C.num_objects() && ++omap[k] == D.num_objects()) {
      omap[k] = 0;
      ++k;
    }
    if (k == C.num_objects()) break;
  }
  return count;
}

// Connected components by plain breadth-first search on the undirected
// morphism graph; the implementation uses union-find.
inline std::vector<std::vector<int>> oracle_pi0(const FinCategory& c) {
  std::vector<std::vector<int>> adj(c.num_objects());
  for (const auto& m : c.morphisms) {
    adj[m.src].push_back(m.tgt);
    adj[m.tgt].push_back(m.src);
  }
  std::vector<int> comp(c.num_objects(), -1);
  int next = 0;
  for (int s = 0; s < c.num_objects(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> queue{s};
    comp[s] = next;
    for (size_t i = 0; i < queue.size(); ++i)
      for (int n : adj[queue[i]])
        if (comp[n] < 0) {
          comp[n] = next;
          queue.push_back(n);
        }
    ++next;
  }
  std::vector<std::vector<int>> classes(next);
  for (int o = 0; o < c.num_objects(); ++o) classes[comp[o]].push_back(o);
  return classes;
}

inline FinFunctor functor_of(const CatPtr& dom, const CatPtr& cod,
                             std::map<std::string, std::string> objs,
                             std::map<std::string, std::string> mors) {
  FunctorData d;
  d.obj_map = std::move(objs);
  d.mor_map = std::move(mors);
  return make_functor(dom, cod, d);
}

inline bool categories_isomorphic(const CatPtr& c, const CatPtr& d) {
  StepBudget budget{10'000'000, 0};
  return find_isomorphism(c, d, budget).has_value();
}

}  // namespace fibcat::testing
