#include "fibcat/corpus.hpp"

#include <algorithm>
#include <set>

namespace fibcat {

namespace {

CatPtr build(CategoryData data) { return validate_category(data); }

}  // namespace

CatPtr cat_empty() {
  static CatPtr c = build({});
  return c;
}

CatPtr cat_one() {
  static CatPtr c = [] {
    CategoryData d;
    d.objects = {"*"};
    return build(d);
  }();
  return c;
}

CatPtr cat_two() {
  static CatPtr c = [] {
    CategoryData d;
    d.objects = {"0", "1"};
    d.morphisms = {{"a", "0", "1"}};
    return build(d);
  }();
  return c;
}

CatPtr cat_disc2() {
  static CatPtr c = [] {
    CategoryData d;
    d.objects = {"0", "1"};
    return build(d);
  }();
  return c;
}

CatPtr cat_iso() {
  static CatPtr c = [] {
    CategoryData d;
    d.objects = {"x", "y"};
    d.morphisms = {{"s", "x", "y"}, {"s_inv", "y", "x"}};
    d.comp = {{"s_inv", "s", "id_x"}, {"s", "s_inv", "id_y"}};
    return build(d);
  }();
  return c;
}

CatPtr cat_cospan() {
  static CatPtr c = [] {
    CategoryData d;
    d.objects = {"0", "1", "2"};
    d.morphisms = {{"f", "0", "2"}, {"g", "1", "2"}};
    return build(d);
  }();
  return c;
}

CatPtr cat_span() {
  static CatPtr c = [] {
    CategoryData d;
    d.objects = {"0", "1", "2"};
    d.morphisms = {{"f", "2", "0"}, {"g", "2", "1"}};
    return build(d);
  }();
  return c;
}

CatPtr cat_square() {
  static CatPtr c = [] {
    CategoryData d;
    d.objects = {"bot", "l", "r", "top"};
    d.morphisms = {{"bl", "bot", "l"}, {"br", "bot", "r"},
                   {"lt", "l", "top"}, {"rt", "r", "top"},
                   {"bt", "bot", "top"}};
    d.comp = {{"lt", "bl", "bt"}, {"rt", "br", "bt"}};
    return build(d);
  }();
  return c;
}

CatPtr cat_z2() {
  static CatPtr c = [] {
    CategoryData d;
    d.objects = {"*"};
    d.morphisms = {{"s", "*", "*"}};
    d.comp = {{"s", "s", "id_*"}};
    return build(d);
  }();
  return c;
}

CatPtr cat_parallelentry() {
  static CatPtr c = [] {
    CategoryData d;
    d.objects = {"0", "1"};
    d.morphisms = {{"u", "0", "1"}, {"v", "0", "1"}};
    return build(d);
  }();
  return c;
}

FinFunctor const_functor(const CatPtr& c, const std::string& obj) {
  FunctorData d;
  d.obj_map["*"] = obj;
  return make_functor(cat_one(), c, d);
}

FinFunctor constant_functor(const CatPtr& dom, const CatPtr& cod,
                            const std::string& obj) {
  FinFunctor f;
  f.dom = dom;
  f.cod = cod;
  int o = cod->obj(obj);
  f.obj_map.assign(dom->num_objects(), o);
  f.mor_map.assign(dom->num_morphisms(), cod->id_of(o));
  return f;
}

// ---------------------------------------------------------------------------
// Deterministic RNG (splitmix64 core; no stdlib distributions, so sequences
// are stable across platforms).
// ---------------------------------------------------------------------------

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::below(int n) {
  if (n <= 1) return 0;
  std::uint64_t bound = ~0ULL - (~0ULL % static_cast<std::uint64_t>(n));
  std::uint64_t x = next();
  while (x >= bound) x = next();
  return static_cast<int>(x % static_cast<std::uint64_t>(n));
}

bool Rng::chance(int num, int den) { return below(den) < num; }

// ---------------------------------------------------------------------------
// Random categories. Each recipe yields a category by construction; the
// result is still passed through validate_category.
// ---------------------------------------------------------------------------

namespace {

// Free category on a random DAG multigraph: morphisms are paths, composition
// is concatenation. Bounded resampling keeps the morphism count small.
CatPtr random_free_dag(Rng& rng, const CorpusOptions& opt) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    int n = 1 + rng.below(opt.max_objects);
    int edges = rng.below(opt.max_extra_morphisms + 1);
    std::vector<std::array<int, 2>> quiver;
    for (int i = 0; i < edges; ++i) {
      if (n < 2) break;
      int s = rng.below(n - 1);
      int t = s + 1 + rng.below(n - 1 - s);
      quiver.push_back({s, t});
    }
    // All paths; DAG ordering guarantees termination.
    struct Path {
      int src, tgt;
      std::vector<int> edges;
    };
    std::vector<Path> paths;
    for (size_t i = 0; i < quiver.size(); ++i)
      paths.push_back({quiver[i][0], quiver[i][1], {static_cast<int>(i)}});
    for (size_t i = 0; i < paths.size(); ++i) {
      if (paths.size() > 24) break;
      for (size_t j = 0; j < quiver.size(); ++j)
        if (quiver[j][0] == paths[i].tgt) {
          Path ext = paths[i];
          ext.edges.push_back(static_cast<int>(j));
          ext.tgt = quiver[j][1];
          paths.push_back(std::move(ext));
        }
    }
    if (paths.size() > 24) continue;
    CategoryData d;
    for (int i = 0; i < n; ++i) d.objects.push_back("o" + std::to_string(i));
    auto path_name = [&](const Path& p) {
      std::string s = "m";
      for (int e : p.edges) s += std::to_string(e);
      return s;
    };
    std::map<std::vector<int>, std::string> byedges;
    for (const auto& p : paths) {
      d.morphisms.push_back({path_name(p), "o" + std::to_string(p.src),
                             "o" + std::to_string(p.tgt)});
      byedges[p.edges] = path_name(p);
    }
    for (const auto& gp : paths)
      for (const auto& fp : paths) {
        if (fp.tgt != gp.src) continue;
        std::vector<int> cat = fp.edges;
        cat.insert(cat.end(), gp.edges.begin(), gp.edges.end());
        d.comp.push_back({path_name(gp), path_name(fp), byedges.at(cat)});
      }
    return build(d);
  }
  throw ValidationError("GenerationRetryExceeded", "random_free_dag");
}

// Random subcategory of finite sets: objects are small sets, morphisms a
// random set of functions closed under composition (resampled if the closure
// grows past the bound).
CatPtr random_function_category(Rng& rng, const CorpusOptions& opt) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    int n = 1 + rng.below(std::min(3, opt.max_objects));
    std::vector<int> sizes;
    for (int i = 0; i < n; ++i) sizes.push_back(1 + rng.below(3));
    struct Fn {
      int src, tgt;
      std::vector<int> table;
      bool operator<(const Fn& o) const {
        return std::tie(src, tgt, table) < std::tie(o.src, o.tgt, o.table);
      }
    };
    std::set<Fn> fns;
    for (int i = 0; i < n; ++i) {
      Fn idf{i, i, {}};
      for (int k = 0; k < sizes[i]; ++k) idf.table.push_back(k);
      fns.insert(idf);
    }
    int gens = rng.below(opt.max_extra_morphisms + 1);
    for (int g = 0; g < gens; ++g) {
      Fn f{rng.below(n), rng.below(n), {}};
      for (int k = 0; k < sizes[f.src]; ++k)
        f.table.push_back(rng.below(sizes[f.tgt]));
      fns.insert(f);
    }
    // Close under composition.
    bool grew = true, too_big = false;
    while (grew && !too_big) {
      grew = false;
      std::vector<Fn> cur(fns.begin(), fns.end());
      for (const auto& g : cur) {
        for (const auto& f : cur) {
          if (f.tgt != g.src) continue;
          Fn gf{f.src, g.tgt, {}};
          for (int k = 0; k < sizes[f.src]; ++k)
            gf.table.push_back(g.table[f.table[k]]);
          if (fns.insert(gf).second) grew = true;
          if (fns.size() > 16) {
            too_big = true;
            break;
          }
        }
        if (too_big) break;
      }
    }
    if (too_big) continue;
    CategoryData d;
    for (int i = 0; i < n; ++i) d.objects.push_back("s" + std::to_string(i));
    std::map<Fn, std::string> names;
    int k = 0;
    for (const auto& f : fns) {
      bool is_id = f.src == f.tgt;
      if (is_id)
        for (int i = 0; i < sizes[f.src]; ++i)
          if (f.table[i] != i) {
            is_id = false;
            break;
          }
      std::string nm = is_id ? "id_s" + std::to_string(f.src)
                             : "f" + std::to_string(k++);
      names[f] = nm;
      d.morphisms.push_back({nm, "s" + std::to_string(f.src),
                             "s" + std::to_string(f.tgt)});
      if (is_id) d.identities["s" + std::to_string(f.src)] = nm;
    }
    for (const auto& [g, gn] : names)
      for (const auto& [f, fn] : names) {
        if (f.tgt != g.src) continue;
        Fn gf{f.src, g.tgt, {}};
        for (int i = 0; i < sizes[f.src]; ++i)
          gf.table.push_back(g.table[f.table[i]]);
        d.comp.push_back({gn, fn, names.at(gf)});
      }
    return build(d);
  }
  throw ValidationError("GenerationRetryExceeded", "random_function_category");
}

// Random poset category on a random partial order (reflexive-transitive
// closure of a random DAG relation); thin, so composition is forced.
CatPtr random_poset(Rng& rng, const CorpusOptions& opt) {
  int n = 1 + rng.below(opt.max_objects);
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) le[i][i] = true;
  int rels = rng.below(2 * opt.max_objects);
  for (int r = 0; r < rels; ++r) {
    if (n < 2) break;
    int i = rng.below(n - 1);
    int j = i + 1 + rng.below(n - 1 - i);
    le[i][j] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  CategoryData d;
  for (int i = 0; i < n; ++i) d.objects.push_back("p" + std::to_string(i));
  auto mor_name = [&](int i, int j) {
    if (i == j) return "id_p" + std::to_string(i);
    return "le" + std::to_string(i) + std::to_string(j);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (le[i][j] && i != j)
        d.morphisms.push_back({mor_name(i, j), "p" + std::to_string(i),
                               "p" + std::to_string(j)});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (le[i][j] && le[j][k])
          d.comp.push_back({mor_name(j, k), mor_name(i, j), mor_name(i, k)});
  return build(d);
}

}  // namespace

CatPtr random_category(Rng& rng, const CorpusOptions& opt) {
  switch (rng.below(6)) {
    case 0:
      return random_poset(rng, opt);
    case 1:
      return random_free_dag(rng, opt);
    case 2:
      return random_function_category(rng, opt);
    case 3: {
      static const std::vector<CatPtr> stock = {
          cat_one(), cat_two(), cat_disc2(), cat_iso(),
          cat_cospan(), cat_square(), cat_z2(), cat_parallelentry()};
      return stock[rng.below(static_cast<int>(stock.size()))];
    }
    case 4:
      return opposite(random_category(rng, opt));
    default: {
      CorpusOptions half = opt;
      half.max_objects = std::max(1, opt.max_objects / 2);
      half.max_extra_morphisms = std::max(1, opt.max_extra_morphisms / 2);
      StepBudget budget{kDefaultCap, 0};
      auto prod = product(random_category(rng, half),
                          random_category(rng, half), budget);
      return prod.cat;
    }
  }
}

std::optional<FinFunctor> random_functor(const CatPtr& c, const CatPtr& d,
                                         Rng& rng, StepBudget& budget) {
  auto all = enumerate_functors(c, d, budget);
  if (all.empty()) return std::nullopt;
  return all[rng.below(static_cast<int>(all.size()))];
}

}  // namespace fibcat
