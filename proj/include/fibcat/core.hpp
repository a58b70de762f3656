#pragma once

#include <array>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibcat/errors.hpp"

namespace fibcat {

// ---------------------------------------------------------------------------
// Finite categories as explicit tables.
//
// Objects and morphisms are identified by strings, unique within one category
// (objects and morphisms share the namespace). Internally both are kept
// sorted by name, so index order == lexicographic order and every search or
// enumeration that walks indices is deterministic.
// ---------------------------------------------------------------------------

struct MorData {
  std::string id, src, tgt;
};

// Raw, unvalidated description as it comes from JSON or a constructor.
struct CategoryData {
  std::vector<std::string> objects;
  std::vector<MorData> morphisms;
  // obj -> identity morphism id. Entries naming morphisms absent from
  // `morphisms` (and all missing entries) are synthesized as id_<obj>,
  // together with their forced composites.
  std::map<std::string, std::string> identities;
  std::vector<std::array<std::string, 3>> comp;  // [g, f, g∘f], g after f
};

struct FinCategory {
  struct Mor {
    std::string id;
    int src, tgt;
  };

  std::vector<std::string> objects;  // sorted
  std::vector<Mor> morphisms;        // sorted by id
  std::vector<int> identity;         // object idx -> morphism idx
  std::vector<int> comp_table;       // M*M, -1 if not composable
  std::map<std::string, int> obj_index;
  std::map<std::string, int> mor_index;
  // homs[x][y]: morphism indices x -> y, ascending (hence lex by name).
  std::vector<std::vector<std::vector<int>>> homs;

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms.size()); }
  int src(int m) const { return morphisms[m].src; }
  int tgt(int m) const { return morphisms[m].tgt; }
  int id_of(int obj) const { return identity[obj]; }
  bool is_identity(int m) const { return identity[morphisms[m].src] == m && morphisms[m].src == morphisms[m].tgt; }

  // g after f; both must be composable (checked).
  int compose(int g, int f) const;
  const std::vector<int>& hom(int x, int y) const { return homs[x][y]; }

  int obj(const std::string& name) const;  // throws UnknownObject
  int mor(const std::string& name) const;  // throws UnknownMorphism
};

using CatPtr = std::shared_ptr<const FinCategory>;

// Validates all category laws exhaustively; throws ValidationError with kind
// MissingComposite / AssociativityViolation / IdentityViolation / DanglingId /
// NameCollision.
CatPtr validate_category(const CategoryData& data);

bool same_category(const FinCategory& a, const FinCategory& b);

// ---------------------------------------------------------------------------
// Functors and natural transformations.
// ---------------------------------------------------------------------------

struct FinFunctor {
  CatPtr dom, cod;
  std::vector<int> obj_map;  // dom object idx -> cod object idx
  std::vector<int> mor_map;  // dom morphism idx -> cod morphism idx

  int on_obj(int o) const { return obj_map[o]; }
  int on_mor(int m) const { return mor_map[m]; }
};

struct FunctorData {
  std::map<std::string, std::string> obj_map;
  std::map<std::string, std::string> mor_map;  // identities may be omitted
};

// Builds and fully validates a functor; throws NotFunctorial / DanglingId.
FinFunctor make_functor(CatPtr dom, CatPtr cod, const FunctorData& data);
// Re-checks the functor laws on an already-built functor.
void validate_functor(const FinFunctor& f);

FinFunctor identity_functor(CatPtr c);
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);
bool same_functor(const FinFunctor& f, const FinFunctor& g);
bool is_isomorphism_functor(const FinFunctor& f);

struct NatTrans {
  FinFunctor source, target;     // parallel functors
  std::vector<int> components;  // dom object idx -> cod morphism idx
};

void validate_nat_trans(const NatTrans& t);
NatTrans identity_nat(const FinFunctor& f);
// Vertical composite b after a.
NatTrans vcompose(const NatTrans& b, const NatTrans& a);
// h ∘ t : h∘source ⇒ h∘target for h out of the common codomain.
NatTrans whisker_left(const FinFunctor& h, const NatTrans& t);
// t ∘ k : source∘k ⇒ target∘k for k into the common domain.
NatTrans whisker_right(const NatTrans& t, const FinFunctor& k);
bool nat_trans_invertible(const NatTrans& t);

// ---------------------------------------------------------------------------
// Finite sets and functions (presheaf values).
// ---------------------------------------------------------------------------

struct FinSet {
  std::vector<std::string> elems;  // sorted, unique
  std::map<std::string, int> index;

  int size() const { return static_cast<int>(elems.size()); }
  int at(const std::string& e) const;
};

FinSet make_fin_set(std::vector<std::string> elems);

struct FinFunction {
  std::vector<int> map;  // dom elem idx -> cod elem idx
};

// ---------------------------------------------------------------------------
// Basic constructions.
// ---------------------------------------------------------------------------

CatPtr opposite(const CatPtr& c);
FinFunctor opposite_functor(const FinFunctor& f);

struct ProductResult {
  CatPtr cat;
  std::vector<std::pair<int, int>> obj_pairs;  // product obj idx -> (c, d)
  std::vector<std::pair<int, int>> mor_pairs;
  FinFunctor proj1, proj2;
};
ProductResult product(const CatPtr& c, const CatPtr& d, StepBudget& budget);

struct ArrowCategory {
  CatPtr cat;
  FinFunctor dom_proj, cod_proj;            // to the base category
  std::vector<int> object_to_mor;           // arrow-cat obj idx -> base mor idx
  std::vector<std::pair<int, int>> squares;  // arrow-cat mor idx -> (u, v)
};
ArrowCategory arrow_category(const CatPtr& c, StepBudget& budget);

// ---------------------------------------------------------------------------
// Searches. All exhaustive, deterministic (index == lex order) and budgeted.
// ---------------------------------------------------------------------------

std::vector<FinFunctor> enumerate_functors(const CatPtr& c, const CatPtr& d,
                                           StepBudget& budget);

// Exhaustive enumeration with per-object / per-morphism candidate filters
// (used for span maps, sections, and functors over a base).
std::vector<FinFunctor> enumerate_functors_where(
    const CatPtr& c, const CatPtr& d,
    const std::function<bool(int, int)>& obj_ok,
    const std::function<bool(int, int)>& mor_ok, StepBudget& budget);

std::vector<NatTrans> enumerate_nat_trans(const FinFunctor& f,
                                          const FinFunctor& g,
                                          StepBudget& budget);
// First natural transformation whose components all satisfy the filter, in
// lexicographic component order.
std::optional<NatTrans> find_nat_trans_where(
    const FinFunctor& f, const FinFunctor& g,
    const std::function<bool(int, int)>& comp_ok, StepBudget& budget);

std::optional<NatTrans> is_naturally_isomorphic(const FinFunctor& f,
                                                const FinFunctor& g,
                                                StepBudget& budget);

// Backtracking search for an isomorphism of categories, with hom-cardinality
// pruning; filters restrict the object / morphism images (e.g. to commute
// with projections).
std::optional<FinFunctor> find_isomorphism_where(
    const CatPtr& c, const CatPtr& d,
    const std::function<bool(int, int)>& obj_ok,
    const std::function<bool(int, int)>& mor_ok, StepBudget& budget);
std::optional<FinFunctor> find_isomorphism(const CatPtr& c, const CatPtr& d,
                                           StepBudget& budget);

bool is_isomorphism_mor(const FinCategory& c, int m);
std::optional<int> inverse_mor(const FinCategory& c, int m);
bool objects_isomorphic(const FinCategory& c, int x, int y);

// unit: Id_C ⇒ G∘F, counit: F∘G ⇒ Id_D for F: C→D, G: D→C.
bool check_adjunction(const FinFunctor& f, const FinFunctor& g,
                      const NatTrans& unit, const NatTrans& counit);

struct Adjunction {
  FinFunctor left;
  NatTrans unit, counit;
};
std::optional<Adjunction> find_left_adjoint(const FinFunctor& g,
                                            StepBudget& budget);

bool is_fully_faithful(const FinFunctor& f);
bool is_essentially_surjective(const FinFunctor& f);
bool is_equivalence(const FinFunctor& f);

// Connected components of the zigzag relation; classes sorted by least
// member, members ascending.
std::vector<std::vector<int>> pi0(const FinCategory& c);
bool is_connected(const FinCategory& c);

// ---------------------------------------------------------------------------
// Functor categories (support for the exponentiation theorem).
// ---------------------------------------------------------------------------

struct FunctorCategory {
  CatPtr cat;
  std::vector<FinFunctor> objects;    // index-aligned with cat objects
  std::vector<NatTrans> morphisms;    // index-aligned with cat morphisms
};
FunctorCategory functor_category(const CatPtr& x, const CatPtr& c,
                                 StepBudget& budget);
// [X,p] : [X,E] -> [X,B] by postcomposition with p.
FinFunctor postcompose_functor(const FunctorCategory& xe,
                               const FunctorCategory& xb, const FinFunctor& p);

// Joins name parts with the reserved separator "·".
std::string joined(std::initializer_list<std::string> parts);

}  // namespace fibcat
