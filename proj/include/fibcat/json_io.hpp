#pragma once

#include <string>

#include "json.hpp"

#include "fibcat/core.hpp"
#include "fibcat/grothendieck.hpp"
#include "fibcat/limits.hpp"
#include "fibcat/profunctor.hpp"

namespace fibcat {

using Json = nlohmann::ordered_json;

// Loaders accept either an inline object or a string holding a path relative
// to `base_dir`. Throws ValidationError (kind BadInput / the validation kinds)
// on malformed input.
CatPtr load_category(const Json& j, const std::string& base_dir = ".");
FinFunctor load_functor(const Json& j, const std::string& base_dir = ".");
Presheaf load_presheaf(const Json& j, const std::string& base_dir = ".");
Profunctor load_profunctor(const Json& j, const std::string& base_dir = ".");
Span load_span(const Json& j, const std::string& base_dir = ".");
Opspan load_opspan(const Json& j, const std::string& base_dir = ".");

// Canonical dumps: objects/morphisms sorted, identity morphisms and their
// forced composites omitted, key order fixed. Reloading reproduces the value
// byte for byte.
Json dump_category(const FinCategory& c);
Json dump_functor(const FinFunctor& f);
Json dump_presheaf(const Presheaf& p);
Json dump_profunctor(const Profunctor& p);
Json dump_span(const Span& s);
Json dump_opspan(const Opspan& s);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace fibcat
