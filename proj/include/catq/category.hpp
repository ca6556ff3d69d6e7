#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "catq/config.hpp"
#include "catq/error.hpp"

namespace catq {

using ObjId = std::int32_t;
using MorId = std::int32_t;
inline constexpr ObjId kNoObj = -1;
inline constexpr MorId kNoMor = -1;

// Unvalidated category data as it comes from a DSL file or a generator.
// Identities are auto-generated by the validator as id_<object>; composite
// lines never mention them.
struct RawMorphism {
  std::string name;
  std::string dom;
  std::string cod;
};

struct RawComposite {
  std::string g;  // applied second
  std::string f;  // applied first
  std::string result;
};

struct RawCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<RawMorphism> morphisms;
  std::vector<RawComposite> composites;
};

// An explicit finite category: objects, morphisms, identities, and a total
// composition table over composable pairs. Immutable once validated; all
// queries are pure and safe to run concurrently.
class FinCategory {
 public:
  struct Morphism {
    std::string name;
    ObjId dom;
    ObjId cod;
  };

  // Validates the raw data (category laws, exhaustively) or throws
  // ValidationError listing every violation found.
  static FinCategory validate(const RawCategory& raw,
                              const Config& config = default_config());

  const std::string& name() const { return name_; }

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }

  const std::string& object_name(ObjId x) const { return objects_[x]; }
  const Morphism& morphism(MorId f) const { return morphisms_[f]; }
  const std::string& morphism_name(MorId f) const {
    return morphisms_[f].name;
  }

  ObjId object_id(std::string_view name) const;    // kNoObj if absent
  MorId morphism_id(std::string_view name) const;  // kNoMor if absent

  MorId identity(ObjId x) const { return identity_[x]; }
  bool is_identity(MorId f) const {
    return identity_[morphisms_[f].dom] == f;
  }

  bool composable(MorId g, MorId f) const {
    return morphisms_[f].cod == morphisms_[g].dom;
  }
  // g after f; throws ShapeMismatch on a non-composable pair.
  MorId compose(MorId g, MorId f) const;

  // Morphisms x -> y in declaration order.
  const std::vector<MorId>& hom(ObjId x, ObjId y) const {
    return hom_[static_cast<std::size_t>(x) * objects_.size() + y];
  }

  // Structural equality: same objects, morphisms, identities, and
  // composition table (by name, in order). The category name is metadata
  // and is ignored.
  friend bool operator==(const FinCategory& a, const FinCategory& b);

 private:
  FinCategory() = default;

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorId> identity_;                    // per object
  std::unordered_map<std::uint64_t, MorId> comp_;  // key (g,f)
  std::vector<std::vector<MorId>> hom_;            // row-major [dom][cod]
  std::unordered_map<std::string, ObjId> object_index_;
  std::unordered_map<std::string, MorId> morphism_index_;

  void build_indexes();
  friend class CategoryBuilder;
  friend std::vector<Violation> check_category(const RawCategory& raw,
                                               const Config& config);
  friend FinCategory opposite(const FinCategory& c);
};

using CategoryRef = std::shared_ptr<const FinCategory>;

inline CategoryRef make_category(FinCategory c) {
  return std::make_shared<const FinCategory>(std::move(c));
}

CategoryRef validate_category(const RawCategory& raw,
                              const Config& config = default_config());

// Non-throwing law check; returns the full violation list (empty = valid).
std::vector<Violation> check_category(const RawCategory& raw,
                                      const Config& config = default_config());

struct MorphismClass {
  bool is_mono = false;
  bool is_epi = false;
  bool is_split_mono = false;
  bool is_split_epi = false;
  bool is_iso = false;
};

// Decides mono/epi by exhaustive cancellation over parallel pairs and
// split/iso by exhaustive inverse search.
MorphismClass morphism_class(const FinCategory& c, MorId f);
MorphismClass morphism_class(const FinCategory& c, std::string_view name);

bool is_initial_object(const FinCategory& c, ObjId x);
bool is_final_object(const FinCategory& c, ObjId x);
std::vector<ObjId> find_initial(const FinCategory& c);
std::vector<ObjId> find_final(const FinCategory& c);

// Swaps dom/cod and transposes the composition table. Involutive.
FinCategory opposite(const FinCategory& c);
CategoryRef opposite(const CategoryRef& c);

// The one-object, identity-only category.
CategoryRef terminal_category();

// A subcategory given by subsets of its parent's objects and morphisms.
// When full is set, the morphism subset is derived from the object subset.
struct Subcategory {
  CategoryRef parent;
  std::vector<ObjId> objects;
  std::vector<MorId> morphisms;  // identities included
  bool full = true;

  static Subcategory full_on(CategoryRef parent,
                             const std::vector<std::string>& object_names);
  static Subcategory on(CategoryRef parent,
                        const std::vector<std::string>& object_names,
                        const std::vector<std::string>& morphism_names);

  bool contains_object(ObjId x) const;
  bool contains_morphism(MorId f) const;

  // Closure under identities/composition, dom/cod membership, and the
  // fullness condition when the flag is set. Throws ValidationError.
  void validate() const;
};

}  // namespace catq
