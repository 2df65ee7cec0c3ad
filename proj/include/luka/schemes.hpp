#pragma once

#include <optional>
#include <string>
#include <vector>

#include "luka/pattern.hpp"

namespace luka {

/// Identifiers of the registered schemes: the axiom system (A1..A7 plus
/// L1..L4 plus double negation) and the derived schemes L5..L15 citable as
/// lemma lines. IffElimL/R project an equivalence line onto one of its
/// directions; they are lemma-citable helpers.
enum class SchemeId {
  A1, A2, A3, A4, A5, A6, A7,
  L1, L2, L3, L4,
  DNE,
  L5, L6, L7, L8, L9, L10, L11, L12, L13, L14, L15,
  IffElimL, IffElimR,
};

struct SchemeInfo {
  SchemeId id;
  std::string name;                    // "A1", "L13", "DNE", "IFF_ELIM_L", ...
  Pattern pattern;                     // stored with sugar expanded
  std::vector<std::string> metavars;   // canonical binding order
  bool axiom;                          // axiom- vs lemma-citable
};

const std::vector<SchemeInfo>& scheme_registry();
const SchemeInfo& scheme_info(SchemeId id);
std::optional<SchemeId> scheme_by_name(const std::string& name);
inline const std::string& scheme_name(SchemeId id) { return scheme_info(id).name; }
inline bool is_axiom_scheme(SchemeId id) { return scheme_info(id).axiom; }

}  // namespace luka
