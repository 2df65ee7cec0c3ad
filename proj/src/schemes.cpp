#include "luka/schemes.hpp"

#include <map>
#include <stdexcept>

namespace luka {

namespace {

std::vector<SchemeInfo> build_registry() {
  const Pattern phi = Pattern::metavar("phi");
  const Pattern psi = Pattern::metavar("psi");
  const Pattern chi = Pattern::metavar("chi");
  const Pattern phi1 = Pattern::metavar("phi1");
  const Pattern psi1 = Pattern::metavar("psi1");
  const Pattern phi2 = Pattern::metavar("phi2");
  const Pattern psi2 = Pattern::metavar("psi2");
  using P = Pattern;

  std::vector<SchemeInfo> reg;
  auto add = [&](SchemeId id, std::string name, Pattern p,
                 std::vector<std::string> mv, bool axiom) {
    reg.push_back({id, std::move(name), std::move(p), std::move(mv), axiom});
  };

  add(SchemeId::A1, "A1",
      P::implies(P::implies(phi, psi),
                 P::implies(P::implies(psi, chi), P::implies(phi, chi))),
      {"phi", "psi", "chi"}, true);
  add(SchemeId::A2, "A2", P::implies(P::conj(phi, psi), phi), {"phi", "psi"}, true);
  add(SchemeId::A3, "A3", P::implies(P::conj(phi, psi), P::conj(psi, phi)),
      {"phi", "psi"}, true);
  add(SchemeId::A4, "A4",
      P::implies(P::conj(phi, P::implies(phi, psi)),
                 P::conj(psi, P::implies(psi, phi))),
      {"phi", "psi"}, true);
  add(SchemeId::A5, "A5",
      P::iff(P::implies(phi, P::implies(psi, chi)),
             P::implies(P::conj(phi, psi), chi)),
      {"phi", "psi", "chi"}, true);
  add(SchemeId::A6, "A6",
      P::implies(P::implies(P::implies(phi, psi), chi),
                 P::implies(P::implies(P::implies(psi, phi), chi), chi)),
      {"phi", "psi", "chi"}, true);
  add(SchemeId::A7, "A7", P::implies(P::bottom(), phi), {"phi"}, true);

  add(SchemeId::L1, "L1", P::implies(phi, P::implies(psi, phi)), {"phi", "psi"}, true);
  add(SchemeId::L2, "L2",
      P::implies(P::implies(phi, psi),
                 P::implies(P::implies(psi, chi), P::implies(phi, chi))),
      {"phi", "psi", "chi"}, true);
  add(SchemeId::L3, "L3",
      P::implies(P::implies(P::neg(phi), P::neg(psi)), P::implies(psi, phi)),
      {"phi", "psi"}, true);
  add(SchemeId::L4, "L4",
      P::implies(P::implies(P::implies(phi, psi), psi),
                 P::implies(P::implies(psi, phi), phi)),
      {"phi", "psi"}, true);
  add(SchemeId::DNE, "DNE", P::implies(P::neg(P::neg(phi)), phi), {"phi"}, true);

  add(SchemeId::L5, "L5",
      P::iff(P::neg(P::conj(phi, psi)), P::strong_or(P::neg(phi), P::neg(psi))),
      {"phi", "psi"}, false);
  add(SchemeId::L6, "L6",
      P::iff(P::neg(P::strong_or(phi, psi)), P::conj(P::neg(phi), P::neg(psi))),
      {"phi", "psi"}, false);
  add(SchemeId::L7, "L7",
      P::iff(P::strong_or(phi, psi), P::implies(P::neg(phi), psi)),
      {"phi", "psi"}, false);
  add(SchemeId::L8, "L8", P::iff(P::neg(P::neg(phi)), phi), {"phi"}, false);
  add(SchemeId::L9, "L9", P::iff(P::implies(phi, P::bottom()), P::neg(phi)),
      {"phi"}, false);
  add(SchemeId::L10, "L10",
      P::implies(P::conj(phi, P::implies(phi, psi)), psi), {"phi", "psi"}, false);
  add(SchemeId::L11, "L11",
      P::implies(P::conj(P::implies(phi1, psi1), P::implies(phi2, psi2)),
                 P::implies(P::conj(phi1, phi2), P::conj(psi1, psi2))),
      {"phi1", "psi1", "phi2", "psi2"}, false);
  add(SchemeId::L12, "L12", P::implies(phi, P::strong_or(phi, psi)),
      {"phi", "psi"}, false);
  add(SchemeId::L13, "L13",
      P::implies(P::iff(phi, psi),
                 P::iff(P::implies(phi, chi), P::implies(psi, chi))),
      {"phi", "psi", "chi"}, false);
  add(SchemeId::L14, "L14",
      P::implies(P::iff(phi, psi),
                 P::iff(P::implies(chi, phi), P::implies(chi, psi))),
      {"phi", "psi", "chi"}, false);
  add(SchemeId::L15, "L15",
      P::implies(P::iff(phi, psi), P::iff(P::conj(phi, chi), P::conj(psi, chi))),
      {"phi", "psi", "chi"}, false);

  add(SchemeId::IffElimL, "IFF_ELIM_L", P::implies(P::iff(phi, psi), P::implies(phi, psi)),
      {"phi", "psi"}, false);
  add(SchemeId::IffElimR, "IFF_ELIM_R", P::implies(P::iff(phi, psi), P::implies(psi, phi)),
      {"phi", "psi"}, false);

  return reg;
}

}  // namespace

const std::vector<SchemeInfo>& scheme_registry() {
  static const std::vector<SchemeInfo> reg = build_registry();
  return reg;
}

const SchemeInfo& scheme_info(SchemeId id) {
  for (const auto& s : scheme_registry())
    if (s.id == id) return s;
  throw std::logic_error("unregistered scheme id");
}

std::optional<SchemeId> scheme_by_name(const std::string& name) {
  for (const auto& s : scheme_registry())
    if (s.name == name) return s.id;
  return std::nullopt;
}

}  // namespace luka
