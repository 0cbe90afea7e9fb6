#pragma once

#include <optional>
#include <string>
#include <vector>

#include "retractlab/lattice.hpp"

namespace retractlab {

enum class GammaKind { none, image_is_narrows };

/// Extended absorption property eabp(K, ●, ★, Γ): for every Γ-respecting
/// embedding g of the pattern K into L and every retract S of L,
/// g(●) ⊆ S forces g(★) ⊆ S.
struct AbsorptionProperty {
    std::string name;  // "rc", "glusqap", or a file-derived name
    Lattice pattern;
    DynBitset bullets;
    DynBitset stars;
    GammaKind gamma = GammaKind::none;
    int gamma_y = -1;  // pattern element whose image must be a narrows
};

/// All injective lattice homomorphisms K → L that satisfy the constraint,
/// as arrays indexed by K's elements; deterministic order. Empty when
/// |K| > |L|; throws SizeLimit when the host exceeds the cap.
std::vector<std::vector<int>> embeddings(const Lattice& K, const Lattice& L,
                                         GammaKind gamma = GammaKind::none, int gamma_y = -1,
                                         int cap = caps::brute_force);

struct AbsorptionVerdict {
    bool holds = true;
    // least counterexample when violated:
    std::optional<DynBitset> retract;
    std::optional<std::vector<int>> embedding;
    int star_element = -1;  // pattern element whose image escaped S
};

/// Checks the property over every retract of L.
AbsorptionVerdict check_absorption(const Lattice& L, const AbsorptionProperty& prop,
                                   int cap = caps::brute_force);

/// Checks the property for one retract; throws NotARetract when S is not one.
AbsorptionVerdict check_absorption(const Lattice& L, const AbsorptionProperty& prop,
                                   const DynBitset& S, int cap = caps::brute_force);

/// "rc": relative-complement closure over the four-element boolean pattern.
/// "glusqap": the seven-element glued-squares pattern whose middle element
/// must land on a narrows. The glued-squares bullet placement is one of
/// several workable choices; alternative placements can be supplied as
/// property files without code changes.
AbsorptionProperty builtin_property(const std::string& name);

}  // namespace retractlab
