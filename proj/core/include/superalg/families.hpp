#pragma once

#include <string>
#include <vector>

#include "superalg/module.hpp"

namespace sa {

enum class Family { V, W, Wt, P, Vn, Vtn, Wn, Wtn, T, Tt, V0, P0 };

struct FamilyParams {
    Family family = Family::V;
    int lambda = 0;  // superscript of the module (for P and P0 this is the head weight)
    int n = 0;
    int s1 = 1, s2 = 1;
};

// resolved: the variant that satisfies the defining relations.
// literal: the formulas taken word for word where the two differ
// (P aliases, P0 aliases, h-action on Wt(n)).
enum class Transcription { resolved, literal };

Module make_module(const FamilyParams& params, int p, Transcription t = Transcription::resolved);

std::string family_tag(Family f);
Family family_from_tag(const std::string& tag);
std::string describe(const FamilyParams& params);
// Whether the family lives over u(sl2) rather than u(osp).
bool is_sl2_family(Family f);

// Simple modules of a preset: V^lambda for osp12, V0^lambda for sl2; the
// smash presets get both parities.
std::vector<Module> preset_simples(const AlgebraPtr& alg);

}  // namespace sa
