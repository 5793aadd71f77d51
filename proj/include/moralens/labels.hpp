#pragma once

#include <array>

namespace moralens {

// Canonical orders for the five moral foundations and the eight emotions.
// Every vector, CSV column block, and lexicon file follows these.
inline constexpr std::array<const char*, 5> kFoundationNames = {
    "care", "fairness", "loyalty", "authority", "purity"};

inline constexpr std::array<const char*, 8> kEmotionNames = {
    "anger", "disgust", "fear", "sadness",
    "anticipation", "surprise", "joy", "trust"};

}  // namespace moralens
