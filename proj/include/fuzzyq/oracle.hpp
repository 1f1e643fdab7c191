#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fuzzyq/automaton.hpp"
#include "fuzzyq/reduction.hpp"

namespace fuzzyq {

struct Divergence {
    Word word;
    Value left;
    Value right;
};

struct EquivalenceVerdict {
    // Longest length up to which every word agreed; -1 if the empty word differs.
    long equal_up_to;
    std::optional<Divergence> first_divergence;

    [[nodiscard]] bool equal() const noexcept { return !first_divergence.has_value(); }
};

enum class LanguageKind { recognized, generated };

// Compares two languages on every word of length <= k, shortest first.
[[nodiscard]] EquivalenceVerdict languages_equal_up_to(const FuzzyRecognizer& a, const FuzzyRecognizer& b,
                                                       std::size_t k,
                                                       LanguageKind kind = LanguageKind::recognized);

inline constexpr std::size_t brute_force_limit = 4;

// Every crisp reflexive and transitive relation on n <= 4 states.
[[nodiscard]] std::vector<FuzzyMatrix> boolean_quasi_orders(std::size_t n);

// Exhaustive search for the greatest crisp right (left) invariant
// quasi-order, using its own bit arithmetic rather than the iteration.
[[nodiscard]] FuzzyMatrix brute_force_greatest_invariant(const FuzzyAutomaton& a, Side side);
[[nodiscard]] FuzzyMatrix brute_force_greatest_invariant(const FuzzyRecognizer& r, Side side);

struct GeneralSystemCheck {
    bool holds;
    std::optional<Word> witness;
};

// sigma o R o d_x1 o R ... o R o d_xn o R o tau against the unreduced value
// for every word of length <= k.
[[nodiscard]] GeneralSystemCheck check_general_system(const FuzzyRecognizer& r, const FuzzyMatrix& rel,
                                                      std::size_t k);

}  // namespace fuzzyq
