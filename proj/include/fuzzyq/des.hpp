#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fuzzyq/automaton.hpp"

namespace fuzzyq {

struct ComposedRecognizer {
    FuzzyRecognizer recognizer;
    std::vector<std::string> left_states;
    std::vector<std::string> right_states;
    Alphabet shared;
    Alphabet private_left;
    Alphabet private_right;
};

// Composite state (a,b) sits at index a * |B| + b.
[[nodiscard]] ComposedRecognizer product_compose(const FuzzyRecognizer& a, const FuzzyRecognizer& b);
// Synchronises on shared letters and interleaves private ones. The alphabet
// is the left alphabet followed by the right-only letters.
[[nodiscard]] ComposedRecognizer parallel_compose(const FuzzyRecognizer& a, const FuzzyRecognizer& b);

// Adds identity transitions for every letter of y missing from the alphabet.
[[nodiscard]] FuzzyRecognizer input_extension(const FuzzyRecognizer& a, const Alphabet& y);

// Deletes the letters of a word over y that are not in x; the result is a word over x.
[[nodiscard]] Word natural_projection(const Word& u, const Alphabet& y, const Alphabet& x);

// sup over |v| <= horizon of L(uv).
[[nodiscard]] Value prefix_closure_at(const FuzzyRecognizer& r, const Word& u, std::size_t horizon);

// T(a) = sup_v (delta_v o tau)(a). Exact: a path that repeats a state never
// outweighs the path with the cycle removed, so n-1 rounds suffice.
[[nodiscard]] FuzzyVector coreachability(const FuzzyRecognizer& r);

// sup over all v of L(uv).
[[nodiscard]] Value prefix_closure(const FuzzyRecognizer& r, const Word& u);

enum class BlockingVerdict { nonblocking, blocking, undetermined };
[[nodiscard]] std::string_view to_string(BlockingVerdict v) noexcept;

struct BlockingResult {
    BlockingVerdict verdict;
    std::optional<Word> witness;
    // True when every reachable sigma_u was examined.
    bool exhaustive;
};

// Compares the prefix-closure with the generated language. Exhaustive when
// the forward family closes within the limits; otherwise only words up to
// the horizon are examined and a gap-free scan is undetermined.
[[nodiscard]] BlockingResult check_blocking(const FuzzyRecognizer& r, std::size_t horizon, FamilyLimits limits = {});

[[nodiscard]] BlockingResult conflict_check(const FuzzyRecognizer& a, const FuzzyRecognizer& b, std::size_t horizon,
                                            FamilyLimits limits = {});

}  // namespace fuzzyq
