#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyq/relation.hpp"

namespace fuzzyq {

// Words are sequences of alphabet indices; the empty vector is the empty word.
using Word = std::vector<std::size_t>;
using Alphabet = std::vector<std::string>;

class FuzzyAutomaton {
public:
    FuzzyAutomaton(Lattice lattice, std::vector<std::string> states, Alphabet alphabet,
                   std::vector<FuzzyMatrix> delta);

    [[nodiscard]] const Lattice& lattice() const noexcept { return lattice_; }
    [[nodiscard]] const std::vector<std::string>& states() const noexcept { return states_; }
    [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] std::size_t size() const noexcept { return states_.size(); }
    [[nodiscard]] const FuzzyMatrix& delta(std::size_t letter) const { return delta_.at(letter); }
    [[nodiscard]] const std::vector<FuzzyMatrix>& deltas() const noexcept { return delta_; }
    [[nodiscard]] std::size_t letter_index(std::string_view letter) const;

    [[nodiscard]] FuzzyMatrix transition_of_word(const Word& u) const;

    friend bool operator==(const FuzzyAutomaton&, const FuzzyAutomaton&) = default;

private:
    Lattice lattice_;
    std::vector<std::string> states_;
    Alphabet alphabet_;
    std::vector<FuzzyMatrix> delta_;
};

class FuzzyRecognizer {
public:
    FuzzyRecognizer(FuzzyAutomaton automaton, FuzzyVector sigma, FuzzyVector tau);

    [[nodiscard]] const FuzzyAutomaton& automaton() const noexcept { return automaton_; }
    [[nodiscard]] const FuzzyVector& sigma() const noexcept { return sigma_; }
    [[nodiscard]] const FuzzyVector& tau() const noexcept { return tau_; }
    [[nodiscard]] const Lattice& lattice() const noexcept { return automaton_.lattice(); }
    [[nodiscard]] std::size_t size() const noexcept { return automaton_.size(); }
    [[nodiscard]] const Alphabet& alphabet() const noexcept { return automaton_.alphabet(); }
    [[nodiscard]] const FuzzyMatrix& delta(std::size_t letter) const { return automaton_.delta(letter); }

    friend bool operator==(const FuzzyRecognizer&, const FuzzyRecognizer&) = default;

private:
    FuzzyAutomaton automaton_;
    FuzzyVector sigma_;
    FuzzyVector tau_;
};

template <class M>
concept Machine = std::same_as<M, FuzzyAutomaton> || std::same_as<M, FuzzyRecognizer>;

[[nodiscard]] inline const FuzzyAutomaton& transitions(const FuzzyAutomaton& a) noexcept { return a; }
[[nodiscard]] inline const FuzzyAutomaton& transitions(const FuzzyRecognizer& r) noexcept { return r.automaton(); }

// sigma o delta_u o tau.
[[nodiscard]] Value recognize(const FuzzyRecognizer& r, const Word& u);
// Supremum of sigma o delta_u.
[[nodiscard]] Value generate(const FuzzyRecognizer& r, const Word& u);

[[nodiscard]] FuzzyAutomaton reverse(const FuzzyAutomaton& a);
[[nodiscard]] FuzzyRecognizer reverse(const FuzzyRecognizer& r);

// Relabels the states: state i of the input becomes state perm[i].
[[nodiscard]] FuzzyAutomaton permute_states(const FuzzyAutomaton& a, const std::vector<std::size_t>& perm);
[[nodiscard]] FuzzyRecognizer permute_states(const FuzzyRecognizer& r, const std::vector<std::size_t>& perm);

inline constexpr std::size_t default_isomorphism_cap = 12;

// A bijection phi with phi[i] = image in b of state i of a, or nullopt.
[[nodiscard]] std::optional<std::vector<std::size_t>> are_isomorphic(
    const FuzzyAutomaton& a, const FuzzyAutomaton& b, std::size_t cap = default_isomorphism_cap);
[[nodiscard]] std::optional<std::vector<std::size_t>> are_isomorphic(
    const FuzzyRecognizer& a, const FuzzyRecognizer& b, std::size_t cap = default_isomorphism_cap);

enum class Direction { forward, reverse };

struct FamilyLimits {
    std::size_t max_states = 4096;
    std::size_t max_depth = 64;
};

struct FamilyMember {
    Word word;
    FuzzyVector set;
};

// sigma_u (forward) or tau_u (reverse) over all words u, deduplicated, each
// tagged with a shortest word producing it.
struct FuzzyStateFamily {
    Direction direction;
    std::vector<FamilyMember> members;
    bool complete;
    bool truncated;
};

[[nodiscard]] FuzzyStateFamily reachable_state_family(const FuzzyRecognizer& r, Direction direction,
                                                      FamilyLimits limits = {});

// Deterministic recognizer whose states are the family members; requires a
// complete family. Reverse direction determinizes the reverse recognizer.
[[nodiscard]] FuzzyRecognizer determinize(const FuzzyRecognizer& r, Direction direction, FamilyLimits limits = {});

// Calls visit(u) for every word of length <= max_length, shortest first and
// lexicographically by letter index within a length.
void for_each_word(std::size_t alphabet_size, std::size_t max_length, const std::function<void(const Word&)>& visit);

[[nodiscard]] Word parse_word(const Alphabet& alphabet, std::string_view text);
[[nodiscard]] std::string format_word(const Alphabet& alphabet, const Word& u);

}  // namespace fuzzyq
