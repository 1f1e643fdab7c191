#pragma once

#include <string>
#include <vector>

#include "fuzzyq/automaton.hpp"

namespace fixtures {

using namespace fuzzyq;

using Rows = std::vector<std::vector<std::string>>;

inline FuzzyMatrix mat(const Lattice& lat, const Rows& rows) { return FuzzyMatrix::parse(lat, rows); }

inline FuzzyVector vec(const Lattice& lat, const std::vector<std::string>& entries) {
    return FuzzyVector::parse(lat, entries);
}

inline std::vector<std::string> numbered(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

inline FuzzyAutomaton automaton(const Lattice& lat, const Alphabet& letters, std::vector<FuzzyMatrix> delta) {
    const std::size_t n = delta.front().rows();
    return FuzzyAutomaton(lat, numbered(n), letters, std::move(delta));
}

inline FuzzyRecognizer recognizer(const Lattice& lat, const Alphabet& letters, std::vector<FuzzyMatrix> delta,
                                  const std::vector<std::string>& sigma, const std::vector<std::string>& tau) {
    return FuzzyRecognizer(automaton(lat, letters, std::move(delta)), vec(lat, sigma), vec(lat, tau));
}

inline const Lattice B = Lattice::boolean();
inline const Lattice G = Lattice::godel();
inline const Lattice P = Lattice::product();

// Goedel quasi-order whose natural equivalence has a single fuzzy pair.
inline FuzzyMatrix worked_godel_quasi_order() {
    return mat(G, {{"1", "0.3", "0.3"}, {"0", "1", "0.2"}, {"0", "1", "1"}});
}

// Recognizer for which the upper-triangular order fails the general system.
inline FuzzyRecognizer triangular_failure() {
    return recognizer(B, {"x", "y"},
                      {mat(B, {{"1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}),
                       mat(B, {{"0", "1", "0"}, {"1", "1", "1"}, {"1", "0", "0"}})},
                      {"1", "1", "1"}, {"1", "0", "1"});
}

inline FuzzyMatrix upper_triangular() { return mat(B, {{"1", "1", "1"}, {"0", "1", "1"}, {"0", "0", "1"}}); }

// Two solutions of the general system whose join is not a solution.
inline FuzzyRecognizer no_greatest_solution() {
    return recognizer(B, {"x"}, {mat(B, {{"0", "1", "0"}, {"0", "0", "0"}, {"0", "0", "0"}})}, {"1", "1", "1"},
                      {"1", "1", "1"});
}

inline FuzzyMatrix four_state_x() {
    return mat(B, {{"1", "0", "0", "0"}, {"0", "0", "0", "1"}, {"0", "0", "0", "0"}, {"0", "0", "0", "0"}});
}

// Accepts exactly the one-letter word; quotienting never reaches the two-state minimum.
inline FuzzyRecognizer non_minimal_witness() {
    return recognizer(B, {"x"}, {four_state_x()}, {"0", "1", "0", "0"}, {"0", "0", "1", "1"});
}

inline FuzzyRecognizer two_state_minimum() {
    return recognizer(B, {"x"}, {mat(B, {{"0", "1"}, {"0", "0"}})}, {"1", "0"}, {"0", "1"});
}

// Product-lattice automaton whose right iteration never stops.
inline FuzzyAutomaton product_diagonal() { return automaton(P, {"x"}, {mat(P, {{"0.2", "0"}, {"0", "0.1"}})}); }

// Product-lattice automaton: the quasi-order iteration stops, the equivalence one does not.
inline FuzzyAutomaton product_three_state() {
    return automaton(P, {"x"}, {mat(P, {{"0", "1", "1"}, {"0", "1", "1"}, {"1/2", "0", "0"}})});
}

// Boolean automaton where E_{R^ri} quotients differently from R^ri.
inline FuzzyAutomaton boolean_xy() {
    return automaton(B, {"x", "y"},
                     {mat(B, {{"1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}),
                      mat(B, {{"1", "0", "0"}, {"1", "1", "0"}, {"1", "0", "0"}})});
}

inline FuzzyAutomaton godel_tenths() {
    return automaton(G, {"x"}, {mat(G, {{"0", "0.1", "0"}, {"0.2", "0", "0"}, {"0.1", "0", "0"}})});
}

// The reverse family is {tau, 0}; sigma plays no role.
inline FuzzyRecognizer reverse_family_pair() {
    return recognizer(B, {"x"}, {four_state_x()}, {"1", "0", "0", "0"}, {"0", "0", "1", "0"});
}

inline FuzzyRecognizer weak_alternation() {
    return recognizer(B, {"x", "y"},
                      {mat(B, {{"1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}),
                       mat(B, {{"0", "1", "0"}, {"1", "1", "1"}, {"1", "0", "0"}})},
                      {"1", "0", "0"}, {"0", "1", "1"});
}

// Strongly right invariant reduction that keeps shrinking when repeated.
inline FuzzyAutomaton strong_descent() {
    return automaton(B, {"x"}, {mat(B, {{"1", "0", "1"}, {"1", "0", "0"}, {"1", "0", "0"}})});
}

// Nonblocking, but its weakly right invariant quotient blocks.
inline FuzzyRecognizer blocking_after_quotient() {
    return recognizer(B, {"x"}, {four_state_x()}, {"0", "1", "0", "1"}, {"0", "1", "0", "1"});
}

inline FuzzyRecognizer always_on(const Lattice& lat = B, const Alphabet& letters = {"x"}) {
    std::vector<FuzzyMatrix> delta(letters.size(), FuzzyMatrix::identity(lat, 1));
    return FuzzyRecognizer(FuzzyAutomaton(lat, {"1"}, letters, delta), vec(lat, {"1"}), vec(lat, {"1"}));
}

}  // namespace fixtures
