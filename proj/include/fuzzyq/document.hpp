#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "fuzzyq/automaton.hpp"
#include "fuzzyq/reduction.hpp"

namespace fuzzyq {

using AnyMachine = std::variant<FuzzyAutomaton, FuzzyRecognizer>;

inline constexpr int document_version = 1;

[[nodiscard]] AnyMachine parse_document(std::string_view text);
[[nodiscard]] AnyMachine load(const std::filesystem::path& path);

[[nodiscard]] nlohmann::ordered_json to_json(const Lattice& lattice);
[[nodiscard]] nlohmann::ordered_json to_json(const FuzzyVector& f);
[[nodiscard]] nlohmann::ordered_json to_json(const FuzzyMatrix& m);
[[nodiscard]] nlohmann::ordered_json to_json(const FuzzyAutomaton& a);
[[nodiscard]] nlohmann::ordered_json to_json(const FuzzyRecognizer& r);
[[nodiscard]] nlohmann::ordered_json to_json(const AnyMachine& m);

template <Machine M>
[[nodiscard]] nlohmann::ordered_json to_json(const ReductionReport<M>& report) {
    nlohmann::ordered_json state_trace = nlohmann::ordered_json::array();
    for (std::size_t s : report.state_trace) state_trace.push_back(s);
    return {{"method", std::string(to_string(report.method))},
            {"iterates", report.iterates},
            {"converged", report.converged},
            {"approximate", report.approximate},
            {"quasi_order", to_json(report.quasi_order)},
            {"iterate_infimum", to_json(report.iterate_infimum)},
            {"quotient", to_json(report.quotient)},
            {"state_trace", std::move(state_trace)}};
}

// Compact, deterministic, newline-terminated.
[[nodiscard]] std::string serialize(const FuzzyAutomaton& a);
[[nodiscard]] std::string serialize(const FuzzyRecognizer& r);
[[nodiscard]] std::string serialize(const AnyMachine& m);

}  // namespace fuzzyq
