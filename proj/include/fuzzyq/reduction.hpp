#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "fuzzyq/automaton.hpp"

namespace fuzzyq {

enum class Method { ri, li, rie, lie, cri, cli_crisp, sri, sli, wri, wli, wrie, wlie };
enum class Side { right, left };

[[nodiscard]] std::string_view to_string(Method m) noexcept;
// Accepts the tags above; "cli" is an alias of cli_crisp.
[[nodiscard]] std::optional<Method> parse_method(std::string_view tag) noexcept;
[[nodiscard]] Side side_of(Method m) noexcept;
[[nodiscard]] bool needs_recognizer(Method m) noexcept;
[[nodiscard]] bool yields_equivalence(Method m) noexcept;

struct InvariantOptions {
    std::optional<FuzzyMatrix> start;
    std::size_t max_iter = 256;
    FamilyLimits family;
};

template <Machine M>
struct ReductionReport {
    Method method;
    // Index k of the returned iterate R_k, with R_1 the start relation.
    std::size_t iterates;
    bool converged;
    // Set when a weakly invariant relation was computed from a truncated family.
    bool approximate;
    FuzzyMatrix quasi_order;
    // Meet of every computed iterate.
    FuzzyMatrix iterate_infimum;
    M quotient;
    std::vector<std::size_t> state_trace;
};

// One refinement kernel each: R^r(a,b) = inf_x inf_c (d_x o R)(b,c) -> (d_x o R)(a,c)
// and R^l(a,b) = inf_x inf_c (R o d_x)(c,a) -> (R o d_x)(c,b).
[[nodiscard]] FuzzyMatrix r_step(const FuzzyAutomaton& a, const FuzzyMatrix& r);
[[nodiscard]] FuzzyMatrix l_step(const FuzzyAutomaton& a, const FuzzyMatrix& r);
// Same kernels with the biresiduum, for fuzzy equivalences.
[[nodiscard]] FuzzyMatrix r_step_equivalence(const FuzzyAutomaton& a, const FuzzyMatrix& e);
[[nodiscard]] FuzzyMatrix l_step_equivalence(const FuzzyAutomaton& a, const FuzzyMatrix& e);

template <Machine M>
[[nodiscard]] ReductionReport<M> greatest_invariant(const M& a, Method method, const InvariantOptions& options = {});

// Closed form; on recognizers it is met with R^tau (right) or R_sigma (left).
[[nodiscard]] FuzzyMatrix greatest_strongly_invariant(const FuzzyAutomaton& a, Side side);
[[nodiscard]] FuzzyMatrix greatest_strongly_invariant(const FuzzyRecognizer& r, Side side);

[[nodiscard]] ReductionReport<FuzzyRecognizer> greatest_weakly_invariant(const FuzzyRecognizer& r, Side side,
                                                                         FamilyLimits limits = {},
                                                                         bool equivalence = false);

// States are the distinct aftersets (resp. foresets) named "Q<rep>", with
// transitions R o d_x o R sampled at representatives.
template <Machine M>
[[nodiscard]] M afterset_quotient(const M& a, const FuzzyMatrix& r);
template <Machine M>
[[nodiscard]] M foreset_quotient(const M& a, const FuzzyMatrix& r);

// S/R(R_a, R_b) = S(a,b) on the afterset representatives of R.
[[nodiscard]] FuzzyMatrix quotient_quasi_order(const FuzzyMatrix& r, const FuzzyMatrix& s);

enum class Schedule { rl, lr, wrl, wlr };
[[nodiscard]] std::string_view to_string(Schedule s) noexcept;
[[nodiscard]] std::optional<Schedule> parse_schedule(std::string_view tag) noexcept;

enum class StopRule { single_state, stable, max_rounds, not_converged };
[[nodiscard]] std::string_view to_string(StopRule s) noexcept;

struct AlternateOptions {
    std::size_t max_rounds = 16;
    std::size_t max_iter = 256;
    FamilyLimits family;
};

template <Machine M>
struct AlternateResult {
    std::vector<ReductionReport<M>> rounds;
    // State counts of the input and of every round's quotient.
    std::vector<std::size_t> sizes;
    // The shortest prefix of sizes after which the count no longer drops.
    std::vector<std::size_t> state_trace;
    StopRule stop;
    M reduct;
};

// Alternates right and left reductions, starting with the schedule's first
// side. Stops once both sides leave the machine unchanged up to isomorphism,
// when one state remains, when a round fails to converge, or at max_rounds.
template <Machine M>
[[nodiscard]] AlternateResult<M> alternate_reduce(const M& a, Schedule schedule, const AlternateOptions& options = {});

}  // namespace fuzzyq
