#include "fuzzyq/reduction.hpp"

#include <array>

#include "fuzzyq/error.hpp"

namespace fuzzyq {

namespace {

void require_relation_on(const FuzzyAutomaton& a, const FuzzyMatrix& r) {
    require_same(a.lattice(), r.lattice());
    if (r.rows() != a.size() || r.cols() != a.size()) {
        throw Error(ErrorKind::DimensionMismatch, "relation is " + std::to_string(r.rows()) + "x" +
                                                      std::to_string(r.cols()) + " but the automaton has " +
                                                      std::to_string(a.size()) + " states");
    }
}

void require_equivalence(const FuzzyMatrix& e) {
    if (!is_fuzzy_equivalence(e)) throw Error(ErrorKind::EquivalenceRequired, "relation is not a fuzzy equivalence");
}

// Kernel shared by the four step operators; inputs are already validated.
FuzzyMatrix step_kernel(const FuzzyAutomaton& a, const FuzzyMatrix& r, Side side, bool equivalence) {
    const Lattice& lat = a.lattice();
    const std::size_t n = a.size();
    std::vector<Value> out(n * n, Value(1));
    for (const auto& d : a.deltas()) {
        const FuzzyMatrix m = side == Side::right ? compose(d, r) : compose(r, d);
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = 0; q < n; ++q) {
                Value& slot = out[p * n + q];
                for (std::size_t c = 0; c < n && !slot.is_zero(); ++c) {
                    const Value& vp = side == Side::right ? m(p, c) : m(c, p);
                    const Value& vq = side == Side::right ? m(q, c) : m(c, q);
                    Value v = equivalence ? lat.biresiduum(vp, vq)
                                          : (side == Side::right ? lat.residuum(vq, vp) : lat.residuum(vp, vq));
                    if (v < slot) slot = std::move(v);
                }
            }
        }
    }
    return FuzzyMatrix(lat, n, n, std::move(out));
}

FuzzyMatrix strongly_kernel(const FuzzyAutomaton& a, Side side) {
    const Lattice& lat = a.lattice();
    const std::size_t n = a.size();
    std::vector<Value> out(n * n, Value(1));
    for (const auto& d : a.deltas()) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = 0; q < n; ++q) {
                Value& slot = out[p * n + q];
                for (std::size_t c = 0; c < n && !slot.is_zero(); ++c) {
                    Value v = side == Side::right ? lat.residuum(d(q, c), d(p, c)) : lat.residuum(d(c, p), d(c, q));
                    if (v < slot) slot = std::move(v);
                }
            }
        }
    }
    return FuzzyMatrix(lat, n, n, std::move(out));
}

struct WeakResult {
    FuzzyMatrix relation;
    bool truncated;
};

WeakResult weakly_relation(const FuzzyRecognizer& r, Side side, FamilyLimits limits, bool equivalence) {
    const auto family =
        reachable_state_family(r, side == Side::right ? Direction::reverse : Direction::forward, limits);
    FuzzyMatrix rel = FuzzyMatrix::universal(r.lattice(), r.size());
    for (const auto& member : family.members) {
        rel = meet(rel, side == Side::right ? from_fuzzy_set_left(member.set) : from_fuzzy_set_right(member.set));
    }
    if (equivalence) rel = natural_equivalence(rel);
    return {std::move(rel), family.truncated};
}

// R^tau for the right side, R_sigma for the left.
FuzzyMatrix endpoint_bound(const FuzzyRecognizer& r, Side side) {
    return side == Side::right ? from_fuzzy_set_left(r.tau()) : from_fuzzy_set_right(r.sigma());
}

std::vector<std::size_t> representatives(const std::vector<Afterset>& sets) {
    std::vector<std::size_t> reps;
    for (const auto& s : sets) reps.push_back(s.representative);
    return reps;
}

FuzzyAutomaton quotient_automaton(const FuzzyAutomaton& a, const FuzzyMatrix& r,
                                  const std::vector<std::size_t>& reps) {
    const std::size_t k = reps.size();
    std::vector<std::string> states;
    for (std::size_t rep : reps) states.push_back("Q" + a.states()[rep]);
    std::vector<FuzzyMatrix> delta;
    for (const auto& d : a.deltas()) {
        const FuzzyMatrix full = compose(compose(r, d), r);
        delta.push_back(FuzzyMatrix::tabulate(a.lattice(), k, k,
                                              [&](std::size_t i, std::size_t j) { return full(reps[i], reps[j]); }));
    }
    return FuzzyAutomaton(a.lattice(), std::move(states), a.alphabet(), std::move(delta));
}

FuzzyRecognizer quotient_recognizer(const FuzzyRecognizer& a, const FuzzyMatrix& r,
                                    const std::vector<std::size_t>& reps) {
    const FuzzyVector sigma = compose(a.sigma(), r);
    const FuzzyVector tau = compose(r, a.tau());
    std::vector<Value> s;
    std::vector<Value> t;
    for (std::size_t rep : reps) {
        s.push_back(sigma[rep]);
        t.push_back(tau[rep]);
    }
    return FuzzyRecognizer(quotient_automaton(a.automaton(), r, reps), FuzzyVector(a.lattice(), std::move(s)),
                           FuzzyVector(a.lattice(), std::move(t)));
}

template <Machine M>
M quotient_by(const M& a, const FuzzyMatrix& r, bool by_rows) {
    require_relation_on(transitions(a), r);
    const auto reps = representatives(by_rows ? aftersets(r) : foresets(r));
    if constexpr (std::same_as<M, FuzzyRecognizer>) {
        return quotient_recognizer(a, r, reps);
    } else {
        return quotient_automaton(a, r, reps);
    }
}

template <Machine M>
ReductionReport<M> make_report(const M& a, Method method, std::size_t iterates, bool converged, bool approximate,
                               FuzzyMatrix relation, FuzzyMatrix infimum) {
    M quotient = afterset_quotient(a, relation);
    std::vector<std::size_t> trace{a.size(), quotient.size()};
    return ReductionReport<M>{method,
                              iterates,
                              converged,
                              approximate,
                              std::move(relation),
                              std::move(infimum),
                              std::move(quotient),
                              std::move(trace)};
}

template <Machine M>
bool same_up_to_isomorphism(const M& a, const M& b) {
    if (a.size() != b.size()) return false;
    // Beyond the exact-test cap only literal equality counts as unchanged.
    if (a.size() > default_isomorphism_cap) return a == b;
    return are_isomorphic(a, b).has_value();
}

}  // namespace

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::ri: return "ri";
        case Method::li: return "li";
        case Method::rie: return "rie";
        case Method::lie: return "lie";
        case Method::cri: return "cri";
        case Method::cli_crisp: return "cli_crisp";
        case Method::sri: return "sri";
        case Method::sli: return "sli";
        case Method::wri: return "wri";
        case Method::wli: return "wli";
        case Method::wrie: return "wrie";
        case Method::wlie: return "wlie";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view tag) noexcept {
    static constexpr std::array all{Method::ri,  Method::li,  Method::rie, Method::lie, Method::cri,  Method::cli_crisp,
                                    Method::sri, Method::sli, Method::wri, Method::wli, Method::wrie, Method::wlie};
    if (tag == "cli") return Method::cli_crisp;
    for (Method m : all)
        if (to_string(m) == tag) return m;
    return std::nullopt;
}

Side side_of(Method m) noexcept {
    switch (m) {
        case Method::ri:
        case Method::rie:
        case Method::cri:
        case Method::sri:
        case Method::wri:
        case Method::wrie:
            return Side::right;
        default:
            return Side::left;
    }
}

bool needs_recognizer(Method m) noexcept {
    return m == Method::wri || m == Method::wli || m == Method::wrie || m == Method::wlie;
}

bool yields_equivalence(Method m) noexcept {
    return m == Method::rie || m == Method::lie || m == Method::wrie || m == Method::wlie;
}

FuzzyMatrix r_step(const FuzzyAutomaton& a, const FuzzyMatrix& r) {
    require_relation_on(a, r);
    require_quasi_order(r);
    return step_kernel(a, r, Side::right, false);
}

FuzzyMatrix l_step(const FuzzyAutomaton& a, const FuzzyMatrix& r) {
    require_relation_on(a, r);
    require_quasi_order(r);
    return step_kernel(a, r, Side::left, false);
}

FuzzyMatrix r_step_equivalence(const FuzzyAutomaton& a, const FuzzyMatrix& e) {
    require_relation_on(a, e);
    require_equivalence(e);
    return step_kernel(a, e, Side::right, true);
}

FuzzyMatrix l_step_equivalence(const FuzzyAutomaton& a, const FuzzyMatrix& e) {
    require_relation_on(a, e);
    require_equivalence(e);
    return step_kernel(a, e, Side::left, true);
}

template <Machine M>
ReductionReport<M> greatest_invariant(const M& m, Method method, const InvariantOptions& options) {
    const FuzzyAutomaton& a = transitions(m);
    const Lattice& lat = a.lattice();
    const Side side = side_of(method);
    const bool equivalence = yields_equivalence(method);
    if (options.max_iter == 0) throw Error(ErrorKind::Validation, "max_iter must be at least 1");

    FuzzyMatrix start = options.start.value_or(FuzzyMatrix::universal(lat, a.size()));
    require_relation_on(a, start);
    require_quasi_order(start);
    if (equivalence) require_equivalence(start);

    if constexpr (std::same_as<M, FuzzyRecognizer>) {
        FuzzyMatrix bound = endpoint_bound(m, side);
        if (equivalence) bound = natural_equivalence(bound);
        start = meet(start, bound);
    }

    switch (method) {
        case Method::sri:
        case Method::sli: {
            FuzzyMatrix rel = meet(strongly_kernel(a, side), start);
            FuzzyMatrix inf = rel;
            return make_report(m, method, 1, true, false, std::move(rel), std::move(inf));
        }
        case Method::wri:
        case Method::wli:
        case Method::wrie:
        case Method::wlie: {
            if constexpr (std::same_as<M, FuzzyRecognizer>) {
                auto weak = weakly_relation(m, side, options.family, equivalence);
                FuzzyMatrix rel = meet(weak.relation, start);
                FuzzyMatrix inf = rel;
                return make_report(m, method, 1, !weak.truncated, weak.truncated, std::move(rel), std::move(inf));
            } else {
                throw Error(ErrorKind::RecognizerRequired,
                            std::string(to_string(method)) + " is defined for recognizers only");
            }
        }
        default:
            break;
    }

    const bool crisp = method == Method::cri || method == Method::cli_crisp;
    FuzzyMatrix current = crisp ? crisp_part(start) : start;
    FuzzyMatrix infimum = current;
    std::size_t k = 1;
    bool converged = false;
    while (k < options.max_iter) {
        FuzzyMatrix refined = step_kernel(a, current, side, equivalence);
        if (crisp) refined = crisp_part(refined);
        FuzzyMatrix next = meet(current, refined);
        if (next == current) {
            converged = true;
            break;
        }
        current = std::move(next);
        infimum = meet(infimum, current);
        ++k;
    }
    return make_report(m, method, k, converged, false, std::move(current), std::move(infimum));
}

FuzzyMatrix greatest_strongly_invariant(const FuzzyAutomaton& a, Side side) { return strongly_kernel(a, side); }

FuzzyMatrix greatest_strongly_invariant(const FuzzyRecognizer& r, Side side) {
    return meet(strongly_kernel(r.automaton(), side), endpoint_bound(r, side));
}

ReductionReport<FuzzyRecognizer> greatest_weakly_invariant(const FuzzyRecognizer& r, Side side, FamilyLimits limits,
                                                           bool equivalence) {
    const Method method = side == Side::right ? (equivalence ? Method::wrie : Method::wri)
                                              : (equivalence ? Method::wlie : Method::wli);
    InvariantOptions options;
    options.family = limits;
    return greatest_invariant(r, method, options);
}

template <Machine M>
M afterset_quotient(const M& a, const FuzzyMatrix& r) {
    return quotient_by(a, r, true);
}

template <Machine M>
M foreset_quotient(const M& a, const FuzzyMatrix& r) {
    return quotient_by(a, r, false);
}

FuzzyMatrix quotient_quasi_order(const FuzzyMatrix& r, const FuzzyMatrix& s) {
    require_quasi_order(r);
    require_quasi_order(s);
    if (!leq(r, s)) throw Error(ErrorKind::ContainmentViolated, "R is not contained in S");
    const auto reps = representatives(aftersets(r));
    return FuzzyMatrix::tabulate(r.lattice(), reps.size(), reps.size(),
                                 [&](std::size_t i, std::size_t j) { return s(reps[i], reps[j]); });
}

std::string_view to_string(Schedule s) noexcept {
    switch (s) {
        case Schedule::rl: return "rl";
        case Schedule::lr: return "lr";
        case Schedule::wrl: return "wrl";
        case Schedule::wlr: return "wlr";
    }
    return "?";
}

std::optional<Schedule> parse_schedule(std::string_view tag) noexcept {
    for (Schedule s : {Schedule::rl, Schedule::lr, Schedule::wrl, Schedule::wlr})
        if (to_string(s) == tag) return s;
    return std::nullopt;
}

std::string_view to_string(StopRule s) noexcept {
    switch (s) {
        case StopRule::single_state: return "single_state";
        case StopRule::stable: return "stable";
        case StopRule::max_rounds: return "max_rounds";
        case StopRule::not_converged: return "not_converged";
    }
    return "?";
}

template <Machine M>
AlternateResult<M> alternate_reduce(const M& a, Schedule schedule, const AlternateOptions& options) {
    const bool weak = schedule == Schedule::wrl || schedule == Schedule::wlr;
    if constexpr (std::same_as<M, FuzzyAutomaton>) {
        if (weak) throw Error(ErrorKind::RecognizerRequired, "weak schedules need a recognizer");
    }
    Side side = (schedule == Schedule::rl || schedule == Schedule::wrl) ? Side::right : Side::left;
    InvariantOptions inner;
    inner.max_iter = options.max_iter;
    inner.family = options.family;

    std::vector<M> members{a};
    std::vector<ReductionReport<M>> rounds;
    std::optional<StopRule> stop;
    std::size_t unchanged_rounds = 0;
    for (std::size_t round = 0; round < options.max_rounds; ++round) {
        const M& current = members.back();
        if (current.size() == 1) {
            stop = StopRule::single_state;
            break;
        }
        const Method method = weak ? (side == Side::right ? Method::wri : Method::wli)
                                   : (side == Side::right ? Method::ri : Method::li);
        rounds.push_back(greatest_invariant(current, method, inner));
        if (!rounds.back().converged) {
            stop = StopRule::not_converged;
            break;
        }
        const bool unchanged = same_up_to_isomorphism(current, rounds.back().quotient);
        members.push_back(rounds.back().quotient);
        unchanged_rounds = unchanged ? unchanged_rounds + 1 : 0;
        if (unchanged_rounds == 2) {
            stop = StopRule::stable;
            break;
        }
        side = side == Side::right ? Side::left : Side::right;
    }
    if (!stop) stop = members.back().size() == 1 ? StopRule::single_state : StopRule::max_rounds;

    std::vector<std::size_t> sizes;
    for (const auto& m : members) sizes.push_back(m.size());
    std::size_t last = 0;
    while (sizes[last] != sizes.back()) ++last;
    std::vector<std::size_t> trace(sizes.begin(), sizes.begin() + static_cast<std::ptrdiff_t>(last + 1));
    M reduct = members[last];
    return AlternateResult<M>{std::move(rounds), std::move(sizes), std::move(trace), *stop, std::move(reduct)};
}

template ReductionReport<FuzzyAutomaton> greatest_invariant(const FuzzyAutomaton&, Method, const InvariantOptions&);
template ReductionReport<FuzzyRecognizer> greatest_invariant(const FuzzyRecognizer&, Method, const InvariantOptions&);
template FuzzyAutomaton afterset_quotient(const FuzzyAutomaton&, const FuzzyMatrix&);
template FuzzyRecognizer afterset_quotient(const FuzzyRecognizer&, const FuzzyMatrix&);
template FuzzyAutomaton foreset_quotient(const FuzzyAutomaton&, const FuzzyMatrix&);
template FuzzyRecognizer foreset_quotient(const FuzzyRecognizer&, const FuzzyMatrix&);
template AlternateResult<FuzzyAutomaton> alternate_reduce(const FuzzyAutomaton&, Schedule, const AlternateOptions&);
template AlternateResult<FuzzyRecognizer> alternate_reduce(const FuzzyRecognizer&, Schedule, const AlternateOptions&);

}  // namespace fuzzyq
