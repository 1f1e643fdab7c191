#include "fuzzyq/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "fuzzyq/error.hpp"

namespace fuzzyq {

FuzzyAutomaton::FuzzyAutomaton(Lattice lattice, std::vector<std::string> states, Alphabet alphabet,
                               std::vector<FuzzyMatrix> delta)
    : lattice_(lattice), states_(std::move(states)), alphabet_(std::move(alphabet)), delta_(std::move(delta)) {
    if (alphabet_.empty()) throw Error(ErrorKind::Validation, "alphabet must be nonempty");
    if (states_.empty()) throw Error(ErrorKind::Validation, "state set must be nonempty");
    if (delta_.size() != alphabet_.size()) {
        throw Error(ErrorKind::DimensionMismatch, std::to_string(delta_.size()) + " transition matrices for " +
                                                      std::to_string(alphabet_.size()) + " letters");
    }
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (alphabet_[i] == alphabet_[j]) throw Error(ErrorKind::Validation, "duplicate letter '" + alphabet_[i] + "'");
    }
    for (std::size_t i = 0; i < delta_.size(); ++i) {
        require_same(lattice_, delta_[i].lattice());
        if (delta_[i].rows() != size() || delta_[i].cols() != size()) {
            throw Error(ErrorKind::DimensionMismatch,
                        "matrix of letter '" + alphabet_[i] + "' does not match " + std::to_string(size()) + " states");
        }
    }
}

std::size_t FuzzyAutomaton::letter_index(std::string_view letter) const {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), letter);
    if (it == alphabet_.end()) throw Error(ErrorKind::UnknownLetter, "letter '" + std::string(letter) + "'");
    return static_cast<std::size_t>(it - alphabet_.begin());
}

FuzzyMatrix FuzzyAutomaton::transition_of_word(const Word& u) const {
    FuzzyMatrix m = FuzzyMatrix::identity(lattice_, size());
    for (std::size_t x : u) {
        if (x >= alphabet_.size()) throw Error(ErrorKind::UnknownLetter, "letter index " + std::to_string(x));
        m = compose(m, delta_[x]);
    }
    return m;
}

FuzzyRecognizer::FuzzyRecognizer(FuzzyAutomaton automaton, FuzzyVector sigma, FuzzyVector tau)
    : automaton_(std::move(automaton)), sigma_(std::move(sigma)), tau_(std::move(tau)) {
    require_same(automaton_.lattice(), sigma_.lattice());
    require_same(automaton_.lattice(), tau_.lattice());
    if (sigma_.size() != automaton_.size() || tau_.size() != automaton_.size()) {
        throw Error(ErrorKind::DimensionMismatch, "sigma and tau must have one entry per state");
    }
}

namespace {

FuzzyVector run_forward(const FuzzyRecognizer& r, const Word& u) {
    FuzzyVector f = r.sigma();
    for (std::size_t x : u) {
        if (x >= r.alphabet().size()) throw Error(ErrorKind::UnknownLetter, "letter index " + std::to_string(x));
        f = compose(f, r.delta(x));
    }
    return f;
}

using Signature = std::vector<std::vector<Value>>;

std::vector<Signature> signatures(const FuzzyAutomaton& a, const FuzzyVector* sigma, const FuzzyVector* tau) {
    std::vector<Signature> out(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) {
        Signature& sig = out[s];
        if (sigma) sig.push_back({(*sigma)[s], (*tau)[s]});
        for (const auto& d : a.deltas()) {
            sig.push_back({d(s, s)});
            auto row = d.row(s).entries();
            auto col = d.column(s).entries();
            std::sort(row.begin(), row.end());
            std::sort(col.begin(), col.end());
            sig.push_back(std::move(row));
            sig.push_back(std::move(col));
        }
    }
    return out;
}

std::optional<std::vector<std::size_t>> isomorphism(const FuzzyAutomaton& a, const FuzzyVector* sa,
                                                    const FuzzyVector* ta, const FuzzyAutomaton& b,
                                                    const FuzzyVector* sb, const FuzzyVector* tb, std::size_t cap) {
    require_same(a.lattice(), b.lattice());
    if (a.alphabet() != b.alphabet()) throw Error(ErrorKind::AlphabetMismatch, "isomorphism needs equal alphabets");
    if (a.size() != b.size()) return std::nullopt;
    const std::size_t n = a.size();
    if (n > cap) {
        throw Error(ErrorKind::SizeLimitExceeded,
                    "isomorphism test limited to " + std::to_string(cap) + " states, got " + std::to_string(n));
    }
    const auto sig_a = signatures(a, sa, ta);
    const auto sig_b = signatures(b, sb, tb);
    std::vector<std::vector<std::size_t>> candidates(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (sig_a[i] == sig_b[j]) candidates[i].push_back(j);
        if (candidates[i].empty()) return std::nullopt;
    }

    std::vector<std::size_t> phi(n);
    std::vector<bool> used(n, false);
    const std::size_t letters = a.alphabet().size();
    std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t j : candidates[i]) {
            if (used[j]) continue;
            phi[i] = j;
            bool consistent = true;
            for (std::size_t x = 0; x < letters && consistent; ++x) {
                const auto& da = a.delta(x);
                const auto& db = b.delta(x);
                for (std::size_t k = 0; k <= i && consistent; ++k) {
                    consistent = da(i, k) == db(j, phi[k]) && da(k, i) == db(phi[k], j);
                }
            }
            if (!consistent) continue;
            used[j] = true;
            if (extend(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    if (extend(0)) return phi;
    return std::nullopt;
}

}  // namespace

Value recognize(const FuzzyRecognizer& r, const Word& u) { return overlap(run_forward(r, u), r.tau()); }

Value generate(const FuzzyRecognizer& r, const Word& u) { return supremum(run_forward(r, u)); }

FuzzyAutomaton reverse(const FuzzyAutomaton& a) {
    std::vector<FuzzyMatrix> delta;
    for (const auto& d : a.deltas()) delta.push_back(transpose(d));
    return FuzzyAutomaton(a.lattice(), a.states(), a.alphabet(), std::move(delta));
}

FuzzyRecognizer reverse(const FuzzyRecognizer& r) { return FuzzyRecognizer(reverse(r.automaton()), r.tau(), r.sigma()); }

FuzzyAutomaton permute_states(const FuzzyAutomaton& a, const std::vector<std::size_t>& perm) {
    const std::size_t n = a.size();
    if (perm.size() != n) throw Error(ErrorKind::DimensionMismatch, "permutation length differs from state count");
    std::vector<std::size_t> inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || inv[perm[i]] != n) throw Error(ErrorKind::Validation, "not a permutation");
        inv[perm[i]] = i;
    }
    std::vector<std::string> states(n);
    for (std::size_t i = 0; i < n; ++i) states[perm[i]] = a.states()[i];
    std::vector<FuzzyMatrix> delta;
    for (const auto& d : a.deltas()) {
        delta.push_back(FuzzyMatrix::tabulate(a.lattice(), n, n,
                                              [&](std::size_t r, std::size_t c) { return d(inv[r], inv[c]); }));
    }
    return FuzzyAutomaton(a.lattice(), std::move(states), a.alphabet(), std::move(delta));
}

FuzzyRecognizer permute_states(const FuzzyRecognizer& r, const std::vector<std::size_t>& perm) {
    FuzzyAutomaton a = permute_states(r.automaton(), perm);
    std::vector<Value> sigma(r.size());
    std::vector<Value> tau(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        sigma[perm[i]] = r.sigma()[i];
        tau[perm[i]] = r.tau()[i];
    }
    return FuzzyRecognizer(std::move(a), FuzzyVector(r.lattice(), std::move(sigma)),
                           FuzzyVector(r.lattice(), std::move(tau)));
}

std::optional<std::vector<std::size_t>> are_isomorphic(const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                                                       std::size_t cap) {
    return isomorphism(a, nullptr, nullptr, b, nullptr, nullptr, cap);
}

std::optional<std::vector<std::size_t>> are_isomorphic(const FuzzyRecognizer& a, const FuzzyRecognizer& b,
                                                       std::size_t cap) {
    return isomorphism(a.automaton(), &a.sigma(), &a.tau(), b.automaton(), &b.sigma(), &b.tau(), cap);
}

FuzzyStateFamily reachable_state_family(const FuzzyRecognizer& r, Direction direction, FamilyLimits limits) {
    if (limits.max_states == 0) throw Error(ErrorKind::Validation, "max_states must be at least 1");
    const bool forward = direction == Direction::forward;
    FuzzyStateFamily family{direction, {}, true, false};
    std::map<std::vector<Value>, std::size_t> index;
    auto add = [&](Word word, FuzzyVector set) {
        index.emplace(set.entries(), family.members.size());
        family.members.push_back({std::move(word), std::move(set)});
    };
    add({}, forward ? r.sigma() : r.tau());
    for (std::size_t next = 0; next < family.members.size(); ++next) {
        for (std::size_t x = 0; x < r.alphabet().size(); ++x) {
            const FuzzyVector& f = family.members[next].set;
            FuzzyVector image = forward ? compose(f, r.delta(x)) : compose(r.delta(x), f);
            if (index.contains(image.entries())) continue;
            const Word& parent = family.members[next].word;
            if (parent.size() >= limits.max_depth || family.members.size() >= limits.max_states) {
                family.truncated = true;
                family.complete = false;
                continue;
            }
            Word word;
            if (forward) {
                word = parent;
                word.push_back(x);
            } else {
                word.push_back(x);
                word.insert(word.end(), parent.begin(), parent.end());
            }
            add(std::move(word), std::move(image));
        }
    }
    return family;
}

FuzzyRecognizer determinize(const FuzzyRecognizer& r, Direction direction, FamilyLimits limits) {
    const FuzzyRecognizer source = direction == Direction::forward ? r : reverse(r);
    const FuzzyStateFamily family = reachable_state_family(source, Direction::forward, limits);
    if (!family.complete) {
        throw Error(ErrorKind::SizeLimitExceeded, "state family did not close within the configured limits");
    }
    const Lattice& lat = r.lattice();
    const std::size_t n = family.members.size();
    std::map<std::vector<Value>, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(family.members[i].set.entries(), i);

    std::vector<std::string> states;
    for (std::size_t i = 0; i < n; ++i) states.push_back("D" + std::to_string(i));
    std::vector<FuzzyMatrix> delta;
    for (std::size_t x = 0; x < source.alphabet().size(); ++x) {
        std::vector<Value> entries(n * n, Value(0));
        for (std::size_t i = 0; i < n; ++i) {
            const auto image = compose(family.members[i].set, source.delta(x));
            entries[i * n + index.at(image.entries())] = Value(1);
        }
        delta.emplace_back(lat, n, n, std::move(entries));
    }
    std::vector<Value> sigma(n, Value(0));
    sigma[0] = Value(1);
    std::vector<Value> tau;
    for (const auto& m : family.members) tau.push_back(overlap(m.set, source.tau()));
    return FuzzyRecognizer(FuzzyAutomaton(lat, std::move(states), source.alphabet(), std::move(delta)),
                           FuzzyVector(lat, std::move(sigma)), FuzzyVector(lat, std::move(tau)));
}

void for_each_word(std::size_t alphabet_size, std::size_t max_length, const std::function<void(const Word&)>& visit) {
    visit(Word{});
    if (alphabet_size == 0) return;
    for (std::size_t len = 1; len <= max_length; ++len) {
        Word u(len, 0);
        while (true) {
            visit(u);
            std::size_t pos = len;
            while (pos > 0 && u[pos - 1] + 1 == alphabet_size) u[--pos] = 0;
            if (pos == 0) break;
            ++u[pos - 1];
        }
    }
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
    Word u;
    if (text.empty()) return u;
    std::size_t start = 0;
    while (true) {
        const std::size_t dot = text.find('.', start);
        const std::string_view letter = text.substr(start, dot == std::string_view::npos ? dot : dot - start);
        auto it = std::find(alphabet.begin(), alphabet.end(), letter);
        if (it == alphabet.end()) throw Error(ErrorKind::UnknownLetter, "letter '" + std::string(letter) + "'");
        u.push_back(static_cast<std::size_t>(it - alphabet.begin()));
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return u;
}

std::string format_word(const Alphabet& alphabet, const Word& u) {
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) out += '.';
        out += alphabet.at(u[i]);
    }
    return out;
}

}  // namespace fuzzyq
