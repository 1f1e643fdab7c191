#include "fuzzyq/des.hpp"

#include <algorithm>

#include "fuzzyq/error.hpp"

namespace fuzzyq {

namespace {

bool contains(const Alphabet& alphabet, const std::string& letter) {
    return std::find(alphabet.begin(), alphabet.end(), letter) != alphabet.end();
}

std::size_t index_of(const Alphabet& alphabet, const std::string& letter) {
    return static_cast<std::size_t>(std::find(alphabet.begin(), alphabet.end(), letter) - alphabet.begin());
}

std::vector<std::string> pair_names(const FuzzyRecognizer& a, const FuzzyRecognizer& b) {
    std::vector<std::string> names;
    for (const auto& p : a.automaton().states())
        for (const auto& q : b.automaton().states()) names.push_back("(" + p + "," + q + ")");
    return names;
}

// Kronecker-style product of two vectors under otimes.
FuzzyVector pair_vector(const FuzzyVector& f, const FuzzyVector& g) {
    std::vector<Value> out;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) out.push_back(f.lattice().otimes(f[i], g[j]));
    return FuzzyVector(f.lattice(), std::move(out));
}

FuzzyMatrix pair_matrix(const FuzzyMatrix& p, const FuzzyMatrix& q) {
    const std::size_t m = q.rows();
    return FuzzyMatrix::tabulate(p.lattice(), p.rows() * m, p.cols() * m, [&](std::size_t r, std::size_t c) {
        return p.lattice().otimes(p(r / m, c / m), q(r % m, c % m));
    });
}

void require_subset(const Alphabet& x, const Alphabet& y) {
    for (const auto& letter : x)
        if (!contains(y, letter)) throw Error(ErrorKind::NotASuperset, "letter '" + letter + "' is missing from Y");
}

}  // namespace

ComposedRecognizer product_compose(const FuzzyRecognizer& a, const FuzzyRecognizer& b) {
    require_same(a.lattice(), b.lattice());
    Alphabet shared;
    Alphabet private_left;
    Alphabet private_right;
    for (const auto& x : a.alphabet()) (contains(b.alphabet(), x) ? shared : private_left).push_back(x);
    for (const auto& y : b.alphabet())
        if (!contains(a.alphabet(), y)) private_right.push_back(y);
    if (shared.empty()) throw Error(ErrorKind::EmptySharedAlphabet, "product needs a common letter");

    std::vector<FuzzyMatrix> delta;
    for (const auto& x : shared) {
        delta.push_back(pair_matrix(a.delta(index_of(a.alphabet(), x)), b.delta(index_of(b.alphabet(), x))));
    }
    FuzzyRecognizer product(FuzzyAutomaton(a.lattice(), pair_names(a, b), shared, std::move(delta)),
                            pair_vector(a.sigma(), b.sigma()), pair_vector(a.tau(), b.tau()));
    return {std::move(product),    a.automaton().states(),  b.automaton().states(), std::move(shared),
            std::move(private_left), std::move(private_right)};
}

ComposedRecognizer parallel_compose(const FuzzyRecognizer& a, const FuzzyRecognizer& b) {
    require_same(a.lattice(), b.lattice());
    const Lattice& lat = a.lattice();
    Alphabet alphabet = a.alphabet();
    Alphabet shared;
    Alphabet private_left;
    Alphabet private_right;
    for (const auto& x : a.alphabet()) (contains(b.alphabet(), x) ? shared : private_left).push_back(x);
    for (const auto& y : b.alphabet()) {
        if (!contains(a.alphabet(), y)) {
            private_right.push_back(y);
            alphabet.push_back(y);
        }
    }
    const std::size_t m = b.size();
    std::vector<FuzzyMatrix> delta;
    for (const auto& z : alphabet) {
        const bool in_a = contains(a.alphabet(), z);
        const bool in_b = contains(b.alphabet(), z);
        const FuzzyMatrix* da = in_a ? &a.delta(index_of(a.alphabet(), z)) : nullptr;
        const FuzzyMatrix* db = in_b ? &b.delta(index_of(b.alphabet(), z)) : nullptr;
        delta.push_back(FuzzyMatrix::tabulate(lat, a.size() * m, a.size() * m, [&](std::size_t r, std::size_t c) {
            const std::size_t p = r / m, q = r % m, p2 = c / m, q2 = c % m;
            if (da && db) return lat.otimes((*da)(p, p2), (*db)(q, q2));
            if (da) return q == q2 ? (*da)(p, p2) : Value(0);
            return p == p2 ? (*db)(q, q2) : Value(0);
        }));
    }
    FuzzyRecognizer composed(FuzzyAutomaton(lat, pair_names(a, b), alphabet, std::move(delta)),
                             pair_vector(a.sigma(), b.sigma()), pair_vector(a.tau(), b.tau()));
    return {std::move(composed),   a.automaton().states(),  b.automaton().states(), std::move(shared),
            std::move(private_left), std::move(private_right)};
}

FuzzyRecognizer input_extension(const FuzzyRecognizer& a, const Alphabet& y) {
    require_subset(a.alphabet(), y);
    std::vector<FuzzyMatrix> delta;
    for (const auto& letter : y) {
        delta.push_back(contains(a.alphabet(), letter) ? a.delta(index_of(a.alphabet(), letter))
                                                       : FuzzyMatrix::identity(a.lattice(), a.size()));
    }
    return FuzzyRecognizer(FuzzyAutomaton(a.lattice(), a.automaton().states(), y, std::move(delta)), a.sigma(),
                           a.tau());
}

Word natural_projection(const Word& u, const Alphabet& y, const Alphabet& x) {
    require_subset(x, y);
    Word out;
    for (std::size_t letter : u) {
        if (letter >= y.size()) throw Error(ErrorKind::UnknownLetter, "letter index " + std::to_string(letter));
        if (contains(x, y[letter])) out.push_back(index_of(x, y[letter]));
    }
    return out;
}

Value prefix_closure_at(const FuzzyRecognizer& r, const Word& u, std::size_t horizon) {
    FuzzyVector reach = r.tau();
    FuzzyVector level = r.tau();
    for (std::size_t step = 0; step < horizon; ++step) {
        FuzzyVector next = FuzzyVector::constant(r.lattice(), r.size(), Value(0));
        for (const auto& d : r.automaton().deltas()) next = join(next, compose(d, level));
        level = std::move(next);
        reach = join(reach, level);
    }
    FuzzyVector f = r.sigma();
    for (std::size_t x : u) {
        if (x >= r.alphabet().size()) throw Error(ErrorKind::UnknownLetter, "letter index " + std::to_string(x));
        f = compose(f, r.delta(x));
    }
    return overlap(f, reach);
}

FuzzyVector coreachability(const FuzzyRecognizer& r) {
    FuzzyVector reach = r.tau();
    for (std::size_t round = 0; round <= r.size(); ++round) {
        FuzzyVector next = reach;
        for (const auto& d : r.automaton().deltas()) next = join(next, compose(d, reach));
        if (next == reach) return reach;
        reach = std::move(next);
    }
    throw Error(ErrorKind::IterationLimitExceeded, "co-reachability did not stabilise");
}

Value prefix_closure(const FuzzyRecognizer& r, const Word& u) {
    FuzzyVector f = r.sigma();
    for (std::size_t x : u) {
        if (x >= r.alphabet().size()) throw Error(ErrorKind::UnknownLetter, "letter index " + std::to_string(x));
        f = compose(f, r.delta(x));
    }
    return overlap(f, coreachability(r));
}

std::string_view to_string(BlockingVerdict v) noexcept {
    switch (v) {
        case BlockingVerdict::nonblocking: return "nonblocking";
        case BlockingVerdict::blocking: return "blocking";
        case BlockingVerdict::undetermined: return "undetermined";
    }
    return "?";
}

BlockingResult check_blocking(const FuzzyRecognizer& r, std::size_t horizon, FamilyLimits limits) {
    if (horizon == 0) throw Error(ErrorKind::Validation, "horizon must be at least 1");
    const FuzzyVector reach = coreachability(r);
    const auto family = reachable_state_family(r, Direction::forward, limits);
    if (family.complete) {
        // Members come out shortest word first, so the first gap is a shortest witness.
        for (const auto& member : family.members) {
            if (overlap(member.set, reach) < supremum(member.set)) {
                return {BlockingVerdict::blocking, member.word, true};
            }
        }
        return {BlockingVerdict::nonblocking, std::nullopt, true};
    }
    std::optional<Word> witness;
    for_each_word(r.alphabet().size(), horizon, [&](const Word& u) {
        if (witness) return;
        FuzzyVector f = r.sigma();
        for (std::size_t x : u) f = compose(f, r.delta(x));
        if (overlap(f, reach) < supremum(f)) witness = u;
    });
    if (witness) return {BlockingVerdict::blocking, witness, false};
    return {BlockingVerdict::undetermined, std::nullopt, false};
}

BlockingResult conflict_check(const FuzzyRecognizer& a, const FuzzyRecognizer& b, std::size_t horizon,
                              FamilyLimits limits) {
    return check_blocking(parallel_compose(a, b).recognizer, horizon, limits);
}

}  // namespace fuzzyq
