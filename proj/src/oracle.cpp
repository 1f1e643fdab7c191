#include "fuzzyq/oracle.hpp"

#include <array>
#include <cstdint>

#include "fuzzyq/error.hpp"

namespace fuzzyq {

namespace {

struct Frontier {
    Word word;
    FuzzyVector left;
    FuzzyVector right;
};

// Fixed-size crisp relation, row-major bits.
struct Bits {
    std::size_t n = 0;
    std::array<std::array<bool, brute_force_limit>, brute_force_limit> m{};

    friend bool operator==(const Bits& a, const Bits& b) { return a.n == b.n && a.m == b.m; }
};

Bits times(const Bits& p, const Bits& q) {
    Bits out{p.n, {}};
    for (std::size_t a = 0; a < p.n; ++a)
        for (std::size_t b = 0; b < p.n; ++b)
            for (std::size_t c = 0; c < p.n && !out.m[a][b]; ++c) out.m[a][b] = p.m[a][c] && q.m[c][b];
    return out;
}

using BitVector = std::array<bool, brute_force_limit>;

BitVector times(const Bits& p, const BitVector& f) {
    BitVector out{};
    for (std::size_t a = 0; a < p.n; ++a)
        for (std::size_t b = 0; b < p.n; ++b) out[a] = out[a] || (p.m[a][b] && f[b]);
    return out;
}

BitVector times(const BitVector& f, const Bits& p) {
    BitVector out{};
    for (std::size_t b = 0; b < p.n; ++b)
        for (std::size_t a = 0; a < p.n; ++a) out[b] = out[b] || (f[a] && p.m[a][b]);
    return out;
}

Bits to_bits(const FuzzyMatrix& m) {
    Bits out{m.rows(), {}};
    for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b < m.cols(); ++b) out.m[a][b] = m(a, b).is_one();
    return out;
}

BitVector to_bits(const FuzzyVector& f) {
    BitVector out{};
    for (std::size_t a = 0; a < f.size(); ++a) out[a] = f[a].is_one();
    return out;
}

FuzzyMatrix from_bits(const Bits& b, const Lattice& lat) {
    return FuzzyMatrix::tabulate(lat, b.n, b.n, [&](std::size_t r, std::size_t c) { return Value(b.m[r][c] ? 1 : 0); });
}

std::vector<Bits> crisp_quasi_orders(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b) off.emplace_back(a, b);
    std::vector<Bits> out;
    for (std::uint32_t mask = 0; mask < (1u << off.size()); ++mask) {
        Bits r{n, {}};
        for (std::size_t a = 0; a < n; ++a) r.m[a][a] = true;
        for (std::size_t i = 0; i < off.size(); ++i) r.m[off[i].first][off[i].second] = ((mask >> i) & 1u) != 0;
        bool transitive = true;
        for (std::size_t a = 0; a < n && transitive; ++a)
            for (std::size_t b = 0; b < n && transitive; ++b)
                for (std::size_t c = 0; c < n && transitive; ++c)
                    if (r.m[a][b] && r.m[b][c] && !r.m[a][c]) transitive = false;
        if (transitive) out.push_back(r);
    }
    return out;
}

FuzzyMatrix brute_force(const FuzzyAutomaton& a, const FuzzyVector* sigma, const FuzzyVector* tau, Side side) {
    if (a.lattice().kind() != LatticeKind::boolean) {
        throw Error(ErrorKind::NotBoolean, "exhaustive search needs the boolean lattice, got " + a.lattice().name());
    }
    const std::size_t n = a.size();
    if (n > brute_force_limit) {
        throw Error(ErrorKind::TooLarge, "exhaustive search limited to " + std::to_string(brute_force_limit) + " states");
    }
    std::vector<Bits> delta;
    for (const auto& d : a.deltas()) delta.push_back(to_bits(d));

    std::vector<Bits> solutions;
    for (const Bits& r : crisp_quasi_orders(n)) {
        bool ok = true;
        for (const Bits& d : delta) {
            const Bits rdr = times(times(r, d), r);
            ok = ok && rdr == (side == Side::right ? times(d, r) : times(r, d));
        }
        if (ok && sigma) {
            if (side == Side::right) {
                const BitVector t = to_bits(*tau);
                ok = times(r, t) == t;
            } else {
                const BitVector s = to_bits(*sigma);
                ok = times(s, r) == s;
            }
        }
        if (ok) solutions.push_back(r);
    }
    Bits top{n, {}};
    for (const Bits& s : solutions)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) top.m[p][q] = top.m[p][q] || s.m[p][q];
    for (const Bits& s : solutions)
        if (s == top) return from_bits(top, a.lattice());
    throw Error(ErrorKind::Validation, "the invariant quasi-orders have no greatest element");
}

}  // namespace

EquivalenceVerdict languages_equal_up_to(const FuzzyRecognizer& a, const FuzzyRecognizer& b, std::size_t k,
                                         LanguageKind kind) {
    require_same(a.lattice(), b.lattice());
    if (a.alphabet() != b.alphabet()) throw Error(ErrorKind::AlphabetMismatch, "alphabets differ");
    auto value = [&](const FuzzyVector& f, const FuzzyRecognizer& r) {
        return kind == LanguageKind::recognized ? overlap(f, r.tau()) : supremum(f);
    };
    std::vector<Frontier> level{{Word{}, a.sigma(), b.sigma()}};
    for (std::size_t len = 0;; ++len) {
        for (const auto& item : level) {
            Value va = value(item.left, a);
            Value vb = value(item.right, b);
            if (va != vb) {
                return {static_cast<long>(len) - 1, Divergence{item.word, std::move(va), std::move(vb)}};
            }
        }
        if (len == k) break;
        std::vector<Frontier> next;
        for (const auto& item : level) {
            for (std::size_t x = 0; x < a.alphabet().size(); ++x) {
                Word w = item.word;
                w.push_back(x);
                next.push_back({std::move(w), compose(item.left, a.delta(x)), compose(item.right, b.delta(x))});
            }
        }
        level = std::move(next);
    }
    return {static_cast<long>(k), std::nullopt};
}

std::vector<FuzzyMatrix> boolean_quasi_orders(std::size_t n) {
    if (n > brute_force_limit) throw Error(ErrorKind::TooLarge, "at most 4 states");
    std::vector<FuzzyMatrix> out;
    for (const Bits& b : crisp_quasi_orders(n)) out.push_back(from_bits(b, Lattice::boolean()));
    return out;
}

FuzzyMatrix brute_force_greatest_invariant(const FuzzyAutomaton& a, Side side) {
    return brute_force(a, nullptr, nullptr, side);
}

FuzzyMatrix brute_force_greatest_invariant(const FuzzyRecognizer& r, Side side) {
    return brute_force(r.automaton(), &r.sigma(), &r.tau(), side);
}

GeneralSystemCheck check_general_system(const FuzzyRecognizer& r, const FuzzyMatrix& rel, std::size_t k) {
    require_same(r.lattice(), rel.lattice());
    if (rel.rows() != r.size() || rel.cols() != r.size()) {
        throw Error(ErrorKind::DimensionMismatch, "relation does not match the recognizer");
    }
    require_quasi_order(rel);
    std::vector<Frontier> level{{Word{}, compose(r.sigma(), rel), r.sigma()}};
    for (std::size_t len = 0;; ++len) {
        for (const auto& item : level) {
            if (overlap(item.left, r.tau()) != overlap(item.right, r.tau())) return {false, item.word};
        }
        if (len == k) break;
        std::vector<Frontier> next;
        for (const auto& item : level) {
            for (std::size_t x = 0; x < r.alphabet().size(); ++x) {
                Word w = item.word;
                w.push_back(x);
                next.push_back({std::move(w), compose(compose(item.left, r.delta(x)), rel),
                                compose(item.right, r.delta(x))});
            }
        }
        level = std::move(next);
    }
    return {true, std::nullopt};
}

}  // namespace fuzzyq
