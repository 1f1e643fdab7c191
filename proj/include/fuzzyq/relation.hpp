#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fuzzyq/lattice.hpp"

namespace fuzzyq {

class FuzzyVector {
public:
    FuzzyVector(Lattice lattice, std::vector<Value> entries);

    static FuzzyVector constant(const Lattice& lattice, std::size_t n, const Value& v);
    static FuzzyVector parse(const Lattice& lattice, const std::vector<std::string>& entries);

    [[nodiscard]] const Lattice& lattice() const noexcept { return lattice_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] const Value& operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] const std::vector<Value>& entries() const noexcept { return entries_; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const FuzzyVector&, const FuzzyVector&) = default;

private:
    Lattice lattice_;
    std::vector<Value> entries_;
};

// Dense row-major matrix of lattice values. Relations on a state set are
// square; rectangular shapes only appear as intermediate results.
class FuzzyMatrix {
public:
    FuzzyMatrix(Lattice lattice, std::size_t rows, std::size_t cols, std::vector<Value> entries);

    static FuzzyMatrix tabulate(const Lattice& lattice, std::size_t rows, std::size_t cols,
                                const std::function<Value(std::size_t, std::size_t)>& entry);
    static FuzzyMatrix from_rows(const Lattice& lattice, const std::vector<std::vector<Value>>& rows);
    static FuzzyMatrix parse(const Lattice& lattice, const std::vector<std::vector<std::string>>& rows);
    static FuzzyMatrix identity(const Lattice& lattice, std::size_t n);
    static FuzzyMatrix universal(const Lattice& lattice, std::size_t n);
    static FuzzyMatrix zero(const Lattice& lattice, std::size_t rows, std::size_t cols);

    [[nodiscard]] const Lattice& lattice() const noexcept { return lattice_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool square() const noexcept { return rows_ == cols_; }
    [[nodiscard]] const Value& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    [[nodiscard]] const std::vector<Value>& entries() const noexcept { return entries_; }
    [[nodiscard]] FuzzyVector row(std::size_t r) const;
    [[nodiscard]] FuzzyVector column(std::size_t c) const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const FuzzyMatrix&, const FuzzyMatrix&) = default;

private:
    Lattice lattice_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Value> entries_;
};

struct QuasiOrderWitness {
    FuzzyMatrix matrix;
    bool reflexive;
    bool transitive;
    bool symmetric;

    [[nodiscard]] bool quasi_order() const noexcept { return reflexive && transitive; }
};

struct Afterset {
    std::size_t representative;
    FuzzyVector set;
};

// (P o Q)(a,b) = sup_c P(a,c) (x) Q(c,b), and the vector forms.
[[nodiscard]] FuzzyMatrix compose(const FuzzyMatrix& p, const FuzzyMatrix& q);
[[nodiscard]] FuzzyVector compose(const FuzzyVector& f, const FuzzyMatrix& p);
[[nodiscard]] FuzzyVector compose(const FuzzyMatrix& p, const FuzzyVector& f);
[[nodiscard]] Value overlap(const FuzzyVector& f, const FuzzyVector& g);

[[nodiscard]] FuzzyMatrix meet(const FuzzyMatrix& p, const FuzzyMatrix& q);
[[nodiscard]] FuzzyMatrix join(const FuzzyMatrix& p, const FuzzyMatrix& q);
[[nodiscard]] FuzzyVector meet(const FuzzyVector& f, const FuzzyVector& g);
[[nodiscard]] FuzzyVector join(const FuzzyVector& f, const FuzzyVector& g);
[[nodiscard]] FuzzyMatrix transpose(const FuzzyMatrix& p);
[[nodiscard]] Value supremum(const FuzzyVector& f);

// Entrywise order.
[[nodiscard]] bool leq(const FuzzyMatrix& p, const FuzzyMatrix& q);
[[nodiscard]] bool leq(const FuzzyVector& f, const FuzzyVector& g);

// Iterates R <- R v R o R; the default cap is 10 n rounds.
[[nodiscard]] FuzzyMatrix transitive_closure(const FuzzyMatrix& r, std::optional<std::size_t> cap = std::nullopt);

[[nodiscard]] QuasiOrderWitness is_quasi_order(const FuzzyMatrix& r);
[[nodiscard]] bool is_fuzzy_equivalence(const FuzzyMatrix& r);
[[nodiscard]] bool is_fuzzy_order(const FuzzyMatrix& r);
void require_quasi_order(const FuzzyMatrix& r);

// E_R = R ^ R^-1.
[[nodiscard]] FuzzyMatrix natural_equivalence(const FuzzyMatrix& r);

// R_f(a,b) = f(a) -> f(b).
[[nodiscard]] FuzzyMatrix from_fuzzy_set_right(const FuzzyVector& f);
// R^f(a,b) = f(b) -> f(a).
[[nodiscard]] FuzzyMatrix from_fuzzy_set_left(const FuzzyVector& f);

[[nodiscard]] FuzzyMatrix crisp_part(const FuzzyMatrix& r);

// Distinct rows of a quasi-order, each tagged with the smallest state index
// carrying it, in order of first occurrence.
[[nodiscard]] std::vector<Afterset> aftersets(const FuzzyMatrix& r);
// Column counterpart of aftersets.
[[nodiscard]] std::vector<Afterset> foresets(const FuzzyMatrix& r);

}  // namespace fuzzyq
