#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace fuzzyq {

// Exact rational truth value in [0,1], always in lowest terms.
class Value {
public:
    Value();
    Value(long numerator, long denominator = 1);
    explicit Value(mpq_class q);

    // Accepts "p/q", a decimal literal such as "0.3", "0" and "1".
    static Value parse(std::string_view text);

    [[nodiscard]] const mpq_class& rational() const noexcept { return q_; }
    [[nodiscard]] std::string numerator() const;
    [[nodiscard]] std::string denominator() const;
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] bool is_one() const noexcept;

    friend bool operator==(const Value& a, const Value& b) noexcept;
    friend std::strong_ordering operator<=>(const Value& a, const Value& b) noexcept;

private:
    mpq_class q_;
};

enum class LatticeKind { boolean, godel, product, lukasiewicz, chain };

// Descriptor of one of the supported complete residuated lattices. All five
// are linearly ordered subsets of [0,1], so meet and join are min and max.
class Lattice {
public:
    static Lattice boolean() { return Lattice(LatticeKind::boolean, 1); }
    static Lattice godel() { return Lattice(LatticeKind::godel, 0); }
    static Lattice product() { return Lattice(LatticeKind::product, 0); }
    static Lattice lukasiewicz() { return Lattice(LatticeKind::lukasiewicz, 0); }
    static Lattice chain(unsigned n);

    [[nodiscard]] LatticeKind kind() const noexcept { return kind_; }
    // Number of steps of a chain lattice; 1 for boolean, 0 for the dense ones.
    [[nodiscard]] unsigned steps() const noexcept { return steps_; }
    [[nodiscard]] std::string name() const;
    // Every finitely generated subalgebra is finite.
    [[nodiscard]] bool locally_finite() const noexcept { return kind_ != LatticeKind::product; }

    [[nodiscard]] bool contains(const Value& x) const;
    void validate(const Value& x) const;
    [[nodiscard]] Value parse(std::string_view text) const;

    [[nodiscard]] Value zero() const { return Value(0); }
    [[nodiscard]] Value one() const { return Value(1); }

    [[nodiscard]] Value meet(const Value& x, const Value& y) const;
    [[nodiscard]] Value join(const Value& x, const Value& y) const;
    [[nodiscard]] Value otimes(const Value& x, const Value& y) const;
    [[nodiscard]] Value residuum(const Value& x, const Value& y) const;
    [[nodiscard]] Value biresiduum(const Value& x, const Value& y) const;

    // All values of a finite lattice in increasing order.
    [[nodiscard]] std::vector<Value> elements() const;

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    Lattice(LatticeKind kind, unsigned steps) : kind_(kind), steps_(steps) {}

    LatticeKind kind_;
    unsigned steps_;
};

void require_same(const Lattice& a, const Lattice& b);

}  // namespace fuzzyq
