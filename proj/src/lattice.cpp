#include "fuzzyq/lattice.hpp"

#include <algorithm>
#include <cctype>

#include "fuzzyq/error.hpp"

namespace fuzzyq {

namespace {

void check_unit_interval(const mpq_class& q) {
    if (sgn(q) < 0 || cmp(q, 1) > 0) {
        throw Error(ErrorKind::LatticeValue, "value " + q.get_str() + " lies outside [0,1]");
    }
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Value::Value() : q_(0) {}

Value::Value(long numerator, long denominator) {
    if (denominator == 0) throw Error(ErrorKind::LatticeValue, "zero denominator");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
    check_unit_interval(q_);
}

Value::Value(mpq_class q) : q_(std::move(q)) {
    q_.canonicalize();
    check_unit_interval(q_);
}

Value Value::parse(std::string_view text) {
    const std::string original(text);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw Error(ErrorKind::LatticeValue, "malformed rational '" + original + "'");
        }
        const mpz_class d{std::string(den)};
        if (d == 0) throw Error(ErrorKind::LatticeValue, "zero denominator in '" + original + "'");
        return Value(mpq_class(mpz_class(std::string(num)), d));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
            throw Error(ErrorKind::LatticeValue, "malformed decimal '" + original + "'");
        }
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole));
        return Value(mpq_class(w * scale + mpz_class(std::string(frac)), scale));
    }
    if (!all_digits(text)) throw Error(ErrorKind::LatticeValue, "malformed value '" + original + "'");
    return Value(mpq_class(mpz_class(std::string(text))));
}

std::string Value::numerator() const { return q_.get_num().get_str(); }
std::string Value::denominator() const { return q_.get_den().get_str(); }
std::string Value::to_string() const { return q_.get_str(); }
bool Value::is_zero() const noexcept { return sgn(q_) == 0; }
bool Value::is_one() const noexcept { return cmp(q_, 1) == 0; }

bool operator==(const Value& a, const Value& b) noexcept { return cmp(a.q_, b.q_) == 0; }

std::strong_ordering operator<=>(const Value& a, const Value& b) noexcept {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Lattice Lattice::chain(unsigned n) {
    if (n == 0) throw Error(ErrorKind::Validation, "chain lattice needs at least one step");
    return Lattice(LatticeKind::chain, n);
}

std::string Lattice::name() const {
    switch (kind_) {
        case LatticeKind::boolean: return "boolean";
        case LatticeKind::godel: return "godel";
        case LatticeKind::product: return "product";
        case LatticeKind::lukasiewicz: return "lukasiewicz";
        case LatticeKind::chain: return "chain(" + std::to_string(steps_) + ")";
    }
    return "unknown";
}

bool Lattice::contains(const Value& x) const {
    if (kind_ != LatticeKind::boolean && kind_ != LatticeKind::chain) return true;
    // k/n in lowest terms has a denominator dividing n.
    const mpz_srcptr den = x.rational().get_den().get_mpz_t();
    return mpz_fits_ulong_p(den) != 0 && steps_ % mpz_get_ui(den) == 0;
}

void Lattice::validate(const Value& x) const {
    if (!contains(x)) {
        throw Error(ErrorKind::LatticeValue, "value " + x.to_string() + " is not an element of " + name());
    }
}

Value Lattice::parse(std::string_view text) const {
    Value v = Value::parse(text);
    validate(v);
    return v;
}

Value Lattice::meet(const Value& x, const Value& y) const {
    validate(x);
    validate(y);
    return std::min(x, y);
}

Value Lattice::join(const Value& x, const Value& y) const {
    validate(x);
    validate(y);
    return std::max(x, y);
}

Value Lattice::otimes(const Value& x, const Value& y) const {
    validate(x);
    validate(y);
    switch (kind_) {
        case LatticeKind::boolean:
        case LatticeKind::godel:
            return std::min(x, y);
        case LatticeKind::product:
            return Value(mpq_class(x.rational() * y.rational()));
        case LatticeKind::lukasiewicz:
        case LatticeKind::chain: {
            mpq_class s = x.rational() + y.rational() - 1;
            return sgn(s) > 0 ? Value(std::move(s)) : Value(0);
        }
    }
    return Value(0);
}

Value Lattice::residuum(const Value& x, const Value& y) const {
    validate(x);
    validate(y);
    if (x <= y) return Value(1);
    switch (kind_) {
        case LatticeKind::boolean:
        case LatticeKind::godel:
            return y;
        case LatticeKind::product:
            return Value(mpq_class(y.rational() / x.rational()));
        case LatticeKind::lukasiewicz:
        case LatticeKind::chain:
            return Value(mpq_class(1 - x.rational() + y.rational()));
    }
    return Value(1);
}

Value Lattice::biresiduum(const Value& x, const Value& y) const {
    return std::min(residuum(x, y), residuum(y, x));
}

std::vector<Value> Lattice::elements() const {
    if (kind_ != LatticeKind::boolean && kind_ != LatticeKind::chain) {
        throw Error(ErrorKind::Validation, name() + " has infinitely many elements");
    }
    std::vector<Value> out;
    for (unsigned k = 0; k <= steps_; ++k) out.emplace_back(static_cast<long>(k), static_cast<long>(steps_));
    return out;
}

void require_same(const Lattice& a, const Lattice& b) {
    if (!(a == b)) throw Error(ErrorKind::LatticeMismatch, a.name() + " vs " + b.name());
}

}  // namespace fuzzyq
