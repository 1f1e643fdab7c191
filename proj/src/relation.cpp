#include "fuzzyq/relation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fuzzyq/error.hpp"

namespace fuzzyq {

namespace {

void require_dims(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::DimensionMismatch, what);
}

std::string shape(const FuzzyMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

template <class Op>
FuzzyMatrix entrywise(const FuzzyMatrix& p, const FuzzyMatrix& q, Op op) {
    require_same(p.lattice(), q.lattice());
    require_dims(p.rows() == q.rows() && p.cols() == q.cols(), shape(p) + " vs " + shape(q));
    std::vector<Value> out;
    out.reserve(p.entries().size());
    for (std::size_t i = 0; i < p.entries().size(); ++i) out.push_back(op(p.entries()[i], q.entries()[i]));
    return FuzzyMatrix(p.lattice(), p.rows(), p.cols(), std::move(out));
}

template <class Op>
FuzzyVector entrywise(const FuzzyVector& f, const FuzzyVector& g, Op op) {
    require_same(f.lattice(), g.lattice());
    require_dims(f.size() == g.size(), "vector lengths " + std::to_string(f.size()) + " vs " + std::to_string(g.size()));
    std::vector<Value> out;
    out.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out.push_back(op(f[i], g[i]));
    return FuzzyVector(f.lattice(), std::move(out));
}

std::vector<Afterset> distinct_lines(const FuzzyMatrix& r, bool by_row) {
    require_quasi_order(r);
    std::map<std::vector<Value>, std::size_t> seen;
    std::vector<Afterset> out;
    for (std::size_t a = 0; a < r.rows(); ++a) {
        FuzzyVector line = by_row ? r.row(a) : r.column(a);
        if (seen.emplace(line.entries(), a).second) out.push_back({a, std::move(line)});
    }
    return out;
}

}  // namespace

FuzzyVector::FuzzyVector(Lattice lattice, std::vector<Value> entries)
    : lattice_(lattice), entries_(std::move(entries)) {
    for (const auto& v : entries_) lattice_.validate(v);
}

FuzzyVector FuzzyVector::constant(const Lattice& lattice, std::size_t n, const Value& v) {
    return FuzzyVector(lattice, std::vector<Value>(n, v));
}

FuzzyVector FuzzyVector::parse(const Lattice& lattice, const std::vector<std::string>& entries) {
    std::vector<Value> values;
    values.reserve(entries.size());
    for (const auto& e : entries) values.push_back(lattice.parse(e));
    return FuzzyVector(lattice, std::move(values));
}

std::string FuzzyVector::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ", ";
        out += entries_[i].to_string();
    }
    return out + "]";
}

FuzzyMatrix::FuzzyMatrix(Lattice lattice, std::size_t rows, std::size_t cols, std::vector<Value> entries)
    : lattice_(lattice), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require_dims(entries_.size() == rows_ * cols_,
                 std::to_string(entries_.size()) + " entries for a " + std::to_string(rows_) + "x" +
                     std::to_string(cols_) + " matrix");
    for (const auto& v : entries_) lattice_.validate(v);
}

FuzzyMatrix FuzzyMatrix::tabulate(const Lattice& lattice, std::size_t rows, std::size_t cols,
                                  const std::function<Value(std::size_t, std::size_t)>& entry) {
    std::vector<Value> out;
    out.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) out.push_back(entry(r, c));
    return FuzzyMatrix(lattice, rows, cols, std::move(out));
}

FuzzyMatrix FuzzyMatrix::from_rows(const Lattice& lattice, const std::vector<std::vector<Value>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Value> out;
    for (const auto& row : rows) {
        require_dims(row.size() == cols, "ragged matrix rows");
        out.insert(out.end(), row.begin(), row.end());
    }
    return FuzzyMatrix(lattice, rows.size(), cols, std::move(out));
}

FuzzyMatrix FuzzyMatrix::parse(const Lattice& lattice, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Value>> values;
    for (const auto& row : rows) values.push_back(FuzzyVector::parse(lattice, row).entries());
    return from_rows(lattice, values);
}

FuzzyMatrix FuzzyMatrix::identity(const Lattice& lattice, std::size_t n) {
    return tabulate(lattice, n, n, [](std::size_t r, std::size_t c) { return Value(r == c ? 1 : 0); });
}

FuzzyMatrix FuzzyMatrix::universal(const Lattice& lattice, std::size_t n) {
    return FuzzyMatrix(lattice, n, n, std::vector<Value>(n * n, Value(1)));
}

FuzzyMatrix FuzzyMatrix::zero(const Lattice& lattice, std::size_t rows, std::size_t cols) {
    return FuzzyMatrix(lattice, rows, cols, std::vector<Value>(rows * cols, Value(0)));
}

FuzzyVector FuzzyMatrix::row(std::size_t r) const {
    return FuzzyVector(lattice_, {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)});
}

FuzzyVector FuzzyMatrix::column(std::size_t c) const {
    std::vector<Value> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return FuzzyVector(lattice_, std::move(out));
}

std::string FuzzyMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << ", ";
        os << row(r).to_string();
    }
    os << "]";
    return os.str();
}

FuzzyMatrix compose(const FuzzyMatrix& p, const FuzzyMatrix& q) {
    require_same(p.lattice(), q.lattice());
    require_dims(p.cols() == q.rows(), "cannot compose " + shape(p) + " with " + shape(q));
    const Lattice& lat = p.lattice();
    std::vector<Value> out;
    out.reserve(p.rows() * q.cols());
    for (std::size_t a = 0; a < p.rows(); ++a) {
        for (std::size_t b = 0; b < q.cols(); ++b) {
            Value acc(0);
            for (std::size_t c = 0; c < p.cols() && !acc.is_one(); ++c) {
                if (p(a, c).is_zero() || q(c, b).is_zero()) continue;
                acc = std::max(acc, lat.otimes(p(a, c), q(c, b)));
            }
            out.push_back(std::move(acc));
        }
    }
    return FuzzyMatrix(lat, p.rows(), q.cols(), std::move(out));
}

FuzzyVector compose(const FuzzyVector& f, const FuzzyMatrix& p) {
    require_same(f.lattice(), p.lattice());
    require_dims(f.size() == p.rows(), "vector of length " + std::to_string(f.size()) + " against " + shape(p));
    std::vector<Value> out;
    out.reserve(p.cols());
    for (std::size_t b = 0; b < p.cols(); ++b) {
        Value acc(0);
        for (std::size_t a = 0; a < f.size() && !acc.is_one(); ++a) {
            if (f[a].is_zero() || p(a, b).is_zero()) continue;
            acc = std::max(acc, f.lattice().otimes(f[a], p(a, b)));
        }
        out.push_back(std::move(acc));
    }
    return FuzzyVector(f.lattice(), std::move(out));
}

FuzzyVector compose(const FuzzyMatrix& p, const FuzzyVector& f) {
    require_same(f.lattice(), p.lattice());
    require_dims(f.size() == p.cols(), shape(p) + " against vector of length " + std::to_string(f.size()));
    std::vector<Value> out;
    out.reserve(p.rows());
    for (std::size_t a = 0; a < p.rows(); ++a) {
        Value acc(0);
        for (std::size_t b = 0; b < f.size() && !acc.is_one(); ++b) {
            if (f[b].is_zero() || p(a, b).is_zero()) continue;
            acc = std::max(acc, f.lattice().otimes(p(a, b), f[b]));
        }
        out.push_back(std::move(acc));
    }
    return FuzzyVector(f.lattice(), std::move(out));
}

Value overlap(const FuzzyVector& f, const FuzzyVector& g) {
    require_same(f.lattice(), g.lattice());
    require_dims(f.size() == g.size(), "vector lengths " + std::to_string(f.size()) + " vs " + std::to_string(g.size()));
    Value acc(0);
    for (std::size_t a = 0; a < f.size(); ++a) acc = std::max(acc, f.lattice().otimes(f[a], g[a]));
    return acc;
}

FuzzyMatrix meet(const FuzzyMatrix& p, const FuzzyMatrix& q) {
    return entrywise(p, q, [](const Value& x, const Value& y) { return std::min(x, y); });
}

FuzzyMatrix join(const FuzzyMatrix& p, const FuzzyMatrix& q) {
    return entrywise(p, q, [](const Value& x, const Value& y) { return std::max(x, y); });
}

FuzzyVector meet(const FuzzyVector& f, const FuzzyVector& g) {
    return entrywise(f, g, [](const Value& x, const Value& y) { return std::min(x, y); });
}

FuzzyVector join(const FuzzyVector& f, const FuzzyVector& g) {
    return entrywise(f, g, [](const Value& x, const Value& y) { return std::max(x, y); });
}

FuzzyMatrix transpose(const FuzzyMatrix& p) {
    return FuzzyMatrix::tabulate(p.lattice(), p.cols(), p.rows(),
                                 [&](std::size_t r, std::size_t c) { return p(c, r); });
}

Value supremum(const FuzzyVector& f) {
    Value acc(0);
    for (const auto& v : f.entries()) acc = std::max(acc, v);
    return acc;
}

bool leq(const FuzzyMatrix& p, const FuzzyMatrix& q) {
    require_same(p.lattice(), q.lattice());
    require_dims(p.rows() == q.rows() && p.cols() == q.cols(), shape(p) + " vs " + shape(q));
    for (std::size_t i = 0; i < p.entries().size(); ++i)
        if (p.entries()[i] > q.entries()[i]) return false;
    return true;
}

bool leq(const FuzzyVector& f, const FuzzyVector& g) {
    require_same(f.lattice(), g.lattice());
    require_dims(f.size() == g.size(), "vector lengths differ");
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] > g[i]) return false;
    return true;
}

FuzzyMatrix transitive_closure(const FuzzyMatrix& r, std::optional<std::size_t> cap) {
    require_dims(r.square(), "transitive closure of a non-square " + shape(r) + " matrix");
    const std::size_t limit = cap.value_or(10 * std::max<std::size_t>(r.rows(), 1));
    FuzzyMatrix current = r;
    for (std::size_t round = 0; round < limit; ++round) {
        FuzzyMatrix next = join(current, compose(current, current));
        if (next == current) return current;
        current = std::move(next);
    }
    throw Error(ErrorKind::IterationLimitExceeded,
                "transitive closure did not stabilise within " + std::to_string(limit) + " rounds");
}

QuasiOrderWitness is_quasi_order(const FuzzyMatrix& r) {
    if (!r.square()) return {r, false, false, false};
    bool reflexive = true;
    bool symmetric = true;
    for (std::size_t a = 0; a < r.rows(); ++a) {
        reflexive = reflexive && r(a, a).is_one();
        for (std::size_t b = a + 1; b < r.cols(); ++b) symmetric = symmetric && r(a, b) == r(b, a);
    }
    const bool transitive = leq(compose(r, r), r);
    return {r, reflexive, transitive, symmetric};
}

bool is_fuzzy_equivalence(const FuzzyMatrix& r) {
    const auto w = is_quasi_order(r);
    return w.quasi_order() && w.symmetric;
}

bool is_fuzzy_order(const FuzzyMatrix& r) {
    if (!is_quasi_order(r).quasi_order()) return false;
    for (std::size_t a = 0; a < r.rows(); ++a)
        for (std::size_t b = a + 1; b < r.cols(); ++b)
            if (r(a, b).is_one() && r(b, a).is_one()) return false;
    return true;
}

void require_quasi_order(const FuzzyMatrix& r) {
    const auto w = is_quasi_order(r);
    if (!w.quasi_order()) {
        throw Error(ErrorKind::NotQuasiOrder, std::string("relation is not ") +
                                                  (w.reflexive ? "transitive" : "reflexive") + ": " + r.to_string());
    }
}

FuzzyMatrix natural_equivalence(const FuzzyMatrix& r) {
    require_quasi_order(r);
    return meet(r, transpose(r));
}

FuzzyMatrix from_fuzzy_set_right(const FuzzyVector& f) {
    return FuzzyMatrix::tabulate(f.lattice(), f.size(), f.size(),
                                 [&](std::size_t a, std::size_t b) { return f.lattice().residuum(f[a], f[b]); });
}

FuzzyMatrix from_fuzzy_set_left(const FuzzyVector& f) {
    return FuzzyMatrix::tabulate(f.lattice(), f.size(), f.size(),
                                 [&](std::size_t a, std::size_t b) { return f.lattice().residuum(f[b], f[a]); });
}

FuzzyMatrix crisp_part(const FuzzyMatrix& r) {
    return FuzzyMatrix::tabulate(r.lattice(), r.rows(), r.cols(),
                                 [&](std::size_t a, std::size_t b) { return Value(r(a, b).is_one() ? 1 : 0); });
}

std::vector<Afterset> aftersets(const FuzzyMatrix& r) { return distinct_lines(r, true); }

std::vector<Afterset> foresets(const FuzzyMatrix& r) { return distinct_lines(r, false); }

}  // namespace fuzzyq
