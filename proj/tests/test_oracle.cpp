#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "fuzzyq/error.hpp"
#include "fuzzyq/oracle.hpp"
#include "fuzzyq/reduction.hpp"
#include "random_machines.hpp"

using namespace fuzzyq;
using namespace fixtures;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Validation;
}

}  // namespace

TEST_CASE("crisp quasi-order enumeration") {
    CHECK(boolean_quasi_orders(1).size() == 1);
    CHECK(boolean_quasi_orders(2).size() == 4);
    CHECK(boolean_quasi_orders(3).size() == 29);
    CHECK(boolean_quasi_orders(4).size() == 355);
    for (const auto& r : boolean_quasi_orders(3)) CHECK(is_quasi_order(r).quasi_order());
    CHECK(kind_of([] { (void)boolean_quasi_orders(5); }) == ErrorKind::TooLarge);
}

TEST_CASE("general system: an order that fails while its equivalence passes") {
    const auto a = triangular_failure();
    const auto bad = check_general_system(a, upper_triangular(), 6);
    CHECK_FALSE(bad.holds);
    CHECK(bad.witness == Word{0, 1});
    const auto e = natural_equivalence(upper_triangular());
    CHECK(e == FuzzyMatrix::identity(B, 3));
    CHECK(check_general_system(a, e, 6).holds);
}

TEST_CASE("general system: two solutions whose join fails") {
    const auto a = no_greatest_solution();
    const auto e = mat(B, {{"1", "0", "0"}, {"0", "1", "1"}, {"0", "1", "1"}});
    const auto f = mat(B, {{"1", "0", "1"}, {"0", "1", "0"}, {"1", "0", "1"}});
    CHECK(check_general_system(a, e, 6).holds);
    CHECK(check_general_system(a, f, 6).holds);
    // The join of quasi-orders is the transitive closure of the pointwise join.
    const auto u = transitive_closure(join(e, f));
    CHECK(u == FuzzyMatrix::universal(B, 3));
    const auto join_check = check_general_system(a, u, 6);
    CHECK_FALSE(join_check.holds);
    CHECK(join_check.witness == Word{0, 0});
}

TEST_CASE("no quasi-order quotient reaches the minimal recognizer") {
    const auto a = non_minimal_witness();
    std::size_t best = a.size();
    std::size_t solutions = 0;
    for (const auto& r : boolean_quasi_orders(4)) {
        if (!check_general_system(a, r, 20).holds) continue;
        ++solutions;
        best = std::min(best, aftersets(r).size());
        CHECK(languages_equal_up_to(a, afterset_quotient(a, r), 8).equal());
    }
    CHECK(solutions > 1);
    CHECK(best == 3);
    const auto minimum = two_state_minimum();
    CHECK(languages_equal_up_to(a, minimum, 8).equal());
}

TEST_CASE("exhaustive greatest invariant search") {
    const auto a = boolean_xy();
    CHECK(brute_force_greatest_invariant(a, Side::right) ==
          mat(B, {{"1", "1", "1"}, {"0", "1", "1"}, {"0", "1", "1"}}));
    const auto r = weak_alternation();
    CHECK(brute_force_greatest_invariant(r, Side::right) == greatest_invariant(r, Method::ri).quasi_order);
    CHECK(brute_force_greatest_invariant(r, Side::left) ==
          mat(B, {{"1", "0", "0"}, {"0", "1", "0"}, {"1", "1", "1"}}));
    CHECK(kind_of([] { (void)brute_force_greatest_invariant(godel_tenths(), Side::right); }) == ErrorKind::NotBoolean);
    const auto five = FuzzyAutomaton(B, numbered(5), {"x"}, {FuzzyMatrix::identity(B, 5)});
    CHECK(kind_of([&] { (void)brute_force_greatest_invariant(five, Side::left); }) == ErrorKind::TooLarge);

    RandomMachines gen(3);
    for (int trial = 0; trial < 60; ++trial) {
        const auto m = gen.recognizer(B, gen.pick(1, 4), gen.pick(1, 3));
        CHECK(brute_force_greatest_invariant(m, Side::right) == greatest_invariant(m, Method::ri).quasi_order);
        CHECK(brute_force_greatest_invariant(m, Side::left) == greatest_invariant(m, Method::li).quasi_order);
        CHECK(brute_force_greatest_invariant(m.automaton(), Side::left) ==
              greatest_invariant(m.automaton(), Method::li).quasi_order);
    }
}

TEST_CASE("bounded language comparison") {
    const auto a = blocking_after_quotient();
    const auto q = greatest_weakly_invariant(a, Side::right).quotient;
    const auto same = languages_equal_up_to(a, q, 6);
    CHECK(same.equal());
    CHECK(same.equal_up_to == 6);
    const auto gen_lang = languages_equal_up_to(a, q, 6, LanguageKind::generated);
    REQUIRE_FALSE(gen_lang.equal());
    CHECK(gen_lang.equal_up_to == 1);
    CHECK(gen_lang.first_divergence->word == Word{0, 0});
    CHECK(gen_lang.first_divergence->left == Value(0));
    CHECK(gen_lang.first_divergence->right == Value(1));

    const auto on = always_on();
    const auto off = recognizer(B, {"x"}, {mat(B, {{"1"}})}, {"1"}, {"0"});
    const auto at_empty = languages_equal_up_to(on, off, 3);
    CHECK(at_empty.equal_up_to == -1);
    CHECK(at_empty.first_divergence->word.empty());
    CHECK(languages_equal_up_to(on, off, 3, LanguageKind::generated).equal());
    CHECK(languages_equal_up_to(on, on, 0).equal_up_to == 0);
    CHECK(kind_of([&] { (void)languages_equal_up_to(on, always_on(B, {"y"}), 2); }) == ErrorKind::AlphabetMismatch);
    CHECK(kind_of([&] { (void)languages_equal_up_to(on, always_on(G), 2); }) == ErrorKind::LatticeMismatch);
}

TEST_CASE("general system holds for invariant quasi-orders and their equivalences") {
    RandomMachines gen(17);
    for (int trial = 0; trial < 40; ++trial) {
        const Lattice lat = std::vector<Lattice>{B, G, Lattice::chain(4)}[trial % 3];
        const auto r = gen.recognizer(lat, gen.pick(1, 4), gen.pick(1, 2));
        for (Method m : {Method::ri, Method::li, Method::wri, Method::wli}) {
            const auto rep = greatest_invariant(r, m);
            REQUIRE(rep.converged);
            CHECK(check_general_system(r, rep.quasi_order, 5).holds);
            CHECK(check_general_system(r, natural_equivalence(rep.quasi_order), 5).holds);
        }
        CHECK(check_general_system(r, FuzzyMatrix::identity(lat, r.size()), 3).holds);
    }
}
