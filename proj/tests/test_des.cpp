#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "fuzzyq/des.hpp"
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

// Relabels a word by letter name from one alphabet to another.
Word rename(const Word& u, const Alphabet& from, const Alphabet& to) {
    Word out;
    for (std::size_t x : u)
        out.push_back(static_cast<std::size_t>(std::find(to.begin(), to.end(), from[x]) - to.begin()));
    return out;
}

FuzzyRecognizer with_letters(RandomMachines& gen, const Lattice& lat, std::size_t n, const Alphabet& letters) {
    std::vector<FuzzyMatrix> delta;
    for (std::size_t i = 0; i < letters.size(); ++i) delta.push_back(gen.matrix(lat, n));
    return FuzzyRecognizer(FuzzyAutomaton(lat, numbered(n), letters, delta), gen.vector(lat, n), gen.vector(lat, n));
}

Value prefix_closure_by_search(const FuzzyRecognizer& r, const Word& u, std::size_t horizon) {
    Value best(0);
    for_each_word(r.alphabet().size(), horizon, [&](const Word& v) {
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        best = std::max(best, recognize(r, uv));
    });
    return best;
}

}  // namespace

TEST_CASE("blocking introduced by a weakly right invariant quotient") {
    const auto a = blocking_after_quotient();
    const auto r = mat(B, {{"1", "0", "1", "0"}, {"1", "1", "1", "1"}, {"1", "0", "1", "0"}, {"1", "0", "1", "1"}});
    const auto wri = greatest_weakly_invariant(a, Side::right);
    CHECK(wri.quasi_order == r);
    const auto& q = wri.quotient;
    // Representatives in state order are 1, 2 and 4.
    CHECK(q.delta(0) == mat(B, {{"1", "0", "0"}, {"1", "0", "1"}, {"1", "0", "0"}}));
    CHECK(q.sigma() == vec(B, {"1", "1", "1"}));
    CHECK(q.tau() == vec(B, {"0", "1", "1"}));
    const auto listed = recognizer(B, {"x"}, {mat(B, {{"0", "1", "1"}, {"0", "1", "0"}, {"0", "1", "0"}})},
                                   {"1", "1", "1"}, {"1", "0", "1"});
    CHECK(are_isomorphic(q, listed));

    const Word e, x{0}, xx{0, 0}, x5{0, 0, 0, 0, 0};
    for (const auto* w : {&e, &x}) {
        CHECK(prefix_closure(a, *w) == Value(1));
        CHECK(generate(a, *w) == Value(1));
        CHECK(prefix_closure(q, *w) == Value(1));
    }
    for (const auto* w : {&xx, &x5}) {
        CHECK(prefix_closure(a, *w) == Value(0));
        CHECK(generate(a, *w) == Value(0));
        CHECK(prefix_closure(q, *w) == Value(0));
        CHECK(generate(q, *w) == Value(1));
    }

    const auto base = check_blocking(a, 16);
    CHECK(base.verdict == BlockingVerdict::nonblocking);
    CHECK(base.exhaustive);
    const auto reduced = check_blocking(q, 16);
    CHECK(reduced.verdict == BlockingVerdict::blocking);
    CHECK(reduced.witness == Word{0, 0});

    const auto b = always_on();
    CHECK(conflict_check(a, b, 16).verdict == BlockingVerdict::nonblocking);
    const auto clash = conflict_check(q, b, 16);
    CHECK(clash.verdict == BlockingVerdict::blocking);
    CHECK(clash.witness == Word{0, 0});
    CHECK(are_isomorphic(parallel_compose(a, b).recognizer, a));
}

TEST_CASE("weakly left invariant quotients keep both languages and conflict behaviour") {
    RandomMachines gen(8);
    for (int trial = 0; trial < 30; ++trial) {
        const Lattice lat = std::vector<Lattice>{B, G, Lattice::chain(3)}[trial % 3];
        const auto a = gen.recognizer(lat, gen.pick(1, 4), gen.pick(1, 2));
        const auto wli = greatest_weakly_invariant(a, Side::left);
        REQUIRE(wli.converged);
        const auto& q = wli.quotient;
        CHECK(languages_equal_up_to(a, q, 5).equal());
        CHECK(languages_equal_up_to(a, q, 5, LanguageKind::generated).equal());
        const auto c = gen.recognizer(lat, gen.pick(1, 3), a.alphabet().size());
        CHECK(conflict_check(a, c, 8).verdict == conflict_check(q, c, 8).verdict);
        CHECK(check_blocking(a, 8).verdict == check_blocking(q, 8).verdict);
    }
}

TEST_CASE("parallel composition generalises the product") {
    RandomMachines gen(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Lattice lat = std::vector<Lattice>{B, G, P, Lattice::lukasiewicz()}[trial % 4];
        const Alphabet letters = trial % 2 ? Alphabet{"a"} : Alphabet{"a", "b"};
        const auto a = with_letters(gen, lat, gen.pick(1, 3), letters);
        const auto b = with_letters(gen, lat, gen.pick(1, 3), letters);
        const auto par = parallel_compose(a, b);
        const auto prod = product_compose(a, b);
        CHECK(par.recognizer == prod.recognizer);
        CHECK(par.private_left.empty());
        CHECK(par.private_right.empty());
        for_each_word(letters.size(), 4, [&](const Word& u) {
            CHECK(recognize(prod.recognizer, u) == lat.otimes(recognize(a, u), recognize(b, u)));
            CHECK(generate(prod.recognizer, u) == lat.otimes(generate(a, u), generate(b, u)));
        });
    }
}

TEST_CASE("parallel composition over different alphabets") {
    RandomMachines gen(6);
    for (int trial = 0; trial < 30; ++trial) {
        const Lattice lat = std::vector<Lattice>{B, G, P, Lattice::chain(5)}[trial % 4];
        const Alphabet x = trial % 3 == 0 ? Alphabet{"a"} : Alphabet{"a", "b"};
        const Alphabet y = trial % 2 ? Alphabet{"b", "c"} : Alphabet{"c", "a"};
        const auto a = with_letters(gen, lat, gen.pick(1, 3), x);
        const auto b = with_letters(gen, lat, gen.pick(1, 3), y);
        const auto par = parallel_compose(a, b);
        const Alphabet& z = par.recognizer.alphabet();
        CHECK(z.size() == x.size() + par.private_right.size());
        CHECK(std::equal(x.begin(), x.end(), z.begin()));

        const auto az = input_extension(a, z);
        const auto bz = input_extension(b, z);
        CHECK(parallel_compose(az, bz).recognizer == par.recognizer);
        CHECK(are_isomorphic(product_compose(az, bz).recognizer, par.recognizer));

        for_each_word(z.size(), 3, [&](const Word& u) {
            const Word ux = natural_projection(u, z, x);
            const Word uy = natural_projection(u, z, y);
            CHECK(recognize(par.recognizer, u) == lat.otimes(recognize(a, ux), recognize(b, uy)));
            CHECK(generate(par.recognizer, u) == lat.otimes(generate(a, ux), generate(b, uy)));
            CHECK(recognize(az, u) == recognize(a, ux));
            CHECK(generate(bz, u) == generate(b, uy));
        });
    }
}

TEST_CASE("composition is associative up to isomorphism") {
    RandomMachines gen(7);
    for (int trial = 0; trial < 15; ++trial) {
        const Lattice lat = trial % 2 ? G : P;
        const auto a = with_letters(gen, lat, gen.pick(1, 2), {"a", "b"});
        const auto b = with_letters(gen, lat, gen.pick(1, 2), {"b", "c"});
        const auto c = with_letters(gen, lat, gen.pick(1, 2), {"c", "a"});
        const auto left = parallel_compose(parallel_compose(a, b).recognizer, c).recognizer;
        const auto right = parallel_compose(a, parallel_compose(b, c).recognizer).recognizer;
        CHECK(are_isomorphic(left, right));
        const auto p1 = product_compose(product_compose(a, a).recognizer, a).recognizer;
        const auto p2 = product_compose(a, product_compose(a, a).recognizer).recognizer;
        CHECK(are_isomorphic(p1, p2));
    }
}

TEST_CASE("composite state layout and naming") {
    const auto a = recognizer(B, {"x"}, {mat(B, {{"0", "1"}, {"0", "0"}})}, {"1", "0"}, {"0", "1"});
    const auto b = recognizer(B, {"x", "y"}, {mat(B, {{"1", "0", "0"}, {"0", "0", "1"}, {"0", "0", "0"}}),
                                               mat(B, {{"0", "1", "0"}, {"0", "0", "0"}, {"0", "0", "1"}})},
                              {"1", "0", "0"}, {"0", "0", "1"});
    const auto par = parallel_compose(a, b);
    CHECK(par.recognizer.automaton().states() ==
          std::vector<std::string>{"(1,1)", "(1,2)", "(1,3)", "(2,1)", "(2,2)", "(2,3)"});
    CHECK(par.shared == Alphabet{"x"});
    CHECK(par.private_right == Alphabet{"y"});
    CHECK(par.recognizer.alphabet() == Alphabet{"x", "y"});
    // (1,2) -x-> (2,3) and (1,1) -y-> (1,2).
    CHECK(par.recognizer.delta(0)(1, 5) == Value(1));
    CHECK(par.recognizer.delta(1)(0, 1) == Value(1));
    CHECK(par.recognizer.delta(1)(0, 4) == Value(0));
    CHECK(par.recognizer.sigma() == vec(B, {"1", "0", "0", "0", "0", "0"}));
    CHECK(par.recognizer.tau() == vec(B, {"0", "0", "0", "0", "0", "1"}));
}

TEST_CASE("composition and extension errors") {
    const auto a = always_on(B, {"x"});
    const auto b = always_on(B, {"y"});
    CHECK(kind_of([&] { (void)product_compose(a, b); }) == ErrorKind::EmptySharedAlphabet);
    CHECK(parallel_compose(a, b).recognizer.size() == 1);
    CHECK(kind_of([&] { (void)input_extension(a, {"y"}); }) == ErrorKind::NotASuperset);
    CHECK(kind_of([&] { (void)product_compose(a, always_on(G, {"x"})); }) == ErrorKind::LatticeMismatch);
    CHECK(kind_of([&] { (void)natural_projection({0}, {"x"}, {"y"}); }) == ErrorKind::NotASuperset);
    CHECK(kind_of([&] { (void)natural_projection({3}, {"x", "y"}, {"x"}); }) == ErrorKind::UnknownLetter);
    CHECK(kind_of([&] { (void)check_blocking(a, 0); }) == ErrorKind::Validation);
    CHECK(input_extension(a, {"x"}) == a);
}

TEST_CASE("natural projection") {
    const Alphabet y{"x", "q", "z"};
    const Alphabet x{"z", "x"};
    CHECK(natural_projection({}, y, x).empty());
    CHECK(natural_projection({1, 1}, y, x).empty());
    CHECK(natural_projection({0, 1, 2, 1, 0}, y, x) == Word{1, 0, 1});
}

TEST_CASE("prefix closure sits between the language and the generated language") {
    RandomMachines gen(31);
    for (int trial = 0; trial < 40; ++trial) {
        const Lattice lat = std::vector<Lattice>{B, G, P, Lattice::lukasiewicz(), Lattice::chain(4)}[trial % 5];
        const auto r = gen.recognizer(lat, gen.pick(1, 4), gen.pick(1, 2));
        const std::size_t n = r.size();
        for_each_word(r.alphabet().size(), 3, [&](const Word& u) {
            const Value closed = prefix_closure(r, u);
            CHECK(recognize(r, u) <= closed);
            CHECK(closed <= generate(r, u));
            CHECK(closed == prefix_closure_at(r, u, n));
            CHECK(closed == prefix_closure_by_search(r, u, n + 1));
            CHECK(prefix_closure_at(r, u, 0) == recognize(r, u));
        });
        const auto t = coreachability(r);
        CHECK(leq(r.tau(), t));
        for (const auto& d : r.automaton().deltas()) CHECK(leq(compose(d, t), t));
    }
}

TEST_CASE("blocking verdicts agree with bounded enumeration") {
    RandomMachines gen(41);
    for (int trial = 0; trial < 40; ++trial) {
        const Lattice lat = std::vector<Lattice>{B, G, Lattice::chain(3)}[trial % 3];
        const auto r = gen.recognizer(lat, gen.pick(1, 4), gen.pick(1, 2));
        const auto result = check_blocking(r, 6);
        REQUIRE(result.exhaustive);
        std::optional<Word> gap;
        for_each_word(r.alphabet().size(), 6, [&](const Word& u) {
            if (!gap && prefix_closure(r, u) != generate(r, u)) gap = u;
        });
        if (gap) {
            CHECK(result.verdict == BlockingVerdict::blocking);
            REQUIRE(result.witness);
            CHECK(result.witness->size() == gap->size());
            CHECK(prefix_closure(r, *result.witness) < generate(r, *result.witness));
        } else {
            CHECK(result.verdict == BlockingVerdict::nonblocking);
        }
    }
}

TEST_CASE("blocking over an unbounded family falls back to the horizon") {
    // Product lattice, one letter with weight 1/2: sigma_u never repeats.
    const auto halving = recognizer(P, {"x"}, {mat(P, {{"1/2"}})}, {"1"}, {"1"});
    const auto open = check_blocking(halving, 6, {16, 64});
    CHECK_FALSE(open.exhaustive);
    CHECK(open.verdict == BlockingVerdict::undetermined);

    const auto stuck = recognizer(P, {"x"}, {mat(P, {{"1/2", "1"}, {"0", "1/2"}})}, {"1", "0"}, {"1", "0"});
    const auto found = check_blocking(stuck, 6, {16, 64});
    CHECK_FALSE(found.exhaustive);
    CHECK(found.verdict == BlockingVerdict::blocking);
    CHECK(found.witness == Word{0});
    CHECK(to_string(BlockingVerdict::undetermined) == "undetermined");
}
