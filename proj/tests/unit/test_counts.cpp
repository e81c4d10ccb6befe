#include "mapenum/counts.hpp"
#include "mapenum/errors.hpp"

#include <doctest.h>

using namespace mapenum;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) {
    std::vector<BigInt> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

std::vector<Rat> rats(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

CountTable from_solution(const ModelSpec& m, unsigned g, std::size_t n) {
    const GenusTable t = compute_table(m, g);
    return counts_from_solution(m, t.at(g), revert(m.subst_coeff, n), n);
}

} // namespace

TEST_CASE("reversion") {
    CHECK(revert(2, 4).coeffs == rats({0, 1, 2, 8, 40}));
    CHECK(revert(3, 3).coeffs == rats({0, 1, 3, 18}));
    for (long a = 1; a <= 6; ++a)
        CHECK(revert(a, 5).coeffs[1] == 1);
    CHECK_THROWS_AS(revert(0, 3), EngineError);
    CHECK_THROWS_AS(revert(2, 0), EngineError);
}

TEST_CASE("composition") {
    const ReversionSeries rev = revert(2, 6);
    CHECK(compose(rats({}), rev, 3) == rats({0, 0, 0, 0}));
    CHECK(compose(rats({0, 1}), rev, 4) == rats({0, 1, 2, 8, 40}));
    CHECK(compose(rats({0, 1, -2}), rev, 6) == rats({0, 1, 0, 0, 0, 0, 0}));
    CHECK_THROWS_AS((compose(rats({1}), rev, 7)), EngineError);
}

TEST_CASE("counts from the rational solutions") {
    CHECK(from_solution(hypermap_model(), 0, 4).counts == ints({0, 1, 3, 12, 56}));
    CHECK(from_solution(hypermap_model(), 1, 4).counts == ints({0, 0, 0, 1, 15}));
    CHECK(from_solution(map_model(), 0, 3).counts == ints({1, 2, 9, 54}));
    CHECK(from_solution(map_model(), 1, 3).counts == ints({0, 0, 1, 20}));
    const CountTable h2 = from_solution(hypermap_model(), 2, 5);
    CHECK(h2.counts[4] == 0);
    CHECK(h2.counts[5] == 8);
}

TEST_CASE("planar map closed form") {
    // 2 3^n (2n)! / (n! (n+2)!)
    const CountTable t = from_solution(map_model(), 0, 40);
    for (unsigned long n = 0; n <= 40; ++n) {
        BigInt three_n;
        mpz_ui_pow_ui(three_n.get_mpz_t(), 3, n);
        const BigInt expected = 2 * three_n * factorial(2 * n) / (factorial(n) * factorial(n + 2));
        CHECK(t.counts[n] == expected);
    }
}

TEST_CASE("coefficient recursion") {
    const auto h = counts_by_recursion_all(ModelKind::Hypermap, 1, 6);
    CHECK(h[0].counts[1] == 1);
    CHECK(h[0].counts == ints({0, 1, 3, 12, 56, 288, 1584}));
    CHECK(h[1].counts[0] == 0);
    CHECK(h[1].counts[1] == 0);
    CHECK(h[1].counts[2] == 0);
    const auto m = counts_by_recursion_all(ModelKind::Map, 0, 2);
    CHECK(m[0].counts == ints({1, 2, 9}));
    CHECK_THROWS_AS(counts_by_recursion(ModelKind::Map, 2, 5, std::span<const CountTable>(m)), EngineError);
    CHECK_THROWS_AS(counts_by_recursion(ModelKind::Map, 1, 5, std::span<const CountTable>(m)), EngineError);
}

TEST_CASE("series and recursion agree") {
    for (ModelKind kind : {ModelKind::Hypermap, ModelKind::Map}) {
        const ModelSpec& m = model_for(kind);
        const GenusTable t = compute_table(m, 4);
        const auto rec = counts_by_recursion_all(kind, 4, 30);
        const ReversionSeries rev = revert(m.subst_coeff, 30);
        for (unsigned g = 0; g <= 4; ++g)
            CHECK(counts_from_solution(m, t.at(g), rev, 30) == rec[g]);
    }
}

TEST_CASE("support and monotonicity") {
    CHECK(first_nonzero_index(ModelKind::Hypermap, 2) == 5);
    CHECK(first_nonzero_index(ModelKind::Map, 2) == 4);
    CHECK(monotonicity_violations(from_solution(map_model(), 2, 20)).empty());
    const CountTable dip{ModelKind::Map, 0, ints({1, 5, 3})};
    CHECK(monotonicity_violations(dip) == std::vector<std::size_t>{2});
}

TEST_CASE("count errors") {
    const ModelSpec& m = hypermap_model();
    GenusSolution fake{0, FactoredRat::from_parts(0, Poly{1}, {}), std::nullopt};
    CHECK_THROWS_AS(counts_from_solution(m, fake, revert(2, 3), 3), EngineError);
    GenusSolution half{0, FactoredRat::from_parts(1, Poly::constant(Rat(1, 2)), {}), std::nullopt};
    try {
        counts_from_solution(m, half, revert(2, 3), 3);
        FAIL("expected NonIntegerCount");
    } catch (const EngineError& e) {
        CHECK(e.kind() == ErrorKind::NonIntegerCount);
    }
    GenusSolution negative{0, FactoredRat::from_parts(1, Poly{-1}, {}), std::nullopt};
    try {
        counts_from_solution(m, negative, revert(2, 3), 3);
        FAIL("expected NegativeCount");
    } catch (const EngineError& e) {
        CHECK(e.kind() == ErrorKind::NegativeCount);
    }
    CHECK_THROWS_AS(counts_from_solution(m, fake, revert(3, 3), 3), EngineError);
}
