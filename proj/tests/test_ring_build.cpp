#include "catch_amalgamated.hpp"

#include "support.hpp"

#ifndef RINGLINE_DATA_DIR
#define RINGLINE_DATA_DIR "data"
#endif

using namespace ringline;
using namespace support;

namespace {

// Re-run the validator on a constructor's output.
FiniteRing revalidate(const FiniteRing& r) {
    return validate_ring(std::vector<Elem>(r.add_table().begin(), r.add_table().end()),
                         std::vector<Elem>(r.mul_table().begin(), r.mul_table().end()), r.order(), r.one(), r.name());
}

std::vector<std::vector<std::vector<int>>> unit_basis(std::size_t k) {
    std::vector<std::vector<std::vector<int>>> c(k, std::vector<std::vector<int>>(k, std::vector<int>(k, 0)));
    for (std::size_t i = 0; i < k; ++i) c[0][i][i] = c[i][0][i] = 1;
    return c;
}

}  // namespace

TEST_CASE("cyclic rings and Galois fields", "[ring-build]") {
    CHECK(units(ring_zn(4)).members == std::vector<Elem>{1, 3});
    CHECK(units(ring_zn(2)).size() == 1);
    CHECK(units(ring_zn(3)).size() == 2);
    CHECK(ring_zn(2) == ring_gf(2, 1, {0, 1}));
    CHECK(ring_zn(3) == ring_gf(3, 1));
    CHECK(units(gf4()).size() == 3);
    CHECK(is_commutative(gf4()));
    CHECK(units(ring_gf(2, 3)).size() == 7);
    CHECK(units(ring_gf(3, 2)).size() == 8);

    CHECK_THROWS_MATCHES(ring_gf(4, 1), Error, Catch::Matchers::MessageMatches(Catch::Matchers::StartsWith("NotPrime")));
    CHECK_THROWS_MATCHES(ring_gf(2, 2, {1, 0, 1}), Error,
                         Catch::Matchers::MessageMatches(Catch::Matchers::StartsWith("NotIrreducible")));
    CHECK_THROWS_AS(ring_zn(1), Error);
}

TEST_CASE("dual numbers and direct products", "[ring-build]") {
    CHECK(quotient_dual_numbers(gf2()).order() == 4);
    CHECK(units(quotient_dual_numbers(gf2())).size() == 2);
    CHECK(units(quotient_dual_numbers(gf4())).size() == 12);
    CHECK(units(quotient_dual_numbers(gf3())).size() == 6);

    const auto gz = direct_product(gf4(), z4());
    CHECK(gz.order() == 16);
    CHECK(units(gz).size() == 6);
    CHECK(zero_divisor_count(gz) == 10);
    CHECK(zero_divisor_count(direct_product(ring_zn(3), t2f2())) == 20);
    CHECK(zero_divisor_count(direct_product(ring_zn(2), t2f2())) == 14);
}

TEST_CASE("matrix and triangular rings", "[ring-build]") {
    const auto m2 = m2f2();
    CHECK(m2.order() == 16);
    CHECK(units(m2).size() == 6);
    CHECK(ideal_lattice(m2, Side::TwoSided).size() == 2);
    CHECK_FALSE(is_commutative(m2));
    CHECK(matrix_ring(z4(), 1) == z4());
    CHECK_THROWS_AS(matrix_ring(z4(), 3), Error);

    CHECK(t2f2().order() == 8);
    CHECK(units(t2f2()).size() == 2);
    CHECK(zero_divisor_count(t2f2()) == 6);
    CHECK_FALSE(is_commutative(t2f2()));
    CHECK(units(t2f3()).size() == 12);
    CHECK(t2f3().order() == 27);
}

TEST_CASE("skew dual numbers", "[ring-build]") {
    const auto f4 = gf4();
    const auto skew = skew_dual_numbers(f4, frobenius(f4));
    CHECK(skew.order() == 16);
    CHECK(units(skew).size() == 12);
    CHECK_FALSE(is_commutative(skew));

    std::vector<Elem> id(f4.order());
    std::iota(id.begin(), id.end(), 0);
    CHECK(skew_dual_numbers(f4, id) == quotient_dual_numbers(f4));
    CHECK(is_commutative(skew_dual_numbers(f4, id)));
    CHECK(skew_dual_numbers(gf2(), {0, 1}).order() == 4);

    CHECK_THROWS_MATCHES(skew_dual_numbers(f4, {0, 2, 1, 3}), Error,
                         Catch::Matchers::MessageMatches(Catch::Matchers::StartsWith("NotAutomorphism")));
}

TEST_CASE("structure-constant algebras", "[ring-build]") {
    auto c = unit_basis(4);
    c[1][2] = {0, 0, 0, 1};  // x y = xy; x^2 = y^2 = yx = 0
    const auto a = structure_constants_algebra(2, 4, c);
    CHECK(a.order() == 16);
    CHECK(units(a).size() == 8);
    CHECK_FALSE(is_commutative(a));
    CHECK(a == alg16_8());

    auto idem = unit_basis(2);
    idem[1][1] = {0, 1};  // x^2 = x
    CHECK(fingerprint(structure_constants_algebra(2, 2, idem)) ==
          fingerprint(direct_product(ring_zn(2), ring_zn(2))));

    CHECK(structure_constants_algebra(4, 1, unit_basis(1)) == z4());
}

TEST_CASE("matrix subring closure", "[ring-build]") {
    const auto f2 = gf2();
    // e11 and e12 generate the upper-triangular matrices.
    const auto t = matrix_subring_closure(f2, 2, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK(t.order() == 8);
    CHECK(fingerprint(t) == fingerprint(t2f2()));
    // e12 alone gives GF(2)[x]/<x^2>.
    CHECK(fingerprint(matrix_subring_closure(f2, 2, {{0, 1, 0, 0}})) == fingerprint(quotient_dual_numbers(f2)));
    // Identity only: the prime ring.
    CHECK(fingerprint(matrix_subring_closure(z4(), 2, {})) == fingerprint(z4()));

    std::vector<std::vector<Elem>> unit_matrices;
    for (int m = 0; m < 16; ++m) {
        std::vector<Elem> e{Elem((m >> 3) & 1), Elem((m >> 2) & 1), Elem((m >> 1) & 1), Elem(m & 1)};
        if ((e[0] * e[3] + e[1] * e[2]) % 2 == 1) unit_matrices.push_back(e);
    }
    const auto full = matrix_subring_closure(f2, 2, unit_matrices);
    CHECK(full.order() == 16);
    CHECK(full == m2f2());  // both index matrices lexicographically

    // e12, e23, e31 generate every matrix unit of M3(GF(2)): 512 elements.
    CHECK_THROWS_MATCHES(
        matrix_subring_closure(f2, 3, {{0, 1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0, 0}}),
        Error, Catch::Matchers::MessageMatches(Catch::Matchers::StartsWith("ClosureTooLarge")));
}

TEST_CASE("closure is idempotent", "[ring-build][property]") {
    const auto f2 = gf2();
    const std::vector<std::vector<std::vector<Elem>>> seeds{
        {{1, 0, 0, 0}, {0, 1, 0, 0}}, {{0, 1, 0, 0}}, {{1, 1, 0, 1}}, {{1, 0, 0, 0}}};
    for (const auto& gens : seeds) {
        // Re-close using every member of the first closure as a generator.
        std::vector<std::vector<Elem>> all;
        for (Elem x = 0; x < 16; ++x) all.push_back(detail::digits(x, 2, 4));
        const auto once = matrix_subring_closure(f2, 2, gens);
        std::vector<std::vector<Elem>> members;
        for (const auto& m : all) {
            auto trial = gens;
            trial.push_back(m);
            if (matrix_subring_closure(f2, 2, trial).order() == once.order()) members.push_back(m);
        }
        CHECK(members.size() == once.order());
        CHECK(matrix_subring_closure(f2, 2, members) == once);
    }
}

TEST_CASE("every constructor output passes the validator", "[ring-build][property]") {
    const std::vector<FiniteRing> rings{ring_zn(4),       ring_zn(9),          gf4(),
                                        ring_gf(3, 2),    ring_gf(2, 3),       quotient_dual_numbers(gf3()),
                                        m2f2(),           t2f2(),              t2f3(),
                                        alg16_8(),        skew_dual_numbers(gf4(), frobenius(gf4())),
                                        direct_product(ring_zn(3), t2f2()), matrix_subring_closure(gf2(), 3, {{1, 1, 0, 0, 1, 0, 0, 0, 0}})};
    for (const auto& r : rings) CHECK(revalidate(r) == r);
}

TEST_CASE("product fingerprint laws", "[ring-build][property]") {
    const std::vector<FiniteRing> parts{ring_zn(2), ring_zn(3), z4(), gf4(), t2f2(), quotient_dual_numbers(gf2())};
    for (const auto& a : parts)
        for (const auto& b : parts) {
            if (a.order() * b.order() > 64) continue;
            const auto p = direct_product(a, b);
            CHECK(p.order() == a.order() * b.order());
            CHECK(units(p).size() == units(a).size() * units(b).size());
            CHECK(characteristic(p) == std::lcm(characteristic(a), characteristic(b)));
        }
}

TEST_CASE("ring files", "[ring-build][file]") {
    const auto text = emit_ring_file(z4());
    CHECK(text.rfind("ring Z4\norder 4\none 1\nadd\n0 1 2 3\n", 0) == 0);
    CHECK(parse_ring_file(text) == z4());

    for (const auto& [entry, ring] : catalog_rings()) {
        const auto back = parse_ring_file(emit_ring_file(ring));
        CHECK(back == ring);
        CHECK(back.name() == ring.name());
    }

    const auto commented = "# Z2\nring two # trailing\n\norder 2\none 1\nadd\n0 1\n1 0\nmul\n0 0\n0 1\n";
    CHECK(parse_ring_file(commented) == ring_zn(2));

    auto error_line = [](const std::string& t) -> std::string {
        try {
            parse_ring_file(t);
        } catch (const Error& e) {
            return e.what();
        }
        return "";
    };
    CHECK(error_line("ring x\norder 3\none 1\nadd\n0 1\n1 0\nmul\n0 0\n0 1\n").rfind("SyntaxError: line 5", 0) == 0);
    CHECK(error_line("ring x\norder two\n").rfind("SyntaxError: line 2", 0) == 0);
    CHECK(error_line("ring x\norder 2\none 1\nadd\n0 1\n1 0\nmul\n0 0\n0 x\n").rfind("SyntaxError: line 9", 0) == 0);
    CHECK(error_line("order 2\n").rfind("SyntaxError: line 1", 0) == 0);
    CHECK(error_line("ring x\norder 2\none 1\nadd\n0 1\n1 0\nmul\n0 0\n0 1\nextra\n").rfind("SyntaxError: line 10", 0) == 0);
    // Parses, then fails validation.
    CHECK(error_line("ring x\norder 2\none 1\nadd\n1 0\n0 1\nmul\n0 0\n0 1\n").rfind("ZeroIndexNotZero", 0) == 0);

    const auto fixture = load_ring_file(RINGLINE_DATA_DIR "/m2f2.ring");
    const RingFingerprint expected{16, 6, 10, 2, 1, 3, 3, 1, false};
    CHECK(fingerprint(fixture) == expected);
}

TEST_CASE("recipes", "[ring-build][recipe]") {
    for (const auto* text : {"zn:4", "gf:2:2", "gf:2:2:1,1,1", "dual(gf:3:1)", "skew(gf:2:2)", "prod(zn:3,tri(gf:2:1,2))",
                             "mat(gf:2:1,2)", "alg:2:4:1*2=0.0.0.1", "closure(gf:2:1,2,1.0.0.0;0.1.0.0)"}) {
        const auto r = parse_recipe(text);
        CHECK(parse_recipe(to_string(r)) == r);
        CHECK(evaluate(r) == evaluate(to_string(r)));
    }
    CHECK(to_string(parse_recipe("gf:2")) == "gf:2:1");
    CHECK(evaluate("gf:2:2") == gf4());
    CHECK(evaluate("tri(gf:2,2)") == t2f2());
    CHECK(evaluate("closure(gf:2,2,1.0.0.0;0.1.0.0)") == matrix_subring_closure(gf2(), 2, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK_THROWS_MATCHES(parse_recipe("foo:3"), Error,
                         Catch::Matchers::MessageMatches(Catch::Matchers::StartsWith("UnknownRecipe")));
    CHECK_THROWS_AS(parse_recipe("prod(zn:2)"), Error);
    CHECK_THROWS_AS(parse_recipe("zn:4x"), Error);
    CHECK(evaluate("file:" RINGLINE_DATA_DIR "/m2f2.ring") == m2f2());
}
