#include "catch_amalgamated.hpp"

#include "support.hpp"

using namespace ringline;
using namespace support;

TEST_CASE("2x2 invertibility", "[projline]") {
    for (const auto& [entry, r] : catalog_rings()) {
        CHECK(is_invertible_2x2(r, {r.one(), 0, 0, r.one()}));
        CHECK_FALSE(is_invertible_2x2(r, {r.one(), r.one(), r.one(), r.one()}));
    }
    const auto z = z4();
    CHECK_FALSE(is_invertible_2x2(z, {1, 1, 0, 2}));
    CHECK(is_invertible_2x2(z, {1, 1, 0, 1}));
    CHECK_FALSE(is_invertible_2x2(z, {2, 3, 2, 3}));
}

TEST_CASE("invertibility agrees with exhaustive (M, X) search", "[projline][oracle]") {
    for (const auto& r : {gf2(), z4(), quotient_dual_numbers(gf2()), t2f2()}) {
        INFO(r.name());
        const auto brute = invertible_matrices_brute(r);
        const auto n = static_cast<Elem>(r.order());
        std::size_t count = 0;
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c)
                    for (Elem d = 0; d < n; ++d) {
                        const bool inv = is_invertible_2x2(r, {a, b, c, d});
                        CHECK(inv == (brute.count({a, b, c, d}) > 0));
                        count += inv;
                    }
        CHECK(count == brute.size());
        // Admissible pairs are exactly the first rows of invertible matrices.
        std::set<CoordinatePair> rows;
        for (const auto& m : brute) rows.insert({m[0], m[1]});
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) CHECK(is_admissible(r, {a, b}) == (rows.count({a, b}) > 0));
    }
    CHECK(invertible_matrices_brute(gf2()).size() == 6);
}

TEST_CASE("commutative rings: invertible iff determinant is a unit", "[projline][oracle]") {
    for (const auto& [entry, r] : catalog_rings()) {
        if (!is_commutative(r)) continue;
        INFO(entry.name);
        const auto n = static_cast<Elem>(r.order());
        bool agree = true;
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c)
                    for (Elem d = 0; d < n; ++d)
                        agree = agree && is_invertible_2x2(r, {a, b, c, d}) == det_is_unit(r, {a, b, c, d});
        CHECK(agree);

        // Line built from the determinant criterion.
        const auto line = build_line(r, LineSide::Left);
        std::size_t admissible = 0;
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                bool completes = false;
                for (Elem c = 0; c < n && !completes; ++c)
                    for (Elem d = 0; d < n && !completes; ++d) completes = det_is_unit(r, {a, b, c, d});
                admissible += completes;
                CHECK(completes == (line.locate({a, b}) < line.size()));
            }
        CHECK(admissible == line.admissible_pair_count());
        for (std::size_t i = 0; i < line.size(); ++i)
            for (std::size_t j = 0; j < line.size(); ++j)
                if (i != j) CHECK(line.distant(i, j) == det_is_unit(r, line.stack(line.point(i).rep, line.point(j).rep)));
    }
}

TEST_CASE("admissible pairs", "[projline]") {
    for (const auto& [entry, r] : catalog_rings()) {
        for (Elem x = 0; x < r.order(); ++x) CHECK(is_admissible(r, {r.one(), x}));
        CHECK_FALSE(is_admissible(r, {0, 0}));
    }
    CHECK_FALSE(is_admissible(z4(), {2, 2}));
    const auto gz = direct_product(gf4(), z4());
    const Elem a = 1 * 4 + 0;  // (1, 0)
    const Elem b = 0 * 4 + 1;  // (0, 1)
    CHECK_FALSE(gz.is_unit(a));
    CHECK_FALSE(gz.is_unit(b));
    CHECK(is_admissible(gz, {a, b}));
}

TEST_CASE("line sizes", "[projline]") {
    CHECK(build_line(gf2(), LineSide::Left).size() == 3);
    CHECK(build_line(z4(), LineSide::Left).size() == 6);
    CHECK(build_line(m2f2(), LineSide::Left).size() == 35);
    CHECK_THROWS_AS(build_line(ring_zn(33), LineSide::Left), Error);
}

TEST_CASE("right line over M2(GF(2)) breaks down", "[projline]") {
    try {
        build_line(m2f2(), LineSide::Right);
        FAIL("right line was built");
    } catch (const RightLineBreakdown& e) {
        CHECK(e.code() == ErrorCode::RightLineBreakdown);
        CHECK(e.classSizes().size() > 1);
        std::size_t pairs = 0;
        for (auto [size, count] : e.classSizes()) pairs += size * count;
        CHECK(pairs == build_line(m2f2(), LineSide::Left).admissible_pair_count());
    }
}

TEST_CASE("distant relation", "[projline]") {
    const auto f = build_line(gf2(), LineSide::Left);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(f.distant(i, j) == (i != j));

    const auto z = build_line(z4(), LineSide::Left);
    std::size_t non_distant = 0;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) non_distant += !z.distant(i, j);
    CHECK(non_distant == 3);

    const auto m = build_line(m2f2(), LineSide::Left);
    for (std::size_t i = 0; i < m.size(); ++i) CHECK(m.distant_row(i).count() == 16);
}

TEST_CASE("point types", "[projline]") {
    for (const auto& [entry, r] : catalog_rings()) {
        const auto line = build_line(r, LineSide::Left);
        for (Elem x = 0; x < r.order(); ++x)
            CHECK(line.point_type(line.locate({r.one(), x})) == PointType::TypeI);
        // Type is a class invariant.
        for (std::size_t i = 0; i < line.size(); ++i) {
            const bool type_one = line.point_type(i) == PointType::TypeI;
            for (const auto& m : line.point(i).members) CHECK((r.is_unit(m.a) || r.is_unit(m.b)) == type_one);
        }
    }
    auto type_one = [](const ProjectiveLine& l) {
        std::size_t n = 0;
        for (std::size_t i = 0; i < l.size(); ++i) n += l.point_type(i) == PointType::TypeI;
        return n;
    };
    CHECK(type_one(build_line(m2f2(), LineSide::Left)) == 26);
    const auto gz = build_line(direct_product(gf4(), z4()), LineSide::Left);
    CHECK(gz.size() == 30);
    CHECK(type_one(gz) == 26);
}

TEST_CASE("line invariants over the catalog", "[projline][property]") {
    std::mt19937 rng(35);
    for (const auto& [entry, r] : catalog_rings()) {
        INFO(entry.name);
        const auto line = build_line(r, LineSide::Left);
        const std::size_t u = units(r).size();
        std::size_t members = 0;
        std::set<CoordinatePair> seen;
        for (const auto& p : line.points()) {
            CHECK(p.members.size() == u);
            CHECK(p.rep == p.members.front());
            members += p.members.size();
            for (const auto& m : p.members) CHECK(seen.insert(m).second);
        }
        CHECK(members == line.admissible_pair_count());
        CHECK(line.size() * u == line.admissible_pair_count());
        for (std::size_t i = 0; i < line.size(); ++i) {
            CHECK_FALSE(line.distant(i, i));
            for (std::size_t j = 0; j < line.size(); ++j) CHECK(line.distant(i, j) == line.distant(j, i));
        }
        std::uniform_int_distribution<std::size_t> pick(0, line.size() - 1), member(0, u - 1);
        for (int swap = 0; swap < 200; ++swap) {
            const auto i = pick(rng), j = pick(rng);
            if (i == j) continue;
            const auto& p = line.point(i).members[member(rng)];
            const auto& q = line.point(j).members[member(rng)];
            CHECK(is_invertible_2x2(r, line.stack(p, q)) == line.distant(i, j));
        }
    }
}

TEST_CASE("line over GF(q) has q+1 mutually distant points", "[projline][property]") {
    for (const auto& [q, f] : std::vector<std::pair<std::size_t, FiniteRing>>{{2, gf2()}, {3, gf3()}, {4, gf4()}}) {
        const auto line = build_line(f, LineSide::Left);
        CHECK(line.size() == q + 1);
        for (std::size_t i = 0; i < line.size(); ++i) CHECK(line.distant_row(i).count() == q);
    }
}

TEST_CASE("point count is multiplicative on products", "[projline][property]") {
    auto tot = [](const FiniteRing& r) { return build_line(r, LineSide::Left).size(); };
    const std::vector<std::pair<FiniteRing, FiniteRing>> pairs{
        {ring_zn(3), t2f2()}, {ring_zn(2), t2f2()}, {gf4(), z4()}, {gf4(), quotient_dual_numbers(gf2())}};
    for (const auto& [a, b] : pairs) CHECK(tot(direct_product(a, b)) == tot(a) * tot(b));
}

TEST_CASE("right line with equal class sizes", "[projline]") {
    const auto r = t2f2();
    const auto right = build_line(r, LineSide::Right);
    const auto left = build_line(r, LineSide::Left);
    CHECK(right.size() == left.size());
    for (const auto& p : right.points()) {
        for (const auto& m : p.members) {
            // members are right multiples of the representative
            bool found = false;
            for (Elem u : units(r).members) found = found || (CoordinatePair{r.mul(p.rep.a, u), r.mul(p.rep.b, u)} == m);
            CHECK(found);
        }
    }
}
