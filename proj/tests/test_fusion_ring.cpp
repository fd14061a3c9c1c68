#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"

using namespace fuscat;
using Catch::Matchers::ContainsSubstring;

namespace {

bool has_rule(const std::vector<Violation>& items, const std::string& rule) {
    for (const auto& v : items)
        if (v.rule == rule) return true;
    return false;
}

} // namespace

TEST_CASE("hand-built rings pass validation") {
    for (const auto& ring : {fixtures::trivial_ring(), fixtures::rep_z2_ring(),
                             fixtures::fibonacci_ring(), fixtures::ising_ring(),
                             fixtures::toric_ring(), fixtures::z3_ring(), fixtures::s3_ring()}) {
        INFO("ring " << ring->name());
        const auto report = validate_fusion_ring(*ring);
        CHECK(report.ok());
        CHECK(report.violations.empty());
    }
}

TEST_CASE("noncommutative input is a warning, not a violation") {
    const auto report = validate_fusion_ring(*fixtures::s3_ring());
    REQUIRE(report.ok());
    REQUIRE(has_rule(report.warnings, "commutativity"));

    const auto z3 = validate_fusion_ring(*fixtures::z3_ring());
    CHECK(z3.warnings.empty());
}

TEST_CASE("unit law violations are reported") {
    auto r = std::make_shared<FusionRing>("broken_unit",
                                          std::vector<std::string>{"1", "x"}, 0);
    r->set_N(0, 0, 0, 1);
    r->set_N(1, 0, 1, 1);
    r->set_N(1, 1, 0, 1);
    // 1 * x is left empty instead of x.
    const auto report = validate_fusion_ring(*r);
    REQUIRE_FALSE(report.ok());
    CHECK(has_rule(report.violations, "unit_law"));
}

TEST_CASE("associativity violations are reported and isolated") {
    const auto report = validate_fusion_ring(*fixtures::z3_broken_ring());
    REQUIRE_FALSE(report.ok());
    CHECK(has_rule(report.violations, "associativity"));
    CHECK_FALSE(has_rule(report.violations, "unit_law"));
    CHECK_FALSE(has_rule(report.violations, "rigidity"));
}

TEST_CASE("rigidity requires exactly one dual per simple") {
    SECTION("no dual") {
        auto r = std::make_shared<FusionRing>("no_dual",
                                              std::vector<std::string>{"1", "x"}, 0);
        r->set_N(0, 0, 0, 1);
        r->set_N(0, 1, 1, 1);
        r->set_N(1, 0, 1, 1);
        // x * x = 0: nothing pairs x back to the unit.
        const auto report = validate_fusion_ring(*r);
        REQUIRE_FALSE(report.ok());
        CHECK(has_rule(report.violations, "rigidity"));
    }
    SECTION("two candidate duals") {
        auto r = std::make_shared<FusionRing>("two_duals",
                                              std::vector<std::string>{"1", "x", "y"}, 0);
        for (std::size_t i = 0; i < 3; ++i) {
            r->set_N(0, i, i, 1);
            r->set_N(i, 0, i, 1);
        }
        r->set_N(1, 1, 0, 1);
        r->set_N(1, 2, 0, 1); // both x and y pair with x to the unit
        r->set_N(2, 1, 0, 1);
        r->set_N(2, 2, 0, 1);
        const auto report = validate_fusion_ring(*r);
        REQUIRE_FALSE(report.ok());
        CHECK(has_rule(report.violations, "rigidity"));
    }
    SECTION("pairing multiplicity above one") {
        auto r = std::make_shared<FusionRing>("fat_pairing",
                                              std::vector<std::string>{"1", "x"}, 0);
        r->set_N(0, 0, 0, 1);
        r->set_N(0, 1, 1, 1);
        r->set_N(1, 0, 1, 1);
        r->set_N(1, 1, 0, 2);
        const auto report = validate_fusion_ring(*r);
        REQUIRE_FALSE(report.ok());
        CHECK(has_rule(report.violations, "rigidity"));
    }
}

TEST_CASE("dual compatibility violations are reported") {
    auto r = std::make_shared<FusionRing>("skew",
                                          std::vector<std::string>{"1", "x", "y"}, 0);
    for (std::size_t i = 0; i < 3; ++i) {
        r->set_N(0, i, i, 1);
        r->set_N(i, 0, i, 1);
    }
    r->set_N(1, 1, 0, 1); // x self-dual
    r->set_N(2, 2, 0, 1); // y self-dual
    r->set_N(1, 2, 2, 1); // x * y contains y, but y * x does not
    const auto report = validate_fusion_ring(*r);
    REQUIRE_FALSE(report.ok());
    CHECK(has_rule(report.violations, "dual_compat"));
}

TEST_CASE("both reciprocity identities hold on valid rings") {
    for (const auto& ring :
         {fixtures::ising_ring(), fixtures::z3_ring(), fixtures::s3_ring()}) {
        INFO("ring " << ring->name());
        const auto n = ring->size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const auto di = dual_of(*ring, i);
                    const auto dj = dual_of(*ring, j);
                    const auto dk = dual_of(*ring, k);
                    CHECK(ring->N(i, j, k) == ring->N(dj, di, dk));
                    CHECK(ring->N(i, j, k) == ring->N(di, k, j));
                }
    }
}

TEST_CASE("duals land where the group structure says") {
    const auto z3 = fixtures::z3_ring();
    CHECK(dual_of(*z3, 0) == 0);
    CHECK(dual_of(*z3, 1) == 2); // a* = b
    CHECK(dual_of(*z3, 2) == 1);

    for (const auto& ring : {fixtures::ising_ring(), fixtures::toric_ring(),
                             fixtures::z3_ring(), fixtures::s3_ring()}) {
        INFO("ring " << ring->name());
        for (std::size_t i = 0; i < ring->size(); ++i)
            CHECK(dual_of(*ring, dual_of(*ring, i)) == i);
    }
}

TEST_CASE("dual_of rejects a non-rigid ring") {
    auto r = std::make_shared<FusionRing>("no_dual",
                                          std::vector<std::string>{"1", "x"}, 0);
    r->set_N(0, 0, 0, 1);
    r->set_N(0, 1, 1, 1);
    r->set_N(1, 0, 1, 1);
    CHECK_THROWS_AS(dual_of(*r, 1), StructuralError);
    CHECK_THROWS_WITH(dual_of(*r, 1), ContainsSubstring("not rigid"));
}

TEST_CASE("fuse reproduces hand products") {
    const auto ising = fixtures::ising_ring();
    const auto sigma = ObjectClass::simple(ising, 2);
    const auto prod = fuse(sigma, sigma);
    CHECK(prod.mult(0) == 1);
    CHECK(prod.mult(1) == 1);
    CHECK(prod.mult(2) == 0);

    ObjectClass two_sigma(ising);
    two_sigma.set_mult(2, 2);
    const auto big = fuse(two_sigma, prod); // 2*sigma * (1 + eps) = 4*sigma
    CHECK(big.mult(2) == 4);
    CHECK(big.mult(0) == 0);
}

TEST_CASE("the unit class is neutral for fuse") {
    std::mt19937 rng(77);
    for (const auto& ring :
         {fixtures::ising_ring(), fixtures::z3_ring(), fixtures::s3_ring()}) {
        const auto unit = ObjectClass::unit_class(ring);
        for (int trial = 0; trial < 25; ++trial) {
            const auto x = fixtures::random_class(ring, rng);
            CHECK(fuse(unit, x) == x);
            CHECK(fuse(x, unit) == x);
        }
    }
}

TEST_CASE("fuse is associative on classes") {
    std::mt19937 rng(78);
    for (const auto& ring :
         {fixtures::ising_ring(), fixtures::toric_ring(), fixtures::s3_ring()}) {
        INFO("ring " << ring->name());
        for (int trial = 0; trial < 25; ++trial) {
            const auto a = fixtures::random_class(ring, rng);
            const auto b = fixtures::random_class(ring, rng);
            const auto c = fixtures::random_class(ring, rng);
            CHECK(fuse(fuse(a, b), c) == fuse(a, fuse(b, c)));
        }
    }
}

TEST_CASE("dual_class is an anti-homomorphism") {
    std::mt19937 rng(79);
    const auto s3 = fixtures::s3_ring();
    for (int trial = 0; trial < 25; ++trial) {
        const auto a = fixtures::random_class(s3, rng);
        const auto b = fixtures::random_class(s3, rng);
        CHECK(dual_class(fuse(a, b)) == fuse(dual_class(b), dual_class(a)));
        CHECK(dual_class(dual_class(a)) == a);
    }
}

TEST_CASE("fuse rejects classes over different rings") {
    const auto a = ObjectClass::unit_class(fixtures::ising_ring());
    const auto b = ObjectClass::unit_class(fixtures::fibonacci_ring());
    CHECK_THROWS_AS(fuse(a, b), StructuralError);
}

TEST_CASE("class rendering") {
    const auto fib = fixtures::fibonacci_ring();
    CHECK(format_class(ObjectClass(fib)) == "0");
    CHECK(format_class(ObjectClass::simple(fib, 1)) == "tau");
    ObjectClass x(fib, {2, 1});
    CHECK(format_class(x) == "2*1 + tau");
}

TEST_CASE("multiplicity arithmetic refuses to overflow") {
    const auto fib = fixtures::fibonacci_ring();
    ObjectClass a(fib);
    a.set_mult(1, UINT64_MAX);
    CHECK_THROWS_AS(a.add(1, 1), std::overflow_error);

    ObjectClass b(fib);
    b.set_mult(1, UINT64_MAX / 2);
    ObjectClass c(fib);
    c.set_mult(1, 3);
    CHECK_THROWS_AS(fuse(b, c), std::overflow_error);
}

TEST_CASE("ring construction rejects malformed input") {
    CHECK_THROWS_AS(FusionRing("empty", {}, 0), StructuralError);
    CHECK_THROWS_AS(FusionRing("dup", {"1", "1"}, 0), StructuralError);
    CHECK_THROWS_AS(FusionRing("unit_oob", {"1"}, 1), StructuralError);

    const auto r = fixtures::fibonacci_ring();
    CHECK_THROWS_AS(r->N(0, 0, 2), StructuralError);
    CHECK_THROWS_WITH(r->N(2, 0, 0), ContainsSubstring("fibonacci"));
}

TEST_CASE("structural equality ignores the name, operator== does not") {
    const auto a = fixtures::fibonacci_ring();
    auto b = std::make_shared<FusionRing>("renamed", std::vector<std::string>{"1", "tau"}, 0);
    b->set_N(0, 0, 0, 1);
    b->set_N(0, 1, 1, 1);
    b->set_N(1, 0, 1, 1);
    b->set_N(1, 1, 0, 1);
    b->set_N(1, 1, 1, 1);
    CHECK(a->same_structure(*b));
    CHECK_FALSE(*a == *b);
    CHECK(same_ring(a, RingPtr(b)));
    CHECK_FALSE(same_ring(a, fixtures::ising_ring()));
}
