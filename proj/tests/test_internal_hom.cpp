#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"

using namespace fuscat;

namespace {

BaseEmbedding z3_self_embedding() {
    return BaseEmbedding{fixtures::z3_ribbon(), fixtures::z3_ribbon(), {0, 1, 2}};
}

std::vector<BaseEmbedding> embedding_fixtures() {
    std::vector<BaseEmbedding> out;
    out.push_back(over_trivial_base(fixtures::ising_ribbon()));
    out.push_back(over_trivial_base(fixtures::fibonacci_ribbon()));
    out.push_back(fixtures::rep_z2_self_embedding());
    out.push_back(z3_self_embedding());
    return out;
}

} // namespace

TEST_CASE("hom dimensions count matched simples") {
    const auto ising = fixtures::ising_ring();
    const auto sigma = ObjectClass::simple(ising, 2);
    const auto ss = fuse(sigma, sigma); // 1 + eps
    ObjectClass target(ising, {1, 1, 0});
    CHECK(hom_dim(ss, target) == 2);
    CHECK(hom_dim(sigma, target) == 0);
    CHECK(hom_dim(ObjectClass(ising), target) == 0);
    CHECK_THROWS_AS(hom_dim(sigma, ObjectClass::unit_class(fixtures::fibonacci_ring())),
                    StructuralError);
}

TEST_CASE("internal hom over the trivial base collapses to the hom dimension") {
    const auto emb = over_trivial_base(fixtures::ising_ribbon());
    std::mt19937 rng(301);
    for (int trial = 0; trial < 30; ++trial) {
        const auto m = fixtures::random_class(emb.target.ring, rng);
        const auto n = fixtures::random_class(emb.target.ring, rng);
        const auto h = internal_hom_over_base(emb, m, n);
        CHECK(h.mult(0) == hom_dim(m, n));
    }
}

TEST_CASE("the adjunction holds simple by simple") {
    std::mt19937 rng(302);
    for (const auto& emb : embedding_fixtures()) {
        INFO("target " << emb.target.ring->name() << " over " << emb.base.ring->name());
        for (int trial = 0; trial < 20; ++trial) {
            const auto m = fixtures::random_class(emb.target.ring, rng);
            const auto n = fixtures::random_class(emb.target.ring, rng);
            const auto h = internal_hom_over_base(emb, m, n);
            for (std::size_t e = 0; e < emb.base.ring->size(); ++e) {
                const auto acted =
                    fuse(ObjectClass::simple(emb.target.ring, emb.image_of(e)), m);
                CHECK(h.mult(e) == hom_dim(acted, n));
            }
        }
    }
}

TEST_CASE("enriched values remember more than the dimension") {
    const auto emb = fixtures::rep_z2_self_embedding();
    const auto ring = emb.target.ring;
    const auto one = ObjectClass::unit_class(ring);
    const auto psi = ObjectClass::simple(ring, 1);

    const auto self_hom = enriched_hom(emb, psi, psi);
    CHECK(self_hom.base_class == ObjectClass::unit_class(emb.base.ring));
    CHECK(self_hom.total_dim_check == 1);

    // Hom(1, psi) vanishes, yet the internal hom is the base fermion.
    const auto twisted = enriched_hom(emb, one, psi);
    CHECK(twisted.base_class == ObjectClass::simple(emb.base.ring, 1));
    CHECK(twisted.total_dim_check == 0);

    ObjectClass both(ring, {1, 1});
    const auto full = enriched_hom(emb, both, both);
    CHECK(full.base_class == ObjectClass(emb.base.ring, {2, 2}));
    CHECK(full.total_dim_check == 2);
}

TEST_CASE("internal homs in the cyclic case track the group difference") {
    const auto emb = z3_self_embedding();
    const auto ring = emb.target.ring;
    const auto a = ObjectClass::simple(ring, 1);
    const auto b = ObjectClass::simple(ring, 2);
    CHECK(internal_hom_over_base(emb, a, b) == ObjectClass::simple(emb.base.ring, 1));
    CHECK(internal_hom_over_base(emb, b, a) == ObjectClass::simple(emb.base.ring, 2));
    CHECK(internal_hom_over_base(emb, a, a) == ObjectClass::unit_class(emb.base.ring));
}

TEST_CASE("dual swap identity") {
    std::mt19937 rng(303);
    for (const auto& emb : embedding_fixtures()) {
        INFO("target " << emb.target.ring->name() << " over " << emb.base.ring->name());
        for (int trial = 0; trial < 20; ++trial) {
            const auto m = fixtures::random_class(emb.target.ring, rng);
            const auto n = fixtures::random_class(emb.target.ring, rng);
            CHECK(internal_hom_dual_swap(emb, m, n).ok());
            CHECK(dual_class(internal_hom_over_base(emb, m, n)) ==
                  internal_hom_over_base(emb, n, m));
        }
    }
}

TEST_CASE("zero classes give zero homs") {
    const auto emb = fixtures::rep_z2_self_embedding();
    const auto zero = ObjectClass(emb.target.ring);
    const auto psi = ObjectClass::simple(emb.target.ring, 1);
    CHECK(internal_hom_over_base(emb, zero, psi).is_zero());
    CHECK(internal_hom_over_base(emb, psi, zero).is_zero());
    CHECK(enriched_hom(emb, zero, zero).total_dim_check == 0);
}

TEST_CASE("a unit-breaking map fails the consistency cross-check") {
    BaseEmbedding bad{fixtures::rep_z2_ribbon(), fixtures::ising_ribbon(), {1, 0}};
    const auto one = ObjectClass::unit_class(bad.target.ring);
    CHECK_THROWS_AS(enriched_hom(bad, one, one), StructuralError);
}

TEST_CASE("the dimension bound holds across fixtures") {
    std::mt19937 rng(304);
    for (const auto& emb : embedding_fixtures()) {
        const auto d_C = fpdims(emb.target.ring);
        const auto d_E = fpdims(emb.base.ring);
        for (int trial = 0; trial < 20; ++trial) {
            const auto m = fixtures::random_class(emb.target.ring, rng);
            const auto n = fixtures::random_class(emb.target.ring, rng);
            CHECK(hom_fpdim_bound_ok(emb, m, n, d_C, d_E));
        }
    }
}

TEST_CASE("ring mismatches are rejected up front") {
    const auto emb = over_trivial_base(fixtures::ising_ribbon());
    const auto foreign = ObjectClass::unit_class(fixtures::fibonacci_ring());
    const auto native = ObjectClass::unit_class(emb.target.ring);
    CHECK_THROWS_AS(internal_hom_over_base(emb, foreign, native), StructuralError);
    CHECK_THROWS_AS(internal_hom_over_base(emb, native, foreign), StructuralError);
}
