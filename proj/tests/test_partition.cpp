#include <doctest.h>

#include <random>

#include "skc/errors.hpp"
#include "skc/model_zoo.hpp"
#include "skc/partition.hpp"
#include "testutil.hpp"

using namespace skc;

namespace {

// Independent oracle for the classification: minimize over the whole
// lattice and look at where the singleton partition lands.
TypeSVerdict brute_force_verdict(const Source& s) {
    MultiInfoReport mi = multipartite_info(s);
    bool singleton_in = false;
    for (const auto& p : mi.argmin)
        if (p.is_singleton_partition()) singleton_in = true;
    if (!singleton_in) return TypeSVerdict::NotTypeS;
    return mi.argmin.size() == 1 ? TypeSVerdict::StrictTypeS : TypeSVerdict::TypeS;
}

} // namespace

TEST_CASE("partition enumeration counts") {
    CHECK(enumerate_partitions(3).size() == 4);
    CHECK(enumerate_partitions(4).size() == 14);
    auto two = enumerate_partitions(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0] == singleton_partition(2));
    CHECK(enumerate_partitions(6).size() == 202); // Bell(6) - 1
    CHECK_THROWS_AS(enumerate_partitions(13), DomainError);

    // Exactly once, canonical order.
    auto all = enumerate_partitions(5);
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].size() >= 2);
        CHECK(all[i].blocks.front().contains(1));
        for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
    }
}

TEST_CASE("delta examples") {
    CHECK(delta(*gen_complete_uniform(5, 3), singleton_partition(5)) == Value::rational(5));
    CHECK(delta(*gen_sts(7), singleton_partition(7)) == Value::rational(7, 3));

    auto p = make_partition({TerminalSet::of({1, 4}, 4), TerminalSet::of({2}, 4),
                             TerminalSet::of({3}, 4)});
    CHECK(delta(*gen_chan(4), p) == Value::rational(3));

    CHECK_THROWS_AS(delta(*gen_cycle(3), make_partition({TerminalSet::full(3)})), DomainError);
}

TEST_CASE("multipartite information with full argmin") {
    SUBCASE("triangle") {
        auto mi = multipartite_info(*gen_cycle(3));
        CHECK(mi.value == Value::rational(3, 2));
        REQUIRE(mi.argmin.size() == 1);
        CHECK(mi.argmin[0].is_singleton_partition());
        CHECK(mi.delta_singleton == mi.value);
    }
    SUBCASE("chan multigraph has the documented second minimizer") {
        auto mi = multipartite_info(*gen_chan(4));
        CHECK(mi.value == Value::rational(3));
        auto special = make_partition({TerminalSet::of({1, 4}, 4), TerminalSet::of({2}, 4),
                                       TerminalSet::of({3}, 4)});
        bool has_singleton = false, has_special = false;
        for (const auto& p : mi.argmin) {
            if (p.is_singleton_partition()) has_singleton = true;
            if (p == special) has_special = true;
        }
        CHECK(has_singleton);
        CHECK(has_special);
        CHECK(mi.argmin.size() == 2);
    }
    SUBCASE("example source ties on every partition") {
        auto mi = multipartite_info(*gen_omni_example(3, 0.5));
        CHECK(mi.value.to_double() == doctest::Approx(1.0));
        CHECK(mi.argmin.size() == 4);
    }
    SUBCASE("every reported minimizer reproduces the value") {
        for (SourcePtr s : {SourcePtr(gen_chan(4)), SourcePtr(gen_sts(7)),
                            SourcePtr(gen_omni_example(4, 0.3))}) {
            auto mi = multipartite_info(*s);
            for (const auto& p : mi.argmin) CHECK(delta(*s, p) == mi.value);
        }
    }
}

TEST_CASE("restricted partitions") {
    auto p1 = restricted_partition(4, TerminalSet::of({1}, 4));
    CHECK(p1 == make_partition({TerminalSet::of({2, 3, 4}, 4), TerminalSet::of({1}, 4)}));

    CHECK(restricted_partition(4, TerminalSet::of({1, 2, 3}, 4)) == singleton_partition(4));

    auto p2 = restricted_partition(5, TerminalSet::of({2, 4}, 5));
    CHECK(p2 == make_partition({TerminalSet::of({1, 3, 5}, 5), TerminalSet::of({2}, 5),
                                TerminalSet::of({4}, 5)}));
    CHECK(p2.size() == 3);

    CHECK_THROWS_AS(restricted_partition(4, TerminalSet::full(4)), DomainError);
    CHECK_THROWS_AS(restricted_partition(4, TerminalSet::empty_set(4)), DomainError);
}

TEST_CASE("Type S classification") {
    SUBCASE("complete uniform is strict") {
        auto cls = classify_type_s(*gen_complete_uniform(5, 3));
        CHECK(cls.verdict == TypeSVerdict::StrictTypeS);
        CHECK(cls.margin.sign() > 0);
    }
    SUBCASE("chan multigraph is Type S with margin exactly zero") {
        auto cls = classify_type_s(*gen_chan(4));
        CHECK(cls.verdict == TypeSVerdict::TypeS);
        CHECK(cls.margin == Value::rational(0));
        CHECK(cls.margin.is_exact());
    }
    SUBCASE("all-tie example source") {
        auto cls = classify_type_s(*gen_omni_example(4, 0.5));
        CHECK(cls.verdict == TypeSVerdict::TypeS);
        CHECK(cls.tie);
    }
    SUBCASE("a 2-cell-dominant pmf source is NotTypeS") {
        // Terminals 1 and 2 share a fair bit; terminal 3 observes an
        // independent one. I(X_{12}; X_3) = 0 < 1/2 = Delta(S).
        std::vector<double> probs(8, 0.0);
        probs[0b000] = 0.25; // x1=0,x2=0,x3=0
        probs[0b001] = 0.25;
        probs[0b110] = 0.25;
        probs[0b111] = 0.25;
        PmfSource s(3, {2, 2, 2}, probs);
        auto cls = classify_type_s(s);
        CHECK(cls.verdict == TypeSVerdict::NotTypeS);
        CHECK(brute_force_verdict(s) == TypeSVerdict::NotTypeS);
        CHECK(cls.margin.to_double() == doctest::Approx(-0.5));
    }
    SUBCASE("a dominant 2-cell split defeats the singleton") {
        // Two triangles bridged by one edge: splitting at the bridge costs
        // 1 < Delta(S) = 7/5.
        std::vector<Hyperedge> edges;
        for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {3, 4}})
            edges.push_back({TerminalSet::of({a, b}, 6), 1});
        PinSource two_triangles{Hypergraph(6, edges)};
        auto cls = classify_type_s(two_triangles);
        CHECK(cls.verdict == TypeSVerdict::NotTypeS);
        CHECK(cls.margin.sign() < 0);
        CHECK(brute_force_verdict(two_triangles) == TypeSVerdict::NotTypeS);
    }
}

TEST_CASE("uniform PIN fast path matches the generic scan") {
    SUBCASE("documented models") {
        CHECK(pin_singleton_check(*gen_sts(7)).verdict == TypeSVerdict::StrictTypeS);
        CHECK(pin_singleton_check(*gen_cycle(5)).verdict == TypeSVerdict::StrictTypeS);

        auto whole = gen_complete_uniform(4, 4);
        auto fast = pin_singleton_check(*whole);
        auto slow = classify_type_s(*whole);
        CHECK(fast.verdict == slow.verdict);
        CHECK(fast.margin == slow.margin);
        CHECK(slow.delta_singleton == Value::rational(1));
    }
    SUBCASE("random uniform models up to m = 8") {
        std::mt19937_64 rng(7101);
        for (int trial = 0; trial < 40; ++trial) {
            int m = 3 + static_cast<int>(rng() % 6); // 3..8
            int t = 2 + static_cast<int>(rng() % static_cast<unsigned>(m - 1));
            auto pin = testutil::random_pin(rng, m, t, 3);
            auto fast = pin_singleton_check(*pin);
            auto slow = classify_type_s(*pin);
            CHECK(fast.verdict == slow.verdict);
            CHECK(fast.margin == slow.margin);
            CHECK(fast.worst_b == slow.worst_b);
        }
    }
}

TEST_CASE("singleton-minimizer scan equals lattice brute force") {
    std::mt19937_64 rng(7102);
    SUBCASE("random PIN models, exact") {
        for (int trial = 0; trial < 30; ++trial) {
            int m = 3 + static_cast<int>(rng() % 4); // 3..6
            int t = 2 + static_cast<int>(rng() % static_cast<unsigned>(m - 1));
            auto pin = testutil::random_pin(rng, m, t, 2);
            CHECK(classify_type_s(*pin).verdict == brute_force_verdict(*pin));
        }
    }
    SUBCASE("random pmf sources, tolerance-fenced") {
        int checked = 0;
        for (int trial = 0; trial < 40 && checked < 25; ++trial) {
            auto s = testutil::random_pmf(rng, 4);
            auto cls = classify_type_s(*s);
            if (cls.tie) continue; // margin inside the tolerance band proves nothing
            ++checked;
            CHECK(cls.verdict == brute_force_verdict(*s));
        }
        CHECK(checked >= 25);
    }
}

TEST_CASE("fractional partitions") {
    SUBCASE("singleton weights") {
        auto fp = fractional_partition_of(singleton_partition(3));
        for (std::uint32_t bits = 1; bits < 7; ++bits) {
            TerminalSet B(bits, 3);
            Value expect = B.count() == 2 ? Value::rational(1, 2) : Value::rational(0);
            CHECK(fp.weight(B) == expect);
        }
    }
    SUBCASE("two-cell partition") {
        auto fp = fractional_partition_of(
            make_partition({TerminalSet::of({1, 2}, 4), TerminalSet::of({3, 4}, 4)}));
        CHECK(fp.weight(TerminalSet::of({1, 2}, 4)) == Value::rational(1));
        CHECK(fp.weight(TerminalSet::of({3, 4}, 4)) == Value::rational(1));
    }
    SUBCASE("row sums are one for every terminal") {
        std::mt19937_64 rng(7103);
        auto partitions = enumerate_partitions(5);
        for (int rep = 0; rep < 10; ++rep) {
            const auto& p = partitions[rng() % partitions.size()];
            auto fp = fractional_partition_of(p);
            for (int i = 1; i <= 5; ++i) {
                Value sum;
                for (const auto& [bits, w] : fp.weights)
                    if (TerminalSet(bits, 5).contains(i)) sum += w;
                CHECK(sum == Value::rational(1));
            }
        }
    }
    SUBCASE("delta identity against the dual form") {
        std::mt19937_64 rng(7104);
        auto partitions = enumerate_partitions(4);
        for (int rep = 0; rep < 6; ++rep) {
            SourcePtr s = rep % 2 == 0 ? SourcePtr(testutil::random_pin(rng, 4, 2, 3))
                                       : SourcePtr(testutil::random_pmf(rng, 4));
            for (const auto& p : partitions) {
                auto fp = fractional_partition_of(p);
                Value acc;
                for (const auto& [bits, w] : fp.weights) {
                    TerminalSet B(bits, 4);
                    acc += w * conditional_entropy(*s, B, B.complement());
                }
                Value lhs = delta(*s, p);
                Value rhs = s->entropy(TerminalSet::full(4)) - acc;
                CHECK(lhs.to_double() == doctest::Approx(rhs.to_double()).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("conditioned partition functionals") {
    auto pmf = expand_to_pmf(*gen_cycle(3));
    // Edge instances in document order: {1,2}, {1,3}, {2,3}; terminal 1's
    // symbol has the {1,2} bit lowest.
    FunctionL xi12;
    xi12.labels.resize(pmf->table_size());
    for (std::size_t pt = 0; pt < pmf->table_size(); ++pt)
        xi12.labels[pt] = pmf->symbol_at(pt, 1) & 1;

    SUBCASE("worked conditional entropies") {
        CHECK(entropy_of_function(*pmf, xi12) == doctest::Approx(1.0));
        CHECK(cond_entropy_given_function(*pmf, TerminalSet::of({1}, 3), xi12) ==
              doctest::Approx(1.0));
        CHECK(cond_entropy_given_function(*pmf, TerminalSet::of({3}, 3), xi12) ==
              doctest::Approx(2.0));
        CHECK(delta_given_function(*pmf, singleton_partition(3), xi12).to_double() ==
              doctest::Approx(1.0));
        auto cond = conditional_multipartite_info(*pmf, xi12);
        CHECK(cond.value.to_double() == doctest::Approx(1.0));
    }
    SUBCASE("constant function changes nothing") {
        auto cond = conditional_multipartite_info(*pmf, constant_function(*pmf));
        CHECK(cond.value.to_double() ==
              doctest::Approx(multipartite_info(*pmf).value.to_double()));
    }
    SUBCASE("identity function removes everything") {
        auto cond = conditional_multipartite_info(*pmf, identity_function(*pmf));
        CHECK(cond.value.to_double() == doctest::Approx(0.0).epsilon(1e-9));
    }
    SUBCASE("H(L) dominates the information drop") {
        std::mt19937_64 rng(7105);
        for (int rep = 0; rep < 30; ++rep) {
            auto s = testutil::random_pmf(rng, 3);
            auto L = testutil::random_function(rng, *s, 2 + static_cast<int>(rng() % 7));
            double h_l = entropy_of_function(*s, L);
            double drop = multipartite_info(*s).value.to_double() -
                          conditional_multipartite_info(*s, L).value.to_double();
            CHECK(h_l >= drop - 1e-9);
        }
    }
}
