#include <doctest.h>

#include <random>

#include "skc/errors.hpp"
#include "skc/model_zoo.hpp"
#include "skc/multigraph.hpp"
#include "skc/rates.hpp"
#include "testutil.hpp"

using namespace skc;

TEST_CASE("capacities") {
    CHECK(sk_capacity(*gen_cycle(4)) == Value::rational(4, 3));
    CHECK(sk_capacity(*gen_chan(5)) == Value::rational(4));
    CHECK(sk_capacity(*gen_omni_example(5, 0.5)).to_double() == doctest::Approx(1.0));
}

TEST_CASE("omniscience rates") {
    CHECK(r_co(*gen_omni_example(4, 0.5)).to_double() == doctest::Approx(4.0));
    CHECK(r_co(*gen_complete_uniform(5, 3)) == Value::rational(5));
    CHECK(r_co(*gen_cycle(4)) == Value::rational(8, 3));

    // 0 <= R_CO <= sum of the single-terminal entropies.
    std::mt19937_64 rng(9900);
    for (int trial = 0; trial < 6; ++trial) {
        SourcePtr s = trial % 2 == 0 ? SourcePtr(testutil::random_pin(rng, 5, 2, 3))
                                     : SourcePtr(testutil::random_pmf(rng, 4));
        Value rco = r_co(*s);
        CHECK(rco.sign() >= 0);
        Value sum;
        for (int i = 1; i <= s->terminals(); ++i)
            sum += s->entropy(TerminalSet::single(i, s->terminals()));
        CHECK(rco <= sum);
    }
}

TEST_CASE("omniscience LP equals the partition route") {
    SUBCASE("worked values") {
        CHECK(r_co_lp(*gen_complete_uniform(4, 2)) == Value::rational(4));
        CHECK(r_co_lp(*gen_cycle(3)) == Value::rational(3, 2));
        CHECK(r_co_lp(*gen_chan(4)) == Value::rational(6));
    }
    SUBCASE("random sources up to m = 8") {
        std::mt19937_64 rng(9901);
        std::vector<SourcePtr> sources = {gen_sts(7),
                                          gen_complete_uniform(6, 3),
                                          gen_cycle(8),
                                          testutil::random_pin(rng, 7, 2, 4),
                                          testutil::random_pin(rng, 8, 3, 2),
                                          testutil::random_pmf(rng, 4),
                                          testutil::random_pmf(rng, 5, 2)};
        for (const auto& s : sources) {
            Value via_lp = r_co_lp(*s);
            Value via_partitions = r_co(*s);
            if (via_partitions.is_exact())
                CHECK(via_lp == via_partitions);
            else
                CHECK(via_lp.to_double() ==
                      doctest::Approx(via_partitions.to_double()).epsilon(1e-7));
        }
    }
}

TEST_CASE("uniform PIN communication complexity formula") {
    CHECK(r_sk_exact_uniform_pin(*gen_complete_uniform(5, 3)) == Value::rational(5));
    CHECK(r_sk_exact_uniform_pin(*gen_sts(7)) == Value::rational(14, 3));
    CHECK(r_sk_exact_uniform_pin(*gen_cycle(4)) == Value::rational(8, 3));

    // On Type S models the closed form meets the omniscience rate.
    std::mt19937_64 rng(9902);
    std::vector<std::shared_ptr<const PinSource>> pool = {
        gen_complete_uniform(5, 3), gen_complete_uniform(6, 4), gen_complete_uniform(6, 2),
        gen_sts(7),                 gen_sts(9),                 gen_cycle(5),
        gen_cycle(8),               gen_harary(6, 3),           gen_harary(8, 4)};
    for (int trial = 0; trial < 20; ++trial) {
        int m = 4 + static_cast<int>(rng() % 4);
        int t = 2 + static_cast<int>(rng() % 3);
        if (t >= m) continue;
        pool.push_back(testutil::random_pin(rng, m, t, 6));
    }
    int covered = 0;
    for (const auto& pin : pool) {
        if (pin_singleton_check(*pin).verdict == TypeSVerdict::NotTypeS) continue;
        ++covered;
        CHECK(r_sk_exact_uniform_pin(*pin) == r_co(*pin));
    }
    CHECK(covered >= 10);

    SUBCASE("refusals") {
        // Two triangles with a bridge: not Type S.
        std::vector<Hyperedge> edges;
        for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {3, 4}})
            edges.push_back({TerminalSet::of({a, b}, 6), 1});
        PinSource bridged{Hypergraph(6, edges)};
        CHECK_THROWS_WITH_AS(r_sk_exact_uniform_pin(bridged), doctest::Contains("NotTypeS"),
                             DomainError);

        // Mixed edge sizes: not uniform.
        PinSource mixed{Hypergraph(3, {{TerminalSet::of({1, 2}, 3), 1},
                                       {TerminalSet::of({1, 2, 3}, 3), 1}})};
        CHECK_THROWS_AS(r_sk_exact_uniform_pin(mixed), DomainError);
    }
}

TEST_CASE("graph reports") {
    SUBCASE("cycle") {
        auto report = graph_rsk_report(*gen_cycle(4));
        CHECK(report.capacity == Value::rational(4, 3));
        CHECK(report.maximality == Maximality::Maximal);
        REQUIRE(report.r_sk_exact.has_value());
        CHECK(*report.r_sk_exact == Value::rational(8, 3));
    }
    SUBCASE("chan") {
        auto report = graph_rsk_report(*gen_chan(4));
        CHECK(report.capacity == Value::rational(3));
        CHECK(report.r_co == Value::rational(6));
        CHECK(report.maximality == Maximality::Maximal); // Type S, margin 0
        REQUIRE(report.r_sk_exact.has_value());
        CHECK(*report.r_sk_exact == Value::rational(6));
        bool tree_bound = false;
        for (const auto& b : report.upper_bounds)
            if (b.value == Value::rational(6) && b.origin.find("tree") != std::string::npos)
                tree_bound = true;
        CHECK(tree_bound);
    }
    SUBCASE("path") {
        PinSource path{Hypergraph(3, {{TerminalSet::of({1, 2}, 3), 1},
                                      {TerminalSet::of({2, 3}, 3), 1}})};
        auto report = graph_rsk_report(path);
        CHECK(report.capacity == Value::rational(1));
        CHECK(report.r_co == Value::rational(1));
        REQUIRE(report.r_sk_exact.has_value());
        CHECK(*report.r_sk_exact == Value::rational(1));
        CHECK(report.maximality == Maximality::Maximal);
    }
    SUBCASE("non Type S graph is NotMaximal with a strictly smaller tree bound") {
        std::vector<Hyperedge> edges;
        for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {3, 4}})
            edges.push_back({TerminalSet::of({a, b}, 6), 1});
        PinSource bridged{Hypergraph(6, edges)};
        auto report = graph_rsk_report(bridged);
        CHECK(report.maximality == Maximality::NotMaximal);
        CHECK_FALSE(report.r_sk_exact.has_value());
        Value tree_bound = Value::rational(6 - 2) * sk_capacity(bridged);
        CHECK(tree_bound < report.r_co);
    }
}

TEST_CASE("graph capacity equals the packing rate across a corpus") {
    std::mt19937_64 rng(9903);
    std::vector<std::shared_ptr<const PinSource>> corpus = {
        gen_cycle(3), gen_cycle(5), gen_cycle(7), gen_cycle(8), gen_harary(6, 3),
        gen_harary(7, 4), gen_harary(8, 4), gen_complete_uniform(4, 2),
        gen_complete_uniform(5, 2), gen_chan(4), gen_chan(5)};
    for (int i = 0; i < 6; ++i)
        corpus.push_back(testutil::random_connected_graph(rng, 4 + i % 4, 9));
    for (const auto& pin : corpus) {
        Multigraph g = Multigraph::from_graph(pin->graph());
        Value sigma = sigma_rate(g);
        CHECK(sk_capacity(*pin) == sigma);
        CHECK(r_co(*pin) == Value::rational(g.edge_count()) - sigma);
    }
}

TEST_CASE("clubbing: superadditive capacity with intersection equality") {
    std::mt19937_64 rng(9904);
    SUBCASE("same source twice doubles the capacity") {
        auto tri = gen_cycle(3);
        auto z = club(tri, tri);
        CHECK(sk_capacity(*z) == Value::rational(3));
    }
    SUBCASE("random PIN pairs") {
        for (int trial = 0; trial < 20; ++trial) {
            int m = 3 + static_cast<int>(rng() % 3);
            auto x = testutil::random_pin(rng, m, 2, 2);
            auto y = testutil::random_pin(rng, m, 2 + static_cast<int>(rng() % 2), 2);
            auto z = club(x, y);
            Value iz = sk_capacity(*z);
            Value sum = sk_capacity(*x) + sk_capacity(*y);
            CHECK(iz >= sum);
            auto mx = multipartite_info(*x);
            auto my = multipartite_info(*y);
            bool intersect = false;
            for (const auto& p : mx.argmin)
                for (const auto& q : my.argmin)
                    if (p == q) intersect = true;
            CHECK((iz == sum) == intersect);
        }
    }
}

TEST_CASE("spokesman bound certifies the example source") {
    auto s = gen_omni_example(4, 0.5);
    auto bound = spokesman_bound(*s);
    REQUIRE(bound.has_value());
    CHECK(bound->communication_rate.to_double() == doctest::Approx(1.0));
    CHECK(bound->sk_rate.to_double() == doctest::Approx(1.0));

    auto report = rsk_report(*s);
    CHECK(report.maximality == Maximality::NotMaximal); // R_SK <= 1 < 4 = R_CO
    bool has_spokesman = false;
    for (const auto& b : report.upper_bounds)
        if (b.origin.find("spokesman") != std::string::npos) has_spokesman = true;
    CHECK(has_spokesman);
}

TEST_CASE("clubbed example: strict Type S yet not R_SK-maximal") {
    // Example-1 source clubbed with a k-regular k-edge-connected graph PIN.
    auto x = gen_omni_example(4, 0.5);
    auto y = gen_harary(4, 2); // C_4
    auto z = club(x, y);

    auto cls = classify_type_s(*z);
    CHECK(cls.verdict == TypeSVerdict::StrictTypeS);

    Value iz = sk_capacity(*z);
    CHECK(iz.to_double() == doctest::Approx(1.0 + 4.0 / 3.0));

    auto split = club_split_bound(*dynamic_cast<const ClubbedSource*>(z.get()));
    REQUIRE(split.has_value());
    Value rco_z = r_co(*z);
    CHECK(split->to_double() < rco_z.to_double() - 1e-6);

    auto report = rsk_report(*z);
    CHECK(report.maximality == Maximality::NotMaximal);
}

TEST_CASE("two-terminal report") {
    std::vector<double> probs = {0.4, 0.1, 0.1, 0.4};
    auto two = std::make_shared<PmfSource>(2, std::vector<int>{2, 2}, probs);
    auto report = rsk_report(*two);
    REQUIRE(report.r_sk_exact.has_value());
    double h_cond = two->entropy(TerminalSet::full(2)).to_double() - 1.0;
    CHECK(report.r_sk_exact->to_double() == doctest::Approx(h_cond));
    CHECK(report.r_sk_justification.find("one-way") != std::string::npos);
}
