#include "skc/model_zoo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "skc/errors.hpp"

namespace skc {

namespace {

std::shared_ptr<const PinSource> pin_from_pairs(int m, const std::set<std::pair<int, int>>& pairs) {
    std::vector<Hyperedge> edges;
    for (auto [u, v] : pairs) edges.push_back({TerminalSet::of({u, v}, m), 1});
    return std::make_shared<PinSource>(Hypergraph(m, std::move(edges)));
}

void verify_sts(int m, const std::vector<Hyperedge>& triples) {
    std::vector<std::vector<int>> cover(m + 1, std::vector<int>(m + 1, 0));
    for (const auto& e : triples) {
        auto mem = e.members.members();
        if (mem.size() != 3 || e.multiplicity != 1)
            throw InternalError("STS construction produced a non-triple");
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a + 1; b < 3; ++b) ++cover[mem[a]][mem[b]];
    }
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            if (cover[a][b] != 1)
                throw InternalError("STS pair {" + std::to_string(a) + "," + std::to_string(b) +
                                    "} covered " + std::to_string(cover[a][b]) + " times");
}

} // namespace

std::shared_ptr<const PinSource> gen_complete_uniform(int m, int t) {
    if (t < 2 || t > m || m > kMaxTerminals)
        throw DomainError("complete uniform hypergraph needs 2 <= t <= m <= " +
                          std::to_string(kMaxTerminals));
    std::vector<Hyperedge> edges;
    std::vector<int> idx(t);
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
        std::uint32_t bits = 0;
        for (int v : idx) bits |= 1u << (v - 1);
        edges.push_back({TerminalSet(bits, m), 1});
        int i = t - 1;
        while (i >= 0 && idx[i] == m - (t - 1 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
    return std::make_shared<PinSource>(Hypergraph(m, std::move(edges)));
}

std::shared_ptr<const PinSource> gen_cycle(int m) {
    if (m < 3 || m > kMaxTerminals) throw DomainError("cycle needs 3 <= m <= 20");
    std::set<std::pair<int, int>> pairs;
    for (int i = 1; i < m; ++i) pairs.insert({i, i + 1});
    pairs.insert({1, m});
    return pin_from_pairs(m, pairs);
}

std::shared_ptr<const PinSource> gen_harary(int m, int k) {
    if (m < 3 || m > kMaxTerminals || k < 2 || k >= m)
        throw DomainError("harary graph needs 2 <= k < m <= 20");
    if ((static_cast<long>(k) * m) % 2 != 0)
        throw DomainError("no k-regular graph exists: k*m is odd");

    std::set<std::pair<int, int>> pairs;
    auto add = [&](int a, int b) {
        a = ((a - 1) % m + m) % m + 1;
        b = ((b - 1) % m + m) % m + 1;
        if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
    };
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= k / 2; ++j) add(i, i + j);
    if (k % 2 == 1)
        for (int i = 1; i <= m; ++i) add(i, i + m / 2);

    auto pin = pin_from_pairs(m, pairs);

    // The construction is standard; still, verify the defining properties.
    std::vector<int> degree(m + 1, 0);
    for (const auto& e : pin->graph().edges())
        for (int v : e.members.members()) ++degree[v];
    for (int i = 1; i <= m; ++i)
        if (degree[i] != k) throw InternalError("harary construction is not k-regular");
    if (pin->graph().edge_connectivity() != k)
        throw InternalError("harary construction is not k-edge-connected");
    return pin;
}

std::shared_ptr<const PinSource> gen_sts(int m) {
    if (m < 3 || m > kMaxTerminals) throw DomainError("STS needs 3 <= m <= 20");
    if (std::gcd(m - 2, 6) != 1)
        throw DomainError("no Steiner triple system on m = " + std::to_string(m) +
                          ": requires gcd(m-2,6)=1");

    std::vector<Hyperedge> triples;
    auto triple = [&](int a, int b, int c) {
        triples.push_back({TerminalSet::of({a, b, c}, m), 1});
    };

    if (m % 6 == 3) {
        // Bose: points Z_s x {0,1,2}, s = m/3 odd; (x,j) -> 3x + j + 1.
        const int s = m / 3;
        const int half = (s + 1) / 2; // inverse of 2 mod s
        auto pt = [&](int x, int j) { return 3 * x + j + 1; };
        for (int x = 0; x < s; ++x) triple(pt(x, 0), pt(x, 1), pt(x, 2));
        for (int j = 0; j < 3; ++j)
            for (int x = 0; x < s; ++x)
                for (int y = x + 1; y < s; ++y)
                    triple(pt(x, j), pt(y, j), pt((x + y) * half % s, (j + 1) % 3));
    } else {
        // Skolem: points (Z_{2q} x {0,1,2}) u {inf}, m = 6q+1, with the
        // half-idempotent commutative quasigroup
        //   x*y = (x+y)/2 when x+y is even, q + (x+y-1)/2 otherwise.
        const int q = (m - 1) / 6;
        const int n = 2 * q;
        auto pt = [&](int x, int j) { return 3 * x + j + 1; };
        const int inf = m;
        auto star = [&](int x, int y) {
            int sum = (x + y) % n;
            return sum % 2 == 0 ? sum / 2 : q + (sum - 1) / 2;
        };
        for (int x = 0; x < q; ++x) triple(pt(x, 0), pt(x, 1), pt(x, 2));
        for (int j = 0; j < 3; ++j)
            for (int x = 0; x < q; ++x) triple(inf, pt(q + x, j), pt(x, (j + 1) % 3));
        for (int j = 0; j < 3; ++j)
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y)
                    triple(pt(x, j), pt(y, j), pt(star(x, y), (j + 1) % 3));
    }

    verify_sts(m, triples);
    return std::make_shared<PinSource>(Hypergraph(m, std::move(triples)));
}

std::shared_ptr<const PinSource> gen_chan(int m) {
    if (m < 4 || m > kMaxTerminals) throw DomainError("chan multigraph needs 4 <= m <= 20");
    std::vector<Hyperedge> edges;
    for (int i = 1; i < m; ++i)
        edges.push_back({TerminalSet::of({i, i + 1}, m), m - 2});
    edges.push_back({TerminalSet::of({1, m}, m), m - 1});
    return std::make_shared<PinSource>(Hypergraph(m, std::move(edges)));
}

std::shared_ptr<const PmfSource> gen_omni_example(int m, double p) {
    if (m < 2) throw DomainError("example source needs m >= 2");
    if (p < 0.0 || p > 1.0) throw DomainError("p must lie in [0,1]");
    std::vector<int> alphabets(m, 4);
    std::size_t total = 1;
    for (int i = 0; i < m; ++i) {
        if (total > (1u << 20) / 4) throw DomainError("example source too large to tabulate");
        total *= 4;
    }
    std::vector<double> probs(total, 0.0);
    const double cond = std::pow(0.5, m);
    // Symbol = 2*W + private bit; a joint point has positive mass only
    // when all first bits agree with W.
    for (std::size_t point = 0; point < total; ++point) {
        int w = -1;
        bool consistent = true;
        std::size_t rest = point;
        for (int i = m - 1; i >= 0; --i) {
            int sym = static_cast<int>(rest % 4);
            rest /= 4;
            int wi = sym >> 1;
            if (w < 0) w = wi;
            else if (w != wi) { consistent = false; break; }
        }
        if (!consistent) continue;
        probs[point] = (w == 1 ? p : 1.0 - p) * cond;
    }
    return std::make_shared<PmfSource>(m, std::move(alphabets), std::move(probs));
}

} // namespace skc
