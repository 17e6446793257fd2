#include "skc/source.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "skc/errors.hpp"

namespace skc {

void Source::check_subset(TerminalSet A) const {
    if (A.m != terminals()) throw DomainError("subset built for a different terminal count");
    if (A.empty()) throw DomainError("entropy of empty terminal set");
}

Value conditional_entropy(const Source& s, TerminalSet A, TerminalSet B) {
    if (A.empty()) throw DomainError("conditional entropy with empty A");
    if (A.intersects(B)) throw DomainError("conditional entropy requires disjoint A, B");
    if (B.empty()) return s.entropy(A);
    return s.entropy(A.unite(B)) - s.entropy(B);
}

Value mutual_information(const Source& s, TerminalSet A, TerminalSet B) {
    if (A.empty() || B.empty()) throw DomainError("mutual information with empty set");
    if (A.intersects(B)) throw DomainError("mutual information requires disjoint A, B");
    return s.entropy(A) + s.entropy(B) - s.entropy(A.unite(B));
}

PinSource::PinSource(Hypergraph graph) : graph_(std::move(graph)) {}

Value PinSource::entropy(TerminalSet A) const {
    check_subset(A);
    long bits = 0;
    for (const auto& e : graph_.edges())
        if (e.members.intersects(A)) bits += e.multiplicity;
    return Value::rational(bits);
}

PmfSource::PmfSource(int m, std::vector<int> alphabet_sizes, std::vector<double> probs,
                     double tolerance)
    : m_(m), alphabets_(std::move(alphabet_sizes)), probs_(std::move(probs)), tol_(tolerance) {
    if (m < 1 || m > kMaxTerminals)
        throw DomainError("terminal count must be in 1.." + std::to_string(kMaxTerminals));
    if (static_cast<int>(alphabets_.size()) != m)
        throw DomainError("need one alphabet size per terminal");
    std::size_t total = 1;
    for (int a : alphabets_) {
        if (a < 1) throw DomainError("alphabet sizes must be positive");
        if (total > (1u << 20) / static_cast<std::size_t>(a))
            throw DomainError("joint alphabet exceeds 2^20 points");
        total *= static_cast<std::size_t>(a);
    }
    if (probs_.size() != total) throw DomainError("probability table size mismatch");
    double mass = 0.0;
    for (double p : probs_) {
        if (p < -1e-12) throw DomainError("negative probability");
        mass += p;
    }
    if (std::abs(mass - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "pmf mass " << mass << " != 1";
        throw DomainError(os.str());
    }
    // Row-major strides, last terminal fastest.
    strides_.assign(m_, 1);
    for (int i = m_ - 2; i >= 0; --i)
        strides_[i] = strides_[i + 1] * static_cast<std::size_t>(alphabets_[i + 1]);
}

int PmfSource::symbol_at(std::size_t point, int terminal) const {
    return static_cast<int>(point / strides_[terminal - 1]) % alphabets_[terminal - 1];
}

std::uint64_t PmfSource::project(std::size_t point, TerminalSet A) const {
    std::uint64_t key = 0;
    for (int i = 1; i <= m_; ++i) {
        if (!A.contains(i)) continue;
        key = key * static_cast<std::uint64_t>(alphabets_[i - 1]) +
              static_cast<std::uint64_t>(symbol_at(point, i));
    }
    return key;
}

std::map<std::uint64_t, double> PmfSource::marginal(TerminalSet A) const {
    std::map<std::uint64_t, double> marg;
    for (std::size_t p = 0; p < probs_.size(); ++p)
        if (probs_[p] > 0) marg[project(p, A)] += probs_[p];
    return marg;
}

Value PmfSource::entropy(TerminalSet A) const {
    check_subset(A);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = entropy_cache_.find(A.bits);
        if (it != entropy_cache_.end()) return Value::real(it->second, tol_);
    }
    double h = 0.0;
    for (const auto& [key, p] : marginal(A))
        if (p > 0) h -= p * std::log2(p);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        entropy_cache_[A.bits] = h;
    }
    return Value::real(h, tol_);
}

ClubbedSource::ClubbedSource(SourcePtr left, SourcePtr right)
    : left_(std::move(left)), right_(std::move(right)) {
    if (!left_ || !right_) throw DomainError("club of null source");
    if (left_->terminals() != right_->terminals())
        throw DomainError("clubbed sources must have the same terminal count");
}

Value ClubbedSource::entropy(TerminalSet A) const {
    check_subset(A);
    return left_->entropy(A) + right_->entropy(A);
}

std::shared_ptr<const ClubbedSource> club(SourcePtr left, SourcePtr right) {
    return std::make_shared<ClubbedSource>(std::move(left), std::move(right));
}

std::shared_ptr<const PmfSource> expand_to_pmf(const PinSource& pin) {
    const auto& g = pin.graph();
    const int m = g.terminals();

    // Edge instances in document order, multiplicity copies consecutive.
    std::vector<TerminalSet> instances;
    for (const auto& e : g.edges())
        for (long c = 0; c < e.multiplicity; ++c) instances.push_back(e.members);
    const std::size_t nbits = instances.size();
    if (nbits > 20) throw DomainError("PIN expansion limited to 20 edge bits");

    std::vector<std::vector<int>> incident(m + 1);
    for (std::size_t b = 0; b < nbits; ++b)
        for (int i = 1; i <= m; ++i)
            if (instances[b].contains(i)) incident[i].push_back(static_cast<int>(b));

    std::vector<int> alphabets(m);
    std::size_t total = 1;
    for (int i = 1; i <= m; ++i) {
        std::size_t a = std::size_t{1} << incident[i].size();
        alphabets[i - 1] = static_cast<int>(a);
        if (total > (1u << 20) / a) throw DomainError("PIN expansion exceeds 2^20 joint points");
        total *= a;
    }

    std::vector<std::size_t> strides(m, 1);
    for (int i = m - 2; i >= 0; --i) strides[i] = strides[i + 1] * alphabets[i + 1];

    std::vector<double> probs(total, 0.0);
    const double p = 1.0 / static_cast<double>(std::size_t{1} << nbits);
    for (std::uint32_t assign = 0; assign < (1u << nbits); ++assign) {
        std::size_t point = 0;
        for (int i = 1; i <= m; ++i) {
            std::size_t sym = 0;
            for (std::size_t k = 0; k < incident[i].size(); ++k)
                if ((assign >> incident[i][k]) & 1u) sym |= std::size_t{1} << k;
            point += sym * strides[i - 1];
        }
        probs[point] += p;
    }
    return std::make_shared<PmfSource>(m, std::move(alphabets), std::move(probs));
}

SourcePtr with_tolerance(const SourcePtr& source, double tolerance) {
    if (!source) throw DomainError("null source");
    if (tolerance <= 0 || tolerance >= 1) throw DomainError("tolerance must lie in (0,1)");
    if (const auto* pmf = dynamic_cast<const PmfSource*>(source.get()))
        return std::make_shared<PmfSource>(pmf->terminals(), pmf->alphabet_sizes(),
                                           pmf->probs(), tolerance);
    if (const auto* cl = dynamic_cast<const ClubbedSource*>(source.get()))
        return club(with_tolerance(cl->left(), tolerance),
                    with_tolerance(cl->right(), tolerance));
    return source;
}

} // namespace skc
