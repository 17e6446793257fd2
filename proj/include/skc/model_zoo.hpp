#pragma once

#include <memory>

#include "skc/source.hpp"

namespace skc {

// PIN on the complete t-uniform hypergraph K_{m,t}: one copy of every
// t-subset of {1..m}. Requires 2 <= t <= m.
std::shared_ptr<const PinSource> gen_complete_uniform(int m, int t);

// PIN on the m-cycle C_m (m >= 3).
std::shared_ptr<const PinSource> gen_cycle(int m);

// PIN on the circulant Harary graph: k-regular and k-edge-connected.
// Requires 2 <= k < m and k*m even; both properties are verified after
// construction rather than trusted.
std::shared_ptr<const PinSource> gen_harary(int m, int k);

// PIN on a Steiner triple system: every pair of terminals in exactly one
// triple. Exists iff gcd(m-2,6)=1; Bose construction for m = 3 mod 6,
// Skolem for m = 1 mod 6. Pair coverage is verified post-construction.
std::shared_ptr<const PinSource> gen_sts(int m);

// The Chan et al. multigraph: m-2 copies of each path edge {i,i+1} plus
// m-1 copies of {1,m}. Type S but not strict, yet needs omnivocality.
std::shared_ptr<const PinSource> gen_chan(int m);

// Conditionally independent terminals given a Ber(p) bit W: each X_i is
// the pair (W, fresh fair bit), encoded as a 4-letter alphabet symbol
// 2*W + bit. H(X_A) = |A| + h(p) for every nonempty A.
std::shared_ptr<const PmfSource> gen_omni_example(int m, double p);

} // namespace skc
