#pragma once

#include <cstdint>
#include <string>

#include "cliffgraph/state.hpp"

namespace cliffgraph
{

    /**
     * Builds a state from a textual spec:
     *
     *   "zeros n"          |0...0>
     *   "ghz n"            |0...0> + |1...1>
     *   "w n"              sum of the weight-1 basis states
     *   "dicke n k"        sum of the weight-k basis states (0 <= k <= n)
     *   "|x1 x2 ... xn>"   product of single-qubit literals from {0,1,+,-,i,-i}
     *   "apply <word> to <spec>"
     *
     * All results are unnormalized with amplitudes in Z[w, 1/sqrt2]. The
     * literal form is read greedily, so "-i" is the single literal
     * |0> - i|1>, not |-> followed by |i>.
     */
    StateVector preset_state(const std::string &spec);

    /**
     * Reproducible pseudo-random state with small integer amplitudes; used as
     * a witness with (overwhelmingly likely) trivial stabilizer. Callers must
     * still verify triviality before relying on it.
     */
    StateVector generic_state(int n, std::uint64_t seed);

    /** Number of n-qubit stabilizer states: 2^n * prod_{k=0}^{n-1} (2^(n-k) + 1). */
    unsigned long long stabilizer_state_count(int n);

} // namespace cliffgraph
