#ifndef TORUSGATE_BOOTSTRAP_GATE_HPP
#define TORUSGATE_BOOTSTRAP_GATE_HPP

#include <optional>
#include <string>

#include "torusgate/bootstrap/bundle.hpp"

namespace torusgate {

enum class GateKind { Nand, And, Or, Xor, Xnor, Not };

GateKind gate_kind_from_string(const std::string& s);
const char* gate_kind_name(GateKind k);
uint32_t gate_arity(GateKind k);
int gate_plain(GateKind k, int a, int b);

/// Within one bootstrap the two-stage contract allows exactly one step of
/// lookahead: the bundle for group i+1 may be constructed while the external
/// product of group i runs. Results are identical in both modes.
enum class ExecMode { Sequential, Pipelined };

/// Gate codec: false/true at -1/8 and +1/8 on the torus.
LweCiphertext gate_encrypt(int bit, const SecretKeys& sk, SplitRng& rng);
int gate_decrypt(const LweCiphertext& c, const SecretKeys& sk);

/// Staircase test vector (all coefficients -1/8): blind-rotating it by the
/// phase exponent and extracting coefficient 0 computes sign(phase).
TorusPoly make_test_vector(uint32_t ring_degree);

/// acc <- BKB_i ⊡ acc over all ceil(n/m) groups; the accumulator message
/// becomes X^{b - sum a_j s_j} times its initial message.
TrlweCiphertext blind_rotate(TrlweCiphertext acc, const std::vector<uint32_t>& a_bar,
                             const CloudKeySet& cloud, TransformCounters* tc,
                             ExecMode mode = ExecMode::Sequential);

/// Full bootstrap: round to the 2N grid, rotate the test vector, extract,
/// key-switch. Output is a fresh-noise encryption of sign(phase(c)) at
/// +-1/8, independent of the input noise level.
LweCiphertext gate_bootstrap(const LweCiphertext& c, const CloudKeySet& cloud,
                             TransformCounters* tc, ExecMode mode = ExecMode::Sequential);

/// Gate linear combination followed by gate_bootstrap. NOT is linear-only
/// (negation, no bootstrap). c1 must be absent exactly when kind is Not.
LweCiphertext eval_gate(GateKind kind, const LweCiphertext& c0, const LweCiphertext* c1,
                        const CloudKeySet& cloud, TransformCounters* tc,
                        ExecMode mode = ExecMode::Sequential);

}  // namespace torusgate

#endif
