#ifndef TORUSGATE_NETLIST_HPP
#define TORUSGATE_NETLIST_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "torusgate/bootstrap/gate.hpp"

namespace torusgate {

/// Line-oriented netlist, one gate per line:
///   out = KIND(in1[, in2])
/// Wire ids are alphanumeric (plus '_'); '#' starts a comment. Wires never
/// produced by a gate are primary inputs; wires never consumed are circuit
/// outputs.
struct NetlistGate {
    GateKind kind;
    std::string out;
    std::vector<std::string> in;
    uint32_t line = 0;
};

struct Netlist {
    std::vector<NetlistGate> gates;           // in parse order
    std::vector<std::string> inputs;          // sorted
    std::vector<std::string> outputs;         // sorted
    std::vector<uint32_t> topo_order;         // indices into gates

    static Netlist parse(const std::string& text);
    static Netlist parse_file(const std::string& path);
};

/// Plaintext evaluation (the oracle for encrypted runs). Throws when an
/// input bit is missing.
std::map<std::string, int> eval_netlist_plain(const Netlist& nl,
                                              const std::map<std::string, int>& inputs);

}  // namespace torusgate

#endif
