#include "torusgate/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace torusgate {

namespace {

bool wire_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

[[noreturn]] void fail(uint32_t line, const std::string& msg) {
    throw std::invalid_argument("netlist line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Netlist Netlist::parse(const std::string& text) {
    Netlist nl;
    std::istringstream is(text);
    std::string raw;
    uint32_t lineno = 0;
    std::set<std::string> produced;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "expected 'out = KIND(in...)'");
        std::string out = trim(line.substr(0, eq));
        if (out.empty() || !std::all_of(out.begin(), out.end(), wire_char))
            fail(lineno, "bad output wire id '" + out + "'");

        std::string rhs = trim(line.substr(eq + 1));
        const auto open = rhs.find('(');
        const auto close = rhs.rfind(')');
        if (open == std::string::npos || close == std::string::npos || close < open)
            fail(lineno, "expected KIND(in...)");
        GateKind kind;
        try {
            kind = gate_kind_from_string(trim(rhs.substr(0, open)));
        } catch (const std::invalid_argument& e) {
            fail(lineno, e.what());
        }

        std::vector<std::string> ins;
        std::string args = rhs.substr(open + 1, close - open - 1);
        std::istringstream as(args);
        std::string arg;
        while (std::getline(as, arg, ',')) {
            arg = trim(arg);
            if (arg.empty() || !std::all_of(arg.begin(), arg.end(), wire_char))
                fail(lineno, "bad input wire id '" + arg + "'");
            ins.push_back(arg);
        }
        if (ins.size() != gate_arity(kind))
            fail(lineno, std::string(gate_kind_name(kind)) + " takes " +
                             std::to_string(gate_arity(kind)) + " input(s)");
        if (produced.count(out)) fail(lineno, "wire '" + out + "' driven twice");
        produced.insert(out);
        nl.gates.push_back(NetlistGate{kind, out, std::move(ins), lineno});
    }

    // Primary inputs: consumed, never produced. Outputs: produced, never consumed.
    std::set<std::string> consumed;
    for (const auto& g : nl.gates)
        for (const auto& w : g.in) consumed.insert(w);
    for (const auto& w : consumed)
        if (!produced.count(w)) nl.inputs.push_back(w);
    for (const auto& g : nl.gates)
        if (!consumed.count(g.out)) nl.outputs.push_back(g.out);
    std::sort(nl.inputs.begin(), nl.inputs.end());
    std::sort(nl.outputs.begin(), nl.outputs.end());

    // Topological order with cycle diagnostic (Kahn).
    std::map<std::string, uint32_t> producer;
    for (uint32_t i = 0; i < nl.gates.size(); ++i) producer[nl.gates[i].out] = i;
    std::vector<uint32_t> deps(nl.gates.size(), 0);
    std::vector<std::vector<uint32_t>> users(nl.gates.size());
    for (uint32_t i = 0; i < nl.gates.size(); ++i) {
        for (const auto& w : nl.gates[i].in) {
            auto it = producer.find(w);
            if (it != producer.end()) {
                ++deps[i];
                users[it->second].push_back(i);
            }
        }
    }
    std::vector<uint32_t> ready;
    for (uint32_t i = 0; i < nl.gates.size(); ++i)
        if (deps[i] == 0) ready.push_back(i);
    while (!ready.empty()) {
        const uint32_t g = ready.back();
        ready.pop_back();
        nl.topo_order.push_back(g);
        for (uint32_t u : users[g])
            if (--deps[u] == 0) ready.push_back(u);
    }
    if (nl.topo_order.size() != nl.gates.size()) {
        std::string cyc;
        for (uint32_t i = 0; i < nl.gates.size(); ++i)
            if (deps[i] != 0) cyc += (cyc.empty() ? "" : ", ") + nl.gates[i].out;
        throw std::invalid_argument("netlist: wire cycle through {" + cyc + "}");
    }
    return nl;
}

Netlist Netlist::parse_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open netlist: " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse(buf.str());
}

std::map<std::string, int> eval_netlist_plain(const Netlist& nl,
                                              const std::map<std::string, int>& inputs) {
    std::map<std::string, int> wires = inputs;
    for (const auto& w : nl.inputs)
        if (!wires.count(w)) throw std::invalid_argument("missing input bit for wire '" + w + "'");
    for (uint32_t gi : nl.topo_order) {
        const auto& g = nl.gates[gi];
        const int a = wires.at(g.in[0]);
        const int b = g.in.size() > 1 ? wires.at(g.in[1]) : 0;
        wires[g.out] = gate_plain(g.kind, a, b);
    }
    return wires;
}

}  // namespace torusgate
