#include "qmul/circuit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qmul {

namespace {

void check_wire(std::uint32_t w, std::uint32_t qubits) {
    if (w >= qubits) throw std::invalid_argument("gate wire index out of range");
}

std::array<std::uint32_t, 3> gate_wires(const Gate& g, std::size_t& count) {
    if (g.kind == GateKind::Cnot) {
        count = 2;
        return {g.c0, g.target, 0};
    }
    count = 3;
    return {g.c0, g.c1, g.target};
}

}  // namespace

std::vector<std::uint32_t> identity_perm(std::uint32_t n) {
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    return p;
}

bool is_permutation(std::span<const std::uint32_t> perm) {
    std::vector<bool> seen(perm.size(), false);
    for (std::uint32_t v : perm) {
        if (v >= perm.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::vector<std::uint32_t> inverse_perm(std::span<const std::uint32_t> perm) {
    std::vector<std::uint32_t> inv(perm.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
    return inv;
}

Circuit::Circuit(std::uint32_t qubits) : qubits_(qubits), wiremap_(identity_perm(qubits)) {}

void Circuit::append(const Gate& gate) {
    if (gate.kind == GateKind::Cnot) {
        check_wire(gate.c0, qubits_);
        check_wire(gate.target, qubits_);
        if (gate.c0 == gate.target)
            throw std::invalid_argument("CNOT control and target must differ");
        gates_.push_back(Gate::cnot(wiremap_[gate.c0], wiremap_[gate.target]));
    } else {
        check_wire(gate.c0, qubits_);
        check_wire(gate.c1, qubits_);
        check_wire(gate.target, qubits_);
        if (gate.c0 == gate.c1 || gate.c0 == gate.target || gate.c1 == gate.target)
            throw std::invalid_argument("TOF wires must be pairwise distinct");
        gates_.push_back(
            Gate::toffoli(wiremap_[gate.c0], wiremap_[gate.c1], wiremap_[gate.target]));
    }
}

void Circuit::relabel(std::span<const std::uint32_t> perm) {
    if (perm.size() != qubits_ || !is_permutation(perm))
        throw std::invalid_argument("relabel argument is not a permutation of the wires");
    std::vector<std::uint32_t> next(qubits_);
    for (std::uint32_t j = 0; j < qubits_; ++j) next[j] = wiremap_[perm[j]];
    wiremap_ = std::move(next);
}

Circuit Circuit::inverted() const {
    // The forward circuit is "apply gates, then read through wiremap". Its
    // inverse reads through the inverse map, with the reversed gates
    // conjugated onto the renamed wires.
    Circuit out(qubits_);
    out.wiremap_ = inverse_perm(wiremap_);
    const auto& inv = out.wiremap_;
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        Gate g = *it;
        g.c0 = inv[g.c0];
        g.c1 = inv[g.c1];
        g.target = inv[g.target];
        out.gates_.push_back(g);
    }
    return out;
}

std::vector<std::uint8_t> Circuit::simulate(std::span<const std::uint8_t> input) const {
    if (input.size() != qubits_)
        throw std::invalid_argument("simulate: state length must equal qubit count");
    std::vector<std::uint8_t> s(input.begin(), input.end());
    for (const Gate& g : gates_) {
        if (g.kind == GateKind::Cnot) {
            s[g.target] ^= s[g.c0];
        } else {
            s[g.target] ^= static_cast<std::uint8_t>(s[g.c0] & s[g.c1]);
        }
    }
    std::vector<std::uint8_t> out(qubits_);
    for (std::uint32_t i = 0; i < qubits_; ++i) out[i] = s[wiremap_[i]];
    return out;
}

GateStats Circuit::stats() const {
    GateStats st;
    st.qubits = qubits_;
    st.final_perm = wiremap_;

    // Greedy depth estimate: gates accumulate into a frontier of pairwise
    // disjoint gates; a gate touching any frontier wire bumps the depth and
    // becomes the new frontier.
    std::vector<std::uint64_t> stamp(qubits_, 0);
    std::uint64_t epoch = 0;
    for (const Gate& g : gates_) {
        if (g.kind == GateKind::Cnot) ++st.cnot_count;
        else ++st.tof_count;

        std::size_t nw = 0;
        const auto ws = gate_wires(g, nw);
        bool overlap = epoch == 0;
        for (std::size_t i = 0; i < nw && !overlap; ++i) overlap = stamp[ws[i]] == epoch;
        if (overlap) {
            ++st.depth_greedy;
            ++epoch;
        }
        for (std::size_t i = 0; i < nw; ++i) stamp[ws[i]] = epoch;
    }
    return st;
}

std::string Circuit::serialize() const {
    std::ostringstream os;
    os << "qubits " << qubits_ << '\n';
    os << "perm";
    for (std::uint32_t p : wiremap_) os << ' ' << p;
    os << '\n';
    for (const Gate& g : gates_) {
        if (g.kind == GateKind::Cnot) {
            os << "CNOT " << g.c0 << ' ' << g.target << '\n';
        } else {
            os << "TOF " << g.c0 << ' ' << g.c1 << ' ' << g.target << '\n';
        }
    }
    return os.str();
}

Circuit Circuit::parse_netlist(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    const auto fail = [](std::size_t lineno, const std::string& what) -> void {
        throw ParseError("netlist line " + std::to_string(lineno + 1) + ": " + what);
    };
    const auto tokens = [](std::string_view line) {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && line[i] == ' ') ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ') ++j;
            if (j > i) out.push_back(line.substr(i, j - i));
            i = j;
        }
        return out;
    };
    const auto parse_u32 = [&](std::string_view tok, std::size_t lineno) -> std::uint32_t {
        std::uint32_t v = 0;
        const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            fail(lineno, "expected decimal number, got '" + std::string(tok) + "'");
        return v;
    };

    if (lines.empty()) throw ParseError("netlist line 1: missing 'qubits' header");
    auto header = tokens(lines[0]);
    if (header.size() != 2 || header[0] != "qubits") fail(0, "expected 'qubits N'");
    const std::uint32_t qubits = parse_u32(header[1], 0);

    if (lines.size() < 2) throw ParseError("netlist line 2: missing 'perm' line");
    auto permtok = tokens(lines[1]);
    if (permtok.empty() || permtok[0] != "perm") fail(1, "expected 'perm p0 ... p{N-1}'");
    if (permtok.size() != static_cast<std::size_t>(qubits) + 1)
        fail(1, "perm must list exactly one entry per qubit");
    std::vector<std::uint32_t> perm(qubits);
    for (std::uint32_t i = 0; i < qubits; ++i) perm[i] = parse_u32(permtok[i + 1], 1);
    if (!is_permutation(perm)) fail(1, "perm entries do not form a permutation");

    Circuit c(qubits);
    for (std::size_t ln = 2; ln < lines.size(); ++ln) {
        auto tok = tokens(lines[ln]);
        if (tok.empty()) fail(ln, "empty line");
        try {
            if (tok[0] == "CNOT") {
                if (tok.size() != 3) fail(ln, "CNOT takes two wire indices");
                c.append(Gate::cnot(parse_u32(tok[1], ln), parse_u32(tok[2], ln)));
            } else if (tok[0] == "TOF") {
                if (tok.size() != 4) fail(ln, "TOF takes three wire indices");
                c.append(Gate::toffoli(parse_u32(tok[1], ln), parse_u32(tok[2], ln),
                                       parse_u32(tok[3], ln)));
            } else {
                fail(ln, "unknown gate '" + std::string(tok[0]) + "'");
            }
        } catch (const std::invalid_argument& e) {
            fail(ln, e.what());
        }
    }
    // Gates in the file are physical; they were appended under an identity
    // map, so only the final permutation remains to be installed.
    c.wiremap_ = std::move(perm);
    return c;
}

std::string Circuit::export_qasm() const {
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    os << "qreg q[" << qubits_ << "];\n";
    for (const Gate& g : gates_) {
        if (g.kind == GateKind::Cnot) {
            os << "cx q[" << g.c0 << "], q[" << g.target << "];\n";
        } else {
            os << "ccx q[" << g.c0 << "], q[" << g.c1 << "], q[" << g.target << "];\n";
        }
    }
    os << "// wiremap:";
    for (std::uint32_t p : wiremap_) os << ' ' << p;
    os << '\n';
    return os.str();
}

}  // namespace qmul
