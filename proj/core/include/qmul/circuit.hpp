// Reversible netlist intermediate representation. Circuits hold an ordered
// CNOT/Toffoli gate list over a fixed wire count plus a logical->physical
// wire permutation; swaps are never emitted as gates, they only update the
// permutation. Simulation feeds inputs in logical order and reads outputs
// back in logical order, so callers never see the permutation.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmul/gf2poly.hpp"

namespace qmul {

enum class GateKind : std::uint8_t { Cnot, Toffoli };

struct Gate {
    GateKind kind;
    // Controls c0 (and c1 for Toffoli; c1 == c0 on CNOTs) acting on target.
    std::uint32_t c0, c1, target;

    static Gate cnot(std::uint32_t control, std::uint32_t target) {
        return Gate{GateKind::Cnot, control, control, target};
    }
    static Gate toffoli(std::uint32_t control0, std::uint32_t control1, std::uint32_t target) {
        return Gate{GateKind::Toffoli, control0, control1, target};
    }
    bool operator==(const Gate&) const = default;
};

struct GateStats {
    std::uint64_t cnot_count = 0;
    std::uint64_t tof_count = 0;
    std::uint64_t depth_greedy = 0;
    std::uint32_t qubits = 0;
    std::vector<std::uint32_t> final_perm;
};

std::vector<std::uint32_t> identity_perm(std::uint32_t n);
std::vector<std::uint32_t> inverse_perm(std::span<const std::uint32_t> perm);
bool is_permutation(std::span<const std::uint32_t> perm);

class Circuit {
public:
    explicit Circuit(std::uint32_t qubits);

    std::uint32_t qubits() const { return qubits_; }
    std::span<const Gate> gates() const { return gates_; }
    // wiremap[i] is the physical wire where logical index i lives after the
    // relabelings recorded so far.
    const std::vector<std::uint32_t>& wiremap() const { return wiremap_; }

    // Appends a gate given at logical indices; stored at physical indices.
    void append(const Gate& gate);

    // Free relabeling: afterwards, logical slot j refers to what logical slot
    // perm[j] referred to before. Emits no gates.
    void relabel(std::span<const std::uint32_t> perm);

    // Reverse circuit: running it on this circuit's output restores the input.
    Circuit inverted() const;

    // Classical evaluation. The input is untouched; the result is returned in
    // logical order.
    std::vector<std::uint8_t> simulate(std::span<const std::uint8_t> input) const;

    GateStats stats() const;

    std::string serialize() const;
    static Circuit parse_netlist(std::string_view text);
    std::string export_qasm() const;

    bool operator==(const Circuit&) const = default;

private:
    std::uint32_t qubits_ = 0;
    std::vector<Gate> gates_;
    std::vector<std::uint32_t> wiremap_;
};

}  // namespace qmul
