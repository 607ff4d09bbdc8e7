#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmul/circuit.hpp"
#include "test_util.hpp"

using namespace qmul;
using namespace qmul::test;

TEST_CASE("append stores gates through the wiremap") {
    Circuit c(4);
    c.append(Gate::cnot(0, 1));
    CHECK(c.gates()[0] == Gate::cnot(0, 1));

    std::vector<std::uint32_t> swap03{3, 1, 2, 0};
    c.relabel(swap03);
    c.append(Gate::cnot(0, 1));
    CHECK(c.gates()[1] == Gate::cnot(3, 1));
}

TEST_CASE("append rejects malformed gates") {
    Circuit c(3);
    CHECK_THROWS_AS(c.append(Gate::toffoli(1, 1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(c.append(Gate::cnot(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(c.append(Gate::cnot(0, 3)), std::invalid_argument);
    CHECK_THROWS_AS(c.append(Gate::toffoli(0, 1, 5)), std::invalid_argument);
}

TEST_CASE("relabel composes and validates") {
    Circuit c(5);
    const std::vector<std::uint32_t> swap12{0, 2, 1, 3, 4};
    c.relabel(swap12);
    c.relabel(swap12);
    CHECK(c.wiremap() == identity_perm(5));

    Circuit cyc(10);
    std::vector<std::uint32_t> rot(10);
    for (std::uint32_t i = 0; i < 10; ++i) rot[i] = (i + 1) % 10;
    for (int i = 0; i < 10; ++i) cyc.relabel(rot);
    CHECK(cyc.wiremap() == identity_perm(10));

    CHECK_THROWS_AS(c.relabel(std::vector<std::uint32_t>{0, 0, 1, 2, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(c.relabel(std::vector<std::uint32_t>{0, 1, 2}), std::invalid_argument);
}

TEST_CASE("relabel then append equals appending at preimages") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint32_t q = 6;
        const auto perm = random_perm(rng, q);

        Circuit a(q);
        a.relabel(perm);
        a.append(Gate::cnot(1, 4));

        Circuit b(q);
        b.append(Gate::cnot(perm[1], perm[4]));
        b.relabel(perm);

        CHECK(a.gates()[0] == b.gates()[0]);
        for (int s = 0; s < 10; ++s) {
            const auto st = random_state(rng, q);
            CHECK(a.simulate(st) == b.simulate(st));
        }
    }
}

TEST_CASE("simulate applies gate semantics") {
    Circuit c(2);
    c.append(Gate::cnot(1, 0));  // target is wire 0
    const std::vector<std::uint8_t> in{1, 1};
    CHECK(c.simulate(in) == std::vector<std::uint8_t>{0, 1});

    Circuit t(3);
    t.append(Gate::toffoli(0, 1, 2));
    CHECK(t.simulate(std::vector<std::uint8_t>{1, 1, 0}) ==
          std::vector<std::uint8_t>{1, 1, 1});
    CHECK(t.simulate(std::vector<std::uint8_t>{1, 0, 0}) ==
          std::vector<std::uint8_t>{1, 0, 0});

    std::mt19937_64 rng(9);
    Circuit empty(8);
    for (int i = 0; i < 100; ++i) {
        const auto st = random_state(rng, 8);
        CHECK(empty.simulate(st) == st);
    }
    CHECK_THROWS_AS(empty.simulate(std::vector<std::uint8_t>{1, 0}), std::invalid_argument);
}

TEST_CASE("simulate leaves the input untouched") {
    Circuit c(2);
    c.append(Gate::cnot(1, 0));
    const std::vector<std::uint8_t> in{1, 1};
    (void)c.simulate(in);
    CHECK(in == std::vector<std::uint8_t>{1, 1});
}

TEST_CASE("inverted undoes the circuit") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const std::uint32_t q = 3 + rng() % 8;
        const Circuit c = random_circuit(rng, q, 40);
        const Circuit inv = c.inverted();
        CHECK(inv.inverted() == c);
        for (int s = 0; s < 100; ++s) {
            const auto st = random_state(rng, q);
            CHECK(inv.simulate(c.simulate(st)) == st);
        }
    }
}

TEST_CASE("inverting a single CNOT returns the same gate") {
    Circuit c(2);
    c.append(Gate::cnot(1, 0));
    const Circuit inv = c.inverted();
    CHECK(inv.gates().size() == 1);
    CHECK(inv.gates()[0] == Gate::cnot(1, 0));
    CHECK(inv == c);
}

TEST_CASE("stats counts and greedy depth") {
    // Constant-multiplication example emission order: depth 4, 5 CNOTs.
    Circuit c(4);
    c.append(Gate::cnot(2, 0));
    c.append(Gate::cnot(2, 1));
    c.append(Gate::cnot(3, 1));
    c.append(Gate::cnot(0, 3));
    c.append(Gate::cnot(1, 2));
    const GateStats st = c.stats();
    CHECK(st.cnot_count == 5);
    CHECK(st.tof_count == 0);
    CHECK(st.depth_greedy == 4);

    const GateStats empty = Circuit(3).stats();
    CHECK(empty.cnot_count == 0);
    CHECK(empty.tof_count == 0);
    CHECK(empty.depth_greedy == 0);
    CHECK(empty.qubits == 3);

    Circuit par(12);
    for (std::uint32_t i = 0; i < 6; ++i) par.append(Gate::cnot(2 * i, 2 * i + 1));
    CHECK(par.stats().depth_greedy == 1);
}

TEST_CASE("greedy depth bounds on random circuits") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint32_t q = 3 + rng() % 10;
        const Circuit c = random_circuit(rng, q, 60);
        const GateStats st = c.stats();
        CHECK(st.depth_greedy <= st.cnot_count + st.tof_count);
        std::vector<std::uint64_t> incidence(q, 0);
        for (const Gate& g : c.gates()) {
            ++incidence[g.target];
            ++incidence[g.c0];
            if (g.kind == GateKind::Toffoli) ++incidence[g.c1];
        }
        for (std::uint32_t w = 0; w < q; ++w) CHECK(st.depth_greedy >= incidence[w]);
    }
}

TEST_CASE("netlist format") {
    Circuit c(3);
    c.append(Gate::toffoli(0, 1, 2));
    CHECK(c.serialize() == "qubits 3\nperm 0 1 2\nTOF 0 1 2\n");

    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        const Circuit r = random_circuit(rng, 3 + rng() % 6, 30);
        const std::string text = r.serialize();
        const Circuit parsed = Circuit::parse_netlist(text);
        CHECK(parsed.serialize() == text);
        for (int s = 0; s < 20; ++s) {
            const auto st = random_state(rng, r.qubits());
            CHECK(parsed.simulate(st) == r.simulate(st));
        }
    }
}

TEST_CASE("netlist parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(Circuit::parse_netlist(""), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(Circuit::parse_netlist("qubits x\n"), doctest::Contains("line 1"),
                         ParseError);
    CHECK_THROWS_WITH_AS(Circuit::parse_netlist("qubits 2\nperm 0\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(Circuit::parse_netlist("qubits 2\nperm 1 1\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(Circuit::parse_netlist("qubits 2\nperm 0 1\nCNOT 0 2\n"),
                         doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_WITH_AS(Circuit::parse_netlist("qubits 2\nperm 0 1\nH 0\n"),
                         doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_WITH_AS(Circuit::parse_netlist("qubits 3\nperm 0 1 2\nTOF 0 1\n"),
                         doctest::Contains("line 3"), ParseError);
}

TEST_CASE("qasm export") {
    Circuit c(3);
    c.append(Gate::cnot(0, 1));
    c.append(Gate::toffoli(0, 1, 2));
    const std::string qasm = c.export_qasm();
    CHECK(qasm.find("cx q[0], q[1];") != std::string::npos);
    CHECK(qasm.find("ccx q[0], q[1], q[2];") != std::string::npos);
    CHECK(qasm.find("// wiremap: 0 1 2") != std::string::npos);

    std::size_t gate_lines = 0, pos = 0;
    for (const char* tok : {"\ncx ", "\nccx "}) {
        pos = 0;
        while ((pos = qasm.find(tok, pos)) != std::string::npos) {
            ++gate_lines;
            ++pos;
        }
    }
    CHECK(gate_lines == c.gates().size());
}
