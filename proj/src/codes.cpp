#include "gcq/codes.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace gcq {

namespace {

// ---------------------------------------------------------------------------
// Steane [[7,1,3]]: data wires 0..6, ancilla wires 7..9.
//
// Stabilizer supports (identical for the X and Z generators; the code is
// self-dual). The syndrome of a single-qubit error on wire q is the column
// (q in S0, q in S1, q in S2), and all seven columns are distinct.
constexpr std::array<uint32_t, 3> k_steane_supports = {
    0b1010101, // wires 0,2,4,6
    0b1100011, // wires 0,1,5,6
    0b1111000, // wires 3,4,5,6
};
constexpr uint32_t k_steane_logical = 0b0110001; // wires 0,4,5

constexpr unsigned k_steane_anc0 = 7;

// ---------------------------------------------------------------------------
// Shor [[9,1,3]]: data wires 0..8 in three triples, ancilla wires 9..15.
constexpr std::array<uint32_t, 6> k_shor_zz = {
    0b000000011, 0b000000110, // triple 0: Z0Z1, Z1Z2
    0b000011000, 0b000110000, // triple 1
    0b011000000, 0b110000000, // triple 2
};
constexpr std::array<uint32_t, 2> k_shor_xx = {
    0b000111111, // X on wires 0..5
    0b111111000, // X on wires 3..8
};

// Chain slots for the Shor block. The in-triple parity ancillas sit right
// beside their triples and the two six-wire sign ancillas sit mid-block, so
// most CU travel in the bit-flip section stays local.
//   chain: d0 d1 d2 | p p | d3 d4 d5 | s s p | d6 d7 d8 | p p
constexpr std::array<unsigned, 16> k_shor_chain = {
    0, 1, 2, 5, 6, 7, 11, 12, 13, // data wires
    8,                            // wire  9: first sign ancilla
    9,                            // wire 10: second sign ancilla, reused as a triple-1 parity
    10,                           // wire 11: triple-1 parity
    3, 4,                         // wires 12,13: triple-0 parity pair
    14, 15,                       // wires 14,15: triple-2 parity pair
};

std::vector<unsigned> shor_chain_vec()
{
    return {k_shor_chain.begin(), k_shor_chain.end()};
}

} // namespace

bool pauli_string::commutes_with(const pauli_string& other) const
{
    int anti = std::popcount(x_mask & other.z_mask) + std::popcount(z_mask & other.x_mask);
    return (anti & 1) == 0;
}

void code_spec::validate() const
{
    if (n_data == 0 || block_size_qubits() > k_max_qubits)
        throw std::invalid_argument("code_spec: bad block size");
    for (size_t i = 0; i < stabilizers.size(); i++)
        for (size_t j = i + 1; j < stabilizers.size(); j++)
            if (!stabilizers[i].commutes_with(stabilizers[j]))
                throw std::invalid_argument("code_spec: stabilizers do not commute");
    for (const auto& s : stabilizers)
        if (!logical_x.commutes_with(s) || !logical_z.commutes_with(s))
            throw std::invalid_argument("code_spec: logicals do not commute with stabilizers");
    if (logical_x.commutes_with(logical_z))
        throw std::invalid_argument("code_spec: logical X and Z must anticommute");
}

const code_spec& code_spec::steane()
{
    static const code_spec spec = [] {
        code_spec c;
        c.name = "steane";
        c.n_data = 7;
        c.n_ancilla = 3;
        for (uint32_t s : k_steane_supports)
            c.stabilizers.push_back({s, 0});
        for (uint32_t s : k_steane_supports)
            c.stabilizers.push_back({0, s});
        c.logical_x = {k_steane_logical, 0};
        c.logical_z = {0, k_steane_logical};
        c.validate();
        return c;
    }();
    return spec;
}

const code_spec& code_spec::shor()
{
    static const code_spec spec = [] {
        code_spec c;
        c.name = "shor";
        c.n_data = 9;
        c.n_ancilla = 7;
        for (uint32_t s : k_shor_zz)
            c.stabilizers.push_back({0, s});
        for (uint32_t s : k_shor_xx)
            c.stabilizers.push_back({s, 0});
        c.logical_x = {0, 0b001001001}; // Z on one qubit of each triple
        c.logical_z = {0b000000111, 0}; // X across the first triple
        c.validate();
        return c;
    }();
    return spec;
}

const code_spec& code_spec::by_name(const std::string& name)
{
    if (name == "steane")
        return steane();
    if (name == "shor")
        return shor();
    throw std::invalid_argument("unknown code: " + name);
}

circuit steane_encode()
{
    circuit c(7, 3);
    // Fan the input out over the rest of the logical-X support, then prepare
    // each stabilizer generator from its pivot wire.
    c.add(gate::cnot(0, 4));
    c.add(gate::cnot(0, 5));
    c.add(gate::h(2));
    c.add(gate::cnot(2, 0));
    c.add(gate::cnot(2, 4));
    c.add(gate::cnot(2, 6));
    c.add(gate::h(1));
    c.add(gate::cnot(1, 0));
    c.add(gate::cnot(1, 5));
    c.add(gate::cnot(1, 6));
    c.add(gate::h(3));
    c.add(gate::cnot(3, 4));
    c.add(gate::cnot(3, 5));
    c.add(gate::cnot(3, 6));
    return c;
}

namespace {

// Steane syndrome of wire q as ancilla polarities (bit j = q in support j).
uint32_t steane_syndrome(unsigned q)
{
    uint32_t s = 0;
    for (unsigned j = 0; j < 3; j++)
        if ((k_steane_supports[j] >> q) & 1)
            s |= 1u << j;
    return s;
}

// Extraction runs check by check: every data wire in the support feeds its
// parity into the check's ancilla.
void steane_extraction(circuit& c)
{
    for (unsigned j = 0; j < 3; j++)
        for (unsigned d = 0; d < 7; d++)
            if ((k_steane_supports[j] >> d) & 1)
                c.add(gate::cnot(d, k_steane_anc0 + j));
}

void steane_corrections(circuit& c, bool target_descending)
{
    for (unsigned step = 0; step < 7; step++) {
        unsigned q = target_descending ? 6 - step : step;
        uint32_t syn = steane_syndrome(q);
        std::vector<std::pair<unsigned, bool>> ctrls;
        for (unsigned j = 0; j < 3; j++)
            ctrls.emplace_back(k_steane_anc0 + j, ((syn >> j) & 1) != 0);
        c.add(gate::mcx(ctrls, q));
    }
}

} // namespace

circuit steane_ec()
{
    circuit c(7, 3);

    // Bit-flip pass: extract the three parity checks onto the ancillas, then
    // apply the seven syndrome-keyed corrections coherently.
    steane_extraction(c);
    steane_corrections(c, /*target_descending=*/false);
    c.add_erase(9);
    c.add_erase(8);
    c.add_erase(7);

    // Phase-flip pass: conjugate by H so phase flips become bit flips, with
    // the same three ancilla wires reused after erasure.
    for (unsigned d = 7; d-- > 0;)
        c.add(gate::h(d));
    steane_extraction(c);
    steane_corrections(c, /*target_descending=*/true);
    for (unsigned d = 7; d-- > 0;)
        c.add(gate::h(d));
    c.add_erase(7);
    c.add_erase(8);
    c.add_erase(9);
    return c;
}

circuit shor_encode()
{
    circuit c(9, 7);
    c.set_chain_positions(shor_chain_vec());
    c.add(gate::cnot(0, 3));
    c.add(gate::cnot(0, 6));
    c.add(gate::h(0));
    c.add(gate::cnot(0, 1));
    c.add(gate::cnot(0, 2));
    c.add(gate::h(3));
    c.add(gate::cnot(3, 4));
    c.add(gate::cnot(3, 5));
    c.add(gate::h(6));
    c.add(gate::cnot(6, 7));
    c.add(gate::cnot(6, 8));
    return c;
}

circuit shor_ec()
{
    circuit c(9, 7);
    c.set_chain_positions(shor_chain_vec());
    const unsigned a_sign0 = 9, a_sign1 = 10; // mid-block sign pair

    // Section (i): phase flips. Conjugate by H, extract the two six-wire
    // sign parities check by check, correct one representative per triple,
    // conjugate back.
    for (unsigned d = 0; d < 9; d++)
        c.add(gate::h(d));
    for (unsigned d = 0; d < 6; d++)
        c.add(gate::cnot(d, a_sign0));
    for (unsigned d = 3; d < 9; d++)
        c.add(gate::cnot(d, a_sign1));
    // (s0,s1): (1,0) -> triple 0, (1,1) -> triple 1, (0,1) -> triple 2.
    c.add(gate::mcx({{a_sign0, false}, {a_sign1, true}}, 6));
    c.add(gate::mcx({{a_sign0, true}, {a_sign1, true}}, 3));
    c.add(gate::mcx({{a_sign0, true}, {a_sign1, false}}, 0));
    for (unsigned d = 9; d-- > 0;)
        c.add(gate::h(d));
    c.add_erase(a_sign0);
    c.add_erase(a_sign1);

    // Section (ii): bit flips, two in-triple parities per triple, all local
    // to the triple's own parity pair. The second sign wire is already
    // erased and comes back as a triple-1 parity, which is what keeps the
    // whole ancilla register at seven wires.
    const std::array<std::array<unsigned, 2>, 3> parity_wires = {{{12, 13}, {10, 11}, {14, 15}}};
    for (unsigned t = 0; t < 3; t++) {
        unsigned base = 3 * t;
        auto [p0, p1] = parity_wires[t];
        c.add(gate::cnot(base + 0, p0));
        c.add(gate::cnot(base + 1, p0));
        c.add(gate::cnot(base + 1, p1));
        c.add(gate::cnot(base + 2, p1));
    }
    for (unsigned t = 0; t < 3; t++) {
        unsigned base = 3 * t;
        auto [p0, p1] = parity_wires[t];
        c.add(gate::mcx({{p0, true}, {p1, false}}, base + 0));
        c.add(gate::mcx({{p0, true}, {p1, true}}, base + 1));
        c.add(gate::mcx({{p0, false}, {p1, true}}, base + 2));
    }
    c.add_erase(12);
    c.add_erase(13);
    c.add_erase(10);
    c.add_erase(11);
    c.add_erase(14);
    c.add_erase(15);
    return c;
}

circuit encode_circuit(const code_spec& code)
{
    if (code.name == "steane")
        return steane_encode();
    if (code.name == "shor")
        return shor_encode();
    throw std::invalid_argument("encode_circuit: unknown code");
}

circuit ec_circuit(const code_spec& code)
{
    if (code.name == "steane")
        return steane_ec();
    if (code.name == "shor")
        return shor_ec();
    throw std::invalid_argument("ec_circuit: unknown code");
}

state_vector encode_logical(const code_spec& code, cplx alpha, cplx beta, uint64_t seed)
{
    double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw std::invalid_argument("encode_logical: non-normalizable input");
    state_vector s(code.block_size_qubits(), seed);
    s.mutable_amplitudes()[0] = alpha / norm;
    s.mutable_amplitudes()[1] = beta / norm;
    encode_circuit(code).apply_to(s);
    return s;
}

double data_register_fidelity(const state_vector& full, const state_vector& reference_block,
                              unsigned n_data)
{
    if (reference_block.num_qubits() > full.num_qubits() || n_data > reference_block.num_qubits())
        throw std::invalid_argument("data_register_fidelity: register mismatch");
    const uint64_t d_dim = uint64_t{1} << n_data;
    const uint64_t r_dim = full.dim() >> n_data;
    auto ref = reference_block.amplitudes();
    auto amp = full.amplitudes();
    // The reference codeword on the data wires is the block codeword at
    // ancilla pattern zero.
    double f = 0.0;
    for (uint64_t r = 0; r < r_dim; r++) {
        cplx c = 0.0;
        const uint64_t base = r << n_data;
        for (uint64_t d = 0; d < d_dim; d++)
            c += std::conj(ref[d]) * amp[base | d];
        f += std::norm(c);
    }
    return f;
}

ec_experiment_report coherent_ec_experiment(const code_spec& code, cplx delta_x, cplx delta_y,
                                            cplx delta_z, unsigned error_qubit,
                                            double product_tol, uint64_t seed)
{
    if (error_qubit >= code.n_data)
        throw std::invalid_argument("coherent_ec_experiment: error qubit outside data register");
    for (cplx d : {delta_x, delta_y, delta_z})
        if (!std::isfinite(d.real()) || !std::isfinite(d.imag()))
            throw std::invalid_argument("coherent_ec_experiment: non-normalizable deltas");

    const unsigned n_block = code.block_size_qubits();
    const unsigned n_total = n_block + 2; // two environment qubits
    const uint64_t block_dim = uint64_t{1} << n_block;

    // A fixed nontrivial logical state plays the protected state.
    const cplx alpha{0.6, 0.0};
    const cplx beta = 0.8 * std::exp(cplx{0.0, 0.7});
    state_vector codeword = encode_logical(code, alpha, beta);

    std::vector<cplx> amps(uint64_t{1} << n_total, cplx{0.0, 0.0});
    const std::array<cplx, 4> coeff = {cplx{1.0, 0.0}, delta_x, delta_y, delta_z};
    const std::array<pauli, 3> paulis = {pauli::x, pauli::y, pauli::z};
    for (unsigned branch = 0; branch < 4; branch++) {
        if (coeff[branch] == cplx{0.0, 0.0})
            continue;
        state_vector deviated = codeword;
        if (branch > 0)
            deviated.apply_pauli(error_qubit, paulis[branch - 1]);
        auto dev = deviated.amplitudes();
        const uint64_t env_base = static_cast<uint64_t>(branch) << n_block;
        for (uint64_t i = 0; i < block_dim; i++)
            amps[env_base | i] += coeff[branch] * dev[i];
    }
    state_vector full(std::move(amps), seed);
    full.renormalize();

    // Run EC up to the trailing erasures, check that the data register has
    // already factored out, then erase and check again.
    circuit ec = ec_circuit(code);
    size_t tail = ec.ops().size();
    while (tail > 0 && ec.ops()[tail - 1].is_erase)
        tail--;
    for (size_t i = 0; i < tail; i++) {
        const auto& op = ec.ops()[i];
        if (op.is_erase)
            full.erase(op.g.target);
        else
            full.apply(op.g);
    }

    ec_experiment_report report;
    const uint32_t data_mask = (1u << code.n_data) - 1;
    report.data_fidelity = data_register_fidelity(full, codeword, code.n_data);
    auto sv = schmidt_values(full, data_mask);
    report.second_schmidt_value = sv.size() > 1 ? sv[1] : 0.0;
    report.factorized = report.second_schmidt_value < product_tol;

    for (size_t i = tail; i < ec.ops().size(); i++)
        full.erase(ec.ops()[i].g.target);

    report.data_fidelity_after_erase = data_register_fidelity(full, codeword, code.n_data);
    report.factorized_after_erase = is_product(full, data_mask, product_tol);
    report.ancilla_reset = true;
    for (unsigned a = code.n_data; a < n_block; a++)
        if (full.prob_one(a) > 1e-18)
            report.ancilla_reset = false;
    return report;
}

} // namespace gcq
