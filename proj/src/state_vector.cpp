#include "gcq/state_vector.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace gcq {

namespace {

constexpr double k_branch_eps = 1e-300;

} // namespace

state_vector::state_vector(unsigned n_qubits, uint64_t seed)
    : n_(n_qubits), rng_(seed), k_(&kernels::active_ops())
{
    if (n_ < 1 || n_ > k_max_qubits)
        throw std::invalid_argument("state_vector: qubit count out of range [1, 24]");
    amps_.assign(uint64_t{1} << n_, cplx{0.0, 0.0});
    amps_[0] = 1.0;
}

state_vector::state_vector(std::vector<cplx> amplitudes, uint64_t seed)
    : rng_(seed), k_(&kernels::active_ops())
{
    size_t d = amplitudes.size();
    if (d < 2 || (d & (d - 1)) != 0)
        throw std::invalid_argument("state_vector: amplitude count must be a power of two >= 2");
    n_ = static_cast<unsigned>(std::countr_zero(d));
    if (n_ > k_max_qubits)
        throw std::invalid_argument("state_vector: qubit count out of range [1, 24]");
    amps_ = std::move(amplitudes);
}

void state_vector::check_qubit(unsigned q) const
{
    if (q >= n_)
        throw std::out_of_range("state_vector: qubit index out of range");
}

void state_vector::check_gate(const gate& g) const
{
    check_qubit(g.target);
    if (g.ctrl_mask >= dim())
        throw std::out_of_range("state_vector: control index out of range");
    if (g.ctrl_mask & (1u << g.target))
        throw std::invalid_argument("state_vector: control overlaps target");
    if (g.ctrl_val & ~g.ctrl_mask)
        throw std::invalid_argument("state_vector: control values outside control mask");
}

void state_vector::apply(const gate& g)
{
    check_gate(g);
    const uint64_t tbit = uint64_t{1} << g.target;
    switch (g.kind) {
    case gate_kind::x:
    case gate_kind::cnot:
    case gate_kind::mcx:
        k_->pauli_x(amps_.data(), n_, g.target, g.ctrl_mask, g.ctrl_val);
        return;
    case gate_kind::z:
    case gate_kind::cz:
    case gate_kind::mcz:
        k_->phase(amps_.data(), n_, g.ctrl_mask | tbit, g.ctrl_val | tbit, cplx{-1.0, 0.0});
        return;
    case gate_kind::s:
        k_->phase(amps_.data(), n_, g.ctrl_mask | tbit, g.ctrl_val | tbit, cplx{0.0, 1.0});
        return;
    case gate_kind::y: {
        const cplx u[4] = {{0.0, 0.0}, {0.0, -1.0}, {0.0, 1.0}, {0.0, 0.0}};
        k_->unitary2(amps_.data(), n_, g.target, g.ctrl_mask, g.ctrl_val, u);
        return;
    }
    case gate_kind::h: {
        const double r = 1.0 / std::sqrt(2.0);
        const cplx u[4] = {{r, 0.0}, {r, 0.0}, {r, 0.0}, {-r, 0.0}};
        k_->unitary2(amps_.data(), n_, g.target, g.ctrl_mask, g.ctrl_val, u);
        return;
    }
    }
    throw std::invalid_argument("state_vector: unknown gate kind");
}

void state_vector::apply_pauli(unsigned qubit, pauli p)
{
    apply(gate::from_pauli(p, qubit));
}

void state_vector::apply_pauli_string(uint64_t x_mask, uint64_t z_mask)
{
    if ((x_mask | z_mask) >= dim())
        throw std::out_of_range("apply_pauli_string: qubit out of range");
    for (uint64_t m = z_mask; m != 0; m &= m - 1) {
        uint64_t bit = m & -m;
        k_->phase(amps_.data(), n_, bit, bit, cplx{-1.0, 0.0});
    }
    for (uint64_t m = x_mask; m != 0; m &= m - 1) {
        unsigned q = static_cast<unsigned>(std::countr_zero(m));
        k_->pauli_x(amps_.data(), n_, q, 0, 0);
    }
}

int state_vector::erase(unsigned qubit)
{
    check_qubit(qubit);
    double p1 = prob_one(qubit);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    int outcome = dist(rng_) < p1 ? 1 : 0;
    double branch = outcome ? p1 : 1.0 - p1;
    if (branch < k_branch_eps)
        throw std::runtime_error("erase: sampled a zero-norm branch (invalid state)");
    k_->reset_qubit(amps_.data(), n_, qubit, outcome, 1.0 / std::sqrt(branch));
    return outcome;
}

int state_vector::erase_forced(unsigned qubit, int outcome)
{
    check_qubit(qubit);
    double p1 = prob_one(qubit);
    double branch = outcome ? p1 : 1.0 - p1;
    if (branch < k_branch_eps)
        throw std::runtime_error("erase_forced: branch has zero norm");
    k_->reset_qubit(amps_.data(), n_, qubit, outcome, 1.0 / std::sqrt(branch));
    return outcome;
}

int state_vector::measure(unsigned qubit)
{
    check_qubit(qubit);
    const uint64_t tbit = uint64_t{1} << qubit;
    double p1 = prob_one(qubit);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    int outcome = dist(rng_) < p1 ? 1 : 0;
    double branch = outcome ? p1 : 1.0 - p1;
    if (branch < k_branch_eps)
        throw std::runtime_error("measure: sampled a zero-norm branch (invalid state)");
    // Zero the discarded branch, renormalize the kept one.
    k_->phase(amps_.data(), n_, tbit, outcome ? 0 : tbit, cplx{0.0, 0.0});
    k_->scale(amps_.data(), amps_.size(), 1.0 / std::sqrt(branch));
    return outcome;
}

double state_vector::prob_one(unsigned qubit) const
{
    check_qubit(qubit);
    const uint64_t tbit = uint64_t{1} << qubit;
    double p1 = k_->masked_prob(amps_.data(), n_, tbit, tbit);
    return p1 < 0.0 ? 0.0 : (p1 > 1.0 ? 1.0 : p1);
}

double state_vector::norm_sq() const
{
    return k_->norm_sq(amps_.data(), amps_.size());
}

void state_vector::renormalize()
{
    double n2 = norm_sq();
    if (n2 < k_branch_eps)
        throw std::runtime_error("renormalize: zero-norm state");
    k_->scale(amps_.data(), amps_.size(), 1.0 / std::sqrt(n2));
}

cplx inner_product(const state_vector& a, const state_vector& b)
{
    if (a.num_qubits() != b.num_qubits())
        throw std::invalid_argument("inner_product: qubit count mismatch");
    return kernels::active_ops().inner(a.amplitudes().data(), b.amplitudes().data(),
                                       a.amplitudes().size());
}

double fidelity(const state_vector& a, const state_vector& b)
{
    cplx ip = inner_product(a, b);
    return ip.real() * ip.real() + ip.imag() * ip.imag();
}

std::vector<double> schmidt_values(const state_vector& s, uint32_t partition_mask)
{
    const unsigned n = s.num_qubits();
    const uint32_t full = static_cast<uint32_t>((uint64_t{1} << n) - 1);
    if (partition_mask == 0 || (partition_mask & ~full) != 0 || partition_mask == full)
        throw std::invalid_argument("schmidt_values: partition must be a nonempty proper subset");

    std::vector<unsigned> a_bits, b_bits;
    for (unsigned q = 0; q < n; q++)
        ((partition_mask >> q) & 1 ? a_bits : b_bits).push_back(q);

    const uint64_t rows = uint64_t{1} << a_bits.size();
    const uint64_t cols = uint64_t{1} << b_bits.size();
    Eigen::MatrixXcd m(rows, cols);
    auto amps = s.amplitudes();
    for (uint64_t i = 0; i < amps.size(); i++) {
        uint64_t a = 0, b = 0;
        for (size_t k = 0; k < a_bits.size(); k++)
            a |= ((i >> a_bits[k]) & 1) << k;
        for (size_t k = 0; k < b_bits.size(); k++)
            b |= ((i >> b_bits[k]) & 1) << k;
        m(a, b) = amps[i];
    }

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(rows <= cols ? m : Eigen::MatrixXcd(m.transpose()));
    const auto& sv = svd.singularValues();
    return {sv.data(), sv.data() + sv.size()};
}

bool is_product(const state_vector& s, uint32_t partition_mask, double tol)
{
    auto sv = schmidt_values(s, partition_mask);
    return sv.size() < 2 || sv[1] < tol;
}

void dump_amplitudes(const state_vector& s, std::ostream& os)
{
    auto amps = s.amplitudes();
    os.precision(17);
    for (uint64_t i = 0; i < amps.size(); i++)
        os << i << ' ' << amps[i].real() << ' ' << amps[i].imag() << '\n';
}

} // namespace gcq
