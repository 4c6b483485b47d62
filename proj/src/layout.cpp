#include "gcq/layout.hpp"

#include <bit>
#include <stdexcept>

namespace gcq {

chain_layout::chain_layout(int block_size_qubits_, int num_blocks_, int cells_per_qubit_,
                           int ss_cells_, int label_bits_)
    : cells_per_qubit(cells_per_qubit_),
      block_size_qubits(block_size_qubits_),
      ss_cells(ss_cells_),
      num_blocks(num_blocks_),
      label_bits(label_bits_)
{
    if (cells_per_qubit < 1)
        throw std::invalid_argument("chain_layout: cells_per_qubit must be positive");
    if (block_size_qubits < 1)
        throw std::invalid_argument("chain_layout: block_size_qubits must be positive");
    if (num_blocks < 1)
        throw std::invalid_argument("chain_layout: num_blocks must be positive");
    if (ss_cells < 0 || label_bits < 0)
        throw std::invalid_argument("chain_layout: negative cell counts");
}

int64_t chain_layout::total_cells() const
{
    return static_cast<int64_t>(num_blocks) * block_stride_cells();
}

chain_layout chain_layout::from_config(const config& cfg)
{
    return from_config(cfg, chain_layout{});
}

chain_layout chain_layout::from_config(const config& cfg, const chain_layout& defaults)
{
    return chain_layout(
        static_cast<int>(cfg.get_int("layout.block_size_qubits", defaults.block_size_qubits)),
        static_cast<int>(cfg.get_int("layout.num_blocks", defaults.num_blocks)),
        static_cast<int>(cfg.get_int("layout.cells_per_qubit", defaults.cells_per_qubit)),
        static_cast<int>(cfg.get_int("layout.ss_cells", defaults.ss_cells)),
        static_cast<int>(cfg.get_int("layout.label_bits", defaults.label_bits)));
}

int64_t total_cells(const chain_layout& layout)
{
    return layout.total_cells();
}

int64_t subcomputer_cell_cost(int64_t n_qubits, int64_t r_aux)
{
    if (n_qubits < 1)
        throw std::invalid_argument("subcomputer_cell_cost: n_qubits must be >= 1");
    if (r_aux < 0)
        throw std::invalid_argument("subcomputer_cell_cost: r_aux must be >= 0");
    int64_t log2_ceil = std::bit_width(static_cast<uint64_t>(n_qubits - 1));
    return 8 * (log2_ceil + r_aux) + 10;
}

} // namespace gcq
