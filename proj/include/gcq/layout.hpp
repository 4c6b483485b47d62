// Chain geometry: cells, qubits, blocks and switching stations.
#pragma once

#include <cstdint>
#include "gcq/config.hpp"

namespace gcq {

// One encoding block holds block_size_qubits qubits (data + ancilla), each
// represented by cells_per_qubit chain cells, followed by a switching station
// of ss_cells cells. A device is num_blocks such blocks in a row.
struct chain_layout {
    int cells_per_qubit = 8;
    int block_size_qubits = 1;
    int ss_cells = 0;
    int num_blocks = 1;
    int label_bits = 0;

    chain_layout() = default;
    chain_layout(int block_size_qubits_, int num_blocks_ = 1, int cells_per_qubit_ = 8,
                 int ss_cells_ = 0, int label_bits_ = 0);

    int64_t total_cells() const;

    // Cells from the start of one block to the start of the next.
    int64_t block_stride_cells() const
    {
        return static_cast<int64_t>(block_size_qubits) * cells_per_qubit + ss_cells;
    }

    static chain_layout from_config(const config& cfg);
    static chain_layout from_config(const config& cfg, const chain_layout& defaults);
};

int64_t total_cells(const chain_layout& layout);

// Cells needed per qubit when every qubit carries its own uniquely labelled
// sub-computer region: 8*(ceil(log2(n_qubits)) + r_aux) + 10.
int64_t subcomputer_cell_cost(int64_t n_qubits, int64_t r_aux);

} // namespace gcq
