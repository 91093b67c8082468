#ifndef CMACR_SIM_HPP
#define CMACR_SIM_HPP

#include <cstdint>
#include <string>

#include "cmacr/binary.hpp"
#include "cmacr/gf2.hpp"

// Monte Carlo simulation of block-Markov linear-code relaying over the binary
// channel Y1 = X1+X3+Z1, Y2 = X2+X3+Z2, Y3 = X1+X2+Z3 (mod-2).
//
// Transmission uses B channel blocks. Sources send fresh messages u1 (k1
// bits) and u2 (k2 bits, zero-padded to k1) in blocks 1..B-1 with the shared
// code G; the relay decodes the padded sum u3 = u1 xor [0 u2] (a codeword of
// G by linearity) and re-encodes it with an independent code G3 one block
// later; its block-1 signal is the known all-zero word. Each receiver cancels
// the relay component coming from its own previous message and jointly
// decodes its fresh message together with the other source's previous one.
//
// relay_decoder selects how the relay decodes:
//   xor   - minimum-distance decoding of u3 directly (structured coding);
//   joint - source 2 uses an independent code G2 and the relay decodes the
//           message pair (u1, u2) exhaustively, then forwards their padded
//           sum. This is the decode-both-messages baseline the xor scheme is
//           compared against; it changes only the relay's task, not the
//           relay->receiver link.

namespace cmacr {

enum class RelayDecoder { xor_sum, joint };

struct SimConfig {
    BinaryScenario scenario;
    int n = 0;        // block length
    int k1 = 0;       // message bits of source 1 (k1 >= k2)
    int k2 = 0;       // message bits of source 2
    int blocks = 2;   // B >= 2 channel blocks per trial
    int trials = 1;
    uint64_t master_seed = 0;
    RelayDecoder relay_decoder = RelayDecoder::xor_sum;
    int ml_cap = kMlCap;

    void validate() const;  // throws std::invalid_argument / std::length_error
};

struct SimReport {
    double relay_error_rate = 0.0;  // decoded xor word != true u3, per block
    double rx1_error_rate = 0.0;    // any message error in a block's decode
    double rx2_error_rate = 0.0;
    double end_to_end_error_rate = 0.0;  // trials with any message error
    long trials = 0;
    long blocks = 0;
    uint64_t master_seed = 0;
    SimConfig config;

    std::string to_json() const;     // stable field names
    std::string to_csv_row() const;  // one data row
    static std::string csv_header();
};

// Fully reproducible: identical configs give bit-identical reports.
SimReport run_sim(const SimConfig& cfg);

}  // namespace cmacr

#endif
