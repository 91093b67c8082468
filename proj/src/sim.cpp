#include "cmacr/sim.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cmacr {

void SimConfig::validate() const {
    scenario.validate();
    if (n < 1) throw std::invalid_argument("SimConfig: n >= 1");
    if (k1 < 1 || k1 > n) throw std::invalid_argument("SimConfig: 1 <= k1 <= n");
    if (k2 < 0 || k2 > k1) throw std::invalid_argument("SimConfig: 0 <= k2 <= k1");
    if (k1 + k2 > n)
        throw std::invalid_argument(
            "SimConfig: k1 + k2 <= n (joint decoding needs sum rate <= 1)");
    if (blocks < 2) throw std::invalid_argument("SimConfig: blocks >= 2");
    if (trials < 1) throw std::invalid_argument("SimConfig: trials >= 1");
    if (k1 > ml_cap)
        throw std::length_error("SimConfig: k1 exceeds the brute-force cap");
    if (k1 + k2 > ml_cap + kJointCapExtra)
        throw std::length_error("SimConfig: k1 + k2 exceeds the joint cap");
}

namespace {

// Stream roles per trial; each gets an independently derived seed.
enum Role : uint64_t {
    kRoleCodebook = 0,
    kRoleMsg1,
    kRoleMsg2,
    kRoleNoise1,
    kRoleNoise2,
    kRoleNoise3,
};

SplitMix64 role_stream(uint64_t master, long trial, Role role) {
    uint64_t trial_seed = derive_seed(master, static_cast<uint64_t>(trial));
    return SplitMix64(derive_seed(trial_seed, role));
}

struct TrialCodes {
    LinearCode g;    // k1 x n, both sources (xor mode) / source 1 (joint mode)
    LinearCode g2;   // k2 x n, source 2's own code (joint mode only)
    LinearCode g3;   // k1 x n, relay
    LinearCode g3p;  // last k2 rows of g3
    LinearCode gown2;  // source 2's code as seen at receiver 2
};

bool full_rank(std::initializer_list<const LinearCode*> stacked, int want) {
    return gf2_rank(std::vector<const LinearCode*>(stacked)) == want;
}

// Draws the trial's generator matrices, redrawing until every decoder-facing
// stack has full row rank: a rank-deficient draw could not distinguish
// messages even without noise.
TrialCodes draw_codes(const SimConfig& cfg, SplitMix64& rng) {
    TrialCodes c;
    const bool joint = cfg.relay_decoder == RelayDecoder::joint;
    for (int attempt = 0; attempt < 4096; ++attempt) {
        c.g = random_code(cfg.k1, cfg.n, rng);
        if (!full_rank({&c.g}, cfg.k1)) continue;
        if (joint && cfg.k2 > 0) {
            c.g2 = random_code(cfg.k2, cfg.n, rng);
            if (!full_rank({&c.g, &c.g2}, cfg.k1 + cfg.k2)) continue;
        }
        c.g3 = random_code(cfg.k1, cfg.n, rng);
        if (!full_rank({&c.g3}, cfg.k1)) continue;
        c.g3p = last_rows(c.g3, cfg.k2);
        c.gown2 = joint && cfg.k2 > 0 ? c.g2 : last_rows(c.g, cfg.k2);
        if (cfg.k2 > 0) {
            if (!full_rank({&c.g, &c.g3p}, cfg.k1 + cfg.k2)) continue;
            if (!full_rank({&c.gown2, &c.g3}, cfg.k2 + cfg.k1)) continue;
        }
        return c;
    }
    throw std::runtime_error("draw_codes: no full-rank draw found");
}

}  // namespace

SimReport run_sim(const SimConfig& cfg) {
    cfg.validate();
    const bool joint = cfg.relay_decoder == RelayDecoder::joint;
    const int B = cfg.blocks;
    const int data_blocks = B - 1;  // sources are silent in block B
    const int jcap = cfg.ml_cap + kJointCapExtra;

    long relay_errs = 0, rx1_block_errs = 0, rx2_block_errs = 0, trial_errs = 0;

    for (long t = 0; t < cfg.trials; ++t) {
        auto cb = role_stream(cfg.master_seed, t, kRoleCodebook);
        auto msg1 = role_stream(cfg.master_seed, t, kRoleMsg1);
        auto msg2 = role_stream(cfg.master_seed, t, kRoleMsg2);
        auto z1 = role_stream(cfg.master_seed, t, kRoleNoise1);
        auto z2 = role_stream(cfg.master_seed, t, kRoleNoise2);
        auto z3 = role_stream(cfg.master_seed, t, kRoleNoise3);
        TrialCodes codes = draw_codes(cfg, cb);

        std::vector<BitWord> u1(data_blocks), u2(data_blocks), u3(data_blocks);
        for (int b = 0; b < data_blocks; ++b) {
            u1[b] = BitWord::random(cfg.k1, msg1);
            u2[b] = BitWord::random(cfg.k2, msg2);
            u3[b] = xor_padded(u1[b], u2[b]);
        }

        bool any_msg_err = false;
        BitWord relay_word(cfg.n);   // what the relay sends this block
        BitWord rx1_prev_own(cfg.k1);  // receiver 1's estimate of u1[b-1]
        BitWord rx2_prev_own(cfg.k2);
        for (int b = 0; b < B; ++b) {
            const bool data = b < data_blocks;
            BitWord x1(cfg.n), x2(cfg.n);
            if (data) {
                x1 = encode(codes.g, u1[b]);
                x2 = cfg.k2 > 0 ? (joint ? encode(codes.g2, u2[b])
                                         : encode(codes.g, xor_padded(
                                                               BitWord(cfg.k1),
                                                               u2[b])))
                                : BitWord(cfg.n);
            }

            // relay decodes the current data block from Y3 = X1 + X2 + Z3
            BitWord next_relay_word(cfg.n);
            if (data) {
                BitWord y3 = bsc(x1 ^ x2, cfg.scenario.eps3, z3);
                BitWord u3hat(cfg.k1);
                if (joint && cfg.k2 > 0) {
                    auto [a, bmsg] =
                        joint_ml_decode(codes.g, codes.g2, y3, jcap);
                    u3hat = xor_padded(a, bmsg);
                } else {
                    u3hat = ml_decode(codes.g, y3, cfg.ml_cap);
                }
                if (!(u3hat == u3[b])) ++relay_errs;
                next_relay_word = encode(codes.g3, u3hat);
            }

            BitWord y1 = bsc(x1 ^ relay_word, cfg.scenario.eps1, z1);
            BitWord y2 = bsc(x2 ^ relay_word, cfg.scenario.eps2, z2);

            // receiver 1: block 1 decodes its own message point-to-point
            // (relay silent); middle blocks decode (u1[b], u2[b-1]) jointly
            // after cancelling u1[b-1]'s relay image; block B decodes the
            // leftover u2[B-2] alone.
            if (b == 0) {
                BitWord m = ml_decode(codes.g, y1, cfg.ml_cap);
                if (!(m == u1[0])) {
                    ++rx1_block_errs;
                    any_msg_err = true;
                }
                rx1_prev_own = m;
            } else {
                BitWord cancelled = y1 ^ encode(codes.g3, rx1_prev_own);
                if (data) {
                    bool err = false;
                    if (cfg.k2 > 0) {
                        auto [own, other] =
                            joint_ml_decode(codes.g, codes.g3p, cancelled, jcap);
                        err = !(own == u1[b]) || !(other == u2[b - 1]);
                        rx1_prev_own = own;
                    } else {
                        BitWord own = ml_decode(codes.g, cancelled, cfg.ml_cap);
                        err = !(own == u1[b]);
                        rx1_prev_own = own;
                    }
                    if (err) {
                        ++rx1_block_errs;
                        any_msg_err = true;
                    }
                } else if (cfg.k2 > 0) {
                    BitWord other = ml_decode(codes.g3p, cancelled, cfg.ml_cap);
                    if (!(other == u2[b - 1])) {
                        ++rx1_block_errs;
                        any_msg_err = true;
                    }
                }
            }

            // receiver 2, symmetric: cancels u2[b-1]'s relay image (the last
            // k2 rows of G3) and recovers u1[b-1] through the full G3.
            if (b == 0) {
                if (cfg.k2 > 0) {
                    BitWord m = ml_decode(codes.gown2, y2, cfg.ml_cap);
                    if (!(m == u2[0])) {
                        ++rx2_block_errs;
                        any_msg_err = true;
                    }
                    rx2_prev_own = m;
                }
            } else {
                BitWord cancelled =
                    cfg.k2 > 0 ? y2 ^ encode(codes.g3p, rx2_prev_own) : y2;
                if (data) {
                    bool err = false;
                    if (cfg.k2 > 0) {
                        auto [own, other] = joint_ml_decode(
                            codes.gown2, codes.g3, cancelled, jcap);
                        err = !(own == u2[b]) || !(other == u1[b - 1]);
                        rx2_prev_own = own;
                    } else {
                        BitWord other = ml_decode(codes.g3, cancelled, cfg.ml_cap);
                        err = !(other == u1[b - 1]);
                    }
                    if (err) {
                        ++rx2_block_errs;
                        any_msg_err = true;
                    }
                } else {
                    BitWord other = ml_decode(codes.g3, cancelled, cfg.ml_cap);
                    if (!(other == u1[b - 1])) {
                        ++rx2_block_errs;
                        any_msg_err = true;
                    }
                }
            }

            relay_word = next_relay_word;
        }
        if (any_msg_err) ++trial_errs;
    }

    SimReport rep;
    rep.config = cfg;
    rep.master_seed = cfg.master_seed;
    rep.trials = cfg.trials;
    rep.blocks = B;
    const double relay_events = static_cast<double>(cfg.trials) * data_blocks;
    const double rx_events = static_cast<double>(cfg.trials) * B;
    rep.relay_error_rate = relay_errs / relay_events;
    rep.rx1_error_rate = rx1_block_errs / rx_events;
    rep.rx2_error_rate = rx2_block_errs / rx_events;
    rep.end_to_end_error_rate =
        static_cast<double>(trial_errs) / static_cast<double>(cfg.trials);
    return rep;
}

std::string SimReport::to_json() const {
    nlohmann::ordered_json j;
    j["relay_error_rate"] = relay_error_rate;
    j["rx1_error_rate"] = rx1_error_rate;
    j["rx2_error_rate"] = rx2_error_rate;
    j["end_to_end_error_rate"] = end_to_end_error_rate;
    j["trials"] = trials;
    j["blocks"] = blocks;
    j["seed"] = master_seed;
    j["config"] = {
        {"eps1", config.scenario.eps1}, {"eps2", config.scenario.eps2},
        {"eps3", config.scenario.eps3}, {"n", config.n},
        {"k1", config.k1},              {"k2", config.k2},
        {"blocks", config.blocks},      {"trials", config.trials},
        {"seed", config.master_seed},
        {"relay_decoder",
         config.relay_decoder == RelayDecoder::joint ? "joint" : "xor"},
    };
    return j.dump(2);
}

std::string SimReport::csv_header() {
    return "eps1,eps2,eps3,n,k1,k2,blocks,trials,seed,relay_decoder,"
           "relay_error_rate,rx1_error_rate,rx2_error_rate,"
           "end_to_end_error_rate";
}

std::string SimReport::to_csv_row() const {
    std::ostringstream os;
    os.precision(12);
    os << config.scenario.eps1 << ',' << config.scenario.eps2 << ','
       << config.scenario.eps3 << ',' << config.n << ',' << config.k1 << ','
       << config.k2 << ',' << config.blocks << ',' << config.trials << ','
       << config.master_seed << ','
       << (config.relay_decoder == RelayDecoder::joint ? "joint" : "xor") << ','
       << relay_error_rate << ',' << rx1_error_rate << ',' << rx2_error_rate
       << ',' << end_to_end_error_rate;
    return os.str();
}

}  // namespace cmacr
