#ifndef CMACR_GF2_HPP
#define CMACR_GF2_HPP

#include <cstdint>
#include <utility>
#include <vector>

// GF(2) words, random linear block codes and exhaustive maximum-likelihood
// decoding (minimum Hamming distance, which is ML over a BSC with eps < 1/2).

namespace cmacr {

// splitmix64: the stream generator and the seed-derivation mix used for the
// whole simulator, so any trial/role stream can be replayed independently.
struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        return mix(state);
    }

    // uniform in [0, 1)
    double next_unit() { return (next() >> 11) * 0x1.0p-53; }

    int next_bit() { return static_cast<int>(next() >> 63); }
};

// seed -> independent child seed for a numbered role/trial
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
    return SplitMix64::mix(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
}

// Fixed-length bit word packed into 64-bit blocks.
class BitWord {
  public:
    BitWord() = default;
    explicit BitWord(int nbits);

    int size() const { return nbits_; }
    int get(int i) const { return (blocks_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, int v) {
        uint64_t m = 1ULL << (i & 63);
        if (v)
            blocks_[i >> 6] |= m;
        else
            blocks_[i >> 6] &= ~m;
    }
    void flip(int i) { blocks_[i >> 6] ^= 1ULL << (i & 63); }

    BitWord& operator^=(const BitWord& o);
    friend BitWord operator^(BitWord a, const BitWord& b) { return a ^= b; }
    bool operator==(const BitWord& o) const = default;

    int hamming_distance(const BitWord& o) const;
    bool is_zero() const;

    // lexicographic on bit 0 first
    bool lex_less(const BitWord& o) const;

    static BitWord random(int nbits, SplitMix64& rng);

  private:
    int nbits_ = 0;
    std::vector<uint64_t> blocks_;
};

struct LinearCode {
    int k = 0;
    int n = 0;
    std::vector<BitWord> rows;  // k generator rows of length n

    void validate() const;
};

// Generator matrix with i.i.d. uniform entries, deterministic in the seed.
LinearCode random_code(int k, int n, uint64_t seed);
LinearCode random_code(int k, int n, SplitMix64& rng);

// Rows k - kb .. k-1 as a code of dimension kb.
LinearCode last_rows(const LinearCode& code, int kb);

// msg * G over GF(2). Throws on length mismatch.
BitWord encode(const LinearCode& code, const BitWord& msg);

// Rank of the stacked rows of the given codes.
int gf2_rank(const std::vector<const LinearCode*>& codes);

// Flip each bit independently with probability eps (<= 1/2).
BitWord bsc(const BitWord& word, double eps, SplitMix64& rng);

inline constexpr int kMlCap = 16;        // ml_decode enumerates 2^k messages
inline constexpr int kJointCapExtra = 4; // joint cap is kMlCap + this

// Exhaustive minimum-distance decoding; ties break to the lexicographically
// smallest message. Throws std::length_error above the candidate cap.
BitWord ml_decode(const LinearCode& code, const BitWord& received,
                  int cap = kMlCap);

// Joint minimum-distance over (msgA, msgB) with codewords
// msgA*A xor msgB*B; lexicographic tie-break on the pair.
std::pair<BitWord, BitWord> joint_ml_decode(const LinearCode& codeA,
                                            const LinearCode& codeB,
                                            const BitWord& received,
                                            int cap = kMlCap + kJointCapExtra);

// msg1 xor [0 msg2] with msg2 zero-padded on the left to msg1's length.
BitWord xor_padded(const BitWord& msg1, const BitWord& msg2);

}  // namespace cmacr

#endif
