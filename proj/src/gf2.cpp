#include "cmacr/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace cmacr {

BitWord::BitWord(int nbits)
    : nbits_(nbits), blocks_((static_cast<size_t>(nbits) + 63) / 64, 0) {
    if (nbits < 0) throw std::invalid_argument("BitWord: negative length");
}

BitWord& BitWord::operator^=(const BitWord& o) {
    if (nbits_ != o.nbits_) throw std::length_error("BitWord xor: length mismatch");
    for (size_t i = 0; i < blocks_.size(); ++i) blocks_[i] ^= o.blocks_[i];
    return *this;
}

int BitWord::hamming_distance(const BitWord& o) const {
    if (nbits_ != o.nbits_)
        throw std::length_error("hamming_distance: length mismatch");
    int d = 0;
    for (size_t i = 0; i < blocks_.size(); ++i)
        d += std::popcount(blocks_[i] ^ o.blocks_[i]);
    return d;
}

bool BitWord::is_zero() const {
    for (uint64_t b : blocks_)
        if (b) return false;
    return true;
}

bool BitWord::lex_less(const BitWord& o) const {
    for (int i = 0; i < nbits_ && i < o.nbits_; ++i) {
        int a = get(i), b = o.get(i);
        if (a != b) return a < b;
    }
    return nbits_ < o.nbits_;
}

BitWord BitWord::random(int nbits, SplitMix64& rng) {
    BitWord w(nbits);
    for (int i = 0; i < nbits; ++i)
        if (rng.next_bit()) w.set(i, 1);
    return w;
}

void LinearCode::validate() const {
    if (k < 1 || n < 1 || k > n)
        throw std::invalid_argument("LinearCode: need 1 <= k <= n");
    if (static_cast<int>(rows.size()) != k)
        throw std::invalid_argument("LinearCode: row count != k");
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("LinearCode: row length != n");
}

LinearCode random_code(int k, int n, SplitMix64& rng) {
    if (k < 1 || n < 1 || k > n)
        throw std::invalid_argument("random_code: need 1 <= k <= n");
    LinearCode c;
    c.k = k;
    c.n = n;
    c.rows.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) c.rows.push_back(BitWord::random(n, rng));
    return c;
}

LinearCode random_code(int k, int n, uint64_t seed) {
    SplitMix64 rng(seed);
    return random_code(k, n, rng);
}

LinearCode last_rows(const LinearCode& code, int kb) {
    if (kb < 0 || kb > code.k)
        throw std::invalid_argument("last_rows: 0 <= kb <= k");
    LinearCode c;
    c.k = kb;
    c.n = code.n;
    c.rows.assign(code.rows.end() - kb, code.rows.end());
    return c;
}

BitWord encode(const LinearCode& code, const BitWord& msg) {
    if (msg.size() != code.k) throw std::length_error("encode: message length != k");
    BitWord w(code.n);
    for (int i = 0; i < code.k; ++i)
        if (msg.get(i)) w ^= code.rows[i];
    return w;
}

int gf2_rank(const std::vector<const LinearCode*>& codes) {
    std::vector<BitWord> rows;
    int n = 0;
    for (const auto* c : codes) {
        n = c->n;
        for (const auto& r : c->rows) rows.push_back(r);
    }
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i].get(col)) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != rank && rows[i].get(col)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

BitWord bsc(const BitWord& word, double eps, SplitMix64& rng) {
    if (!(eps >= 0.0 && eps <= 0.5)) throw std::domain_error("bsc: eps in [0, 0.5]");
    BitWord out = word;
    for (int i = 0; i < word.size(); ++i)
        if (rng.next_unit() < eps) out.flip(i);
    return out;
}

namespace {

// Enumerates messages 0..2^k-1 in Gray order so each step toggles a single
// generator row; `m` tracks the plain message index whose bit (k-1-i) is
// message bit i, making integer order equal lexicographic order on bits.
template <typename Visit>
void enumerate_codewords(const LinearCode& code, Visit&& visit) {
    const int k = code.k;
    BitWord word(code.n);
    uint32_t gray = 0;
    visit(uint32_t{0}, word);
    const uint32_t total = 1u << k;
    for (uint32_t i = 1; i < total; ++i) {
        uint32_t g = i ^ (i >> 1);
        uint32_t changed = g ^ gray;
        int bit = std::countr_zero(changed);
        // integer bit `bit` corresponds to message bit (k-1-bit) => row index
        word ^= code.rows[static_cast<size_t>(k - 1 - bit)];
        gray = g;
        visit(g, word);
    }
}

BitWord msg_from_index(uint32_t m, int k) {
    BitWord w(k);
    for (int i = 0; i < k; ++i)
        if ((m >> (k - 1 - i)) & 1) w.set(i, 1);
    return w;
}

}  // namespace

BitWord ml_decode(const LinearCode& code, const BitWord& received, int cap) {
    if (code.k > cap) throw std::length_error("ml_decode: k exceeds the brute-force cap");
    if (received.size() != code.n)
        throw std::length_error("ml_decode: received length != n");
    int best_d = code.n + 1;
    uint32_t best_m = 0;
    enumerate_codewords(code, [&](uint32_t m, const BitWord& w) {
        int d = w.hamming_distance(received);
        if (d < best_d || (d == best_d && m < best_m)) {
            best_d = d;
            best_m = m;
        }
    });
    return msg_from_index(best_m, code.k);
}

std::pair<BitWord, BitWord> joint_ml_decode(const LinearCode& codeA,
                                            const LinearCode& codeB,
                                            const BitWord& received, int cap) {
    if (codeA.k + codeB.k > cap)
        throw std::length_error("joint_ml_decode: kA + kB exceeds the cap");
    if (codeB.k == 0) return {ml_decode(codeA, received, cap), BitWord(0)};
    int best_d = codeA.n + 1;
    uint32_t best_a = 0, best_b = 0;
    enumerate_codewords(codeA, [&](uint32_t ma, const BitWord& wa) {
        BitWord target = received;
        target ^= wa;
        enumerate_codewords(codeB, [&](uint32_t mb, const BitWord& wb) {
            int d = wb.hamming_distance(target);
            if (d < best_d || (d == best_d && (ma < best_a ||
                                               (ma == best_a && mb < best_b)))) {
                best_d = d;
                best_a = ma;
                best_b = mb;
            }
        });
    });
    return {msg_from_index(best_a, codeA.k), msg_from_index(best_b, codeB.k)};
}

BitWord xor_padded(const BitWord& msg1, const BitWord& msg2) {
    if (msg2.size() > msg1.size())
        throw std::length_error("xor_padded: msg2 longer than msg1");
    BitWord out = msg1;
    const int off = msg1.size() - msg2.size();
    for (int i = 0; i < msg2.size(); ++i)
        if (msg2.get(i)) out.flip(off + i);
    return out;
}

}  // namespace cmacr
