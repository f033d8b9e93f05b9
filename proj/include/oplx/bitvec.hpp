#ifndef OPLX_BITVEC_HPP
#define OPLX_BITVEC_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace oplx {

// Dense bit vector over GF(2). Length is fixed at construction.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length)
        : len(length), words((length + 63) / 64, 0) {}

    static BitVector from_bits(const std::vector<int>& bits);

    std::size_t size() const { return len; }

    bool get(std::size_t i) const {
        return (words[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v) {
        if (v)
            words[i >> 6] |= std::uint64_t(1) << (i & 63);
        else
            words[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    void flip(std::size_t i) { words[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void xor_assign(const BitVector& other);

    // parity of the AND overlap, i.e. the GF(2) inner product
    bool dot(const BitVector& other) const;

    bool is_zero() const;
    std::size_t popcount() const;

    // index of the first set bit, or size() if none
    std::size_t first_set() const;

    // indices of all set bits, ascending
    std::vector<std::size_t> ones() const;

    bool operator==(const BitVector& other) const {
        return len == other.len && words == other.words;
    }
    bool operator!=(const BitVector& other) const { return !(*this == other); }

    const std::vector<std::uint64_t>& raw() const { return words; }

private:
    std::size_t len = 0;
    std::vector<std::uint64_t> words;
};

} // namespace oplx

#endif
