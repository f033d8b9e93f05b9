#include "oplx/bitvec.hpp"

#include "oplx/errors.hpp"

#include <bit>

namespace oplx {

BitVector BitVector::from_bits(const std::vector<int>& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] & 1) v.flip(i);
    return v;
}

void BitVector::xor_assign(const BitVector& other) {
    if (len != other.len) throw LengthMismatch("BitVector xor: length mismatch");
    for (std::size_t i = 0; i < words.size(); ++i) words[i] ^= other.words[i];
}

bool BitVector::dot(const BitVector& other) const {
    if (len != other.len) throw LengthMismatch("BitVector dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words.size(); ++i) acc ^= words[i] & other.words[i];
    return std::popcount(acc) & 1;
}

bool BitVector::is_zero() const {
    for (auto w : words)
        if (w) return false;
    return true;
}

std::size_t BitVector::popcount() const {
    std::size_t c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
}

std::size_t BitVector::first_set() const {
    for (std::size_t i = 0; i < words.size(); ++i)
        if (words[i]) return (i << 6) + std::countr_zero(words[i]);
    return len;
}

std::vector<std::size_t> BitVector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        std::uint64_t w = words[i];
        while (w) {
            out.push_back((i << 6) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

} // namespace oplx
