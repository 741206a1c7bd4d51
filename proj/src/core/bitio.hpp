#pragma once

#include <cstdint>
#include <vector>

#include "core/error.hpp"

namespace bccst {

// MSB-first bit packing; fields up to 64 bits.
class BitWriter {
  public:
    void put(uint64_t value, unsigned bits) {
        if (bits > 64) fail(Errc::invalid_arg, "field too wide");
        if (bits < 64 && value >> bits)
            fail(Errc::internal, "value does not fit its declared field width");
        for (unsigned i = bits; i-- > 0;) {
            if (bit_len_ % 8 == 0) bytes_.push_back(0);
            if ((value >> i) & 1) bytes_.back() |= static_cast<uint8_t>(1u << (7 - bit_len_ % 8));
            ++bit_len_;
        }
    }
    const std::vector<uint8_t>& bytes() const { return bytes_; }
    uint32_t bit_length() const { return bit_len_; }

  private:
    std::vector<uint8_t> bytes_;
    uint32_t bit_len_ = 0;
};

class BitReader {
  public:
    BitReader(const std::vector<uint8_t>& bytes, uint32_t bit_len)
        : bytes_(bytes), bit_len_(bit_len) {}

    uint64_t get(unsigned bits) {
        if (pos_ + bits > bit_len_) fail(Errc::parse, "message truncated");
        uint64_t v = 0;
        for (unsigned i = 0; i < bits; ++i, ++pos_)
            v = (v << 1) | ((bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1u);
        return v;
    }
    bool exhausted() const { return pos_ >= bit_len_; }

  private:
    const std::vector<uint8_t>& bytes_;
    uint32_t bit_len_;
    uint32_t pos_ = 0;
};

}  // namespace bccst
