#include "oracle_lens/bitvec.hpp"

#include <stdexcept>

namespace oracle_lens {

namespace {

std::vector<std::uint8_t> parse_bits(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("bit string text must be non-empty");
    }
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string text may contain only '0' and '1', got '" +
                                        text + "'");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return bits;
}

std::vector<std::uint8_t> bits_from_index(std::uint64_t index, std::size_t m) {
    if (m == 0 || m > 63) {
        throw std::invalid_argument("bit string length must be in [1, 63]");
    }
    if (index >= (std::uint64_t{1} << m)) {
        throw std::invalid_argument("index " + std::to_string(index) +
                                    " out of range for length " + std::to_string(m));
    }
    std::vector<std::uint8_t> bits(m);
    for (std::size_t j = 0; j < m; ++j) {
        bits[j] = static_cast<std::uint8_t>((index >> j) & 1u);
    }
    return bits;
}

std::uint64_t bits_to_index(const std::vector<std::uint8_t>& bits) {
    std::uint64_t index = 0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
        index |= std::uint64_t{bits[j]} << j;
    }
    return index;
}

std::string bits_to_text(const std::vector<std::uint8_t>& bits) {
    std::string text(bits.size(), '0');
    for (std::size_t j = 0; j < bits.size(); ++j) {
        text[j] = static_cast<char>('0' + bits[j]);
    }
    return text;
}

void check_bit_value(int value) {
    if (value != 0 && value != 1) {
        throw std::invalid_argument("bit value must be 0 or 1");
    }
}

}  // namespace

BitString::BitString(std::size_t m) : bits_(m, 0) {
    if (m == 0) throw std::invalid_argument("BitString length must be >= 1");
}

BitString::BitString(std::initializer_list<int> bits) {
    if (bits.size() == 0) throw std::invalid_argument("BitString length must be >= 1");
    bits_.reserve(bits.size());
    for (int b : bits) {
        check_bit_value(b);
        bits_.push_back(static_cast<std::uint8_t>(b));
    }
}

BitString BitString::from_text(const std::string& text) {
    BitString b(1);
    b.bits_ = parse_bits(text);
    return b;
}

BitString BitString::from_index(std::uint64_t index, std::size_t m) {
    BitString b(1);
    b.bits_ = bits_from_index(index, m);
    return b;
}

void BitString::set_bit(std::size_t j, int value) {
    check_bit_value(value);
    bits_.at(j) = static_cast<std::uint8_t>(value);
}

std::uint64_t BitString::index() const { return bits_to_index(bits_); }

std::string BitString::text() const { return bits_to_text(bits_); }

BitString BitString::operator^(const BitString& other) const {
    if (size() != other.size()) {
        throw std::invalid_argument("xor of bit strings with different lengths");
    }
    BitString out(size());
    for (std::size_t j = 0; j < size(); ++j) {
        out.bits_[j] = bits_[j] ^ other.bits_[j];
    }
    return out;
}

HiddenString::HiddenString(std::size_t n) : bits_(n, 0) {
    if (n == 0) throw std::invalid_argument("HiddenString length must be >= 1");
}

HiddenString::HiddenString(std::initializer_list<int> bits) {
    if (bits.size() == 0) throw std::invalid_argument("HiddenString length must be >= 1");
    bits_.reserve(bits.size());
    for (int b : bits) {
        check_bit_value(b);
        bits_.push_back(static_cast<std::uint8_t>(b));
    }
}

HiddenString HiddenString::from_text(const std::string& text) {
    HiddenString k(1);
    k.bits_ = parse_bits(text);
    return k;
}

HiddenString HiddenString::from_index(std::uint64_t index, std::size_t n) {
    HiddenString k(1);
    k.bits_ = bits_from_index(index, n);
    return k;
}

void HiddenString::set_bit(std::size_t j, int value) {
    check_bit_value(value);
    bits_.at(j) = static_cast<std::uint8_t>(value);
}

std::uint64_t HiddenString::index() const { return bits_to_index(bits_); }

std::string HiddenString::text() const { return bits_to_text(bits_); }

int dot_mod2(const HiddenString& k, const BitString& x) {
    if (x.size() != k.size() + 1) {
        throw std::invalid_argument("dot_mod2 needs |x| = |k| + 1, got |x|=" +
                                    std::to_string(x.size()) + " |k|=" + std::to_string(k.size()));
    }
    int acc = 0;
    for (std::size_t j = 0; j < k.size(); ++j) {
        acc ^= k.bit(j) & x.bit(j + 1);
    }
    return acc;
}

std::uint64_t encode_index(const BitString& b) { return b.index(); }

BitString decode_index(std::uint64_t index, std::size_t m) {
    return BitString::from_index(index, m);
}

}  // namespace oracle_lens
