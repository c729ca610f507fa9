#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace oracle_lens {

// Bit position 0 is the distinguished bit x0 and is the least-significant
// bit of the integer encoding. Textual form is written x0 x1 ... xn left to
// right, so "101" means x0=1, x1=0, x2=1 (index 5).
class BitString {
  public:
    explicit BitString(std::size_t m);
    BitString(std::initializer_list<int> bits);

    static BitString from_text(const std::string& text);
    static BitString from_index(std::uint64_t index, std::size_t m);

    std::size_t size() const { return bits_.size(); }
    int bit(std::size_t j) const { return bits_[j]; }
    void set_bit(std::size_t j, int value);

    std::uint64_t index() const;
    std::string text() const;

    BitString operator^(const BitString& other) const;
    bool operator==(const BitString&) const = default;

  private:
    std::vector<std::uint8_t> bits_;
};

// Hidden string k_1 ... k_n, stored 0-based: bit(j) is the paper's k_{j+1}.
// Textual form is k_1 first, matching the paper's reading order.
class HiddenString {
  public:
    explicit HiddenString(std::size_t n);
    HiddenString(std::initializer_list<int> bits);

    static HiddenString from_text(const std::string& text);
    static HiddenString from_index(std::uint64_t index, std::size_t n);

    std::size_t size() const { return bits_.size(); }
    int bit(std::size_t j) const { return bits_[j]; }
    void set_bit(std::size_t j, int value);

    std::uint64_t index() const;
    std::string text() const;

    bool operator==(const HiddenString&) const = default;

  private:
    std::vector<std::uint8_t> bits_;
};

// k_1 x_1 xor ... xor k_n x_n; x0 is ignored. Requires |x| = |k| + 1.
int dot_mod2(const HiddenString& k, const BitString& x);

std::uint64_t encode_index(const BitString& b);
BitString decode_index(std::uint64_t index, std::size_t m);

}  // namespace oracle_lens
