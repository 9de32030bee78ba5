#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polarkit/errors.hpp"

namespace polarkit {

// A finite sequence over {0,1}, read left to right. Used both as a transform
// recipe (0 = minus step, 1 = plus step) and as a tree index.
class BitSequence {
public:
    BitSequence() = default;
    explicit BitSequence(std::vector<std::uint8_t> bits);

    // Parses a string of '0'/'1' characters; "" is the empty sequence.
    static BitSequence parse(const std::string& text);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    void push_back(std::uint8_t bit);
    void append_run(std::uint8_t bit, std::size_t count);

    // First `count` bits (count must not exceed size()).
    BitSequence prefix(std::size_t count) const;

    std::string str() const;

    bool operator==(const BitSequence&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace polarkit
