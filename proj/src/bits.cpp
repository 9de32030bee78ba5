#include "polarkit/bits.hpp"

namespace polarkit {

BitSequence::BitSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::uint8_t b : bits_)
        if (b > 1) throw UsageError("bit sequence entries must be 0 or 1");
}

BitSequence BitSequence::parse(const std::string& text) {
    BitSequence r;
    r.bits_.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw ParseError("invalid bit character '" + std::string(1, c) + "' in \"" + text + "\"");
        r.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return r;
}

void BitSequence::push_back(std::uint8_t bit) {
    if (bit > 1) throw UsageError("bit sequence entries must be 0 or 1");
    bits_.push_back(bit);
}

void BitSequence::append_run(std::uint8_t bit, std::size_t count) {
    if (bit > 1) throw UsageError("bit sequence entries must be 0 or 1");
    bits_.insert(bits_.end(), count, bit);
}

BitSequence BitSequence::prefix(std::size_t count) const {
    if (count > bits_.size()) throw UsageError("prefix length exceeds sequence length");
    BitSequence r;
    r.bits_.assign(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(count));
    return r;
}

std::string BitSequence::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (std::uint8_t b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

}  // namespace polarkit
