#include "colreconf/packed_colouring.hpp"

#include <limits>

#include "colreconf/error.hpp"

namespace colreconf {

ColouringCodec::ColouringCodec(std::size_t n, std::size_t k) : n_(n), k_(k) {
    if (k == 0) throw InputError("palette size must be positive");
    if (k == 1) {
        digits_per_word_ = n == 0 ? 1 : n;
    } else {
        digits_per_word_ = 0;
        std::uint64_t span = 1;
        while (span <= std::numeric_limits<std::uint64_t>::max() / k_) {
            span *= k_;
            ++digits_per_word_;
        }
    }
    words_ = n == 0 ? 1 : (n + digits_per_word_ - 1) / digits_per_word_;
    place_.resize(digits_per_word_);
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < digits_per_word_; ++i) {
        place_[i] = p;
        if (i + 1 < digits_per_word_) p *= k_;
    }
}

ColouringCodec::Key ColouringCodec::encode(std::span<const Colour> assignment) const {
    Key key(words_, 0);
    for (std::size_t i = 0; i < assignment.size(); ++i)
        key[i / digits_per_word_] += (assignment[i] - 1ULL) * place_[i % digits_per_word_];
    return key;
}

std::vector<Colour> ColouringCodec::decode(const Key& key) const {
    std::vector<Colour> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        const std::uint64_t digit = (key[i / digits_per_word_] / place_[i % digits_per_word_]) % k_;
        out[i] = static_cast<Colour>(digit + 1);
    }
    return out;
}

ColouringCodec::Key ColouringCodec::erase(Key key, Vertex v, Colour c) const {
    key[v / digits_per_word_] -= (c - 1ULL) * place_[v % digits_per_word_];
    return key;
}

}  // namespace colreconf
