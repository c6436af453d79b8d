#ifndef ZETAPOLY_PRECISION_HPP
#define ZETAPOLY_PRECISION_HPP

#include <compare>
#include <string>

#include "errors.hpp"

namespace zetapoly {

/// Binary significand precision shared by every value of one computation.
class Precision {
public:
    static constexpr unsigned min_bits = 64;

    explicit Precision(unsigned bits) : bits_(bits) {
        if (bits < min_bits)
            throw DomainError("precision must be at least " + std::to_string(min_bits) + " bits, got "
                              + std::to_string(bits));
    }

    unsigned bits() const noexcept { return bits_; }

    /// Same precision widened by `extra` guard bits.
    Precision widened(unsigned extra) const { return Precision(bits_ + extra); }

    friend auto operator<=>(const Precision&, const Precision&) = default;

private:
    unsigned bits_;
};

inline const Precision default_precision{128};

} // namespace zetapoly

#endif
