#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ntx {

using Residue = std::uint32_t;

/// Arithmetic in Z/pZ for a prime p < 2^31. Products are widened to 64 bits.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(checked(p)) {}

    [[nodiscard]] Residue modulus() const noexcept { return p_; }

    [[nodiscard]] Residue reduce(std::int64_t v) const noexcept {
        const auto m = static_cast<std::int64_t>(p_);
        auto r = v % m;
        return static_cast<Residue>(r < 0 ? r + m : r);
    }
    [[nodiscard]] Residue add(Residue a, Residue b) const noexcept {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Residue>(s >= p_ ? s - p_ : s);
    }
    [[nodiscard]] Residue sub(Residue a, Residue b) const noexcept {
        return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
    }
    [[nodiscard]] Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    [[nodiscard]] Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>((std::uint64_t{a} * b) % p_);
    }
    [[nodiscard]] Residue pow(Residue a, std::uint64_t e) const noexcept {
        Residue r = 1 % p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    /// Inverse by Fermat. a must be nonzero.
    [[nodiscard]] Residue inv(Residue a) const {
        if (a % p_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
        return pow(a, p_ - 2);
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    static Residue checked(std::uint64_t p) {
        if (p < 2 || p >= (std::uint64_t{1} << 31))
            throw std::invalid_argument("field modulus must be a prime below 2^31, got " + std::to_string(p));
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("field modulus is not prime: " + std::to_string(p));
        return static_cast<Residue>(p);
    }

    Residue p_;
};

}  // namespace ntx
