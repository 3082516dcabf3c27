#include "hexq/quadratic.hpp"

#include <numeric>
#include <sstream>

namespace hexq {

NegativeExponent::NegativeExponent(std::int64_t k, std::int64_t e)
    : std::runtime_error("negative exponent " + std::to_string(e) + " at k = " +
                         std::to_string(k)) {}

namespace {

// (-1)^(num/2) where num is known to be even.
int sign_of_half(std::int64_t num) {
    const std::int64_t half = num / 2;
    return (half % 2 == 0) ? 1 : -1;
}

}  // namespace

SignRule::SignRule(SignKind kind, int s, int scale) : kind_(kind), s_(s), scale_(scale) {
    if (scale != 1 && scale != -1) {
        throw std::invalid_argument("sign rule scale must be +1 or -1");
    }
    if (kind == SignKind::ParB && (s % 2 == 0)) {
        // k(k+s) is odd for some k when s is even.
        throw std::invalid_argument("PAR_B needs odd s");
    }
    if (kind == SignKind::ParC && (s % 2 != 0)) {
        // k((s-1)k-1) is odd at k = 1 when s is odd.
        throw std::invalid_argument("PAR_C needs even s");
    }
}

int SignRule::operator()(std::int64_t k) const {
    int v = 1;
    switch (kind_) {
        case SignKind::Constant:
            break;
        case SignKind::Alternating:
            v = (k % 2 == 0) ? 1 : -1;
            break;
        case SignKind::ParA:
            v = sign_of_half(k * (k - 1));
            break;
        case SignKind::ParB:
            v = sign_of_half(k * (k + s_));
            break;
        case SignKind::ParC: {
            v = sign_of_half(k * ((s_ - 1) * k - 1));
            break;
        }
    }
    return v * scale_;
}

std::string SignRule::describe() const {
    std::ostringstream os;
    if (scale_ < 0) {
        os << "-";
    }
    switch (kind_) {
        case SignKind::Constant: os << "1"; break;
        case SignKind::Alternating: os << "(-1)^k"; break;
        case SignKind::ParA: os << "(-1)^(k(k-1)/2)"; break;
        case SignKind::ParB: os << "(-1)^(k(k+" << s_ << ")/2)"; break;
        case SignKind::ParC: os << "(-1)^(k(" << s_ - 1 << "k-1)/2)"; break;
    }
    return os.str();
}

QuadraticExponentFamily::QuadraticExponentFamily(std::int64_t a, std::int64_t b, std::int64_t c,
                                                 std::int64_t d, SignRule sign)
    : a_(a), b_(b), c_(c), d_(d), sign_(sign) {
    if (d_ == 0) {
        throw std::invalid_argument("zero denominator");
    }
    if (d_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
    }
    const std::int64_t g = std::gcd(std::gcd(std::gcd(a_, b_), c_), d_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
        d_ /= g;
    }
    if (a_ <= 0) {
        throw std::invalid_argument("leading coefficient must be positive");
    }
    // The numerator mod d is periodic in k with period d.
    for (std::int64_t k = 0; k < d_; ++k) {
        if ((a_ * k * k + b_ * k + c_) % d_ != 0) {
            throw std::invalid_argument("exponent " + describe() + " is not an integer at k = " +
                                        std::to_string(k));
        }
    }
}

std::int64_t QuadraticExponentFamily::exponent(std::int64_t k) const {
    return (a_ * k * k + b_ * k + c_) / d_;
}

std::string QuadraticExponentFamily::describe() const {
    std::ostringstream os;
    os << "(" << a_ << "k^2" << (b_ < 0 ? " - " : " + ") << (b_ < 0 ? -b_ : b_) << "k"
       << (c_ < 0 ? " - " : " + ") << (c_ < 0 ? -c_ : c_) << ")";
    if (d_ != 1) {
        os << "/" << d_;
    }
    return os.str();
}

}  // namespace hexq
