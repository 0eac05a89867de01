#include "affsub/rational.hpp"

#include "affsub/errors.hpp"

#include <cctype>
#include <ostream>

namespace affsub {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw InputError("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const std::string original(text);
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        if (text.size() == 1) throw InputError("invalid rational '" + original + "'");
    }
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view unsigned_num = num;
    if (!unsigned_num.empty() && (unsigned_num.front() == '-' || unsigned_num.front() == '+'))
        unsigned_num.remove_prefix(1);
    if (!all_digits(unsigned_num)) throw InputError("invalid rational '" + original + "'");

    std::string num_str(num);
    if (num_str.front() == '+') num_str.erase(0, 1);
    mpz_class n(num_str, 10);
    mpz_class d(1);
    if (slash != std::string_view::npos) {
        std::string_view den = text.substr(slash + 1);
        if (!all_digits(den)) throw InputError("invalid rational '" + original + "'");
        d = mpz_class(std::string(den), 10);
        if (d == 0) throw InputError("invalid rational '" + original + "': zero denominator");
    }
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::uint64_t hash_value(const Rational& r) {
    // Low limbs are enough for bucketing; equality is always decided exactly.
    const mpz_srcptr num = r.raw().get_num_mpz_t();
    const mpz_srcptr den = r.raw().get_den_mpz_t();
    std::uint64_t h = static_cast<std::uint64_t>(mpz_size(num)) * 0x9E3779B97F4A7C15ull;
    if (mpz_size(num) > 0) h ^= mpz_getlimbn(num, 0) + 0x7F4A7C15ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(mpz_sgn(num) + 1) * 0xC2B2AE3D27D4EB4Full;
    h ^= mpz_getlimbn(den, 0) * 0x165667B19E3779F9ull + (h << 6) + (h >> 2);
    return h;
}

} // namespace affsub
