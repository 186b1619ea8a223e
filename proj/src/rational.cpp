#include "swl/rational.hpp"

#include <stdexcept>

namespace swl {

namespace {
int g_bit_limit = 4096;
}

int Rational::bit_limit() { return g_bit_limit; }

void Rational::set_bit_limit(int bits) {
    if (bits < 64) throw std::invalid_argument("bit limit too small");
    g_bit_limit = bits;
}

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::guarded(mpq_class v) {
    v.canonicalize();
    const size_t bits = std::max(mpz_sizeinbase(v.get_num().get_mpz_t(), 2),
                                 mpz_sizeinbase(v.get_den().get_mpz_t(), 2));
    if (bits > static_cast<size_t>(g_bit_limit))
        throw std::overflow_error("rational exceeded the configured bit-length limit");
    return Rational(std::move(v));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return guarded(value_ / o.value_);
}

std::string Rational::str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

void encode_magnitude(const mpz_class& z, std::vector<uint8_t>& out) {
    size_t count = 0;
    std::vector<uint8_t> limbs((mpz_sizeinbase(z.get_mpz_t(), 2) + 7) / 8);
    if (!limbs.empty())
        mpz_export(limbs.data(), &count, -1, 1, 0, 0, z.get_mpz_t());
    limbs.resize(count);
    out.push_back(static_cast<uint8_t>(limbs.size() & 0xff));
    out.push_back(static_cast<uint8_t>((limbs.size() >> 8) & 0xff));
    out.insert(out.end(), limbs.begin(), limbs.end());
}

}  // namespace

void Rational::encode(std::vector<uint8_t>& out) const {
    out.push_back(sgn(value_) < 0 ? 1 : 0);
    encode_magnitude(abs(value_.get_num()), out);
    encode_magnitude(value_.get_den(), out);
}

}  // namespace swl
