#include "spraylab/rational.hpp"

namespace spraylab {

Rational::Rational(long n, long d) {
    if (d == 0) throw InputError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw InputError("malformed rational literal: " + s);
    if (v.get_den() == 0) throw InputError("rational with zero denominator: " + s);
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_str();
}

}  // namespace spraylab
