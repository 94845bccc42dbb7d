#include "rational.hpp"

#include <sstream>

namespace gaudin {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw InputError("malformed rational literal: '" + text + "'");
    }
    try {
        Rational q(text);
        if (boost::multiprecision::denominator(q) == 0)
            throw InputError("zero denominator in rational literal: '" + text + "'");
        return q;
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("malformed rational literal: '" + text + "'");
    }
}

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string big_float_to_string(const BigFloat& x, unsigned digits) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

} // namespace gaudin
