#include "rbsys/rational.hpp"

#include <cctype>
#include <ostream>

#include "rbsys/errors.hpp"

namespace rbsys {

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

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return InputError("malformed rational '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    std::string num, den = "1";
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        num = std::string(text);
    } else {
        num = std::string(text.substr(0, slash));
        den = std::string(text.substr(slash + 1));
    }
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!is_int(num) || !is_int(den)) throw bad();
    if (num[0] == '+') num.erase(0, 1); // mpz rejects an explicit plus
    if (den[0] == '+') den.erase(0, 1);
    mpq_class v{mpz_class(num), mpz_class(den)};
    if (v.get_den() == 0) throw InputError("malformed rational '" + std::string(text) + "': zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::pretty() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace rbsys
