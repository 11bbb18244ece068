#include "rational.hpp"

#include <cctype>

namespace czlab {

Rational parse_rational(const std::string& text) {
    // Accepts "p/q" or "p" with optional leading sign; whitespace is rejected
    // so serialized files stay canonical.
    if (text.empty()) fail(Errc::parse_error, "empty rational literal");
    auto is_int = [](const std::string& s) {
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_int(num) || !is_int(den))
        fail(Errc::parse_error, "malformed rational literal '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);  // mpz_set_str rejects a leading '+'
    if (den[0] == '+') den.erase(0, 1);
    BigInt n(num), d(den);
    if (d == 0) fail(Errc::parse_error, "zero denominator in '" + text + "'");
    Rational out(n, d);
    out.canonicalize();
    return out;
}

}  // namespace czlab
