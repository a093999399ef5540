#include "commeq/rational.hpp"

#include <cctype>

#include "commeq/error.hpp"

namespace commeq {

Rational rat(long num, long den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    Rational value(num, den);
    value.canonicalize();
    return value;
}

Rational rat_from_string(const std::string& text) {
    std::size_t pos = 0;
    auto scan_digits = [&text](std::size_t& k) {
        const std::size_t start = k;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        return k > start;
    };
    if (pos < text.size() && text[pos] == '-') ++pos;
    bool ok = scan_digits(pos);
    if (ok && pos < text.size()) {
        ok = text[pos] == '/';
        if (ok) {
            ++pos;
            ok = scan_digits(pos);
        }
    }
    if (!ok || pos != text.size()) throw ValidationError("malformed rational '" + text + "'");

    Rational value;
    if (value.set_str(text, 10) != 0) throw ValidationError("malformed rational '" + text + "'");
    if (value.get_den() == 0) throw ValidationError("zero denominator in '" + text + "'");
    value.canonicalize();
    return value;
}

std::string rat_to_string(const Rational& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

} // namespace commeq
