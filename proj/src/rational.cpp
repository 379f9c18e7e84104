#include "maghom/rational.hpp"

namespace maghom {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

std::optional<bigint> parse_integer(std::string s) {
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    if (!all_digits(s))
        return std::nullopt;
    bigint value(s, 10);
    return negative ? bigint(-value) : value;
}

}  // namespace

std::optional<rational> parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        auto p = parse_integer(text);
        if (!p)
            return std::nullopt;
        return rational(*p);
    }
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    if (!num || !den || *den <= 0)  // sign belongs on the numerator
        return std::nullopt;
    rational q(*num, *den);
    q.canonicalize();
    return q;
}

std::string format_rational(const rational& q) {
    return q.get_str();
}

}  // namespace maghom
