#include "ulrich/lattice.hpp"

#include <charconv>
#include <cctype>

namespace ulrich {

std::string to_string(const DivisorClass& x) {
    std::string s = std::to_string(x.a);
    s += ';';
    for (int i = 0; i < 6; ++i) {
        if (i) s += ',';
        s += std::to_string(x.b[i]);
    }
    return s;
}

namespace {

int64_t parse_int(std::string_view text, size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{})
        throw std::invalid_argument("bad divisor class (expected a;b1,...,b6): " + std::string(text));
    pos = static_cast<size_t>(ptr - text.data());
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return value;
}

void expect(std::string_view text, size_t& pos, char c) {
    if (pos >= text.size() || text[pos] != c)
        throw std::invalid_argument("bad divisor class (expected a;b1,...,b6): " + std::string(text));
    ++pos;
}

}  // namespace

DivisorClass parse_divisor_class(std::string_view text) {
    DivisorClass d;
    size_t pos = 0;
    d.a = parse_int(text, pos);
    expect(text, pos, ';');
    for (int i = 0; i < 6; ++i) {
        if (i) expect(text, pos, ',');
        d.b[i] = parse_int(text, pos);
    }
    if (pos != text.size())
        throw std::invalid_argument("bad divisor class (trailing input): " + std::string(text));
    return d;
}

}  // namespace ulrich
