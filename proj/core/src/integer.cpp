#include "frobenius/integer.hpp"

#include <cctype>

namespace frobenius {

Int floor_div(const Int& num, const Int& den)
{
    Int q = num / den;
    const Int r = num % den;
    if (r != 0 && ((r < 0) != (den < 0)))
        --q;
    return q;
}

Int ceil_div(const Int& num, const Int& den)
{
    return -floor_div(-num, den);
}

Int round_half_up_div(const Int& num, const Int& den)
{
    return floor_div(2 * num + den, 2 * den);
}

std::optional<Int> parse_int(std::string_view text)
{
    if (text.empty())
        return std::nullopt;
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = (text[0] == '-');
        i = 1;
    }
    if (i == text.size())
        return std::nullopt;
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            return std::nullopt;
    // Strip leading zeros before handing the digits to the bignum
    // constructor, which would otherwise read them as an octal prefix.
    while (i + 1 < text.size() && text[i] == '0')
        ++i;
    Int value(std::string(text.substr(i)));
    if (negative)
        value = -value;
    return value;
}

unsigned bit_length(const Int& v)
{
    if (v == 0)
        return 0;
    return boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
}

} // namespace frobenius
