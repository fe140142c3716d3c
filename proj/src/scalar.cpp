#include "sheafloc/scalar.hpp"

#include <cctype>

#include "sheafloc/errors.hpp"

namespace sheafloc {

Scalar make_scalar(long num, long den)
{
    return make_scalar(mpz_class(num), mpz_class(den));
}

Scalar make_scalar(const mpz_class& num, const mpz_class& den)
{
    if (den == 0) throw UsageError("zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole)
{
    if (text.empty()) throw UsageError("malformed number '" + std::string(whole) + "'");
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-') i = 1;
    if (i == text.size()) throw UsageError("malformed number '" + std::string(whole) + "'");
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw UsageError("malformed number '" + std::string(whole) + "'");
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return mpz_class(digits, 10);
}

}  // namespace

Scalar parse_scalar(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Scalar(parse_integer(text, text));
    mpz_class num = parse_integer(text.substr(0, slash), text);
    mpz_class den = parse_integer(text.substr(slash + 1), text);
    return make_scalar(num, den);
}

std::string to_string(const Scalar& x)
{
    return x.get_str(10);
}

}  // namespace sheafloc
