#include "erd/cli_parse.hpp"

#include <cstddef>
#include <stdexcept>

#include "erd/errors.hpp"

namespace erd {

namespace {

double parse_double(const std::string& text) {
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw DomainError("malformed number '" + text + "'", text);
    }
    if (used != text.size())
        throw DomainError("trailing characters in number '" + text + "'", text);
    return v;
}

} // namespace

Complex parse_complex(const std::string& text) {
    if (text.empty()) throw DomainError("empty complex literal");
    if (text.back() != 'i' && text.back() != 'I')
        return {parse_double(text), 0.0};

    const std::string body = text.substr(0, text.size() - 1);
    // Split at the last +/- that is not the leading sign and not an exponent
    // sign; everything after it is the imaginary part.
    std::size_t split = std::string::npos;
    for (std::size_t p = body.size(); p-- > 1;) {
        const char c = body[p];
        if ((c == '+' || c == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    if (split == std::string::npos) {
        // Pure imaginary: "1.3i", "-i", "i"
        if (body.empty() || body == "+") return {0.0, 1.0};
        if (body == "-") return {0.0, -1.0};
        return {0.0, parse_double(body)};
    }
    const std::string re = body.substr(0, split);
    std::string im = body.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return {parse_double(re), parse_double(im)};
}

std::vector<double> parse_grid(const std::string& text) {
    if (text.empty()) throw DomainError("empty grid spec");
    if (text.find(',') != std::string::npos) {
        std::vector<double> vals;
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t comma = text.find(',', start);
            const std::string piece =
                text.substr(start, comma == std::string::npos ? std::string::npos
                                                              : comma - start);
            vals.push_back(parse_double(piece));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return vals;
    }
    // "lo:hi:count" -- mind negative numbers, so split on ':' only.
    const std::size_t c1 = text.find(':');
    if (c1 == std::string::npos) return {parse_double(text)};
    const std::size_t c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos)
        throw DomainError("grid spec needs lo:hi:count", text);
    const double lo = parse_double(text.substr(0, c1));
    const double hi = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
    const double nd = parse_double(text.substr(c2 + 1));
    const long n = static_cast<long>(nd);
    if (n < 1 || nd != static_cast<double>(n))
        throw DomainError("grid count must be a positive integer", text);
    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(n));
    if (n == 1) {
        vals.push_back(lo);
        return vals;
    }
    for (long i = 0; i < n; ++i)
        vals.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    return vals;
}

} // namespace erd
