#include "rpm/rational.hpp"

#include "rpm/errors.hpp"

#include <cctype>

namespace rpm {

Int factorial(long n) {
    if (n < 0) {
        throw BadInput("factorial of negative argument");
    }
    Int out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Int double_factorial(long n) {
    if (n < -1) {
        throw BadInput("double factorial below -1");
    }
    if (n <= 0) {
        return 1;
    }
    Int out;
    mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) {
        return 0;
    }
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Rat rat_pow(const Rat& x, long e) {
    if (e < 0) {
        throw BadInput("negative exponent");
    }
    Rat out = 1;
    Rat base = x;
    long rest = e;
    while (rest > 0) {
        if (rest & 1) {
            out *= base;
        }
        base *= base;
        rest >>= 1;
    }
    return out;
}

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rat rat_from_string(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!valid_integer_token(num) || !valid_integer_token(den)) {
            throw BadInput("malformed rational: " + text);
        }
        Rat out{Int(num), Int(den)};
        if (out.get_den() == 0) {
            throw BadInput("zero denominator: " + text);
        }
        out.canonicalize();
        return out;
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string head = text.substr(0, dot);
        const std::string tail = text.substr(dot + 1);
        const std::string sign = (!head.empty() && (head[0] == '-' || head[0] == '+'))
                                     ? head.substr(0, 1)
                                     : "";
        const std::string whole = sign.empty() ? head : head.substr(1);
        if ((!whole.empty() && !valid_integer_token(whole)) || tail.empty() ||
            !valid_integer_token(tail)) {
            throw BadInput("malformed rational: " + text);
        }
        Int den = 1;
        for (std::size_t i = 0; i < tail.size(); ++i) {
            den *= 10;
        }
        Int num = (whole.empty() ? Int(0) : Int(whole)) * den + Int(tail);
        if (sign == "-") {
            num = -num;
        }
        Rat out(num, den);
        out.canonicalize();
        return out;
    }
    if (!valid_integer_token(text)) {
        throw BadInput("malformed rational: " + text);
    }
    return Rat(Int(text));
}

std::string rat_to_string(const Rat& x) {
    Rat canon = x;
    canon.canonicalize();
    if (canon.get_den() == 1) {
        return canon.get_num().get_str();
    }
    return canon.get_num().get_str() + "/" + canon.get_den().get_str();
}

double rat_to_double(const Rat& x) {
    return x.get_d();
}

} // namespace rpm
