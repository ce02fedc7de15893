#include "funho/exactlin/field.hpp"

#include <cctype>
#include <charconv>

namespace funho {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

mpz_class parse_integer(const std::string& s) {
    if (s.empty()) throw Error("empty scalar");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw Error("malformed scalar '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw Error("malformed scalar '" + s + "'");
    return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

std::pair<mpz_class, mpz_class> split_fraction(std::string_view text) {
    std::string s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string::npos) return {parse_integer(s), mpz_class(1)};
    mpz_class num = parse_integer(trim(std::string_view(s).substr(0, slash)));
    mpz_class den = parse_integer(trim(std::string_view(s).substr(slash + 1)));
    if (den == 0) throw Error("zero denominator in '" + s + "'");
    return {num, den};
}

}  // namespace

Rationals::value_type Rationals::parse(std::string_view text) {
    auto [num, den] = split_fraction(text);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

std::string Rationals::to_string(const value_type& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

PrimeField::value_type PrimeField::inv(value_type a) const {
    if (a == 0) throw Error("division by zero in " + name());
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<value_type>(result);
}

PrimeField::value_type PrimeField::parse(std::string_view text) const {
    if (auto at = text.find("mod"); at != std::string_view::npos) {
        // exact form "a mod p" as written by to_exact_string
        std::uint32_t q = static_cast<std::uint32_t>(parse_integer(trim(text.substr(at + 3))).get_ui());
        if (q != p_) throw Error("'" + std::string(text) + "' belongs to another prime field than " + name());
        text = text.substr(0, at);
    }
    auto [num, den] = split_fraction(text);
    mpz_class p(p_);
    mpz_class n = num % p, d = den % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw Error("denominator of '" + std::string(text) + "' vanishes in " + name());
    return div(static_cast<value_type>(n.get_ui()), static_cast<value_type>(d.get_ui()));
}

ScalarField ScalarField::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not a prime below 2^31");
    ScalarField f;
    f.kind = Kind::prime;
    f.p = p;
    return f;
}

ScalarField ScalarField::parse(std::string_view text) {
    std::string s = trim(text);
    std::string lower;
    for (char c : s) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "q" || lower == "rationals" || lower == "qq") return rationals();
    std::string_view digits;
    std::string_view view(lower);
    if (view.rfind("fp:", 0) == 0)
        digits = view.substr(3);
    else if (view.rfind("f_", 0) == 0)
        digits = view.substr(2);
    else if (view.rfind("f", 0) == 0)
        digits = view.substr(1);
    else
        throw Error("unknown field '" + s + "' (expected q, f<p>, F_<p> or fp:<p>)");
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
        throw Error("unknown field '" + s + "'");
    return prime(p);
}

std::string ScalarField::name() const { return kind == Kind::rationals ? "Q" : "F_" + std::to_string(p); }

std::string ScalarField::token() const { return kind == Kind::rationals ? "q" : "f" + std::to_string(p); }

}  // namespace funho
