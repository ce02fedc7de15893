#include "funho/chaincore/complex.hpp"

#include <cctype>

namespace funho {

std::string theory_name(Theory t) {
    switch (t) {
        case Theory::HH: return "HH";
        case Theory::HC: return "HC";
        case Theory::HGamma: return "HGamma";
        case Theory::HGammaC: return "HGammaC";
    }
    return "?";
}

Theory parse_theory(std::string_view s) {
    std::string t(s);
    for (auto& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "hh") return Theory::HH;
    if (t == "hc") return Theory::HC;
    if (t == "hgamma") return Theory::HGamma;
    if (t == "hgammac") return Theory::HGammaC;
    throw Error("unknown theory '" + std::string(s) + "' (expected hh, hc, hgamma, hgammac)");
}

namespace {

std::uint64_t power_capped(std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (base > 1 && r > (std::numeric_limits<std::uint64_t>::max() >> 1) / base)
            return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

}  // namespace

DegreeRequirements degree_requirements(Theory t, int n, int algebra_dim, std::uint64_t cap) {
    if (n < 0) throw Error("degree must be non-negative");
    if (algebra_dim < 1) throw Error("algebra dimension must be positive");
    const auto d = static_cast<std::uint64_t>(algebra_dim);
    DegreeRequirements r;
    r.chain_top = n + 1;
    switch (t) {
        case Theory::HH:
            r.largest = power_capped(d, static_cast<std::uint64_t>(n) + 2);
            break;
        case Theory::HC:
            r.columns = (n + 1) / 2 + 1;
            r.largest = power_capped(d, static_cast<std::uint64_t>(n) + 2);
            break;
        case Theory::HGamma:
        case Theory::HGammaC:
            r.largest = n + 1 >= 62 ? std::numeric_limits<std::uint64_t>::max()
                                    : power_capped(d, (std::uint64_t{1} << (n + 1)) + 1);
            break;
    }
    if (r.largest > cap)
        throw ResourceError(theory_name(t) + " in degree " + std::to_string(n) + " needs a chain space of dimension " +
                            (r.largest == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^63")
                                                                                     : std::to_string(r.largest)) +
                            ", above the cap " + std::to_string(cap));
    return r;
}

int max_feasible_degree(Theory t, int algebra_dim, std::uint64_t cap, int limit) {
    int best = -1;
    for (int n = 0; n <= limit; ++n) {
        try {
            degree_requirements(t, n, algebra_dim, cap);
            best = n;
        } catch (const ResourceError&) {
            break;
        }
    }
    return best;
}

}  // namespace funho
