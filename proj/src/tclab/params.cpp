#include "tclab/params.hpp"

#include "tclab/arith.hpp"

#include <string>

namespace tclab {

Params Params::create(std::uint64_t p, std::uint64_t c,
                      std::uint64_t d, std::uint64_t k) {
    auto reject = [&](const std::string& why) {
        throw std::invalid_argument(
            "Params(p=" + std::to_string(p) + ", c=" + std::to_string(c) +
            ", d=" + std::to_string(d) + ", k=" + std::to_string(k) + "): " + why);
    };
    if (k < 1) reject("k must be positive");
    if (k > c) reject("requires k <= c");
    if (c > d) reject("requires c <= d");
    if (c + d > p) reject("requires c + d <= p");
    if (!arith::is_prime(p)) reject("p must be prime");
    return Params(p, c, d, k);
}

std::vector<Params> enumerate_params(std::uint64_t p_max) {
    std::vector<Params> out;
    for (std::uint64_t p = 2; p <= p_max; ++p) {
        if (!arith::is_prime(p)) continue;
        for (std::uint64_t c = 1; 2 * c <= p; ++c) {
            for (std::uint64_t d = c; c + d <= p; ++d) {
                for (std::uint64_t k = 1; k <= c; ++k) {
                    out.push_back(Params::create(p, c, d, k));
                }
            }
        }
    }
    return out;
}

} // namespace tclab
