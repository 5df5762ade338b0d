#pragma once

#include <vector>

namespace erd {

// Gauss-Legendre rule on [-1, 1]; nodes/weights computed once per order via
// Newton iteration on the Legendre recurrence and cached.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(int order);

// Integrate f over [a, b] with the given rule.  F: double -> T.
template <typename T, typename F>
T gauss_integrate(const F& f, double a, double b, const GaussRule& rule) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    T acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

} // namespace erd
