#pragma once

#include <random>

#include "autstab/element.hpp"

// Deterministic random element generation for property tests. All tests seed
// their own mt19937 so failures replay exactly.
namespace testsupport {

inline autstab::Scalar random_scalar(std::mt19937& rng, const autstab::Field& field,
                                     long range = 5) {
    if (field.is_rationals()) {
        std::uniform_int_distribution<long> num(-range, range);
        long n = 0;
        while (n == 0) n = num(rng);
        std::uniform_int_distribution<long> den(1, 3);
        return autstab::Scalar(field, n, den(rng));
    }
    std::uniform_int_distribution<long> num(1, static_cast<long>(field.characteristic()) - 1);
    return autstab::Scalar(field, num(rng));
}

inline autstab::Monomial random_monomial(std::mt19937& rng, const autstab::SignaturePtr& sig,
                                         int max_degree) {
    const int n = sig->generator_count();
    autstab::Monomial m{std::vector<std::int32_t>(static_cast<std::size_t>(n), 0)};
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    const int budget = deg(rng);
    for (int i = 0; i < budget; ++i) {
        const int g = pick(rng);
        if (sig->invertible(g) && coin(rng)) {
            m.exponents[static_cast<std::size_t>(g)] -= 1;
        } else {
            m.exponents[static_cast<std::size_t>(g)] += 1;
        }
    }
    return m;
}

inline autstab::Element random_element(std::mt19937& rng, const autstab::SignaturePtr& sig,
                                       int max_degree, int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    autstab::Element f(sig);
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        f.add_term(random_monomial(rng, sig, max_degree), random_scalar(rng, sig->field()));
    }
    return f;
}

inline autstab::Element random_nonzero(std::mt19937& rng, const autstab::SignaturePtr& sig,
                                       int max_degree, int max_terms) {
    while (true) {
        autstab::Element f = random_element(rng, sig, max_degree, max_terms);
        if (!f.is_zero()) return f;
    }
}

inline autstab::Element random_nonscalar(std::mt19937& rng, const autstab::SignaturePtr& sig,
                                         int max_degree, int max_terms) {
    while (true) {
        autstab::Element f = random_element(rng, sig, max_degree, max_terms);
        if (!f.is_constant()) return f;
    }
}

}  // namespace testsupport
