#include "autstab/closure.hpp"

#include <algorithm>

#include "autstab/error.hpp"
#include "autstab/parser.hpp"

namespace autstab {

CertificateBuilder::CertificateBuilder(SignaturePtr sig) : sig_(std::move(sig)) {
    if (!sig_) fail(ErrorCode::SignatureMismatch, "builder needs a signature");
}

void CertificateBuilder::check_id(std::size_t id) const {
    if (id >= steps_.size()) {
        fail(ErrorCode::IndexOutOfRange, "step " + std::to_string(id) + " not yet defined");
    }
}

const Element& CertificateBuilder::result(std::size_t id) const {
    check_id(id);
    return steps_[id].result;
}

std::size_t CertificateBuilder::add_seed(const Element& seed) {
    if (!(*seed.signature() == *sig_)) {
        fail(ErrorCode::SignatureMismatch, "seed over a different signature");
    }
    steps_.push_back({CertStep::Kind::seed, std::nullopt, 0, {}, seed});
    return steps_.size() - 1;
}

std::size_t CertificateBuilder::add_apply(const AutFamilyParams& params, std::size_t input) {
    check_id(input);
    const EndoMap m = builtin_family(sig_, params);
    Element img = apply_endomorphism(m, steps_[input].result);
    steps_.push_back({CertStep::Kind::apply, params, input, {}, std::move(img)});
    return steps_.size() - 1;
}

std::size_t CertificateBuilder::add_combine(std::vector<std::pair<std::size_t, Scalar>> combination) {
    if (combination.empty()) fail(ErrorCode::LengthMismatch, "empty combination");
    Element acc(sig_);
    for (const auto& [id, c] : combination) {
        check_id(id);
        acc += c * steps_[id].result;
    }
    steps_.push_back({CertStep::Kind::combine, std::nullopt, 0, std::move(combination),
                      std::move(acc)});
    return steps_.size() - 1;
}

std::size_t CertificateBuilder::add_difference(const AutFamilyParams& params, std::size_t input) {
    const std::size_t applied = add_apply(params, input);
    const Field& field = sig_->field();
    return add_combine({{applied, Scalar::one(field)}, {input, Scalar(field, -1)}});
}

namespace {

enum class ClosureShape { polynomial, weyl };

ClosureShape closure_shape(const SignaturePtr& sig, bool full_closure) {
    if (sig->commutative_shadow()) {
        fail(ErrorCode::UnsupportedSignature, "graded shadows have no scripted derivations");
    }
    if (sig->atoms().size() != 1) {
        fail(ErrorCode::UnsupportedSignature, "scripted derivations need a single-atom signature");
    }
    const Atom& atom = sig->atoms().front();
    switch (atom.kind) {
        case AtomKind::polynomial:
            if (full_closure && atom.size < 2) {
                fail(ErrorCode::UnsupportedSignature,
                     "polynomial closure needs at least two variables");
            }
            return ClosureShape::polynomial;
        case AtomKind::weyl:
            return ClosureShape::weyl;
        case AtomKind::laurent:
            break;
    }
    fail(ErrorCode::UnsupportedSignature, "Laurent signatures have no scripted derivations");
}

void require_char_zero(const SignaturePtr& sig) {
    if (!sig->field().is_rationals()) {
        fail(ErrorCode::CharacteristicPositive,
             "scripted derivations require characteristic 0");
    }
}

Monomial unit_monomial(const SignaturePtr& sig) {
    return Monomial{std::vector<std::int32_t>(static_cast<std::size_t>(sig->generator_count()), 0)};
}

Monomial generator_monomial(const SignaturePtr& sig, int g) {
    Monomial m = unit_monomial(sig);
    m.exponents[static_cast<std::size_t>(g)] = 1;
    return m;
}

// Cofactor of g in the multilinear case: terms with exponent 1 at g, with g
// stripped. Exponent surgery is exact for Weyl normal forms: shifting one
// generator never reorders the others.
Element unit_cofactor(const Element& f, int g) {
    Element cof(f.signature());
    for (const auto& [m, c] : f.terms()) {
        if (m.exponents[static_cast<std::size_t>(g)] != 1) continue;
        Monomial n = m;
        n.exponents[static_cast<std::size_t>(g)] = 0;
        cof.add_term(n, c);
    }
    return cof;
}

}  // namespace

std::size_t reduce_to_degree_one(CertificateBuilder& b, std::size_t seed_step) {
    const SignaturePtr& sig = b.signature();
    closure_shape(sig, false);
    require_char_zero(sig);

    Element cur = b.result(seed_step);
    if (cur.is_constant()) fail(ErrorCode::ScalarSeed, "seed lies in the coefficient field");

    std::size_t cur_id = seed_step;
    while (*total_degree(cur) >= 2) {
        int pick = -1;
        for (int g = 0; g < sig->generator_count() && pick < 0; ++g) {
            if (partial_degree(cur, g) >= 2) pick = g;
        }
        if (pick < 0) {
            for (int g = 0; g < sig->generator_count() && pick < 0; ++g) {
                if (partial_degree(cur, g) == 1 && !unit_cofactor(cur, g).is_constant()) pick = g;
            }
        }
        if (pick < 0) {
            fail(ErrorCode::SelectionFailed, "no generator admits a degree-reducing shift");
        }
        cur_id = b.add_difference(ShiftParams{pick, Scalar::one(sig->field())}, cur_id);
        cur = b.result(cur_id);
        if (cur.is_constant()) {
            fail(ErrorCode::SelectionFailed, "difference collapsed into the field");
        }
    }
    return cur_id;
}

std::pair<Element, std::vector<CertStep>> reduce_to_degree_one(const Element& seed) {
    CertificateBuilder b(seed.signature());
    const std::size_t s = b.add_seed(seed);
    const std::size_t r = reduce_to_degree_one(b, s);
    Element out = b.result(r);
    return {std::move(out), b.take_steps()};
}

namespace {

[[noreturn]] void internal_guard(const std::string& what) {
    fail(ErrorCode::CoverageIncomplete, "internal: " + what);
}

std::vector<int> transposition(int size, int a, int bpos) {
    std::vector<int> perm(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(bpos)]);
    return perm;
}

LinearPartSteps linear_part_polynomial(CertificateBuilder& b, std::size_t deg1_step) {
    const SignaturePtr& sig = b.signature();
    const Field& field = sig->field();
    const Element f = b.result(deg1_step);
    const int m = sig->generator_count();

    std::vector<Scalar> a(static_cast<std::size_t>(m), Scalar::zero(field));
    Scalar a0 = Scalar::zero(field);
    for (const auto& [mono, c] : f.terms()) {
        if (mono.is_unit()) {
            a0 = c;
            continue;
        }
        for (int g = 0; g < m; ++g) {
            if (mono.exponents[static_cast<std::size_t>(g)] == 1) a[static_cast<std::size_t>(g)] = c;
        }
    }
    int pivot = -1;
    for (int g = 0; g < m && pivot < 0; ++g) {
        if (!a[static_cast<std::size_t>(g)].is_zero()) pivot = g;
    }
    if (pivot < 0) internal_guard("degree-1 element without linear part");

    // tau sends z1 to f; completing with standard basis rows keeps it
    // invertible (determinant +/- a[pivot]). sigma = tau^{-1} maps f to z1.
    std::vector<std::vector<Scalar>> tau(static_cast<std::size_t>(m),
                                         std::vector<Scalar>(static_cast<std::size_t>(m),
                                                             Scalar::zero(field)));
    std::vector<Scalar> tau_t(static_cast<std::size_t>(m), Scalar::zero(field));
    tau[0] = a;
    tau_t[0] = a0;
    int row = 1;
    for (int g = 0; g < m; ++g) {
        if (g == pivot) continue;
        tau[static_cast<std::size_t>(row)][static_cast<std::size_t>(g)] = Scalar::one(field);
        ++row;
    }
    const auto sigma = invert_matrix(field, tau);
    std::vector<Scalar> sigma_t(static_cast<std::size_t>(m), Scalar::zero(field));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            sigma_t[static_cast<std::size_t>(i)] -=
                sigma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                tau_t[static_cast<std::size_t>(j)];
        }
    }

    const std::size_t z1 = b.add_apply(LinearParams{0, sigma, sigma_t}, deg1_step);
    if (b.result(z1) != Element::generator(sig, 0)) {
        internal_guard("affine normalization missed z1");
    }

    LinearPartSteps out;
    out.gens.assign(static_cast<std::size_t>(m), 0);
    out.gens[0] = z1;
    for (int g = 1; g < m; ++g) {
        out.gens[static_cast<std::size_t>(g)] =
            b.add_apply(PermutationParams{0, transposition(m, 0, g)}, z1);
    }
    out.one = b.add_difference(ShiftParams{0, Scalar::one(field)}, z1);
    return out;
}

LinearPartSteps linear_part_weyl(CertificateBuilder& b, std::size_t deg1_step) {
    const SignaturePtr& sig = b.signature();
    const Field& field = sig->field();
    const int pairs = sig->atoms().front().size;

    auto x_coeff = [&](const Element& f, int pair) {
        return f.coefficient(generator_monomial(sig, 2 * pair));
    };
    auto y_coeff = [&](const Element& f, int pair) {
        return f.coefficient(generator_monomial(sig, 2 * pair + 1));
    };

    std::size_t cur = deg1_step;
    Element f = b.result(cur);

    // Make some x coefficient nonzero: a swap turns y_i into -x_i.
    bool has_x = false;
    for (int i = 0; i < pairs; ++i) has_x = has_x || !x_coeff(f, i).is_zero();
    if (!has_x) {
        int src = -1;
        for (int i = 0; i < pairs && src < 0; ++i) {
            if (!y_coeff(f, i).is_zero()) src = i;
        }
        if (src < 0) internal_guard("degree-1 element without linear part");
        cur = b.add_apply(WeylSwapParams{0, src}, cur);
        f = b.result(cur);
    }

    // Move a nonzero x coefficient to the first pair.
    int lead = -1;
    for (int i = 0; i < pairs && lead < 0; ++i) {
        if (!x_coeff(f, i).is_zero()) lead = i;
    }
    if (lead > 0) {
        cur = b.add_apply(PermutationParams{0, transposition(pairs, 0, lead)}, cur);
        f = b.result(cur);
    }

    // tau doubles x1 and halves y1: tau(f) - f = a1 x1 - (1/2) b1 y1, and
    // 2 tau(f1) - f1 = 3 a1 x1 isolates the x1 component.
    const WeylScalingParams tau{0, 0, Scalar(field, 2)};
    const std::size_t f1 = b.add_difference(tau, cur);
    const std::size_t t1 = b.add_apply(tau, f1);
    const std::size_t f2 = b.add_combine({{t1, Scalar(field, 2)}, {f1, Scalar(field, -1)}});

    const Scalar c = b.result(f2).coefficient(generator_monomial(sig, 0));
    if (c.is_zero()) internal_guard("scaling differences lost the x1 component");
    const std::size_t x1 = b.add_combine({{f2, c.inverse()}});
    if (b.result(x1) != Element::generator(sig, 0)) internal_guard("x1 isolation failed");

    const std::size_t y1 = b.add_apply(WeylSwapParams{0, 0}, x1);

    LinearPartSteps out;
    out.gens.assign(static_cast<std::size_t>(2 * pairs), 0);
    out.gens[0] = x1;
    out.gens[1] = y1;
    for (int i = 1; i < pairs; ++i) {
        const auto perm = transposition(pairs, 0, i);
        out.gens[static_cast<std::size_t>(2 * i)] = b.add_apply(PermutationParams{0, perm}, x1);
        out.gens[static_cast<std::size_t>(2 * i + 1)] = b.add_apply(PermutationParams{0, perm}, y1);
    }
    out.one = b.add_difference(AlphaParams{0, 0, {Scalar::one(field)}}, y1);
    return out;
}

}  // namespace

LinearPartSteps linear_part(CertificateBuilder& b, std::size_t deg1_step) {
    const SignaturePtr& sig = b.signature();
    const ClosureShape shape = closure_shape(sig, false);
    require_char_zero(sig);

    const Element& f = b.result(deg1_step);
    const std::optional<int> deg = total_degree(f);
    if (!deg || *deg == 0) fail(ErrorCode::ZeroLinearPart, "input has no degree-1 part");
    if (*deg != 1) {
        fail(ErrorCode::InputNotDegreeOne, "input has total degree " + std::to_string(*deg));
    }

    LinearPartSteps out = shape == ClosureShape::polynomial ? linear_part_polynomial(b, deg1_step)
                                                            : linear_part_weyl(b, deg1_step);
    if (b.result(out.one) != Element::one(sig)) internal_guard("unit derivation failed");
    for (int g = 0; g < sig->generator_count(); ++g) {
        if (b.result(out.gens[static_cast<std::size_t>(g)]) != Element::generator(sig, g)) {
            internal_guard("generator derivation failed for " + sig->generator_name(g));
        }
    }
    return out;
}

std::vector<std::vector<Scalar>> vandermonde_extract(const std::vector<Element>& images,
                                                     const std::vector<Monomial>& targets) {
    if (images.empty()) fail(ErrorCode::LengthMismatch, "no images to extract from");
    const SignaturePtr& sig = images.front().signature();
    const Field& field = sig->field();
    SpanBasis basis(sig);
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!(*images[i].signature() == *sig)) {
            fail(ErrorCode::SignatureMismatch, "images over different signatures");
        }
        basis.insert(images[i], {{i, Scalar::one(field)}});
    }
    std::vector<std::vector<Scalar>> out;
    out.reserve(targets.size());
    for (const Monomial& t : targets) {
        const Element mono = Element::monomial(sig, t, Scalar::one(field));
        auto [residual, coords] = basis.reduce_against(mono);
        if (!residual.is_zero()) {
            fail(ErrorCode::SingularSystem,
                 "images do not span " + format_monomial(*sig, t) +
                     " (insufficient distinct pencil scalars)");
        }
        std::vector<Scalar> image_coords(images.size(), Scalar::zero(field));
        for (std::size_t r = 0; r < coords.size(); ++r) {
            if (coords[r].is_zero()) continue;
            for (const auto& [idx, s] : basis.rows()[r].prov) {
                image_coords[idx] += coords[r] * s;
            }
        }
        out.push_back(std::move(image_coords));
    }
    return out;
}

std::vector<Monomial> monomials_up_to_degree(const SignaturePtr& sig, int cap) {
    if (!sig) fail(ErrorCode::SignatureMismatch, "enumeration needs a signature");
    if (cap < 0) fail(ErrorCode::DegreeExceedsCap, "negative cap");
    for (int g = 0; g < sig->generator_count(); ++g) {
        if (sig->invertible(g)) {
            fail(ErrorCode::UnsupportedSignature,
                 "cannot enumerate monomials with invertible generators");
        }
    }
    std::vector<Monomial> out;
    Monomial cur = Monomial{std::vector<std::int32_t>(
        static_cast<std::size_t>(sig->generator_count()), 0)};
    const std::size_t n = cur.exponents.size();
    auto rec = [&](auto&& self, std::size_t g, int budget) -> void {
        if (g == n) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= budget; ++e) {
            cur.exponents[g] = static_cast<std::int32_t>(e);
            self(self, g + 1, budget - e);
        }
        cur.exponents[g] = 0;
    };
    rec(rec, 0, cap);
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

namespace {

// Scripted monomial generation, polynomial case (Claim-2 style): a monomial
// missing a variable is one triangular difference away from that variable's
// generator; a full-support monomial is extracted from the pencil
// z1 -> z1 + c*z2 applied to its own fold z1^(d1+d2) z3^..., which misses z2.
class PolynomialCoverage {
public:
    PolynomialCoverage(CertificateBuilder& b, ClosureCertificate& cert,
                       const LinearPartSteps& lp)
        : b_(b), cert_(cert), lp_(lp), field_(b.signature()->field()) {}

    void cover(const Monomial& mu) {
        const SignaturePtr& sig = b_.signature();
        int missing = -1;
        for (std::size_t g = 0; g < mu.exponents.size() && missing < 0; ++g) {
            if (mu.exponents[g] == 0) missing = static_cast<int>(g);
        }
        if (missing >= 0) {
            const std::size_t id = b_.add_difference(
                TriangularParams{missing, Scalar::one(field_), mu},
                lp_.gens[static_cast<std::size_t>(missing)]);
            record(mu, id);
            return;
        }

        const int d = mu.exponents[0] + mu.exponents[1];
        Monomial nu = mu;
        nu.exponents[0] = static_cast<std::int32_t>(d);
        nu.exponents[1] = 0;
        const auto& [ids, images] = pencil(nu, d);
        const auto coords = vandermonde_extract(images, {mu});
        std::vector<std::pair<std::size_t, Scalar>> combo;
        for (std::size_t c = 0; c < ids.size(); ++c) {
            if (!coords[0][c].is_zero()) combo.emplace_back(ids[c], coords[0][c]);
        }
        const std::size_t id = b_.add_combine(std::move(combo));
        if (b_.result(id) != Element::monomial(sig, mu, Scalar::one(field_))) {
            internal_guard("pencil extraction missed " + format_monomial(*sig, mu));
        }
        record(mu, id);
    }

private:
    void record(const Monomial& mu, std::size_t id) { cert_.coverage.emplace(mu, id); }

    // Images of nu under z1 -> z1 + c*z2 for c = 0..d (c = 0 is nu itself).
    const std::pair<std::vector<std::size_t>, std::vector<Element>>& pencil(const Monomial& nu,
                                                                            int d) {
        auto it = pencils_.find(nu);
        if (it != pencils_.end()) return it->second;
        const SignaturePtr& sig = b_.signature();
        const std::size_t source = cert_.coverage.at(nu);
        const Monomial z2 = generator_monomial(sig, 1);
        std::vector<std::size_t> ids{source};
        std::vector<Element> images{b_.result(source)};
        for (int c = 1; c <= d; ++c) {
            const std::size_t id =
                b_.add_apply(TriangularParams{0, Scalar(field_, c), z2}, source);
            ids.push_back(id);
            images.push_back(b_.result(id));
        }
        return pencils_.emplace(nu, std::make_pair(std::move(ids), std::move(images)))
            .first->second;
    }

    CertificateBuilder& b_;
    ClosureCertificate& cert_;
    const LinearPartSteps& lp_;
    Field field_;
    std::map<Monomial, std::pair<std::vector<std::size_t>, std::vector<Element>>, MonomialOrder>
        pencils_;
};

// Weyl case (Claims 2-4 style): pure powers x_i^d come from alpha differences;
// multi-variable pure-x monomials from shear pencils x_i -> x_i + c*x_j; any
// y-power comes from beta pencils x_i -> x_i + c*y_i applied to the fold with
// y_i traded for x_i, with lower-degree expansion terms cancelled against
// already-covered monomials.
class WeylCoverage {
public:
    WeylCoverage(CertificateBuilder& b, ClosureCertificate& cert, const LinearPartSteps& lp)
        : b_(b), cert_(cert), lp_(lp), field_(b.signature()->field()) {}

    void cover(const Monomial& mu) {
        const SignaturePtr& sig = b_.signature();
        const int pairs = sig->atoms().front().size;

        int y_total = 0;
        for (int i = 0; i < pairs; ++i) y_total += mu.exponents[static_cast<std::size_t>(2 * i + 1)];

        if (y_total == 0) {
            std::vector<int> support;
            for (int i = 0; i < pairs; ++i) {
                if (mu.exponents[static_cast<std::size_t>(2 * i)] > 0) support.push_back(i);
            }
            if (support.size() == 1) {
                const int i = support.front();
                const int d = mu.exponents[static_cast<std::size_t>(2 * i)];
                std::vector<Scalar> h(static_cast<std::size_t>(d) + 1, Scalar::zero(field_));
                h.back() = Scalar::one(field_);
                const std::size_t id = b_.add_difference(
                    AlphaParams{0, i, std::move(h)}, lp_.gens[static_cast<std::size_t>(2 * i + 1)]);
                record(mu, id);
                return;
            }
            // Fold the second support variable into the first; extract from
            // the shear pencil x_i -> x_i + c*x_j.
            const int i = support[0];
            const int j = support[1];
            const int d = mu.exponents[static_cast<std::size_t>(2 * i)] +
                          mu.exponents[static_cast<std::size_t>(2 * j)];
            Monomial nu = mu;
            nu.exponents[static_cast<std::size_t>(2 * i)] = static_cast<std::int32_t>(d);
            nu.exponents[static_cast<std::size_t>(2 * j)] = 0;
            extract_from_pencil(mu, nu, d, [&](int c) {
                std::vector<std::vector<Scalar>> m(
                    static_cast<std::size_t>(pairs),
                    std::vector<Scalar>(static_cast<std::size_t>(pairs), Scalar::zero(field_)));
                for (int k = 0; k < pairs; ++k) m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] =
                    Scalar::one(field_);
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Scalar(field_, c);
                return AutFamilyParams{WeylLinearParams{0, std::move(m)}};
            });
            return;
        }

        // Trade the first y-bearing pair's y power for x power; beta pencil
        // restores it. The pencil images carry lower-degree terms, cancelled
        // via the coverage built for smaller degrees.
        int i = -1;
        for (int k = 0; k < pairs && i < 0; ++k) {
            if (mu.exponents[static_cast<std::size_t>(2 * k + 1)] > 0) i = k;
        }
        const int d = mu.exponents[static_cast<std::size_t>(2 * i)] +
                      mu.exponents[static_cast<std::size_t>(2 * i + 1)];
        Monomial nu = mu;
        nu.exponents[static_cast<std::size_t>(2 * i)] = static_cast<std::int32_t>(d);
        nu.exponents[static_cast<std::size_t>(2 * i + 1)] = 0;
        extract_from_pencil(mu, nu, d, [&](int c) {
            return AutFamilyParams{BetaParams{0, i, Scalar(field_, c)}};
        });
    }

private:
    void record(const Monomial& mu, std::size_t id) { cert_.coverage.emplace(mu, id); }

    template <typename MakeParams>
    void extract_from_pencil(const Monomial& mu, const Monomial& nu, int d,
                             MakeParams&& make_params) {
        const SignaturePtr& sig = b_.signature();
        const int mu_degree = mu.total_degree();
        const std::size_t source = cert_.coverage.at(nu);

        std::vector<std::size_t> ids{source};
        std::vector<Element> images{b_.result(source)};
        for (int c = 1; c <= d; ++c) {
            const std::size_t raw = b_.add_apply(make_params(c), source);
            // Cancel every lower-degree expansion term against its already
            // covered monomial so the pencil rows are homogeneous.
            std::vector<std::pair<std::size_t, Scalar>> combo{{raw, Scalar::one(field_)}};
            for (const auto& [m, coeff] : b_.result(raw).terms()) {
                if (m.total_degree() < mu_degree) {
                    combo.emplace_back(cert_.coverage.at(m), -coeff);
                }
            }
            const std::size_t id = combo.size() == 1 ? raw : b_.add_combine(std::move(combo));
            ids.push_back(id);
            images.push_back(b_.result(id));
        }

        const auto coords = vandermonde_extract(images, {mu});
        std::vector<std::pair<std::size_t, Scalar>> combo;
        for (std::size_t c = 0; c < ids.size(); ++c) {
            if (!coords[0][c].is_zero()) combo.emplace_back(ids[c], coords[0][c]);
        }
        const std::size_t id = b_.add_combine(std::move(combo));
        if (b_.result(id) != Element::monomial(sig, mu, Scalar::one(field_))) {
            internal_guard("pencil extraction missed " + format_monomial(*sig, mu));
        }
        record(mu, id);
    }

    CertificateBuilder& b_;
    ClosureCertificate& cert_;
    const LinearPartSteps& lp_;
    Field field_;
};

}  // namespace

ClosureCertificate scripted_closure(const Element& seed, int cap) {
    const SignaturePtr& sig = seed.signature();
    const ClosureShape shape = closure_shape(sig, true);
    require_char_zero(sig);
    if (cap < 0) fail(ErrorCode::DegreeExceedsCap, "negative cap");
    if (seed.is_constant()) fail(ErrorCode::ScalarSeed, "seed lies in the coefficient field");

    CertificateBuilder b(sig);
    const std::size_t s0 = b.add_seed(seed);
    const std::size_t d1 = reduce_to_degree_one(b, s0);
    const LinearPartSteps lp = linear_part(b, d1);

    ClosureCertificate cert{sig, seed, cap, {}, {}};

    cert.coverage.emplace(unit_monomial(sig), lp.one);
    if (cap >= 1) {
        for (int g = 0; g < sig->generator_count(); ++g) {
            cert.coverage.emplace(generator_monomial(sig, g), lp.gens[static_cast<std::size_t>(g)]);
        }
    }

    std::vector<Monomial> targets;
    for (const Monomial& m : monomials_up_to_degree(sig, cap)) {
        if (m.total_degree() >= 2) targets.push_back(m);
    }

    const int pairs = shape == ClosureShape::weyl ? sig->atoms().front().size : 0;
    auto sort_key = [&](const Monomial& m) {
        int missing_or_ytotal = 0;
        int support = 0;
        if (shape == ClosureShape::polynomial) {
            bool full = true;
            for (std::int32_t e : m.exponents) full = full && e > 0;
            missing_or_ytotal = full ? 1 : 0;
        } else {
            for (int i = 0; i < pairs; ++i) {
                missing_or_ytotal += m.exponents[static_cast<std::size_t>(2 * i + 1)];
                if (m.exponents[static_cast<std::size_t>(2 * i)] > 0) ++support;
            }
        }
        return std::tuple<int, int, int>(m.total_degree(), missing_or_ytotal, support);
    };
    std::stable_sort(targets.begin(), targets.end(), [&](const Monomial& a, const Monomial& c) {
        const auto ka = sort_key(a);
        const auto kc = sort_key(c);
        if (ka != kc) return ka < kc;
        return MonomialOrder{}(a, c);
    });

    if (shape == ClosureShape::polynomial) {
        PolynomialCoverage cov(b, cert, lp);
        for (const Monomial& m : targets) cov.cover(m);
    } else {
        WeylCoverage cov(b, cert, lp);
        for (const Monomial& m : targets) cov.cover(m);
    }

    for (const Monomial& m : monomials_up_to_degree(sig, cap)) {
        if (cert.coverage.find(m) == cert.coverage.end()) {
            internal_guard("coverage hole at " + format_monomial(*sig, m));
        }
    }
    cert.steps = b.take_steps();
    return cert;
}

const char* saturation_status_name(SaturationStatus s) {
    switch (s) {
        case SaturationStatus::fixpoint: return "fixpoint";
        case SaturationStatus::cap_blocked_fixpoint: return "cap-blocked-fixpoint";
        case SaturationStatus::round_limit: return "round-limit";
    }
    return "?";
}

SaturationResult saturate(const std::vector<Element>& seeds, const std::vector<EndoMap>& pool,
                          int cap, int max_rounds) {
    if (seeds.empty()) fail(ErrorCode::LengthMismatch, "saturation needs at least one seed");
    if (max_rounds < 1) fail(ErrorCode::IndexOutOfRange, "max_rounds must be at least 1");
    const SignaturePtr& sig = seeds.front().signature();
    for (const Element& s : seeds) {
        if (!(*s.signature() == *sig)) {
            fail(ErrorCode::SignatureMismatch, "seeds over different signatures");
        }
    }
    for (const EndoMap& m : pool) {
        if (!(*m.signature() == *sig)) {
            fail(ErrorCode::SignatureMismatch, "pool map over a different signature");
        }
        if (!m.validated_ok()) {
            fail(ErrorCode::UnvalidatedMap, "pool map '" + m.name() + "' failed validation");
        }
    }

    SaturationResult result{SpanBasis(sig, cap), SaturationStatus::round_limit, 0, 0, {}};
    bool seed_blocked = false;
    const Field& field = sig->field();
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        const std::optional<int> d = total_degree(seeds[i]);
        if (d && *d > cap) {
            seed_blocked = true;
            ++result.cap_blocked;
            continue;
        }
        result.raws.push_back({static_cast<int>(i), -1, {}, seeds[i]});
        const std::size_t raw = result.raws.size() - 1;
        if (!result.basis.insert(seeds[i], {{raw, Scalar::one(field)}})) {
            result.raws.pop_back();
        }
    }

    for (int round = 1; round <= max_rounds; ++round) {
        result.rounds = round;
        bool grew = false;
        std::int64_t blocked_this_round = 0;

        std::vector<SpanBasis::Row> snapshot(result.basis.rows().begin(),
                                             result.basis.rows().end());
        for (std::size_t m = 0; m < pool.size(); ++m) {
            for (std::size_t r = 0; r < snapshot.size(); ++r) {
                Element img = apply_endomorphism(pool[m], snapshot[r].elem);
                const std::optional<int> d = total_degree(img);
                if (d && *d > cap) {
                    ++blocked_this_round;
                    continue;
                }
                result.raws.push_back(
                    {-1, static_cast<int>(m), snapshot[r].prov, img});
                const std::size_t raw = result.raws.size() - 1;
                if (result.basis.insert(img, {{raw, Scalar::one(field)}})) {
                    grew = true;
                } else {
                    result.raws.pop_back();
                }
            }
        }
        result.cap_blocked += blocked_this_round;

        if (!grew) {
            result.status = (blocked_this_round > 0 || seed_blocked)
                                ? SaturationStatus::cap_blocked_fixpoint
                                : SaturationStatus::fixpoint;
            return result;
        }
    }
    result.status = SaturationStatus::round_limit;
    return result;
}

bool raw_table_consistent(const SaturationResult& result, const std::vector<Element>& seeds,
                          const std::vector<EndoMap>& pool) {
    for (std::size_t i = 0; i < result.raws.size(); ++i) {
        const RawRecord& r = result.raws[i];
        if (r.seed_index >= 0) {
            if (static_cast<std::size_t>(r.seed_index) >= seeds.size()) return false;
            if (!(seeds[static_cast<std::size_t>(r.seed_index)] == r.value)) return false;
            continue;
        }
        if (r.map_index < 0 || static_cast<std::size_t>(r.map_index) >= pool.size()) return false;
        Element input(result.basis.signature());
        for (const auto& [idx, c] : r.input) {
            if (idx >= i) return false;
            input += c * result.raws[idx].value;
        }
        if (!(apply_endomorphism(pool[static_cast<std::size_t>(r.map_index)], input) == r.value)) {
            return false;
        }
    }
    for (const auto& row : result.basis.rows()) {
        Element acc(result.basis.signature());
        for (const auto& [idx, c] : row.prov) {
            if (idx >= result.raws.size()) return false;
            acc += c * result.raws[idx].value;
        }
        if (!(acc == row.elem)) return false;
    }
    return true;
}

std::vector<EndoMap> pool_preset(const SignaturePtr& sig, const std::string& name) {
    if (!sig) fail(ErrorCode::SignatureMismatch, "preset needs a signature");
    const Field& field = sig->field();
    std::vector<EndoMap> pool;

    std::vector<int> commutative;
    for (int g = 0; g < sig->generator_count(); ++g) {
        if (sig->weyl_partner(g) < 0 && !sig->invertible(g)) commutative.push_back(g);
    }
    const bool two_is_unit = field.characteristic() != 2;

    auto add_affine = [&] {
        for (int g : commutative) {
            pool.push_back(builtin_family(sig, ShiftParams{g, Scalar::one(field)}));
            if (two_is_unit) {
                pool.push_back(builtin_family(sig, ScalingParams{g, Scalar(field, 2)}));
            }
        }
    };

    if (name == "affine" || name == "triangular") {
        add_affine();
        if (name == "triangular") {
            for (std::size_t a = 0; a < sig->atoms().size(); ++a) {
                const Atom& atom = sig->atoms()[a];
                if (atom.kind != AtomKind::polynomial || atom.size < 2) continue;
                for (int i = 0; i < atom.size; ++i) {
                    for (int j = i + 1; j < atom.size; ++j) {
                        pool.push_back(builtin_family(
                            sig, PermutationParams{static_cast<int>(a),
                                                   transposition(atom.size, i, j)}));
                    }
                }
            }
            for (int g : commutative) {
                for (int h : commutative) {
                    if (g == h) continue;
                    Monomial m{std::vector<std::int32_t>(
                        static_cast<std::size_t>(sig->generator_count()), 0)};
                    m.exponents[static_cast<std::size_t>(h)] = 2;
                    pool.push_back(
                        builtin_family(sig, TriangularParams{g, Scalar::one(field), m}));
                }
            }
        }
    } else if (name == "weyl-standard") {
        for (std::size_t a = 0; a < sig->atoms().size(); ++a) {
            const Atom& atom = sig->atoms()[a];
            if (atom.kind != AtomKind::weyl) continue;
            const int ai = static_cast<int>(a);
            for (int i = 0; i < atom.size; ++i) {
                if (two_is_unit) {
                    pool.push_back(builtin_family(sig, WeylScalingParams{ai, i, Scalar(field, 2)}));
                }
                pool.push_back(builtin_family(sig, WeylSwapParams{ai, i}));
                pool.push_back(builtin_family(sig, AlphaParams{ai, i, {Scalar::one(field)}}));
                pool.push_back(builtin_family(
                    sig, AlphaParams{ai, i, {Scalar::zero(field), Scalar::one(field)}}));
                pool.push_back(builtin_family(
                    sig, AlphaParams{ai, i,
                                     {Scalar::zero(field), Scalar::zero(field),
                                      Scalar::one(field)}}));
                pool.push_back(builtin_family(sig, BetaParams{ai, i, Scalar::one(field)}));
            }
            for (int i = 0; i < atom.size; ++i) {
                for (int j = 0; j < atom.size; ++j) {
                    if (i == j) continue;
                    std::vector<std::vector<Scalar>> m(
                        static_cast<std::size_t>(atom.size),
                        std::vector<Scalar>(static_cast<std::size_t>(atom.size),
                                            Scalar::zero(field)));
                    for (int k = 0; k < atom.size; ++k) {
                        m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] =
                            Scalar::one(field);
                    }
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        Scalar::one(field);
                    pool.push_back(builtin_family(sig, WeylLinearParams{ai, std::move(m)}));
                }
                for (int j = i + 1; j < atom.size; ++j) {
                    pool.push_back(builtin_family(
                        sig, PermutationParams{ai, transposition(atom.size, i, j)}));
                }
            }
        }
    } else {
        fail(ErrorCode::BadFamilyParams, "unknown pool preset '" + name + "'");
    }

    if (pool.empty()) {
        fail(ErrorCode::BadFamilyParams,
             "preset '" + name + "' produces no maps for " + sig->to_string());
    }
    return pool;
}

const char* verify_status_name(VerifyResult::Status s) {
    switch (s) {
        case VerifyResult::Status::ok: return "ok";
        case VerifyResult::Status::malformed: return "malformed";
        case VerifyResult::Status::map_invalid: return "map-invalid";
        case VerifyResult::Status::step_mismatch: return "step-mismatch";
        case VerifyResult::Status::coverage_wrong: return "coverage-wrong";
        case VerifyResult::Status::coverage_incomplete: return "coverage-incomplete";
    }
    return "?";
}

VerifyResult verify_certificate(const ClosureCertificate& cert) {
    auto fail_at = [](VerifyResult::Status st, std::size_t step, std::string detail) {
        return VerifyResult{st, step, std::move(detail)};
    };
    const std::size_t npos = static_cast<std::size_t>(-1);

    if (!cert.signature) return fail_at(VerifyResult::Status::malformed, npos, "no signature");
    const SignaturePtr& sig = cert.signature;
    if (cert.cap < 0) return fail_at(VerifyResult::Status::malformed, npos, "negative cap");
    if (!(*cert.seed.signature() == *sig)) {
        return fail_at(VerifyResult::Status::malformed, npos, "seed signature mismatch");
    }

    std::vector<Element> computed;
    computed.reserve(cert.steps.size());
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const CertStep& step = cert.steps[i];
        if (!(*step.result.signature() == *sig)) {
            return fail_at(VerifyResult::Status::malformed, i, "result signature mismatch");
        }
        switch (step.kind) {
            case CertStep::Kind::seed: {
                if (!(step.result == cert.seed)) {
                    return fail_at(VerifyResult::Status::step_mismatch, i,
                                   "seed step differs from the certificate seed");
                }
                computed.push_back(step.result);
                break;
            }
            case CertStep::Kind::apply: {
                if (!step.map) {
                    return fail_at(VerifyResult::Status::malformed, i, "apply step without map");
                }
                if (step.input >= i) {
                    return fail_at(VerifyResult::Status::malformed, i, "input does not precede step");
                }
                Element img(sig);
                try {
                    const EndoMap m = builtin_family(sig, *step.map);
                    img = apply_endomorphism(m, computed[step.input]);
                } catch (const Error& e) {
                    return fail_at(VerifyResult::Status::map_invalid, i, e.what());
                }
                if (!(img == step.result)) {
                    return fail_at(VerifyResult::Status::step_mismatch, i,
                                   "replayed image differs from recorded result");
                }
                computed.push_back(std::move(img));
                break;
            }
            case CertStep::Kind::combine: {
                if (step.combination.empty()) {
                    return fail_at(VerifyResult::Status::malformed, i, "empty combination");
                }
                Element acc(sig);
                for (const auto& [id, c] : step.combination) {
                    if (id >= i) {
                        return fail_at(VerifyResult::Status::malformed, i,
                                       "combination input does not precede step");
                    }
                    if (!(c.field() == sig->field())) {
                        return fail_at(VerifyResult::Status::malformed, i,
                                       "coefficient over the wrong field");
                    }
                    acc += c * computed[id];
                }
                if (!(acc == step.result)) {
                    return fail_at(VerifyResult::Status::step_mismatch, i,
                                   "replayed combination differs from recorded result");
                }
                computed.push_back(std::move(acc));
                break;
            }
        }
    }

    for (const auto& [mono, id] : cert.coverage) {
        if (id >= cert.steps.size()) {
            return fail_at(VerifyResult::Status::malformed, npos,
                           "coverage references missing step " + std::to_string(id));
        }
        Element want(sig);
        try {
            want = Element::monomial(sig, mono, Scalar::one(sig->field()));
        } catch (const Error& e) {
            return fail_at(VerifyResult::Status::malformed, id, e.what());
        }
        if (!(computed[id] == want)) {
            return fail_at(VerifyResult::Status::coverage_wrong, id,
                           "step does not equal " + format_monomial(*sig, mono));
        }
    }

    std::vector<Monomial> all;
    try {
        all = monomials_up_to_degree(sig, cert.cap);
    } catch (const Error& e) {
        return fail_at(VerifyResult::Status::malformed, npos, e.what());
    }
    for (const Monomial& m : all) {
        if (cert.coverage.find(m) == cert.coverage.end()) {
            return fail_at(VerifyResult::Status::coverage_incomplete, npos,
                           "no coverage for " + format_monomial(*sig, m));
        }
    }
    return VerifyResult{};
}

}  // namespace autstab
