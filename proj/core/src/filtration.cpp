#include "autstab/filtration.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "autstab/error.hpp"
#include "autstab/linalg.hpp"

namespace autstab {

WeightFiltration::WeightFiltration(SignaturePtr sig, std::vector<int> weights)
    : sig_(std::move(sig)), weights_(std::move(weights)) {
    if (!sig_) fail(ErrorCode::SignatureMismatch, "filtration needs a signature");
    if (static_cast<int>(weights_.size()) != sig_->generator_count()) {
        fail(ErrorCode::LengthMismatch,
             "expected " + std::to_string(sig_->generator_count()) + " weights, got " +
                 std::to_string(weights_.size()));
    }
}

WeightFiltration WeightFiltration::bernstein(SignaturePtr sig) {
    return uniform(std::move(sig), 1);
}

WeightFiltration WeightFiltration::uniform(SignaturePtr sig, int weight) {
    const auto n = static_cast<std::size_t>(sig->generator_count());
    std::vector<int> w(n, weight);
    // Invertible generators are pinned to 0 so the named defaults validate.
    for (std::size_t g = 0; g < n; ++g) {
        if (sig->invertible(static_cast<int>(g))) w[g] = 0;
    }
    return WeightFiltration(std::move(sig), std::move(w));
}

int WeightFiltration::weight(int g) const {
    if (g < 0 || g >= static_cast<int>(weights_.size())) {
        fail(ErrorCode::IndexOutOfRange, "generator " + std::to_string(g));
    }
    return weights_[static_cast<std::size_t>(g)];
}

std::string FiltrationReport::to_string() const {
    if (violations.empty()) return "ok";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i > 0) os << "; ";
        os << (violations[i].kind == FiltrationViolationKind::negative_weight
                   ? "NegativeWeight"
                   : "InvertibleNotDegreeZero")
           << "(g" << violations[i].generator << "): " << violations[i].detail;
    }
    return os.str();
}

FiltrationReport validate_filtration(const WeightFiltration& w) {
    FiltrationReport rep;
    const AlgebraSignature& sig = *w.signature();
    for (int g = 0; g < sig.generator_count(); ++g) {
        const int wg = w.weight(g);
        if (wg < 0) {
            rep.violations.push_back({FiltrationViolationKind::negative_weight, g,
                                      sig.generator_name(g) + " has weight " + std::to_string(wg)});
        }
        if (sig.invertible(g) && wg != 0) {
            rep.violations.push_back(
                {FiltrationViolationKind::invertible_not_degree_zero, g,
                 "invertible " + sig.generator_name(g) + " has weight " + std::to_string(wg)});
        }
    }
    return rep;
}

void require_valid_filtration(const WeightFiltration& w) {
    const FiltrationReport rep = validate_filtration(w);
    if (rep.ok()) return;
    const FiltrationViolation& v = rep.violations.front();
    fail(v.kind == FiltrationViolationKind::negative_weight ? ErrorCode::NegativeWeight
                                                            : ErrorCode::InvertibleNotDegreeZero,
         v.detail);
}

int monomial_weight(const WeightFiltration& w, const Monomial& m) {
    if (m.exponents.size() != w.weights().size()) {
        fail(ErrorCode::LengthMismatch, "monomial arity does not match filtration");
    }
    int total = 0;
    for (std::size_t g = 0; g < m.exponents.size(); ++g) {
        total += m.exponents[g] * w.weights()[g];
    }
    return total;
}

std::optional<int> weight_degree(const WeightFiltration& w, const Element& f) {
    require_valid_filtration(w);
    if (!(*f.signature() == *w.signature())) {
        fail(ErrorCode::SignatureMismatch, "element over a different signature");
    }
    std::optional<int> best;
    for (const auto& [m, c] : f.terms()) {
        const int wt = monomial_weight(w, m);
        if (!best || wt > *best) best = wt;
    }
    return best;
}

Element leading_form(const WeightFiltration& w, const Element& f) {
    require_valid_filtration(w);
    if (f.is_zero()) fail(ErrorCode::ZeroElement, "leading form of zero");
    if (!(*f.signature() == *w.signature())) {
        fail(ErrorCode::SignatureMismatch, "element over a different signature");
    }
    const SignaturePtr& sig = f.signature();
    if (!sig->is_commutative()) {
        for (int g = 0; g < sig->generator_count(); ++g) {
            if (sig->is_weyl_x(g) && w.weight(g) + w.weight(g + 1) < 1) {
                fail(ErrorCode::NonPositiveWeylPairWeight,
                     "pair (" + sig->generator_name(g) + "," + sig->generator_name(g + 1) +
                         ") has total weight " + std::to_string(w.weight(g) + w.weight(g + 1)));
            }
        }
    }
    const SignaturePtr target = sig->is_commutative() ? sig : graded_shadow(sig);
    const int top = *weight_degree(w, f);
    Element lf(target);
    for (const auto& [m, c] : f.terms()) {
        if (monomial_weight(w, m) == top) lf.add_term(m, c);
    }
    return lf;
}

WeightFiltration tensor_weights(const WeightFiltration& wa, const WeightFiltration& wb) {
    require_valid_filtration(wa);
    require_valid_filtration(wb);
    SignaturePtr sig = tensor_product(wa.signature(), wb.signature());
    std::vector<int> w = wa.weights();
    w.insert(w.end(), wb.weights().begin(), wb.weights().end());
    return WeightFiltration(std::move(sig), std::move(w));
}

namespace {

// Counts monomials of exact weight d; -1 encodes "infinite" (possible only
// when some generator has weight 0). Laurent generators always have weight 0
// in a valid filtration, so any Laurent atom makes nonempty buckets infinite.
std::int64_t graded_dimension_ext(const std::vector<int>& weights, int degree) {
    if (degree < 0) return 0;
    std::vector<int> positive;
    bool has_zero = false;
    for (int w : weights) {
        if (w > 0) positive.push_back(w);
        else has_zero = true;
    }
    // reachable[i] = number of ways to reach weight i from the positive
    // weights alone (unbounded exponents).
    std::vector<std::int64_t> count(static_cast<std::size_t>(degree) + 1, 0);
    count[0] = 1;
    for (int w : positive) {
        for (int i = w; i <= degree; ++i) {
            count[static_cast<std::size_t>(i)] += count[static_cast<std::size_t>(i - w)];
        }
    }
    const std::int64_t finite = count[static_cast<std::size_t>(degree)];
    if (!has_zero) return finite;
    return finite > 0 ? -1 : 0;
}

std::int64_t ext_mul(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a < 0 || b < 0) return -1;
    return a * b;
}

std::int64_t ext_add(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) return -1;
    return a + b;
}

void enumerate_weight_monomials(const std::vector<int>& weights, int degree, std::size_t g,
                                Monomial& current, std::vector<Monomial>& out) {
    if (degree == 0 && g == weights.size()) {
        out.push_back(current);
        return;
    }
    if (g == weights.size()) return;
    const int w = weights[g];
    const int max_e = w > 0 ? degree / w : 0;
    for (int e = 0; e <= max_e; ++e) {
        current.exponents[g] = e;
        enumerate_weight_monomials(weights, degree - e * w, g + 1, current, out);
    }
    current.exponents[g] = 0;
}

}  // namespace

std::int64_t graded_dimension(const WeightFiltration& w, int degree) {
    require_valid_filtration(w);
    for (int wg : w.weights()) {
        if (wg <= 0) {
            fail(ErrorCode::UnsupportedSignature,
                 "graded dimension counting needs strictly positive weights");
        }
    }
    return graded_dimension_ext(w.weights(), degree);
}

bool GradedReport::all_pass() const {
    if (!domain_ok) return false;
    return std::all_of(rows.begin(), rows.end(), [](const GradedDegreeRow& r) { return r.pass; });
}

GradedReport gr_dimension_check(const WeightFiltration& wa, const WeightFiltration& wb, int cap) {
    require_valid_filtration(wa);
    require_valid_filtration(wb);
    if (cap < 0) fail(ErrorCode::DegreeExceedsCap, "negative cap");
    const WeightFiltration wh = tensor_weights(wa, wb);

    GradedReport report;
    for (int i = 0; i <= cap; ++i) {
        GradedDegreeRow row{};
        row.degree = i;
        row.lhs = graded_dimension_ext(wh.weights(), i);
        row.rhs = 0;
        for (int a = 0; a <= i; ++a) {
            row.rhs = ext_add(row.rhs, ext_mul(graded_dimension_ext(wa.weights(), a),
                                               graded_dimension_ext(wb.weights(), i - a)));
        }
        row.pass = row.lhs == row.rhs;
        report.rows.push_back(row);
    }

    // Domain smoke test: products of random homogeneous forms stay nonzero
    // and land in the expected graded piece. Only meaningful when every
    // weight is positive (finite homogeneous pieces).
    const bool all_positive = std::all_of(wh.weights().begin(), wh.weights().end(),
                                          [](int w) { return w > 0; });
    if (all_positive && cap >= 2) {
        const SignaturePtr shadow = graded_shadow(wh.signature());
        std::mt19937 rng(9001);
        std::uniform_int_distribution<int> coeff_dist(1, 5);
        for (int s = 0; s < 10; ++s) {
            std::uniform_int_distribution<int> deg_dist(1, std::max(1, cap / 2));
            const int da = deg_dist(rng);
            const int db = deg_dist(rng);
            auto sample = [&](int d) {
                std::vector<Monomial> monos;
                Monomial cur{std::vector<std::int32_t>(wh.weights().size(), 0)};
                enumerate_weight_monomials(wh.weights(), d, 0, cur, monos);
                Element f(shadow);
                for (const Monomial& m : monos) {
                    if (coeff_dist(rng) <= 2) {
                        f.add_term(m, Scalar(shadow->field(), coeff_dist(rng)));
                    }
                }
                if (f.is_zero() && !monos.empty()) {
                    f.add_term(monos.front(), Scalar::one(shadow->field()));
                }
                return f;
            };
            const Element fa = sample(da);
            const Element fb = sample(db);
            if (fa.is_zero() || fb.is_zero()) continue;
            ++report.domain_samples;
            const Element prod = fa * fb;
            const WeightFiltration ws(shadow, wh.weights());
            if (prod.is_zero() || weight_degree(ws, prod) != da + db) report.domain_ok = false;
        }
    }
    return report;
}

GrowthReport growth_sequence(const SignaturePtr& sig, const std::vector<Element>& gens, int steps) {
    if (!sig) fail(ErrorCode::SignatureMismatch, "growth needs a signature");
    if (steps < 0) fail(ErrorCode::IndexOutOfRange, "negative step count");
    for (const Element& g : gens) {
        if (!(*g.signature() == *sig)) {
            fail(ErrorCode::SignatureMismatch, "generator over a different signature");
        }
    }

    SpanBasis v(sig);
    for (const Element& g : gens) v.insert(g);
    if (!v.contains(Element::one(sig))) {
        fail(ErrorCode::NotContainingOne, "generating subspace must contain 1");
    }

    GrowthReport report;
    SpanBasis span(sig);
    span.insert(Element::one(sig));
    report.dims.push_back(span.dimension());
    for (int n = 1; n <= steps; ++n) {
        std::vector<Element> snapshot;
        snapshot.reserve(span.rows().size());
        for (const auto& row : span.rows()) snapshot.push_back(row.elem);
        for (const Element& r : snapshot) {
            for (const Element& g : gens) {
                span.insert(r * g);
            }
        }
        report.dims.push_back(span.dimension());
    }

    try {
        report.degree = gk_estimate(report.dims);
        report.verdict = "polynomial growth of degree " + std::to_string(*report.degree);
    } catch (const Error& e) {
        report.verdict = e.what();
    }
    return report;
}

int gk_estimate(const std::vector<std::int64_t>& dims) {
    const auto len = static_cast<long>(dims.size());
    for (int d = 0; 2 * (d + 2) <= len; ++d) {
        std::vector<std::int64_t> diff(dims.begin(), dims.end());
        for (int k = 0; k <= d; ++k) {
            for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
            diff.pop_back();
        }
        bool vanish = true;
        bool any_checked = false;
        for (std::size_t i = static_cast<std::size_t>(len / 2); i < diff.size(); ++i) {
            any_checked = true;
            if (diff[i] != 0) {
                vanish = false;
                break;
            }
        }
        if (any_checked && vanish) return d;
    }
    fail(ErrorCode::SequenceTooShort,
         "no degree with vanishing tail differences fits a sequence of length " +
             std::to_string(len));
}

}  // namespace autstab
