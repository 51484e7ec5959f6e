#include "autstab/linalg.hpp"

#include <algorithm>

#include "autstab/error.hpp"

namespace autstab {

ProvVec prov_scale(const ProvVec& v, const Scalar& c) {
    ProvVec out;
    if (c.is_zero()) return out;
    out.reserve(v.size());
    for (const auto& [i, s] : v) out.emplace_back(i, s * c);
    return out;
}

ProvVec prov_axpy(const ProvVec& acc, const Scalar& c, const ProvVec& v) {
    if (c.is_zero()) return acc;
    ProvVec out;
    out.reserve(acc.size() + v.size());
    std::size_t a = 0, b = 0;
    while (a < acc.size() || b < v.size()) {
        if (b >= v.size() || (a < acc.size() && acc[a].first < v[b].first)) {
            out.push_back(acc[a++]);
        } else if (a >= acc.size() || v[b].first < acc[a].first) {
            out.emplace_back(v[b].first, c * v[b].second);
            ++b;
        } else {
            Scalar s = acc[a].second + c * v[b].second;
            if (!s.is_zero()) out.emplace_back(acc[a].first, s);
            ++a;
            ++b;
        }
    }
    return out;
}

SpanBasis::SpanBasis(SignaturePtr sig, std::optional<int> cap)
    : sig_(std::move(sig)), cap_(cap) {
    if (!sig_) fail(ErrorCode::SignatureMismatch, "basis needs a signature");
    if (cap_ && *cap_ < 0) fail(ErrorCode::DegreeExceedsCap, "negative degree cap");
}

void SpanBasis::check_cap(const Element& f) const {
    if (!cap_) return;
    const std::optional<int> d = total_degree(f);
    if (d && *d > *cap_) {
        fail(ErrorCode::DegreeExceedsCap,
             "degree " + std::to_string(*d) + " exceeds cap " + std::to_string(*cap_));
    }
}

std::pair<Element, std::vector<Scalar>> SpanBasis::reduce_against(const Element& f) const {
    if (!(*f.signature() == *sig_)) {
        fail(ErrorCode::SignatureMismatch, "element over a different signature");
    }
    check_cap(f);
    Element residual = f;
    std::vector<Scalar> coords(rows_.size(), Scalar::zero(sig_->field()));
    // Rows are in descending pivot order and mutually reduced, so one pass
    // settles every pivot: later rows only touch smaller monomials.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Monomial& pivot = rows_[i].elem.leading_monomial();
        const Scalar c = residual.coefficient(pivot);
        if (c.is_zero()) continue;
        residual -= c * rows_[i].elem;
        coords[i] = c;
    }
    return {std::move(residual), std::move(coords)};
}

bool SpanBasis::contains(const Element& f) const {
    return reduce_against(f).first.is_zero();
}

bool SpanBasis::insert(const Element& f, ProvVec prov) {
    auto [residual, coords] = reduce_against(f);
    if (residual.is_zero()) return false;

    // prov(residual) = prov(f) - sum_i coords[i] * prov(row_i).
    ProvVec rp = std::move(prov);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!coords[i].is_zero()) rp = prov_axpy(rp, -coords[i], rows_[i].prov);
    }

    const Scalar lead = residual.leading_coefficient();
    const Scalar inv = lead.inverse();
    Row row{inv * residual, prov_scale(rp, inv)};
    const Monomial pivot = row.elem.leading_monomial();

    // Clear the new pivot from every existing row, keeping the form reduced.
    for (Row& r : rows_) {
        const Scalar c = r.elem.coefficient(pivot);
        if (c.is_zero()) continue;
        r.elem -= c * row.elem;
        r.prov = prov_axpy(r.prov, -c, row.prov);
    }

    const MonomialOrder less;
    auto it = std::find_if(rows_.begin(), rows_.end(), [&](const Row& r) {
        return less(r.elem.leading_monomial(), pivot);
    });
    rows_.insert(it, std::move(row));
    return true;
}

namespace {

// In-place Gauss-Jordan on [m | rhs_cols]; returns false when m is singular.
bool gauss_jordan(std::vector<std::vector<Scalar>>& m, std::vector<std::vector<Scalar>>& rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return false;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        const Scalar inv = m[col][col].inverse();
        for (auto& v : m[col]) v *= inv;
        for (auto& v : rhs[col]) v *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const Scalar c = m[r][col];
            for (std::size_t k = 0; k < n; ++k) m[r][k] -= c * m[col][k];
            for (std::size_t k = 0; k < rhs[r].size(); ++k) rhs[r][k] -= c * rhs[col][k];
        }
    }
    return true;
}

void check_square(const std::vector<std::vector<Scalar>>& m) {
    for (const auto& row : m) {
        if (row.size() != m.size()) fail(ErrorCode::LengthMismatch, "matrix is not square");
    }
}

}  // namespace

std::vector<std::vector<Scalar>> invert_matrix(const Field& field,
                                               const std::vector<std::vector<Scalar>>& m) {
    check_square(m);
    const std::size_t n = m.size();
    std::vector<std::vector<Scalar>> a = m;
    std::vector<std::vector<Scalar>> id(n, std::vector<Scalar>(n, Scalar::zero(field)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = Scalar::one(field);
    if (!gauss_jordan(a, id)) fail(ErrorCode::SingularMatrix, "matrix is singular");
    return id;
}

std::vector<Scalar> solve_linear_system(const Field& field, std::vector<std::vector<Scalar>> m,
                                        std::vector<Scalar> rhs) {
    check_square(m);
    if (rhs.size() != m.size()) fail(ErrorCode::LengthMismatch, "rhs length mismatch");
    std::vector<std::vector<Scalar>> r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = {rhs[i]};
    if (!gauss_jordan(m, r)) fail(ErrorCode::SingularSystem, "system is singular");
    std::vector<Scalar> out;
    out.reserve(m.size());
    for (auto& row : r) out.push_back(row[0]);
    return out;
}

}  // namespace autstab
