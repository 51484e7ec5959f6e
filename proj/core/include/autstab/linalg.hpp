#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "autstab/element.hpp"

namespace autstab {

// Sparse linear-combination record over caller-defined indices (for SpanBasis
// rows: indices into a raw-element table). Kept sorted by index.
using ProvVec = std::vector<std::pair<std::size_t, Scalar>>;

ProvVec prov_scale(const ProvVec& v, const Scalar& c);
ProvVec prov_axpy(const ProvVec& acc, const Scalar& c, const ProvVec& v);

// A growing basis of the span of inserted elements, kept in reduced row
// echelon form: rows are monic on their pivot (the degree-lex largest
// monomial), every pivot occurs in exactly one row, rows are ordered by
// descending pivot. Each row carries a provenance vector expressing it as an
// exact combination of raw inserted elements, updated through every
// elimination step, so membership answers come with replayable witnesses.
class SpanBasis {
public:
    struct Row {
        Element elem;
        ProvVec prov;
    };

    explicit SpanBasis(SignaturePtr sig, std::optional<int> cap = std::nullopt);

    const SignaturePtr& signature() const { return sig_; }
    std::optional<int> cap() const { return cap_; }
    const std::vector<Row>& rows() const { return rows_; }
    int dimension() const { return static_cast<int>(rows_.size()); }

    // Residual of f modulo the span plus the coordinates of the projected
    // part: f == residual + sum_i coords[i] * rows()[i].elem. Throws
    // DegreeExceedsCap when a cap is set and total_degree(f) exceeds it.
    std::pair<Element, std::vector<Scalar>> reduce_against(const Element& f) const;

    bool contains(const Element& f) const;

    // Adds f (tracked as prov over the caller's raw table); returns true when
    // the span grew. Zero and already-spanned elements are no-ops.
    bool insert(const Element& f, ProvVec prov = {});

private:
    void check_cap(const Element& f) const;

    SignaturePtr sig_;
    std::optional<int> cap_;
    std::vector<Row> rows_;
};

// Exact Gaussian elimination helpers for small dense systems.
// Both throw SingularMatrix / SingularSystem when no solution exists.
std::vector<std::vector<Scalar>> invert_matrix(const Field& field,
                                               const std::vector<std::vector<Scalar>>& m);
std::vector<Scalar> solve_linear_system(const Field& field,
                                        std::vector<std::vector<Scalar>> m,
                                        std::vector<Scalar> rhs);

}  // namespace autstab
