#pragma once

#include "pwt/representation.hpp"

namespace pwt {

// A module homomorphism: one matrix per vertex intertwining the arrow
// actions (component at target * source map == target map * component at
// source, for every arrow).
class Morphism {
public:
    // Empty placeholder; only assign into.
    Morphism() = default;

    // Validates the intertwining equations.
    Morphism(Representation source, Representation target, std::vector<Matrix> components);

    static Morphism identity(const Representation& x);
    static Morphism zero(const Representation& source, const Representation& target);
    // Skips validation; for internally constructed morphisms that are
    // correct by construction.
    static Morphism unchecked(Representation source, Representation target, std::vector<Matrix> components);

    const Representation& source() const { return src_; }
    const Representation& target() const { return dst_; }
    const Matrix& component(int vertex) const { return comps_[static_cast<std::size_t>(vertex)]; }
    const std::vector<Matrix>& components() const { return comps_; }

    bool is_zero() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const;

    friend Morphism operator+(const Morphism& a, const Morphism& b);
    friend Morphism operator*(const Scalar& s, const Morphism& a);
    Morphism operator-() const;
    friend bool operator==(const Morphism& a, const Morphism& b);

    // Column vector of all component entries, vertex by vertex, row-major.
    Matrix flatten() const;
    // Square matrix of the underlying linear operator (endomorphisms only).
    Matrix operator_matrix() const;

private:
    struct UncheckedTag {};
    Morphism(UncheckedTag, Representation s, Representation t, std::vector<Matrix> c)
        : src_(std::move(s)), dst_(std::move(t)), comps_(std::move(c)) {}

    Representation src_, dst_;
    std::vector<Matrix> comps_;
};

// g after f.
Morphism compose(const Morphism& g, const Morphism& f);

// Basis of Hom(x, y), solved from the intertwining equations. Deterministic.
std::vector<Morphism> hom_basis(const Representation& x, const Representation& y);

}  // namespace pwt
