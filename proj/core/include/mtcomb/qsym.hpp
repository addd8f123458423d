#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mtcomb/bigint.hpp"
#include "mtcomb/subset.hpp"

namespace mtcomb {

/// A composition: finite sequence of positive parts.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p);

    int degree() const;
    std::size_t length() const { return parts.size(); }

    bool operator==(const Composition& o) const { return parts == o.parts; }
    bool operator<(const Composition& o) const { return parts < o.parts; }

    std::string to_string() const;  // "(1,2,1)"
};

/// alpha(J): the composition of n whose partial sums are the elements of J.
Composition alpha_of_set(const Subset& J, int n);

/// Inverse of alpha_of_set: the partial-sum set of alpha and its degree.
std::pair<Subset, int> set_of_alpha(const Composition& alpha);

enum class QSymBasis { M, L };

/// Homogeneous quasisymmetric function with exact integer coefficients.
struct QSymElement {
    QSymBasis basis = QSymBasis::M;
    std::map<Composition, Int> terms;  // no zero coefficients

    void add(const Composition& alpha, const Int& c);
    int degree() const;  // common degree of the terms; 0 when empty
    bool is_zero() const { return terms.empty(); }

    bool operator==(const QSymElement& o) const {
        return basis == o.basis && terms == o.terms;
    }

    std::string to_string() const;
};

/// L_alpha = sum of M_beta over beta refining alpha, extended linearly.
QSymElement l_to_m(const QSymElement& x);

/// Inclusion-exclusion inverse of l_to_m.
QSymElement m_to_l(const QSymElement& x);

/// Product in the M basis via exact expansion in deg(x)+deg(y) variables.
/// Homogeneous QSym of degree d is faithful in d variables, so this is exact.
QSymElement m_product(const QSymElement& x, const QSymElement& y);

/// Independent cross-check engine: the quasi-shuffle (overlay) product.
QSymElement m_product_quasishuffle(const QSymElement& x, const QSymElement& y);

/// Product in the L basis (through the M engine).
QSymElement l_product(const QSymElement& x, const QSymElement& y);

/// True iff M-coefficients are constant on rearrangement classes of parts.
bool is_symmetric(const QSymElement& x);

}  // namespace mtcomb
