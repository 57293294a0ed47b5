#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alg3/table.hpp"

namespace alg3 {

enum class Shape { Curled, Waved, Straight };

const char* shape_name(Shape s);

/// Isomorphism-invariant fingerprint of an algebra.
struct InvariantProfile {
    int alpha = 0;  // dim A^2
    int beta = 0;   // dim la(A)
    int gamma = 0;  // dim ra(A)
    bool commutative = false;
    bool unital = false;
    Shape shape = Shape::Curled;
    bool zeropotent = false;
    bool square_of_square_zero = false;  // (A^2)^2 = 0
    bool zeropotent_plane = false;       // squares vanish on a 2-dim subspace

    friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
    std::string to_string() const;
};

/// Shape of one nonzero element: Curled if {x,x^2} is dependent, Waved if
/// {x,x^2,x^3} is dependent but {x,x^2} is not, Straight otherwise.
Shape element_shape(const StructureTable& t, const Element& x);

/// Shape of the algebra, decided by exact polynomial identities (no sampling).
Shape algebra_shape(const StructureTable& t);

InvariantProfile invariant_profile(const StructureTable& t);

std::vector<Element> square_span_basis(const StructureTable& t);
std::vector<Element> left_annihilator_basis(const StructureTable& t);
std::vector<Element> right_annihilator_basis(const StructureTable& t);

/// Deterministic grid scan (entries 0..7, lexicographic) for an element of
/// the requested kind; absent when the shape does not admit one.
enum class ElementRequest { Straight, NonCurled };
std::optional<Element> find_straight_element(const StructureTable& t,
                                             ElementRequest want = ElementRequest::Straight);

/// True iff the zeropotent set {x : x^2 = 0} contains a 2-dim subspace.
bool zeropotent_plane(const StructureTable& t);

}  // namespace alg3
