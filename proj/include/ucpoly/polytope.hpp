#ifndef UCPOLY_POLYTOPE_HPP
#define UCPOLY_POLYTOPE_HPP

#include <vector>

#include "ucpoly/numbers.hpp"

namespace ucpoly {

/// Vertex description: a list of rational points.
struct VRep {
    int dim = 0;
    std::vector<RatVec> points;
};

/// One inequality <normal, x> <= rhs with a primitive integer normal.
struct HRow {
    IntVec normal;
    BigRat rhs;
};

/// Facet description; irredundant and sorted after canonicalization.
struct HRep {
    int dim = 0;
    std::vector<HRow> rows;
};

// exact facet enumeration; input must be full-dimensional and bounded.
// caps: dim <= 10 unless relaxed by the caller via max_generators.
HRep dual_description(const VRep& v, std::size_t max_generators = 200);

// exact vertex enumeration; lower-dimensional input (equality pairs) is fine
VRep vertex_enumeration(const HRep& h);

// vertices of P* = { a_i / b_i }; requires 0 strictly interior (all rhs > 0)
VRep polar_dual(const HRep& h);

// all facets have integer primitive normal with rhs exactly 1
bool is_reflexive(const HRep& h);

BigRat facet_width(const VRep& v, const IntVec& primitive_normal);

// every facet width equals one
bool is_compressed(const VRep& v, const HRep& h);

// |det| of the edge-vector matrix of d+1 affinely independent lattice points
BigInt simplex_normalized_volume(const std::vector<IntVec>& pts);

bool contains(const HRep& h, const RatVec& x);

// --- small exact linear algebra helpers ---

BigInt vec_gcd(const IntVec& v);
IntVec primitive(const IntVec& v); // divide by gcd, keep direction
BigRat dot(const IntVec& a, const RatVec& x);
BigInt dot(const IntVec& a, const IntVec& x);

// rank of a rational matrix (list of rows)
int matrix_rank(std::vector<RatVec> rows);

// integer determinant by fraction-free elimination
BigInt int_determinant(std::vector<IntVec> m);

// Re-express lattice points in coordinates of a lattice basis of their affine
// hull (translation by the first point). Output dimension = affine rank.
std::vector<IntVec> affine_lattice_coordinates(const std::vector<IntVec>& pts);

bool same_point_set(const VRep& a, const VRep& b);
RatVec to_rational(const IntVec& v);
IntVec to_integer(const RatVec& v); // throws if any coordinate is non-integral

// deterministic orderings used everywhere a VRep/HRep is emitted
void sort_points(VRep& v);
void sort_rows(HRep& h);

} // namespace ucpoly

#endif
