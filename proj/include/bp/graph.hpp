#pragma once

#include <vector>

#include "bp/link.hpp"

namespace bp {

/// gcd graph G(a): vertices = exponents, edge (i,j) iff gcd(a_i,a_j) > 1.
/// c_ev is the vertex set of the connected component containing the even
/// exponents (empty when every exponent is odd).
struct BrieskornGraph {
    std::vector<std::int64_t> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> isolated;  // indices of degree-0 vertices
    std::vector<int> c_ev;      // indices, sorted
};

/// Requires all a_i >= 2; callers short-circuit tuples containing 1.
BrieskornGraph build_graph(const ExponentVector& a);

enum class HomologyClass {
    IntegralHomologySphere,
    RationalHomologySphereOnly,
    NotRationalHS,
};

/// Brieskorn Graph Theorem. Clause (2) is applied with the isolated point
/// required to lie outside c_ev; the literal reading miscounts e.g. (2,3,3,3)
/// where the lone even vertex is both isolated and all of c_ev. The
/// delta_at_one sweep in the tests pins this reading.
HomologyClass classify_homology(const ExponentVector& a);

/// Highly connected + integral homology sphere + dim >= 5 => homotopy sphere.
bool is_homotopy_sphere(const ExponentVector& a);

const char* homology_class_name(HomologyClass c);

} // namespace bp
