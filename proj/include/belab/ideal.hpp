#pragma once

#include <optional>
#include <vector>

#include "belab/graph.hpp"
#include "belab/polynomial.hpp"

namespace belab {

/// Homogeneous ideal of S with an optional cached reduced Groebner basis.
struct Ideal {
    PolyRing ring;
    std::vector<Polynomial> generators;
    std::optional<std::vector<Polynomial>> reduced_gb;
};

/// J_G = (x_i y_j - x_j y_i : i < j, {i,j} an edge), one generator per edge.
Ideal binomial_edge_ideal(const Graph& g, const PolyRing& ring);

/// Plain-text dump, one polynomial per line, deterministic ordering.
std::string dump_polynomials(const PolyRing& ring, const std::vector<Polynomial>& polys);

}  // namespace belab
