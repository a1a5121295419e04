#include "belab/ideal.hpp"

namespace belab {

Ideal binomial_edge_ideal(const Graph& g, const PolyRing& ring) {
    if (ring.n != g.num_vertices()) throw std::invalid_argument("binomial_edge_ideal: ring/graph size mismatch");
    if (ring.nvars() > kMaxVars) throw std::invalid_argument("binomial_edge_ideal: too many variables");
    Ideal ideal;
    ideal.ring = ring;
    for (auto [i, j] : g.edges()) {
        // x_i y_j - x_j y_i with i < j
        Monomial a = mul(Monomial::variable(ring.var_x(i)), Monomial::variable(ring.var_y(j)));
        Monomial b = mul(Monomial::variable(ring.var_x(j)), Monomial::variable(ring.var_y(i)));
        ideal.generators.push_back(
            poly_from_terms(ring, {{1, a}, {ring.characteristic - 1, b}}));
    }
    return ideal;
}

std::string dump_polynomials(const PolyRing& ring, const std::vector<Polynomial>& polys) {
    std::string out;
    for (const auto& p : polys) {
        out += poly_to_string(ring, p);
        out += "\n";
    }
    return out;
}

}  // namespace belab
