#pragma once

#include <string>
#include <vector>

#include "belab/graph.hpp"

namespace belab {

/// Minimal prime P_T(G): the cut set T together with the connected pieces of
/// the complement; dim contribution is n - |T| + c(T).
struct PrimeComponent {
    std::vector<int> t;                            // sorted cut set (possibly empty)
    std::vector<std::vector<int>> components;      // partition of the complement
    int c() const { return static_cast<int>(components.size()); }
    int dim_contribution(int n) const { return n - static_cast<int>(t.size()) + c(); }
};

/// All T (including the empty set) such that every i in T is a cut vertex of
/// G[complement(T) + i].  Requires connected G, n <= cap.
std::vector<std::vector<int>> cutsets_with_cutpoint_property(const Graph& g, int cap = 16);

std::vector<PrimeComponent> minimal_primes(const Graph& g, int cap = 16);

/// Krull dimension of S/J_G: max over minimal primes of n - |T| + c(T).
int krull_dimension(const Graph& g, int cap = 16);

std::string primes_report_json(const Graph& g, const std::vector<PrimeComponent>& primes);

}  // namespace belab
