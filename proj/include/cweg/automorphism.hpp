#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cweg/code.hpp"
#include "cweg/rational.hpp"

namespace cweg {

struct AutOptions {
    unsigned max_length = 20;
    std::uint64_t max_nodes = 2'000'000;  // search-tree nodes over the whole computation
};

struct AutResult {
    std::optional<BigInt> order;                  // empty when the effort bound was hit
    std::vector<std::vector<unsigned>> generators;
    std::vector<unsigned> base;
    std::vector<unsigned> orbit_sizes;
    std::uint64_t nodes = 0;
};

/// Order of the group of coordinate permutations fixing a binary code.
///
/// The code is encoded as a bipartite coordinate/codeword structure using the
/// smallest weight classes that span it. Automorphisms are found by
/// individualisation-refinement, and the order is the product of basic orbit
/// lengths along a base.
AutResult automorphism_group(const LinearCode& c, const AutOptions& opt = {});
std::optional<BigInt> aut_order(const LinearCode& c, const AutOptions& opt = {});

bool is_automorphism(const LinearCode& c, const std::vector<unsigned>& perm);

}  // namespace cweg
