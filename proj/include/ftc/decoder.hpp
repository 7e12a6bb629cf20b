#pragma once

#include <cstdint>
#include <vector>

#include "ftc/bitvec.hpp"
#include "ftc/syndrome.hpp"

// Peeling (pure erasure) and weighted union-find decoders over syndrome
// graphs, plus the sampling of error configurations.

namespace ftc::sim {

struct UnsatisfiableSyndrome : std::runtime_error {
    explicit UnsatisfiableSyndrome(const std::string& m) : std::runtime_error(m) {}
};

/// Flattened syndrome graph plus membrane masks, shared read-only between
/// decoding workers.
struct DecodeGraph {
    std::size_t num_checks = 0;
    std::size_t num_edges = 0;
    std::vector<std::array<std::uint32_t, 2>> ev;  // edge endpoints
    // CSR adjacency (self-loops excluded)
    std::vector<std::uint32_t> adj_off;
    std::vector<std::uint32_t> adj_edge;
    std::vector<std::uint32_t> adj_to;
    std::vector<BitVec> membranes;  // 3 edge masks

    static DecodeGraph build(const syn::SyndromeGraph& g,
                             const std::vector<syn::LogicalMembrane>& membranes);
};

struct ErrorModel {
    double p_erasure = 0.0;
    double p_flip = 0.0;
};

struct SyndromeSample {
    BitVec erased;             // edge mask
    BitVec flipped;            // edge mask
    std::vector<char> lit;     // per check: boundary of flipped
};

/// i.i.d. per-edge sampling; erased outcomes are replaced by uniformly
/// random bits (flip with 1/2), then independent bit-flips with p_flip.
/// Deterministic given the trial seed.
SyndromeSample sample(const DecodeGraph& g, const ErrorModel& model, std::uint64_t trial_seed);

/// Exact maximum-likelihood decoder for pure erasure: spanning-forest leaf
/// peeling on the erased subgraph. Requires flips ⊆ erased.
BitVec peel_decode(const DecodeGraph& g, const SyndromeSample& s);

/// Weighted union-find decoder; erased edges enter clusters at zero
/// weight. Always returns a correction with boundary = lit checks.
BitVec uf_decode(const DecodeGraph& g, const SyndromeSample& s);

/// Boundary of an edge set (self-loops drop out).
std::vector<char> boundary_of(const DecodeGraph& g, const BitVec& edges);

/// Parity of |residual ∩ membrane_i| for the three membranes.
std::array<int, 3> membrane_parities(const DecodeGraph& g, const BitVec& residual);

}  // namespace ftc::sim
