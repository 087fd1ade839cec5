#pragma once
// Floating-point Laplacian spectra and the float mirrors of the exact checks:
// the spectral spanning-tree product, the degree-product inequality, and the
// Grone-Merris majorization.  Advisory only; exact verdicts stay exact.

#include <vector>

#include "ferrers/bigraph.hpp"

namespace ferrers {

struct SpectrumVector {
  std::vector<double> eigenvalues;  // descending, length n
  double tolerance = 0.0;
};

// Eigenvalues of D - A for the full (p+q)-vertex graph, sorted descending.
SpectrumVector laplacian_spectrum(const BipartiteGraph& g);

// (1/n) * product of the n-1 largest eigenvalues.  Requires connected input.
double spectral_tree_count(const BipartiteGraph& g);

// Spectrum majorized by the conjugate of the full degree sequence, with every
// prefix comparison slackened by eps and totals equal within eps.
bool grone_merris_check(const BipartiteGraph& g, double eps);

// spectral_tree_count(g) <= (1/(p*q)) * prod of degrees + eps.
bool inequality1_check(const BipartiteGraph& g, double eps);

}  // namespace ferrers
