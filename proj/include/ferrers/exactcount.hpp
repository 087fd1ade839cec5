#pragma once
// Exact spanning-tree counts (Matrix-Tree via fraction-free elimination),
// the Ferrers invariant as a reduced rational, the good/bad classification,
// and the Venkataramana bound, all in arbitrary precision.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ferrers/bigraph.hpp"

namespace ferrers {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

enum class Verdict { Good, Bad };

struct Classification {
  Verdict verdict = Verdict::Good;
  ExactInt tree_count;
  ExactRational ferrers_invariant;
};

// Determinant by Bareiss fraction-free elimination; exact, destroys m.
ExactInt bareiss_determinant(std::vector<std::vector<ExactInt>> m);

// Number of spanning trees: determinant of the Laplacian with one row and
// column deleted.  0 for disconnected graphs, 1 for a single vertex.
// delete_index picks which row/column to drop (any choice gives the same
// value); pass -1 for the default.
ExactInt spanning_tree_count(const BipartiteGraph& g, int delete_index = -1);

// (prod of all degrees) / (p*q), reduced.  Zero if any vertex is isolated.
ExactRational ferrers_invariant(const BipartiteGraph& g);

// Good iff T(G) <= F(G), compared exactly.
Classification classify(const BipartiteGraph& g);

// T(G) <= sqrt(e1) * prod_{i>=2}(d_i + 1/2) * prod_{j>=2}(e_j + 1/2) with
// d, e the X- and Y-degrees sorted descending; decided by squaring both
// sides.  Requires connected input.
bool venkataramana_holds(const BipartiteGraph& g);

std::string to_string(Verdict v);
std::string rational_string(const ExactRational& r);  // always "num/den"

}  // namespace ferrers
