#pragma once

#include <cstdint>
#include <vector>

#include "colalg/algebra.hpp"

namespace colalg {

// Hand-built fixtures shared by the corpus, the audit and the tests.

/// e1, e2 even, e3 odd over the builtin Z2 sign; only [e2,e2] = e1.
GradedAlgebraObject paper_example();
/// Trivially graded [e1,e2] = e1 = -[e2,e1].
GradedAlgebraObject nonabelian_lie2();
/// K[t]/(t^2), trivially graded, basis 1, t.
GradedAlgebraObject dual_numbers();
/// Upper triangular 2x2 matrices, trivially graded, basis E11, E12, E22.
GradedAlgebraObject upper_triangular();

/// Twisted group algebra of Z2 (n = 1) or Z2 x Z2 (n = 2) with the builtin sign:
/// e_g e_h = beta(g,h) f(g) f(h) / f(g+h) e_{g+h}, beta(g,h) = (-1)^(g^T B h).
/// Bilinear beta is a 2-cocycle, so the product is associative for every B and f.
GradedAlgebraObject twisted_group_algebra(std::size_t n, const std::vector<int>& B, const std::vector<std::int64_t>& f,
                                          const std::string& name);

/// Same structure constants over the trivial group.
GradedAlgebraObject forget_grading(const GradedAlgebraObject& obj);

/// Families (a)-(g), deterministic in the seed. Member (a) is paper_example() unchanged;
/// the other names are unique and start with their family letter.
std::vector<GradedAlgebraObject> generate_corpus(std::uint64_t seed);

}  // namespace colalg
