#pragma once

#include "lyat/algebra.hpp"

#include <random>
#include <string>
#include <vector>

namespace lyat {

/// Two-dimensional algebra on x, y with [x,y] = y, {x,y,y} = y, {y,x,x} = 0
/// and every other product zero.
LYAlgebra example_2_9();

/// Six-dimensional algebra on x0..x5 with [x0,x1] = x1, [x0,x3] = x3,
/// [x0,x5] = x5, [x1,x2] = x5, [x3,x4] = x5, twelve listed triple products
/// and every other product zero.
LYAlgebra example_2_10();

struct CatalogAlgebra {
  std::string name;
  LYAlgebra algebra;
  AxiomReport axioms;
};

/// abelian_2 .. abelian_5, example_2_9, example_2_10 with their axiom reports.
std::vector<CatalogAlgebra> catalog();

/// A random left Leibniz algebra of dimension <= 5: a direct sum of small
/// Lie and non-Lie Leibniz building blocks, written in a random basis with
/// small integer change-of-basis entries.
LeibnizTable random_leibniz_table(std::mt19937_64& rng, Field field = Field::rationals());

/// Random n x n matrix with integer entries in [-bound, bound].
Matrix random_matrix(std::mt19937_64& rng, Field field, std::size_t n, int bound = 2);
/// Same, resampled until nonsingular.
Matrix random_nonsingular_matrix(std::mt19937_64& rng, Field field, std::size_t n, int bound = 2);

} // namespace lyat
