#include "lyat/catalog.hpp"

#include <stdexcept>

namespace lyat {

namespace {

Element combo(const Field& f, std::size_t n, std::initializer_list<std::pair<std::size_t, long long>> terms) {
  Element v = zero_vector(f, n);
  for (auto [i, c] : terms) v[i] += f.from_int(c);
  return v;
}

struct Block {
  std::size_t dim;
  // (i, j, k, coefficient): e_i . e_j += coefficient * e_k
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long long>> products;
};

const std::vector<Block>& leibniz_blocks() {
  static const std::vector<Block> blocks = {
      {1, {}},                                           // one-dimensional
      {2, {{0, 1, 1, 1}, {1, 0, 1, -1}}},                // [h,x] = x
      {3, {{0, 1, 2, 1}, {1, 0, 2, -1}}},                // Heisenberg
      {3, {{0, 1, 1, 2}, {1, 0, 1, -2}, {0, 2, 2, -2},   // sl2
           {2, 0, 2, 2}, {1, 2, 0, 1}, {2, 1, 0, -1}}},
      {2, {{0, 0, 1, 1}}},                               // a.a = b
      {4, {{0, 1, 1, 1}, {1, 0, 1, -1},                  // b2 acting on K^2
           {0, 2, 2, 1}, {1, 3, 2, 1}}},
      {5, {{0, 1, 1, 2}, {1, 0, 1, -2}, {0, 2, 2, -2},   // sl2 acting on K^2
           {2, 0, 2, 2}, {1, 2, 0, 1}, {2, 1, 0, -1},
           {0, 3, 3, 1}, {0, 4, 4, -1}, {1, 4, 3, 1}, {2, 3, 4, 1}}},
  };
  return blocks;
}

} // namespace

LYAlgebra example_2_9() {
  const Field q = Field::rationals();
  LYAlgebraBuilder b(q, {"x", "y"});
  b.set_bracket(0, 1, combo(q, 2, {{1, 1}}));
  b.set_triple(0, 1, 1, combo(q, 2, {{1, 1}}));
  b.set_triple(1, 0, 0, zero_vector(q, 2));
  return b.build();
}

LYAlgebra example_2_10() {
  const Field q = Field::rationals();
  const std::size_t n = 6;
  LYAlgebraBuilder b(q, {"x0", "x1", "x2", "x3", "x4", "x5"});
  auto x = [&](std::size_t i) { return combo(q, n, {{i, 1}}); };
  b.set_bracket(0, 1, x(1));
  b.set_bracket(0, 3, x(3));
  b.set_bracket(0, 5, x(5));
  b.set_bracket(1, 2, x(5));
  b.set_bracket(3, 4, x(5));
  b.set_triple(0, 1, 0, x(1));
  b.set_triple(0, 3, 0, x(3));
  b.set_triple(0, 1, 1, x(5));
  b.set_triple(0, 1, 3, x(5));
  b.set_triple(0, 3, 1, x(5));
  b.set_triple(3, 1, 1, x(5));
  b.set_triple(1, 3, 3, x(5));
  b.set_triple(0, 3, 3, x(5));
  b.set_triple(1, 2, 0, x(5));
  b.set_triple(0, 1, 2, x(5));
  b.set_triple(3, 4, 0, x(5));
  b.set_triple(3, 0, 4, x(5));
  return b.build();
}

std::vector<CatalogAlgebra> catalog() {
  std::vector<CatalogAlgebra> out;
  auto add = [&](std::string name, LYAlgebra a) {
    AxiomReport r = check_axioms(a);
    out.push_back({std::move(name), std::move(a), std::move(r)});
  };
  for (std::size_t n = 2; n <= 5; ++n) add("abelian_" + std::to_string(n), LYAlgebra::abelian(Field::rationals(), n));
  add("example_2_9", example_2_9());
  add("example_2_10", example_2_10());
  return out;
}

Matrix random_matrix(std::mt19937_64& rng, Field field, std::size_t n, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Matrix m(field, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = field.from_int(dist(rng));
  return m;
}

Matrix random_nonsingular_matrix(std::mt19937_64& rng, Field field, std::size_t n, int bound) {
  for (;;) {
    Matrix m = random_matrix(rng, field, n, bound);
    if (rank(m) == n) return m;
  }
}

LeibnizTable random_leibniz_table(std::mt19937_64& rng, Field field) {
  const auto& blocks = leibniz_blocks();
  std::uniform_int_distribution<std::size_t> pick(0, blocks.size() - 1);
  std::uniform_int_distribution<int> count(1, 2);

  std::vector<const Block*> chosen;
  std::size_t n = 0;
  for (int want = count(rng); static_cast<int>(chosen.size()) < want;) {
    const Block& b = blocks[pick(rng)];
    if (n + b.dim > 5) {
      if (chosen.empty()) continue;
      break;
    }
    chosen.push_back(&b);
    n += b.dim;
  }

  Vector p = zero_vector(field, n * n * n);
  std::size_t offset = 0;
  for (const Block* b : chosen) {
    for (const auto& [i, j, k, c] : b->products)
      p[((offset + i) * n + offset + j) * n + offset + k] += field.from_int(c);
    offset += b->dim;
  }

  // Rewrite in the basis e'_i = sum_k B(k, i) e_k.
  Matrix basis = random_nonsingular_matrix(rng, field, n, 1);
  LeibnizTable old{field, {}, p};
  for (std::size_t i = 0; i < n; ++i) old.labels.push_back("e" + std::to_string(i));
  LeibnizTable fresh{field, old.labels, zero_vector(field, n * n * n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element prod = old.multiply(basis.column(i), basis.column(j));
      auto coords = solve(basis, prod);
      for (std::size_t k = 0; k < n; ++k) fresh.products[(i * n + j) * n + k] = (*coords)[k];
    }
  if (leibniz_defect(fresh)) throw std::logic_error("random Leibniz table violates the Leibniz identity");
  return fresh;
}

} // namespace lyat
