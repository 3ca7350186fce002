#include "ybq/basis.hpp"

namespace ybq {

int label_index(int m) {
  switch (m) {
    case 1:
      return 0;
    case 0:
      return 1;
    case -1:
      return 2;
  }
  throw BadLabel("label must be one of {1, 0, -1}, got " + std::to_string(m));
}

int lex_index(int m, int n) { return 3 * label_index(m) + label_index(n); }

ComplexMatrix paper_permutation() {
  static const std::array<std::array<int, 2>, 9> order = {{{1, 1},
                                                           {1, 0},
                                                           {0, 1},
                                                           {1, -1},
                                                           {0, 0},
                                                           {-1, 1},
                                                           {0, -1},
                                                           {-1, 0},
                                                           {-1, -1}}};
  ComplexMatrix p = ComplexMatrix::Zero(9, 9);
  for (int i = 0; i < 9; ++i)
    p(i, lex_index(order[i][0], order[i][1])) = 1.0;
  return p;
}

ComplexMatrix to_paper_order(const ComplexMatrix& a) {
  const ComplexMatrix p = paper_permutation();
  return p * a * p.transpose();
}

std::array<int, 3> subsystem_basis(int k) {
  switch (k) {
    case 1:
      return {lex_index(1, 0), lex_index(0, 1), lex_index(-1, -1)};
    case 2:
      return {lex_index(1, 1), lex_index(0, -1), lex_index(-1, 0)};
    case 3:
      return {lex_index(0, 0), lex_index(1, -1), lex_index(-1, 1)};
  }
  throw BadSubsystem("subsystem index must be 1, 2 or 3, got " +
                     std::to_string(k));
}

}  // namespace ybq
