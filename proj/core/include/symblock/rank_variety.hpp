#pragma once

#include <vector>

#include "symblock/fp_matrix.hpp"

namespace symblock {

/// An explicit module over an elementary abelian p-group of rank k: k
/// pairwise-commuting matrices over F_p, each of multiplicative order
/// dividing p.
struct ElemAbelianModule {
  int p = 2;
  int dim = 0;
  std::vector<FpMatrix> generators;

  int rank() const { return static_cast<int>(generators.size()); }
};

/// Validates commutation and g^p = 1 for every generator.
ElemAbelianModule make_module(int p, std::vector<FpMatrix> generators);

ElemAbelianModule direct_sum(const ElemAbelianModule& a, const ElemAbelianModule& b);

/// The shifted unit u_alpha = 1 + sum_i alpha_i (g_i - 1); alpha != 0.
/// Satisfies u^p = 1.
FpMatrix shifted_unit(const ElemAbelianModule& m, const std::vector<int>& alpha);

/// The group element prod_i g_i^{alpha_i} (the second freeness probe).
FpMatrix group_element(const ElemAbelianModule& m, const std::vector<int>& alpha);

/// True iff the module is free over the cyclic subalgebra generated by u,
/// i.e. the Jordan type of u - 1 consists solely of size-p blocks. Requires
/// u^p = 1.
bool is_free_over(const ElemAbelianModule& m, const FpMatrix& u);

/// Nonzero prime-field directions alpha (up to scalar, first nonzero
/// coordinate normalized to 1) along which the module fails to be free.
/// Both probes (shifted unit and group element) are evaluated and must agree.
std::vector<std::vector<int>> rational_points(const ElemAbelianModule& m);

}  // namespace symblock
