// Degenerate the Fl_4 Plücker ideal along the toric weight system and check
// that the result is binomial, has the right size, and carries the FFLV basis.

#include "pbwdegen/io.hpp"
#include "pbwdegen/representations.hpp"

#include <iostream>

int main() {
  using namespace pbwdegen;
  const int n = 4;
  const WeightSystem A = WeightSystem::toric(n);
  std::cout << "weights\n" << io::to_text(A) << "interior: " << std::boolalpha << is_interior(A) << "\n";

  const std::vector<int> d = full_flag(n);
  const PlueckerIdeal ideal(n, d);
  const Multidegree mu{1, 1, 0};
  const ComponentBasis in = ideal.initial(mu, grading_vector(A, d));
  std::cout << "initial ideal at mu=(1,1,0): rank " << in.rank() << ", codim " << in.codim() << " (dim L = "
            << weyl_dim(multidegree_weight(n, d, mu)) << ")\n";
  for (const auto& f : in.rows) std::cout << "  " << to_string(f) << "\n";
  std::cout << "spanned by binomials: " << spanned_by_binomials(in) << "\n";

  const DominantWeight lambda(n, {1, 1, 0});
  std::cout << "FFLV monomials form a basis of the degenerate module: " << fflv_basis_check(A, lambda) << "\n";
}
