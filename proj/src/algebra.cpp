#include "casimir/algebra.hpp"

namespace casimir {

std::vector<GeneratorTerm> structure_supercommutator(const AlgebraSignature& sig, int i, int j,
                                                     int k, int l) {
  for (int idx : {i, j, k, l}) {
    if (!sig.contains(idx)) {
      throw IndexBelowRange("generator index " + std::to_string(idx) + " outside truncation");
    }
  }
  std::vector<GeneratorTerm> terms;
  if (j == k) terms.push_back({1, i, l});
  if (i == l) {
    long sign = (sig.generator_parity(i, j) * sig.generator_parity(k, l)) % 2 ? 1 : -1;
    // -(-1)^{(<i>+<j>)(<k>+<l>)} E_kj
    if (k == i && j == l && !terms.empty()) {
      terms[0].coeff += sign;
      if (terms[0].coeff == 0) terms.clear();
    } else {
      terms.push_back({sign, k, j});
    }
  }
  return terms;
}

}  // namespace casimir
