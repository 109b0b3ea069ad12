#include "sur/verify.hpp"

#include <cstdlib>
#include <string>

#include "sur/error.hpp"

namespace sur {

namespace {
void check_dims(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::kDimensionMismatch,
                "dimension mismatch: n = " + std::to_string(a) + " vs n = " + std::to_string(b));
  }
}
}  // namespace

long long inner_product(const IndexSet& a, const Bicoloring& b) {
  check_dims(a.n(), b.n());
  const auto plus = static_cast<long long>(a.bits().count_and(b.plus_bits()));
  return 2 * plus - static_cast<long long>(a.size());
}

bool is_unbiased_rep(const IndexSet& a, const Bicoloring& b) {
  return !a.empty() && inner_product(a, b) == 0;
}

Certificate verify_sur(const SurFamily& family, const BicoloringFamily& bicolorings,
                       long long delta) {
  check_dims(family.n, bicolorings.n);
  if (delta < 0) throw Error(ErrorCode::kInvalidArgument, "delta must be non-negative");
  Certificate cert;
  cert.delta = delta;
  cert.entries.reserve(bicolorings.size());
  for (const auto& b : bicolorings.items) {
    std::optional<Witness> found;
    for (std::size_t i = 0; i < family.sets.size(); ++i) {
      const long long value = inner_product(family.sets[i], b);
      if (std::llabs(value) <= delta) {
        found = Witness{i, value};
        break;
      }
    }
    cert.entries.push_back(found);
  }
  return cert;
}

}  // namespace sur
