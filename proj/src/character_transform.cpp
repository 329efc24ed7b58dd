#include "character_transform.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace hweyl::detail {

namespace {

using PlanKey = std::tuple<std::vector<int>, std::size_t, int, bool>;

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  // The FFTW planner is not re-entrant; execution with new arrays is.
  fftw_plan get(const FiniteAbelianGroup& group, std::size_t batches, int sign, bool in_place) {
    std::vector<int> dims(group.orders().begin(), group.orders().end());
    PlanKey key{dims, batches, sign, in_place};
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    const int n = static_cast<int>(group.order());
    const std::size_t total = static_cast<std::size_t>(n) * batches;
    auto* a = fftw_alloc_complex(total);
    auto* b = in_place ? a : fftw_alloc_complex(total);
    fftw_plan plan = fftw_plan_many_dft(static_cast<int>(dims.size()), dims.data(),
                                        static_cast<int>(batches), a, nullptr, 1, n, b, nullptr,
                                        1, n, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!in_place) fftw_free(b);
    fftw_free(a);
    plans_.emplace(std::move(key), plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

void character_transform(const FiniteAbelianGroup& group, const cplx* in, cplx* out,
                         std::size_t batches, TransformSign sign) {
  if (batches == 0) return;
  const int fftw_sign = sign == TransformSign::synthesis ? FFTW_BACKWARD : FFTW_FORWARD;
  const bool in_place = in == out;
  fftw_plan plan = cache().get(group, batches, fftw_sign, in_place);
  // FFTW's new-array execute never writes to `in` for out-of-place plans.
  auto* src = reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in));
  auto* dst = reinterpret_cast<fftw_complex*>(out);
  fftw_execute_dft(plan, src, dst);
}

}  // namespace hweyl::detail
