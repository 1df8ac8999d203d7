#include <cstdlib>
#include <string_view>

#include "doerfler/kernels.hpp"

namespace doerfler::kernels {
namespace {

constexpr KernelTable kScalarTable{Isa::kScalar, &scalar::sum, &scalar::max_value,
                                   &scalar::count_greater};
#if DOERFLER_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2Table{Isa::kAvx2, &avx2::sum, &avx2::max_value, &avx2::count_greater};
#endif

const KernelTable& select_table() noexcept {
  if (const char* forced = std::getenv("DOERFLER_ISA");
      forced != nullptr && std::string_view(forced) == "scalar") {
    return kScalarTable;
  }
#if DOERFLER_HAVE_AVX2_KERNELS
  if (avx2_supported()) return kAvx2Table;
#endif
  return kScalarTable;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool avx2_supported() noexcept {
#if DOERFLER_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& scalar_table() noexcept { return kScalarTable; }

const KernelTable& active() noexcept {
  static const KernelTable& table = select_table();
  return table;
}

}  // namespace doerfler::kernels
