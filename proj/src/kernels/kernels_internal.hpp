#pragma once

#include "numrad/kernels.hpp"

namespace numrad::kernels::detail {

#if defined(NUMRAD_HAVE_AVX2_KERNELS)
const KernelTable& avx2_table_unchecked() noexcept;
#endif

}  // namespace numrad::kernels::detail
