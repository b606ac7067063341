#include "gapbal/kernels/square_scan.hpp"

#include "gapbal/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace gapbal::kernels {
namespace {

Isa initial_isa() noexcept {
    Isa isa = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
    if (const char* env = std::getenv("GAPBAL_ISA")) {
        const std::string_view want(env);
        if (want == "scalar") isa = Isa::scalar;
    }
    return isa;
}

std::atomic<Isa>& isa_slot() noexcept {
    static std::atomic<Isa> slot{initial_isa()};
    return slot;
}

}  // namespace

bool cpu_has_avx2() noexcept {
#if defined(GAPBAL_HAVE_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Isa active_isa() noexcept { return isa_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) noexcept {
    if (isa == Isa::avx2 && !cpu_has_avx2()) isa = Isa::scalar;
    isa_slot().store(isa, std::memory_order_relaxed);
}

std::size_t square_hits(const Quadratic& q, std::int64_t first, std::size_t count,
                        std::vector<std::int64_t>& hits) {
    if (!fits_int64(q, first, count)) {
        throw DomainError("square scan range exceeds the 64-bit kernel domain");
    }
#if defined(GAPBAL_HAVE_AVX2)
    if (active_isa() == Isa::avx2 && fits_double_exact(q, first, count)) {
        return square_hits_avx2(q, first, count, hits);
    }
#endif
    return square_hits_scalar(q, first, count, hits);
}

}  // namespace gapbal::kernels
