#include "gapbal/kernels/square_scan.hpp"

#include <immintrin.h>

namespace gapbal::kernels {

std::size_t square_hits_avx2(const Quadratic& q, std::int64_t first, std::size_t count,
                             std::vector<std::int64_t>& hits) {
    const __m256d va = _mm256_set1_pd(static_cast<double>(q.a));
    const __m256d vb = _mm256_set1_pd(static_cast<double>(q.b));
    const __m256d vc = _mm256_set1_pd(static_cast<double>(q.c));
    const __m256d zero = _mm256_setzero_pd();
    const __m256d step = _mm256_set1_pd(4.0);
    __m256d x = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(first)), _mm256_set_pd(3.0, 2.0, 1.0, 0.0));

    std::size_t found = 0;
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        // Exact in double: every partial result is an integer below 2^53.
        const __m256d v = _mm256_add_pd(_mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(va, x), vb), x), vc);
        const __m256d r = _mm256_round_pd(_mm256_sqrt_pd(v), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
        // sqrt of a negative lane is NaN, so the equality is false there; the
        // explicit sign test keeps that independent of NaN semantics.
        const __m256d hit = _mm256_and_pd(_mm256_cmp_pd(_mm256_mul_pd(r, r), v, _CMP_EQ_OQ),
                                          _mm256_cmp_pd(v, zero, _CMP_GE_OQ));
        int mask = _mm256_movemask_pd(hit);
        while (mask != 0) {
            const int lane = __builtin_ctz(static_cast<unsigned>(mask));
            hits.push_back(first + static_cast<std::int64_t>(i) + lane);
            ++found;
            mask &= mask - 1;
        }
        x = _mm256_add_pd(x, step);
    }
    if (i < count) {
        found += square_hits_scalar(q, first + static_cast<std::int64_t>(i), count - i, hits);
    }
    return found;
}

}  // namespace gapbal::kernels
