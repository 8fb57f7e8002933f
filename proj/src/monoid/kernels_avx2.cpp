#include "logmin/monoid/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

namespace logmin::monoid::kernels::avx2 {

__attribute__((target("avx2"))) std::size_t find_row_in_box(const std::int64_t* rows, std::size_t stride,
                                                             std::size_t count, const std::int64_t* lo,
                                                             const std::int64_t* hi) {
    for (std::size_t r = 0; r < count; ++r) {
        const std::int64_t* row = rows + r * stride;
        __m256i bad = _mm256_setzero_si256();
        for (std::size_t i = 0; i < stride; i += 4) {
            __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
            __m256i l = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lo + i));
            __m256i h = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(hi + i));
            bad = _mm256_or_si256(bad, _mm256_cmpgt_epi64(l, v));
            bad = _mm256_or_si256(bad, _mm256_cmpgt_epi64(v, h));
        }
        if (_mm256_testz_si256(bad, bad)) return r;
    }
    return count;
}

__attribute__((target("avx2"))) bool add_checked(const std::int64_t* a, const std::int64_t* b, int sign,
                                                 std::int64_t* out, std::size_t n) {
    __m256i overflow = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i s;
        if (sign > 0) {
            s = _mm256_add_epi64(x, y);
            // same input signs, different result sign
            overflow = _mm256_or_si256(overflow, _mm256_andnot_si256(_mm256_xor_si256(x, y), _mm256_xor_si256(x, s)));
        } else {
            s = _mm256_sub_epi64(x, y);
            overflow = _mm256_or_si256(overflow, _mm256_and_si256(_mm256_xor_si256(x, y), _mm256_xor_si256(x, s)));
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), s);
    }
    bool ok = _mm256_movemask_pd(_mm256_castsi256_pd(overflow)) == 0;
    if (i < n) ok &= scalar::add_checked(a + i, b + i, sign, out + i, n - i);
    return ok;
}

}  // namespace logmin::monoid::kernels::avx2

#endif
