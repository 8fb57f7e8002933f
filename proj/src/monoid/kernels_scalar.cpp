#include "logmin/monoid/kernels.hpp"

#include <atomic>

namespace logmin::monoid::kernels {

namespace scalar {

std::size_t find_row_in_box(const std::int64_t* rows, std::size_t stride, std::size_t count, const std::int64_t* lo,
                            const std::int64_t* hi) {
    for (std::size_t r = 0; r < count; ++r) {
        const std::int64_t* row = rows + r * stride;
        std::size_t i = 0;
        while (i < stride && row[i] >= lo[i] && row[i] <= hi[i]) ++i;
        if (i == stride) return r;
    }
    return count;
}

bool add_checked(const std::int64_t* a, const std::int64_t* b, int sign, std::int64_t* out, std::size_t n) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (sign > 0)
            ok &= !__builtin_add_overflow(a[i], b[i], &out[i]);
        else
            ok &= !__builtin_sub_overflow(a[i], b[i], &out[i]);
    }
    return ok;
}

}  // namespace scalar

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
#if defined(__x86_64__)
    static const Isa isa = __builtin_cpu_supports("avx2") ? Isa::Avx2 : Isa::Scalar;
    return isa;
#else
    return Isa::Scalar;
#endif
}

namespace {
std::atomic<Isa>& active() {
    static std::atomic<Isa> isa{detected_isa()};
    return isa;
}
}  // namespace

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
    if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) isa = Isa::Scalar;
    active().store(isa, std::memory_order_relaxed);
}

std::size_t find_row_in_box(const std::int64_t* rows, std::size_t stride, std::size_t count, const std::int64_t* lo,
                            const std::int64_t* hi) {
#if defined(__x86_64__)
    if (active_isa() == Isa::Avx2) return avx2::find_row_in_box(rows, stride, count, lo, hi);
#endif
    return scalar::find_row_in_box(rows, stride, count, lo, hi);
}

bool add_checked(const std::int64_t* a, const std::int64_t* b, int sign, std::int64_t* out, std::size_t n) {
#if defined(__x86_64__)
    if (active_isa() == Isa::Avx2) return avx2::add_checked(a, b, sign, out, n);
#endif
    return scalar::add_checked(a, b, sign, out, n);
}

}  // namespace logmin::monoid::kernels
