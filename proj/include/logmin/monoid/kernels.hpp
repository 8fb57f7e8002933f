#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Packed int64 row scans used by the completion procedure; scalar reference plus an AVX2 variant
// chosen at runtime.
namespace logmin::monoid::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);
Isa detected_isa();
Isa active_isa();
// Tests force the scalar path; requests above the detected ISA are clamped.
void set_active_isa(Isa isa);

// Rows are packed with `stride` int64 lanes (stride % 4 == 0, padding lanes zero).
// Returns the first row r with lo <= row_r <= hi in every lane, or `count`.
std::size_t find_row_in_box(const std::int64_t* rows, std::size_t stride, std::size_t count, const std::int64_t* lo,
                            const std::int64_t* hi);

// out = a + sign * b over n lanes (sign is +1 or -1); false on signed overflow.
bool add_checked(const std::int64_t* a, const std::int64_t* b, int sign, std::int64_t* out, std::size_t n);

namespace scalar {
std::size_t find_row_in_box(const std::int64_t* rows, std::size_t stride, std::size_t count, const std::int64_t* lo,
                            const std::int64_t* hi);
bool add_checked(const std::int64_t* a, const std::int64_t* b, int sign, std::int64_t* out, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__)
namespace avx2 {
std::size_t find_row_in_box(const std::int64_t* rows, std::size_t stride, std::size_t count, const std::int64_t* lo,
                            const std::int64_t* hi);
bool add_checked(const std::int64_t* a, const std::int64_t* b, int sign, std::int64_t* out, std::size_t n);
}  // namespace avx2
#endif

}  // namespace logmin::monoid::kernels
