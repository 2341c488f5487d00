#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace jacdet {

using BigInt = boost::multiprecision::cpp_int;

// Dense row-major matrix with arbitrary-precision integer entries.
class IntMatrix {
public:
    IntMatrix(size_t rows, size_t cols);
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    BigInt& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
    const BigInt& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
    bool operator==(const IntMatrix&) const = default;

private:
    size_t rows_, cols_;
    std::vector<BigInt> e_;
};

struct RankResult {
    size_t rank = 0;
    size_t kernel_dim = 0;  // cols - rank
    std::string method;
};

// Exact determinant: Hadamard bound, then CRT over a deterministic ladder of
// word-size primes with per-prime elimination.  Dimensions <= 64 are
// cross-checked against the fraction-free route; a mismatch throws.
BigInt det_exact(const IntMatrix& m);

// Fraction-free (Bareiss) determinant.  Kept as an independent oracle for
// the modular route; all divisions are exact.
BigInt det_bareiss(const IntMatrix& m);

// Determinant mod `mod` (composite allowed: CRT over prime-power legs).
uint64_t det_mod(const IntMatrix& m, uint64_t mod);

// Rank and kernel dimension over the rationals via fraction-free elimination
// with full pivoting; exact for any rectangular matrix.
RankResult rank_kernel(const IntMatrix& m);

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
bool is_zero_matrix(const IntMatrix& m);

// Fixture format: first line "rows cols", then whitespace-separated entries
// in row-major order.
std::string dump_fixture(const IntMatrix& m);
IntMatrix load_fixture(std::istream& in);
IntMatrix load_fixture_string(const std::string& s);

// First `count` primes below 2^62, largest first; extended on demand.
std::vector<uint64_t> crt_prime_ladder(size_t count);

}  // namespace jacdet
