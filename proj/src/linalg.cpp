#include "toric/linalg.hpp"

#include "toric/errors.hpp"

#include <optional>
#include <utility>

namespace toric {

namespace {

template <typename T>
std::vector<std::vector<T>> convert(const IntMatrix& m) {
    std::vector<std::vector<T>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].assign(m[i].begin(), m[i].end());
    }
    return out;
}

bool mul_sub_div(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t e, std::int64_t prev, std::int64_t& out) {
    // (a*b - c*e) / prev, exact by Sylvester's identity
    const __int128 v = static_cast<__int128>(a) * b - static_cast<__int128>(c) * e;
    const __int128 q = v / prev;
    if (q > INT64_MAX || q < INT64_MIN) {
        return false;
    }
    out = static_cast<std::int64_t>(q);
    return true;
}

bool mul_sub_div(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& e, const mpz_class& prev,
                 mpz_class& out) {
    out = a * b - c * e;
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), prev.get_mpz_t());
    return true;
}

// Reduces `a` in place to echelon form; returns the rank and, for square input,
// the determinant through `det`. nullopt when 64-bit arithmetic overflowed.
template <typename T>
std::optional<int> bareiss(std::vector<std::vector<T>>& a, T* det) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    T prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != r) {
            std::swap(a[pivot], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (!mul_sub_div(a[r][c], a[i][j], a[i][c], a[r][j], prev, a[i][j])) {
                    return std::nullopt;
                }
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    if (det != nullptr) {
        if (rows != cols) {
            throw PreconditionError("determinant of a non-square matrix");
        }
        *det = (r == rows && rows > 0) ? a[rows - 1][cols - 1] * sign : T(rows == 0 ? 1 : 0);
    }
    return static_cast<int>(r);
}

} // namespace

int rank_rational(const IntMatrix& m) {
    auto small = convert<std::int64_t>(m);
    if (auto r = bareiss<std::int64_t>(small, nullptr)) {
        return *r;
    }
    auto big = convert<mpz_class>(m);
    return *bareiss<mpz_class>(big, nullptr);
}

int rank_mod_p(const IntMatrix& m, std::int64_t p) {
    std::vector<std::vector<std::int64_t>> a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        a[i].resize(m[i].size());
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            a[i][j] = ((m[i][j] % p) + p) % p;
        }
    }
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    auto inverse = [p](std::int64_t x) {
        std::int64_t result = 1;
        std::int64_t exp = p - 2;
        while (exp > 0) {
            if (exp & 1) {
                result = result * x % p;
            }
            x = x * x % p;
            exp >>= 1;
        }
        return result;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(a[pivot], a[r]);
        const std::int64_t inv = inverse(a[r][c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) {
                continue;
            }
            const std::int64_t f = a[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j) {
                a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
            }
        }
        ++r;
    }
    return static_cast<int>(r);
}

mpz_class determinant(const IntMatrix& m) {
    {
        auto small = convert<std::int64_t>(m);
        std::int64_t det = 0;
        if (bareiss<std::int64_t>(small, &det)) {
            return mpz_class(static_cast<long>(det));
        }
    }
    auto big = convert<mpz_class>(m);
    mpz_class det;
    bareiss<mpz_class>(big, &det);
    return det;
}

} // namespace toric
