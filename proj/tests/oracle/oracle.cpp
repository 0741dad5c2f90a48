#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

std::set<LatticeVector> naive_sumset(const std::vector<LatticeVector>& a, int s) {
    if (s < 0 || s > 6 || a.size() > 40 || a.empty()) {
        throw std::invalid_argument("naive_sumset: configuration outside s <= 6, |A| <= 40");
    }
    const auto d = static_cast<std::size_t>(a.front().dim());
    std::set<LatticeVector> out;
    std::vector<std::int64_t> acc(d, 0);
    std::function<void(std::size_t, int)> walk = [&](std::size_t first, int left) {
        if (left == 0) {
            out.insert(LatticeVector(acc));
            return;
        }
        for (std::size_t i = first; i < a.size(); ++i) {
            for (std::size_t k = 0; k < d; ++k) {
                acc[k] += a[i][static_cast<int>(k)];
            }
            walk(i, left - 1);
            for (std::size_t k = 0; k < d; ++k) {
                acc[k] -= a[i][static_cast<int>(k)];
            }
        }
    };
    walk(0, s);
    return out;
}

bool naive_member(const std::vector<LatticeVector>& gens, const LatticeVector& y) {
    const int d = y.dim();
    std::vector<std::size_t> radix(static_cast<std::size_t>(d));
    std::size_t total = 1;
    for (int k = 0; k < d; ++k) {
        radix[static_cast<std::size_t>(k)] = static_cast<std::size_t>(y[k]) + 1;
        total *= radix[static_cast<std::size_t>(k)];
        if (total > (std::size_t{1} << 24)) {
            throw std::invalid_argument("naive_member: box too large");
        }
    }
    std::vector<char> reach(total, 0);
    reach[0] = 1;
    std::vector<std::int64_t> z(static_cast<std::size_t>(d), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        // decode idx, coordinate 0 fastest
        std::size_t rest = idx;
        for (int k = 0; k < d; ++k) {
            z[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(rest % radix[static_cast<std::size_t>(k)]);
            rest /= radix[static_cast<std::size_t>(k)];
        }
        if (reach[idx]) {
            continue;
        }
        for (const auto& g : gens) {
            if (g.norm() == 0) {
                continue;
            }
            bool fits = true;
            std::size_t back = 0;
            std::size_t scale = 1;
            for (int k = 0; k < d && fits; ++k) {
                const std::int64_t v = z[static_cast<std::size_t>(k)] - g[k];
                fits = v >= 0;
                back += static_cast<std::size_t>(std::max<std::int64_t>(v, 0)) * scale;
                scale *= radix[static_cast<std::size_t>(k)];
            }
            if (fits && reach[back]) {
                reach[idx] = 1;
                break;
            }
        }
    }
    return reach[total - 1] != 0;
}

std::set<LatticeVector> naive_simplex(int d, std::int64_t max_norm, std::int64_t e) {
    std::set<LatticeVector> out;
    std::vector<std::int64_t> y(static_cast<std::size_t>(d), 0);
    std::function<void(int, std::int64_t)> fill = [&](int k, std::int64_t used) {
        if (k == d) {
            if (used % e == 0) {
                out.insert(LatticeVector(y));
            }
            return;
        }
        for (std::int64_t v = 0; used + v <= max_norm; ++v) {
            y[static_cast<std::size_t>(k)] = v;
            fill(k + 1, used + v);
        }
        y[static_cast<std::size_t>(k)] = 0;
    };
    fill(0, 0);
    return out;
}

bool naive_step_holds(int d, std::int64_t degree, std::int64_t e, std::int64_t s) {
    const auto lower = naive_simplex(d, s * degree, e);
    std::set<LatticeVector> sum;
    for (const auto& p : lower) {
        sum.insert(p);
        for (int k = 0; k < d; ++k) {
            std::vector<std::int64_t> c(p.coords().begin(), p.coords().end());
            c[static_cast<std::size_t>(k)] += degree;
            sum.insert(LatticeVector(c));
        }
    }
    return sum == naive_simplex(d, (s + 1) * degree, e);
}

namespace {

std::int64_t power_mod(std::int64_t b, std::int64_t ex, std::int64_t p) {
    std::int64_t r = 1;
    b %= p;
    for (; ex > 0; ex >>= 1) {
        if (ex & 1) {
            r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % p);
        }
        b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % p);
    }
    return r;
}

// Gauss-Jordan on a column-major copy.
std::int64_t rank_fp(std::vector<std::vector<std::int64_t>> cols, std::int64_t p) {
    std::int64_t rank = 0;
    const std::size_t n_rows = cols.empty() ? 0 : cols[0].size();
    std::vector<bool> used(n_rows, false);
    for (auto& col : cols) {
        std::size_t piv = n_rows;
        for (std::size_t r = 0; r < n_rows; ++r) {
            if (!used[r] && col[r] % p != 0) {
                piv = r;
                break;
            }
        }
        if (piv == n_rows) {
            continue;
        }
        used[piv] = true;
        ++rank;
        const std::int64_t inv = power_mod((col[piv] % p + p) % p, p - 2, p);
        for (auto& other : cols) {
            if (&other == &col) {
                continue;
            }
            const std::int64_t f = (other[piv] % p + p) % p * inv % p;
            if (f == 0) {
                continue;
            }
            for (std::size_t r = 0; r < n_rows; ++r) {
                other[r] = ((other[r] - f * col[r]) % p + p) % p;
            }
        }
    }
    return rank;
}

} // namespace

std::vector<std::int64_t> homology_recheck(const std::vector<std::uint32_t>& faces, int vertices, std::int64_t p) {
    std::vector<std::vector<std::uint32_t>> dim_faces(static_cast<std::size_t>(vertices) + 1);
    for (const auto f : faces) {
        dim_faces[static_cast<std::size_t>(__builtin_popcount(f))].push_back(f);
    }
    for (auto& v : dim_faces) {
        std::sort(v.begin(), v.end());
    }
    std::vector<std::int64_t> ranks(static_cast<std::size_t>(vertices) + 2, 0);
    for (int k = 1; k <= vertices; ++k) {
        const auto& hi = dim_faces[static_cast<std::size_t>(k)];
        const auto& lo = dim_faces[static_cast<std::size_t>(k - 1)];
        if (hi.empty() || lo.empty()) {
            continue;
        }
        std::vector<std::vector<std::int64_t>> cols;
        for (const auto f : hi) {
            std::vector<std::int64_t> col(lo.size(), 0);
            int sign = 1;
            for (int v = 0; v < vertices; ++v) {
                if (f & (1u << v)) {
                    const auto pos = std::find(lo.begin(), lo.end(), f & ~(1u << v)) - lo.begin();
                    col[static_cast<std::size_t>(pos)] = sign == 1 ? 1 : p - 1;
                    sign = -sign;
                }
            }
            cols.push_back(std::move(col));
        }
        ranks[static_cast<std::size_t>(k)] = rank_fp(std::move(cols), p);
    }
    std::vector<std::int64_t> betti(static_cast<std::size_t>(vertices) + 1, 0);
    for (int k = 0; k <= vertices; ++k) {
        betti[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(dim_faces[static_cast<std::size_t>(k)].size()) -
                                             ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k) + 1];
    }
    return betti;
}

namespace {

__int128 cofactor_det(const std::vector<std::vector<std::int64_t>>& m) {
    const std::size_t n = m.size();
    if (n == 1) {
        return m[0][0];
    }
    __int128 total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) {
            continue;
        }
        std::vector<std::vector<std::int64_t>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<std::int64_t> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) {
                    row.push_back(m[r][k]);
                }
            }
            minor.push_back(std::move(row));
        }
        const __int128 term = m[0][c] * cofactor_det(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

} // namespace

std::int64_t naive_theta(const std::vector<LatticeVector>& a, std::int64_t degree) {
    const int n = a.front().dim() + 1;
    std::vector<std::vector<std::int64_t>> cols;
    for (const auto& p : a) {
        std::vector<std::int64_t> c{degree - p.norm()};
        c.insert(c.end(), p.coords().begin(), p.coords().end());
        cols.push_back(std::move(c));
    }
    std::int64_t g = 0;
    std::vector<bool> pick(cols.size(), false);
    std::fill(pick.end() - n, pick.end(), true);
    do {
        std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(n));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (pick[c]) {
                for (int r = 0; r < n; ++r) {
                    m[static_cast<std::size_t>(r)].push_back(cols[c][static_cast<std::size_t>(r)]);
                }
            }
        }
        __int128 det = cofactor_det(m);
        if (det < 0) {
            det = -det;
        }
        g = std::gcd(g, static_cast<std::int64_t>(det));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return g;
}

} // namespace oracle
