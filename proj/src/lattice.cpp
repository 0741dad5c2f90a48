#include "toric/lattice.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <sstream>
#include <thread>

namespace toric {

namespace {

constexpr std::int64_t kMaxDegree = std::int64_t{1} << 31;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out) || out > (std::uint64_t{1} << 62)) {
        throw ResourceLimitError("simplex slice too large to index with 64-bit ranks");
    }
    return out;
}

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

// ---------------------------------------------------------------------------
// LatticeVector

LatticeVector::LatticeVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
    for (const auto c : coords_) {
        if (c < 0) {
            throw ValidationError("lattice vector has a negative coordinate: " + to_string());
        }
        norm_ += c;
    }
}

LatticeVector LatticeVector::zero(int dim) { return LatticeVector(std::vector<std::int64_t>(static_cast<std::size_t>(dim), 0)); }

LatticeVector LatticeVector::axis(int dim, int index, std::int64_t scale) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(dim), 0);
    c[static_cast<std::size_t>(index)] = scale;
    return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::operator+(const LatticeVector& other) const {
    std::vector<std::int64_t> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] += other.coords_[i];
    }
    return LatticeVector(std::move(c));
}

std::optional<LatticeVector> LatticeVector::minus(const LatticeVector& other) const {
    std::vector<std::int64_t> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] -= other.coords_[i];
        if (c[i] < 0) {
            return std::nullopt;
        }
    }
    return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::erase(int index) const {
    std::vector<std::int64_t> c(coords_);
    c.erase(c.begin() + index);
    return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::prepend(std::int64_t value) const {
    std::vector<std::int64_t> c;
    c.reserve(coords_.size() + 1);
    c.push_back(value);
    c.insert(c.end(), coords_.begin(), coords_.end());
    return LatticeVector(std::move(c));
}

std::string LatticeVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        os << (i ? "," : "") << coords_[i];
    }
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------------------
// GeneratorSet

GeneratorSet GeneratorSet::create(int d, std::vector<LatticeVector> points) {
    if (d < 1) {
        throw ValidationError("dimension d must be at least 1");
    }
    if (points.empty()) {
        throw ValidationError("generator set is empty");
    }
    std::int64_t degree = 0;
    for (const auto& p : points) {
        if (p.dim() != d) {
            throw ValidationError("point " + p.to_string() + " does not have dimension " + std::to_string(d));
        }
        for (const auto c : p.coords()) {
            if (c > kMaxDegree) {
                throw ValidationError("coordinate too large in " + p.to_string());
            }
        }
        degree = std::max(degree, p.norm());
    }
    if (degree > kMaxDegree) {
        throw ValidationError("maximal norm D exceeds 2^31");
    }
    if (degree < 2) {
        throw ValidationError("maximal norm D must be at least 2");
    }
    std::sort(points.begin(), points.end());
    const auto dup = std::adjacent_find(points.begin(), points.end());
    if (dup != points.end()) {
        throw ValidationError("duplicate point " + dup->to_string());
    }
    GeneratorSet out;
    out.dim_ = d;
    out.degree_ = degree;
    out.points_ = std::move(points);
    if (!out.contains(LatticeVector::zero(d))) {
        throw ValidationError("generator set must contain the origin");
    }
    for (int i = 0; i < d; ++i) {
        if (!out.contains(LatticeVector::axis(d, i, degree))) {
            throw ValidationError("generator set must contain D*e_" + std::to_string(i + 1) + " = " +
                                  LatticeVector::axis(d, i, degree).to_string());
        }
    }
    std::int64_t g = degree;
    for (const auto& p : out.points_) {
        g = std::gcd(g, p.norm());
    }
    out.divisor_ = g;
    return out;
}

bool GeneratorSet::contains(const LatticeVector& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

std::int64_t GeneratorSet::homogenized_coordinate_gcd() const {
    std::int64_t g = 0;
    for (const auto& p : points_) {
        g = std::gcd(g, degree_ - p.norm());
        for (const auto c : p.coords()) {
            g = std::gcd(g, c);
        }
    }
    return g;
}

HomogenizedGeneratorSet homogenize(const GeneratorSet& a) {
    HomogenizedGeneratorSet out{a, {}};
    out.points.reserve(a.size());
    for (const auto& p : a.points()) {
        out.points.push_back(p.prepend(a.degree() - p.norm()));
    }
    return out;
}

GeneratorSet dehomogenize(const std::vector<LatticeVector>& homogeneous_points) {
    if (homogeneous_points.empty()) {
        throw ValidationError("cannot dehomogenize an empty set");
    }
    const int dim = homogeneous_points.front().dim();
    const std::int64_t degree = homogeneous_points.front().norm();
    std::vector<LatticeVector> pts;
    pts.reserve(homogeneous_points.size());
    for (const auto& p : homogeneous_points) {
        if (p.dim() != dim || p.norm() != degree) {
            throw ValidationError("homogeneous points must share dimension and norm");
        }
        pts.push_back(p.erase(0));
    }
    return GeneratorSet::create(dim - 1, std::move(pts));
}

// ---------------------------------------------------------------------------
// SimplexSlice

SimplexSlice::SimplexSlice(int d, std::int64_t degree, std::int64_t level, std::int64_t divisor)
    : dim_(d), degree_(degree), level_(level), divisor_(divisor), max_norm_(degree * level) {
    if (d < 1 || degree < 1 || level < 0 || divisor < 1 || degree % divisor != 0) {
        throw PreconditionError("invalid simplex slice parameters");
    }
    const auto m = static_cast<std::size_t>(max_norm_);
    stride_ = m + 2;
    // exact[j][t]: x in N^j with |x| = t; restricted[j][t]: |x| <= t and |x| = t mod e.
    std::vector<std::uint64_t> exact_prev(m + 1, 0);
    std::vector<std::uint64_t> exact_cur(m + 1, 0);
    std::vector<std::uint64_t> restricted(m + 1, 0);
    exact_prev[0] = 1; // j = 0
    cumulative_.assign(static_cast<std::size_t>(d) * stride_, 0);
    const auto e = static_cast<std::size_t>(divisor);
    for (int j = 0; j <= d; ++j) {
        if (j > 0) {
            for (std::size_t t = 0; t <= m; ++t) {
                exact_cur[t] = checked_add(exact_prev[t], t > 0 ? exact_cur[t - 1] : 0);
            }
            std::swap(exact_prev, exact_cur);
        }
        for (std::size_t t = 0; t <= m; ++t) {
            restricted[t] = checked_add(exact_prev[t], t >= e ? restricted[t - e] : 0);
        }
        if (j < d) {
            std::uint64_t* row = cumulative_.data() + static_cast<std::size_t>(j) * stride_;
            row[0] = 0;
            for (std::size_t t = 0; t <= m; ++t) {
                row[t + 1] = checked_add(row[t], restricted[t]);
            }
        } else {
            size_ = restricted[m];
        }
    }
}

bool SimplexSlice::contains(std::span<const std::int64_t> y) const {
    if (static_cast<int>(y.size()) != dim_) {
        return false;
    }
    std::int64_t norm = 0;
    for (const auto c : y) {
        if (c < 0) {
            return false;
        }
        norm += c;
    }
    return norm <= max_norm_ && norm % divisor_ == 0;
}

std::uint64_t SimplexSlice::rank(std::span<const std::int64_t> y) const {
    if (!contains(y)) {
        std::vector<std::int64_t> c(y.begin(), y.end());
        std::ostringstream os;
        os << "point (";
        for (std::size_t i = 0; i < c.size(); ++i) {
            os << (i ? "," : "") << c[i];
        }
        os << ") is outside the slice |y| <= " << max_norm_ << ", " << divisor_ << " | |y|";
        throw OutOfDomainError(os.str());
    }
    return rank_unchecked(y.data());
}

LatticeVector SimplexSlice::unrank(std::uint64_t index) const {
    if (index >= size_) {
        throw OutOfDomainError("rank " + std::to_string(index) + " is outside [0, " + std::to_string(size_) + ")");
    }
    std::vector<std::int64_t> y(static_cast<std::size_t>(dim_), 0);
    std::int64_t rest = max_norm_;
    for (int j = dim_ - 1; j >= 0; --j) {
        // count(v) = C_j(rest) - C_j(rest - v) is nondecreasing in v; take the largest v with count(v) <= index.
        const std::uint64_t top = cumulative(j, rest);
        std::int64_t lo = 0;
        std::int64_t hi = rest;
        while (lo < hi) {
            const std::int64_t mid = lo + (hi - lo + 1) / 2;
            if (top - cumulative(j, rest - mid) <= index) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        index -= top - cumulative(j, rest - lo);
        y[static_cast<std::size_t>(j)] = lo;
        rest -= lo;
    }
    return LatticeVector(std::move(y));
}

SimplexSlice::Cursor::Cursor(const SimplexSlice& slice, std::uint64_t start) : slice_(&slice), index_(start) {
    if (start < slice.size()) {
        const LatticeVector p = slice.unrank(start);
        point_.assign(p.coords().begin(), p.coords().end());
        norm_ = p.norm();
        valid_ = true;
    }
}

void SimplexSlice::Cursor::next() {
    const int d = slice_->dim_;
    const std::int64_t m = slice_->max_norm_;
    const std::int64_t e = slice_->divisor_;
    do {
        int j = 0;
        for (; j < d; ++j) {
            if (norm_ < m) {
                ++point_[static_cast<std::size_t>(j)];
                ++norm_;
                break;
            }
            norm_ -= point_[static_cast<std::size_t>(j)];
            point_[static_cast<std::size_t>(j)] = 0;
        }
        if (j == d) {
            valid_ = false;
            ++index_;
            return;
        }
    } while (norm_ % e != 0);
    ++index_;
}

// ---------------------------------------------------------------------------
// SumsetLevel

SumsetLevel::SumsetLevel(std::int64_t s, SimplexSlice slice)
    : level_(s), slice_(std::move(slice)), bits_((slice_.size() + 63) / 64, 0) {}

void SumsetLevel::recount() {
    cardinality_ = 0;
    for (const auto w : bits_) {
        cardinality_ += static_cast<std::uint64_t>(std::popcount(w));
    }
}

bool SumsetLevel::contains(std::span<const std::int64_t> y) const {
    if (!slice_.contains(y)) {
        return false;
    }
    return test_rank(slice_.rank_unchecked(y.data()));
}

std::vector<LatticeVector> SumsetLevel::members() const {
    std::vector<LatticeVector> out;
    out.reserve(cardinality_);
    for (SimplexSlice::Cursor c(slice_, 0); c.valid(); c.next()) {
        if (test_rank(c.index())) {
            out.emplace_back(std::vector<std::int64_t>(c.data(), c.data() + slice_.dim()));
        }
    }
    return out;
}

std::vector<LatticeVector> SumsetLevel::complement() const {
    std::vector<LatticeVector> out;
    for (SimplexSlice::Cursor c(slice_, 0); c.valid(); c.next()) {
        if (!test_rank(c.index())) {
            out.emplace_back(std::vector<std::int64_t>(c.data(), c.data() + slice_.dim()));
        }
    }
    return out;
}

SumsetLevel zero_level(int d, std::int64_t degree, std::int64_t divisor) {
    SumsetLevel level(0, SimplexSlice(d, degree, 0, divisor));
    level.bits_[0] = 1;
    level.recount();
    return level;
}

SumsetLevel minkowski_step(const std::vector<LatticeVector>& generators, std::int64_t degree, std::int64_t divisor,
                           const SumsetLevel& previous, const EngineOptions& options) {
    const int d = previous.slice().dim();
    SimplexSlice next_slice(d, degree, previous.level() + 1, divisor);
    if (next_slice.size() > options.max_slice_points) {
        throw ResourceLimitError("level " + std::to_string(previous.level() + 1) + " needs " +
                                 std::to_string(next_slice.size()) + " slice points, above the cap of " +
                                 std::to_string(options.max_slice_points));
    }
    SumsetLevel out(previous.level() + 1, std::move(next_slice));

    std::vector<std::int64_t> flat;
    flat.reserve(generators.size() * static_cast<std::size_t>(d));
    for (const auto& g : generators) {
        flat.insert(flat.end(), g.coords().begin(), g.coords().end());
    }
    const std::size_t count = generators.size();
    const SimplexSlice& src = previous.slice();
    const SimplexSlice& dst = out.slice();
    std::uint64_t* words = out.bits_.data();

    auto run = [&](std::uint64_t begin, std::uint64_t end, bool shared) {
        std::vector<std::int64_t> sum(static_cast<std::size_t>(d));
        for (SimplexSlice::Cursor c(src, begin); c.valid() && c.index() < end; c.next()) {
            if (!previous.test_rank(c.index())) {
                continue;
            }
            const std::int64_t* y = c.data();
            for (std::size_t g = 0; g < count; ++g) {
                const std::int64_t* a = flat.data() + g * static_cast<std::size_t>(d);
                for (int k = 0; k < d; ++k) {
                    sum[static_cast<std::size_t>(k)] = y[k] + a[k];
                }
                const std::uint64_t r = dst.rank_unchecked(sum.data());
                const std::uint64_t bit = std::uint64_t{1} << (r & 63);
                if (shared) {
                    std::atomic_ref<std::uint64_t>(words[r >> 6]).fetch_or(bit, std::memory_order_relaxed);
                } else {
                    words[r >> 6] |= bit;
                }
            }
        }
    };

    const std::uint64_t total = src.size();
    const unsigned threads = std::min<std::uint64_t>(resolve_threads(options.threads), std::max<std::uint64_t>(1, total / 4096));
    if (threads <= 1) {
        run(0, total, false);
    } else {
        std::vector<std::jthread> pool;
        const std::uint64_t chunk = (total + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t begin = t * chunk;
            const std::uint64_t end = std::min(total, begin + chunk);
            if (begin < end) {
                pool.emplace_back(run, begin, end, true);
            }
        }
    }
    out.recount();
    return out;
}

SumsetLevel sumset_level(const GeneratorSet& a, std::int64_t s, const SumsetLevel* previous, const EngineOptions& options) {
    if (s < 0) {
        throw PreconditionError("negative sumset level");
    }
    if (previous != nullptr) {
        if (previous->level() != s - 1) {
            throw PreconditionError("previous level must be s - 1");
        }
        return minkowski_step(a.points(), a.degree(), a.divisor(), *previous, options);
    }
    SumsetLevel current = zero_level(a.dim(), a.degree(), a.divisor());
    for (std::int64_t t = 1; t <= s; ++t) {
        current = minkowski_step(a.points(), a.degree(), a.divisor(), current, options);
    }
    return current;
}

// ---------------------------------------------------------------------------
// SumsetTable

SumsetTable::SumsetTable(GeneratorSet a, EngineOptions options) : set_(std::move(a)), options_(options) {}

const SumsetLevel& SumsetTable::level(std::int64_t s) {
    if (s < 0) {
        throw PreconditionError("negative sumset level");
    }
    std::lock_guard lock(mutex_);
    if (levels_.empty()) {
        levels_.push_back(std::make_unique<SumsetLevel>(zero_level(set_.dim(), set_.degree(), set_.divisor())));
    }
    while (static_cast<std::int64_t>(levels_.size()) <= s) {
        levels_.push_back(std::make_unique<SumsetLevel>(
            minkowski_step(set_.points(), set_.degree(), set_.divisor(), *levels_.back(), options_)));
    }
    return *levels_[static_cast<std::size_t>(s)];
}

bool SumsetTable::contains(std::span<const std::int64_t> b, std::int64_t s) {
    if (s < 0 || static_cast<int>(b.size()) != set_.dim()) {
        return false;
    }
    std::int64_t norm = 0;
    for (const auto c : b) {
        if (c < 0) {
            return false;
        }
        norm += c;
    }
    if (norm > s * set_.degree() || norm % set_.divisor() != 0) {
        return false;
    }
    return level(s).contains(b);
}

bool SumsetTable::semigroup_member(std::span<const std::int64_t> y) {
    if (static_cast<int>(y.size()) != set_.dim() + 1) {
        return false;
    }
    std::int64_t norm = 0;
    for (const auto c : y) {
        if (c < 0) {
            return false;
        }
        norm += c;
    }
    if (norm % set_.degree() != 0) {
        return false;
    }
    return contains(y.subspan(1), norm / set_.degree());
}

std::int64_t SumsetTable::computed_levels() const {
    std::lock_guard lock(mutex_);
    return static_cast<std::int64_t>(levels_.size()) - 1;
}

std::vector<std::uint64_t> hilbert_function(SumsetTable& table, std::int64_t s_max) {
    if (s_max < 0) {
        throw PreconditionError("s_max must be nonnegative");
    }
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(s_max) + 1);
    for (std::int64_t s = 0; s <= s_max; ++s) {
        out.push_back(table.level(s).cardinality());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Step threshold

std::int64_t step_threshold(int d, std::int64_t degree, std::int64_t divisor) {
    if (d < 1 || degree < 2 || divisor < 1 || degree % divisor != 0) {
        throw PreconditionError("step_threshold needs d >= 1, D >= 2 and e | D");
    }
    // d - (d+e-1)/D = (dD - d - e + 1)/D, numerator >= (d-1)(D-1) >= 0
    return ceil_div(d * degree - d - divisor + 1, degree);
}

bool simplex_step_holds(int d, std::int64_t degree, std::int64_t divisor, std::int64_t s, const EngineOptions& options) {
    SimplexSlice lower(d, degree, s, divisor);
    SimplexSlice upper(d, degree, s + 1, divisor);
    if (upper.size() > options.max_slice_points) {
        throw ResourceLimitError("step check slice above the cap");
    }
    std::vector<std::uint64_t> hit((upper.size() + 63) / 64, 0);
    std::vector<std::int64_t> z(static_cast<std::size_t>(d));
    for (SimplexSlice::Cursor c(lower, 0); c.valid(); c.next()) {
        std::copy(c.data(), c.data() + d, z.begin());
        auto mark = [&] {
            const auto r = upper.rank_unchecked(z.data());
            hit[r >> 6] |= std::uint64_t{1} << (r & 63);
        };
        mark();
        for (int j = 0; j < d; ++j) {
            z[static_cast<std::size_t>(j)] += degree;
            mark();
            z[static_cast<std::size_t>(j)] -= degree;
        }
    }
    std::uint64_t covered = 0;
    for (const auto w : hit) {
        covered += static_cast<std::uint64_t>(std::popcount(w));
    }
    return covered == upper.size();
}

} // namespace toric
