#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toric {

/// Knobs shared by every stage that materializes sumset tables.
struct EngineOptions {
    /// Largest simplex slice (number of lattice points) a level may occupy.
    std::uint64_t max_slice_points = std::uint64_t{1} << 27;
    /// Worker threads for the Minkowski step; 0 means hardware concurrency.
    unsigned threads = 0;
};

/// A point of N^k. The coordinate sum is cached.
class LatticeVector {
  public:
    LatticeVector() = default;
    explicit LatticeVector(std::vector<std::int64_t> coords);

    static LatticeVector zero(int dim);
    static LatticeVector axis(int dim, int index, std::int64_t scale = 1);

    [[nodiscard]] int dim() const { return static_cast<int>(coords_.size()); }
    [[nodiscard]] std::int64_t norm() const { return norm_; }
    [[nodiscard]] std::int64_t operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] std::span<const std::int64_t> coords() const { return coords_; }

    LatticeVector operator+(const LatticeVector& other) const;
    /// this - other, or nullopt when some coordinate would go negative.
    [[nodiscard]] std::optional<LatticeVector> minus(const LatticeVector& other) const;

    /// Drops coordinate `index`.
    [[nodiscard]] LatticeVector erase(int index) const;
    /// Inserts `value` in front.
    [[nodiscard]] LatticeVector prepend(std::int64_t value) const;

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
        return a.coords_ <=> b.coords_;
    }

    [[nodiscard]] std::string to_string() const;

  private:
    std::vector<std::int64_t> coords_;
    std::int64_t norm_ = 0;
};

/// The finite set A of N^d with 0 and D*e_i' in A for every axis i, where D is the
/// largest coordinate sum. Points are sorted lexicographically and pairwise distinct.
class GeneratorSet {
  public:
    /// Validates and sorts. Throws ValidationError on duplicates, wrong dimension,
    /// negative coordinates, D < 2, or a missing 0 / D*e_i'.
    static GeneratorSet create(int d, std::vector<LatticeVector> points);

    [[nodiscard]] int dim() const { return dim_; }
    /// D, the maximal norm.
    [[nodiscard]] std::int64_t degree() const { return degree_; }
    /// gcd(D, |a| for a in A).
    [[nodiscard]] std::int64_t divisor() const { return divisor_; }
    [[nodiscard]] std::size_t size() const { return points_.size(); }
    [[nodiscard]] const std::vector<LatticeVector>& points() const { return points_; }
    [[nodiscard]] bool contains(const LatticeVector& p) const;
    /// gcd of every coordinate of every homogenized generator.
    [[nodiscard]] std::int64_t homogenized_coordinate_gcd() const;

    friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
        return a.dim_ == b.dim_ && a.points_ == b.points_;
    }

  private:
    GeneratorSet() = default;
    int dim_ = 0;
    std::int64_t degree_ = 0;
    std::int64_t divisor_ = 1;
    std::vector<LatticeVector> points_;
};

/// A lifted into N^{d+1} by a -> (D - |a|, a); every point has norm D.
struct HomogenizedGeneratorSet {
    GeneratorSet parent;
    std::vector<LatticeVector> points; // same order as parent.points()
};

HomogenizedGeneratorSet homogenize(const GeneratorSet& a);

/// Inverse of homogenize: points of N^{d+1}, all of norm D, back to a generator set of N^d.
GeneratorSet dehomogenize(const std::vector<LatticeVector>& homogeneous_points);

/// Lattice points {y in N^d : |y| <= sD, e divides |y|} with a colexicographic ranking.
///
/// Colex order compares the last coordinate first. Rank of y is the number of slice
/// points strictly below it, computed in O(d) from a table of restricted composition
/// counts.
class SimplexSlice {
  public:
    SimplexSlice(int d, std::int64_t degree, std::int64_t level, std::int64_t divisor = 1);

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] std::int64_t degree() const { return degree_; }
    [[nodiscard]] std::int64_t level() const { return level_; }
    [[nodiscard]] std::int64_t divisor() const { return divisor_; }
    [[nodiscard]] std::int64_t max_norm() const { return max_norm_; }
    [[nodiscard]] std::uint64_t size() const { return size_; }

    [[nodiscard]] bool contains(std::span<const std::int64_t> y) const;
    /// Throws OutOfDomainError when y is not in the slice.
    [[nodiscard]] std::uint64_t rank(std::span<const std::int64_t> y) const;
    [[nodiscard]] LatticeVector unrank(std::uint64_t index) const;

    /// Rank without the membership check. `y` must lie in the slice.
    [[nodiscard]] std::uint64_t rank_unchecked(const std::int64_t* y) const {
        std::uint64_t r = 0;
        std::int64_t rest = max_norm_;
        for (int j = dim_ - 1; j >= 0; --j) {
            const std::uint64_t* row = cumulative_.data() + static_cast<std::size_t>(j) * stride_;
            // row[m + 1] = sum_{u <= m} P_j(u)
            r += row[rest + 1] - row[rest - y[j] + 1];
            rest -= y[j];
        }
        return r;
    }

    /// Walks the slice in rank order.
    class Cursor {
      public:
        Cursor(const SimplexSlice& slice, std::uint64_t start);
        [[nodiscard]] bool valid() const { return valid_; }
        [[nodiscard]] std::uint64_t index() const { return index_; }
        [[nodiscard]] const std::int64_t* data() const { return point_.data(); }
        [[nodiscard]] std::int64_t norm() const { return norm_; }
        void next();

      private:
        const SimplexSlice* slice_;
        std::vector<std::int64_t> point_;
        std::int64_t norm_ = 0;
        std::uint64_t index_ = 0;
        bool valid_ = false;
    };

  private:
    [[nodiscard]] std::uint64_t cumulative(int j, std::int64_t m) const {
        return m < 0 ? 0 : cumulative_[static_cast<std::size_t>(j) * stride_ + static_cast<std::size_t>(m) + 1];
    }

    int dim_;
    std::int64_t degree_;
    std::int64_t level_;
    std::int64_t divisor_;
    std::int64_t max_norm_;
    std::uint64_t size_ = 0;
    std::size_t stride_ = 0;
    // Row j, column m+1: number of x in N^j with |x| <= u <= m summed over u, where
    // for each u only |x| = u (mod e) is counted. Column 0 is the empty prefix.
    std::vector<std::uint64_t> cumulative_;
};

/// Indicator of sA inside the slice Delta_{s,e}.
class SumsetLevel {
  public:
    SumsetLevel(std::int64_t s, SimplexSlice slice);

    [[nodiscard]] std::int64_t level() const { return level_; }
    [[nodiscard]] const SimplexSlice& slice() const { return slice_; }
    [[nodiscard]] std::uint64_t cardinality() const { return cardinality_; }

    [[nodiscard]] bool contains(std::span<const std::int64_t> y) const;
    [[nodiscard]] bool test_rank(std::uint64_t r) const { return (bits_[r >> 6] >> (r & 63)) & 1u; }
    [[nodiscard]] std::vector<LatticeVector> members() const;
    /// Slice points that are not in the level.
    [[nodiscard]] std::vector<LatticeVector> complement() const;

    [[nodiscard]] std::span<const std::uint64_t> words() const { return bits_; }

  private:
    friend SumsetLevel minkowski_step(const std::vector<LatticeVector>&, std::int64_t, std::int64_t,
                                      const SumsetLevel&, const EngineOptions&);
    friend SumsetLevel zero_level(int, std::int64_t, std::int64_t);
    void recount();

    std::int64_t level_;
    SimplexSlice slice_;
    std::vector<std::uint64_t> bits_;
    std::uint64_t cardinality_ = 0;
};

/// Level 0 ({0}) stored in Delta_{0,e}.
SumsetLevel zero_level(int d, std::int64_t degree, std::int64_t divisor);

/// (s+1)A from sA. `generators` is A; the result lives in Delta_{s+1,e}.
SumsetLevel minkowski_step(const std::vector<LatticeVector>& generators, std::int64_t degree, std::int64_t divisor,
                           const SumsetLevel& previous, const EngineOptions& options);

/// sA, stepping from `previous` when given (it must be level s-1) and from {0} otherwise.
SumsetLevel sumset_level(const GeneratorSet& a, std::int64_t s, const SumsetLevel* previous = nullptr,
                         const EngineOptions& options = {});

/// Append-only cache of the levels 0A, 1A, 2A, ... for one generator set.
/// Safe to share between threads; levels are computed on first request.
class SumsetTable {
  public:
    explicit SumsetTable(GeneratorSet a, EngineOptions options = {});

    [[nodiscard]] const GeneratorSet& generators() const { return set_; }
    [[nodiscard]] const EngineOptions& options() const { return options_; }

    const SumsetLevel& level(std::int64_t s);
    /// b in sA.
    bool contains(std::span<const std::int64_t> b, std::int64_t s);
    /// y in the semigroup generated by the homogenized set, y in N^{d+1}.
    bool semigroup_member(std::span<const std::int64_t> y);
    /// Highest level computed so far (-1 when none).
    [[nodiscard]] std::int64_t computed_levels() const;

  private:
    GeneratorSet set_;
    EngineOptions options_;
    mutable std::mutex mutex_;
    std::deque<std::unique_ptr<SumsetLevel>> levels_;
};

/// |sA| for s = 0..s_max.
std::vector<std::uint64_t> hilbert_function(SumsetTable& table, std::int64_t s_max);

/// Smallest s with Delta_{s,e} + {0, D e_1', ..., D e_d'} = Delta_{s+1,e}, i.e. ceil(d - (d+e-1)/D).
std::int64_t step_threshold(int d, std::int64_t degree, std::int64_t divisor);

/// Direct set computation of Delta_{s,e} + {0, D e_1', ..., D e_d'} == Delta_{s+1,e}.
bool simplex_step_holds(int d, std::int64_t degree, std::int64_t divisor, std::int64_t s,
                        const EngineOptions& options = {});

std::int64_t ceil_div(std::int64_t a, std::int64_t b);

} // namespace toric
