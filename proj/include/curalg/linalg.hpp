#pragma once

#include <climits>
#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "curalg/rational.hpp"
#include "curalg/weight.hpp"

namespace curalg {

/// Sparse vector over Q: entries sorted by index, no explicit zeros.
class SparseVector {
  public:
    using Entry = std::pair<int, Rational>;

    SparseVector() = default;
    static SparseVector unit(int index, const Rational& value = 1);
    /// Sorts, merges duplicate indices and drops zeros.
    static SparseVector from_unsorted(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }
    Rational at(int index) const;
    int max_index() const { return entries_.empty() ? -1 : entries_.back().first; }

    /// this += c * other
    void add_scaled(const SparseVector& other, const Rational& c);
    SparseVector scaled(const Rational& c) const;

    friend SparseVector operator+(const SparseVector& a, const SparseVector& b);
    friend SparseVector operator-(const SparseVector& a, const SparseVector& b);
    friend bool operator==(const SparseVector& a, const SparseVector& b) = default;

  private:
    std::vector<Entry> entries_;
};

/// Column-major sparse matrix over Q.
class SparseMatrix {
  public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols);
    static SparseMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(columns_.size()); }
    const SparseVector& column(int j) const { return columns_[j]; }
    void set_column(int j, SparseVector column);
    Rational at(int i, int j) const { return columns_[j].at(i); }

    SparseVector apply(const SparseVector& v) const;
    bool is_zero() const;
    std::size_t nnz() const;
    /// (row, col, value) in column-major order.
    std::vector<std::tuple<int, int, Rational>> triples() const;

    SparseMatrix scaled(const Rational& c) const;
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

  private:
    int rows_ = 0;
    std::vector<SparseVector> columns_;
};

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

/// a (x) 1 + 1 (x) b, with index i * dim(b) + j.
SparseMatrix kron_sum(const SparseMatrix& a, const SparseMatrix& b);
SparseVector kron(const SparseVector& a, const SparseVector& b, int dim_b);

/// Accumulates c * A for several matrices into one.
void add_scaled(SparseMatrix& target, const SparseMatrix& a, const Rational& c);

/// Row echelon basis of a subspace of Q^dim, kept in insertion order.
///
/// Row j has a unit pivot, is zero before its pivot and zero at the pivot of
/// every earlier row. Tags must be non-decreasing in insertion order, so the
/// rows with tag <= t always form a prefix that is itself an echelon basis.
class Echelon {
  public:
    struct Row {
        int pivot;
        int tag;
        std::vector<std::pair<int, Rational>> entries;
    };

    explicit Echelon(int dim = 0);

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const Row& row(int j) const { return rows_[j]; }
    bool is_pivot(int col) const { return pivot_row_[col] >= 0; }

    /// Reduces v in place against the rows with tag <= max_tag. When coeffs is
    /// given, appends (row, c) for every row subtracted, so that the original
    /// v equals sum c * row + (reduced v).
    void reduce(std::vector<Rational>& v, int max_tag = INT_MAX,
                std::vector<std::pair<int, Rational>>* coeffs = nullptr) const;

    /// Reduces v in place and appends it as a new row if nonzero. Returns the
    /// new row index or -1.
    int insert(std::vector<Rational>& v, int tag = 0);

  private:
    int dim_;
    std::vector<Row> rows_;
    std::vector<int> pivot_row_;
};

/// Block key: (grade, weight). Layouts without a grading use grade 0 throughout.
struct BlockKey {
    int grade = 0;
    Weight weight;
    auto operator<=>(const BlockKey&) const = default;
};

/// Partition of the coordinates of a module into (grade, weight) blocks.
struct BlockLayout {
    std::vector<BlockKey> keys;
    std::vector<int> block_of;
    std::vector<int> local_of;
    std::vector<std::vector<int>> members;

    static std::shared_ptr<const BlockLayout> build(const std::vector<BlockKey>& per_index);
    int dim() const { return static_cast<int>(block_of.size()); }
    int num_blocks() const { return static_cast<int>(keys.size()); }
    std::optional<int> find(const BlockKey& key) const;
};

/// Splits v into its block components.
std::vector<std::pair<int, SparseVector>> split_by_block(const SparseVector& v,
                                                         const BlockLayout& layout);

/// Subspace spanned by block-homogeneous vectors, with one Echelon per block.
class BlockedSubspace {
  public:
    explicit BlockedSubspace(std::shared_ptr<const BlockLayout> layout);

    const BlockLayout& layout() const { return *layout_; }
    std::shared_ptr<const BlockLayout> layout_ptr() const { return layout_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    int block_rank(int block) const { return blocks_[block].rank(); }
    int block_rank(int block, int max_tag) const;

    /// v must be supported in a single block. Returns the new row id or -1.
    int insert(const SparseVector& v, int tag = 0);

    /// Reduction of v modulo the rows with tag <= max_tag.
    SparseVector residual(const SparseVector& v, int max_tag = INT_MAX) const;
    bool contains(const SparseVector& v) const { return residual(v).is_zero(); }
    /// v = sum c * row(id) + residual.
    std::vector<std::pair<int, Rational>> coordinates(const SparseVector& v,
                                                      SparseVector* residual = nullptr,
                                                      int max_tag = INT_MAX) const;

    int num_rows() const { return dim(); }
    const SparseVector& row(int id) const { return rows_[id].vector; }
    int row_block(int id) const { return rows_[id].block; }
    int row_tag(int id) const { return rows_[id].tag; }
    bool is_pivot(int global_index) const;

  private:
    struct RowInfo {
        int block;
        int local_row;
        int tag;
        SparseVector vector;
    };
    std::vector<Rational> to_dense(const SparseVector& v, int block) const;
    SparseVector to_sparse(const std::vector<Rational>& dense, int block) const;

    std::shared_ptr<const BlockLayout> layout_;
    std::vector<Echelon> blocks_;
    std::vector<std::vector<int>> block_row_ids_;
    std::vector<RowInfo> rows_;
};

/// Enlarges space to the smallest subspace containing it, the seeds, and
/// stable under every operator. Operators must map blocks into blocks.
/// Returns the ids of the rows added.
std::vector<int> close_under(BlockedSubspace& space, const std::vector<SparseVector>& seeds,
                             std::span<const SparseMatrix* const> ops, int tag = 0);

}  // namespace curalg
