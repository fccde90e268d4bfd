#include "curalg/linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace curalg {

// ---- weights ----------------------------------------------------------------

Weight operator+(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
    Weight r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
    Weight r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Weight operator-(const Weight& a) { return scaled(a, -1); }

Weight scaled(const Weight& a, int k) {
    Weight r(a);
    for (auto& x : r) x *= k;
    return r;
}

bool is_zero_weight(const Weight& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

std::string weight_string(const Weight& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + "]";
}

// ---- SparseVector -----------------------------------------------------------

SparseVector SparseVector::unit(int index, const Rational& value) {
    SparseVector v;
    if (value != 0) v.entries_.emplace_back(index, value);
    return v;
}

SparseVector SparseVector::from_unsorted(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector v;
    v.entries_.reserve(entries.size());
    for (auto& e : entries) {
        if (!v.entries_.empty() && v.entries_.back().first == e.first) {
            v.entries_.back().second += e.second;
        } else {
            if (!v.entries_.empty() && v.entries_.back().second == 0) v.entries_.pop_back();
            v.entries_.push_back(std::move(e));
        }
    }
    if (!v.entries_.empty() && v.entries_.back().second == 0) v.entries_.pop_back();
    return v;
}

Rational SparseVector::at(int index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, int i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) return it->second;
    return 0;
}

void SparseVector::add_scaled(const SparseVector& other, const Rational& c) {
    if (c == 0 || other.is_zero()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin(), ae = entries_.end();
    auto b = other.entries_.begin(), be = other.entries_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == ae || b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Rational s = a->second + c * b->second;
            if (s != 0) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(out);
}

SparseVector SparseVector::scaled(const Rational& c) const {
    SparseVector v;
    if (c == 0) return v;
    v.entries_ = entries_;
    for (auto& e : v.entries_) e.second *= c;
    return v;
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
    SparseVector r = a;
    r.add_scaled(b, 1);
    return r;
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
    SparseVector r = a;
    r.add_scaled(b, -1);
    return r;
}

// ---- SparseMatrix -----------------------------------------------------------

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), columns_(cols) {}

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.columns_[i] = SparseVector::unit(i);
    return m;
}

void SparseMatrix::set_column(int j, SparseVector column) {
    if (column.max_index() >= rows_) throw std::out_of_range("column entry out of range");
    columns_[j] = std::move(column);
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
    std::vector<SparseVector::Entry> acc;
    for (const auto& [j, c] : v.entries()) {
        if (j >= cols()) throw std::out_of_range("vector index out of range");
        for (const auto& [i, a] : columns_[j].entries()) acc.emplace_back(i, a * c);
    }
    return SparseVector::from_unsorted(std::move(acc));
}

bool SparseMatrix::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(),
                       [](const SparseVector& c) { return c.is_zero(); });
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.nnz();
    return n;
}

std::vector<std::tuple<int, int, Rational>> SparseMatrix::triples() const {
    std::vector<std::tuple<int, int, Rational>> out;
    for (int j = 0; j < cols(); ++j)
        for (const auto& [i, a] : columns_[j].entries()) out.emplace_back(i, j, a);
    return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
    SparseMatrix m(rows_, cols());
    for (int j = 0; j < cols(); ++j) m.columns_[j] = columns_[j].scaled(c);
    return m;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    SparseMatrix m(a.rows(), b.cols());
    for (int j = 0; j < b.cols(); ++j) m.columns_[j] = a.apply(b.columns_[j]);
    return m;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix m = a;
    add_scaled(m, b, 1);
    return m;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix m = a;
    add_scaled(m, b, -1);
    return m;
}

void add_scaled(SparseMatrix& target, const SparseMatrix& a, const Rational& c) {
    if (target.rows() != a.rows() || target.cols() != a.cols())
        throw std::invalid_argument("matrix shape mismatch");
    for (int j = 0; j < a.cols(); ++j) {
        if (a.column(j).is_zero()) continue;
        SparseVector col = target.column(j);
        col.add_scaled(a.column(j), c);
        target.set_column(j, std::move(col));
    }
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

SparseMatrix kron_sum(const SparseMatrix& a, const SparseMatrix& b) {
    const int da = a.rows(), db = b.rows();
    SparseMatrix m(da * db, da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) {
            std::vector<SparseVector::Entry> e;
            for (const auto& [k, c] : a.column(i).entries()) e.emplace_back(k * db + j, c);
            for (const auto& [k, c] : b.column(j).entries()) e.emplace_back(i * db + k, c);
            m.set_column(i * db + j, SparseVector::from_unsorted(std::move(e)));
        }
    return m;
}

SparseVector kron(const SparseVector& a, const SparseVector& b, int db) {
    std::vector<SparseVector::Entry> e;
    for (const auto& [i, x] : a.entries())
        for (const auto& [j, y] : b.entries()) e.emplace_back(i * db + j, x * y);
    return SparseVector::from_unsorted(std::move(e));
}


// ---- Echelon ----------------------------------------------------------------

Echelon::Echelon(int dim) : dim_(dim), pivot_row_(dim, -1) {}

void Echelon::reduce(std::vector<Rational>& v, int max_tag,
                     std::vector<std::pair<int, Rational>>* coeffs) const {
    Rational tmp;
    for (int j = 0; j < rank(); ++j) {
        const Row& row = rows_[j];
        if (row.tag > max_tag) break;
        if (sgn(v[row.pivot]) == 0) continue;
        Rational c = v[row.pivot];
        for (const auto& [k, a] : row.entries) {
            mpq_mul(tmp.get_mpq_t(), c.get_mpq_t(), a.get_mpq_t());
            mpq_sub(v[k].get_mpq_t(), v[k].get_mpq_t(), tmp.get_mpq_t());
        }
        if (coeffs) coeffs->emplace_back(j, std::move(c));
    }
}

int Echelon::insert(std::vector<Rational>& v, int tag) {
    if (!rows_.empty() && tag < rows_.back().tag)
        throw std::logic_error("echelon tags must be non-decreasing");
    reduce(v);
    int p = 0;
    while (p < dim_ && sgn(v[p]) == 0) ++p;
    if (p == dim_) return -1;
    Row row{p, tag, {}};
    Rational inv = 1 / v[p];
    for (int k = p; k < dim_; ++k)
        if (sgn(v[k]) != 0) row.entries.emplace_back(k, v[k] * inv);
    pivot_row_[p] = rank();
    rows_.push_back(std::move(row));
    return rank() - 1;
}

// ---- BlockLayout ------------------------------------------------------------

std::shared_ptr<const BlockLayout> BlockLayout::build(const std::vector<BlockKey>& per_index) {
    auto layout = std::make_shared<BlockLayout>();
    std::map<BlockKey, int> index;
    for (const auto& k : per_index) index.emplace(k, 0);
    for (auto& [k, b] : index) {
        b = static_cast<int>(layout->keys.size());
        layout->keys.push_back(k);
    }
    layout->members.resize(layout->keys.size());
    layout->block_of.resize(per_index.size());
    layout->local_of.resize(per_index.size());
    for (std::size_t i = 0; i < per_index.size(); ++i) {
        int b = index.at(per_index[i]);
        layout->block_of[i] = b;
        layout->local_of[i] = static_cast<int>(layout->members[b].size());
        layout->members[b].push_back(static_cast<int>(i));
    }
    return layout;
}

std::optional<int> BlockLayout::find(const BlockKey& key) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it != keys.end() && *it == key) return static_cast<int>(it - keys.begin());
    return std::nullopt;
}

std::vector<std::pair<int, SparseVector>> split_by_block(const SparseVector& v,
                                                         const BlockLayout& layout) {
    std::map<int, std::vector<SparseVector::Entry>> parts;
    for (const auto& [i, c] : v.entries()) parts[layout.block_of.at(i)].emplace_back(i, c);
    std::vector<std::pair<int, SparseVector>> out;
    for (auto& [b, e] : parts) out.emplace_back(b, SparseVector::from_unsorted(std::move(e)));
    return out;
}

// ---- BlockedSubspace --------------------------------------------------------

BlockedSubspace::BlockedSubspace(std::shared_ptr<const BlockLayout> layout)
    : layout_(std::move(layout)) {
    blocks_.reserve(layout_->num_blocks());
    for (const auto& m : layout_->members) blocks_.emplace_back(static_cast<int>(m.size()));
    block_row_ids_.resize(layout_->num_blocks());
}

int BlockedSubspace::block_rank(int block, int max_tag) const {
    const Echelon& e = blocks_[block];
    int n = 0;
    while (n < e.rank() && e.row(n).tag <= max_tag) ++n;
    return n;
}

std::vector<Rational> BlockedSubspace::to_dense(const SparseVector& v, int block) const {
    std::vector<Rational> d(layout_->members[block].size());
    for (const auto& [i, c] : v.entries()) {
        if (layout_->block_of.at(i) != block)
            throw std::logic_error("vector is not supported in a single block");
        d[layout_->local_of[i]] = c;
    }
    return d;
}

SparseVector BlockedSubspace::to_sparse(const std::vector<Rational>& dense, int block) const {
    std::vector<SparseVector::Entry> e;
    const auto& mem = layout_->members[block];
    for (std::size_t k = 0; k < dense.size(); ++k)
        if (sgn(dense[k]) != 0) e.emplace_back(mem[k], dense[k]);
    return SparseVector::from_unsorted(std::move(e));
}

int BlockedSubspace::insert(const SparseVector& v, int tag) {
    if (v.is_zero()) return -1;
    int block = layout_->block_of.at(v.entries().front().first);
    auto dense = to_dense(v, block);
    int local = blocks_[block].insert(dense, tag);
    if (local < 0) return -1;
    std::vector<Rational> row(dense.size());
    for (const auto& [k, a] : blocks_[block].row(local).entries) row[k] = a;
    int id = static_cast<int>(rows_.size());
    rows_.push_back({block, local, tag, to_sparse(row, block)});
    block_row_ids_[block].push_back(id);
    return id;
}

SparseVector BlockedSubspace::residual(const SparseVector& v, int max_tag) const {
    SparseVector out;
    for (const auto& [b, part] : split_by_block(v, *layout_)) {
        auto dense = to_dense(part, b);
        blocks_[b].reduce(dense, max_tag);
        out = out + to_sparse(dense, b);
    }
    return out;
}

std::vector<std::pair<int, Rational>> BlockedSubspace::coordinates(const SparseVector& v,
                                                                   SparseVector* residual,
                                                                   int max_tag) const {
    std::vector<std::pair<int, Rational>> coords;
    SparseVector rest;
    for (const auto& [b, part] : split_by_block(v, *layout_)) {
        auto dense = to_dense(part, b);
        std::vector<std::pair<int, Rational>> local;
        blocks_[b].reduce(dense, max_tag, &local);
        for (auto& [j, c] : local) coords.emplace_back(block_row_ids_[b][j], std::move(c));
        if (residual) rest = rest + to_sparse(dense, b);
    }
    std::sort(coords.begin(), coords.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (residual) *residual = std::move(rest);
    return coords;
}

bool BlockedSubspace::is_pivot(int global_index) const {
    return blocks_[layout_->block_of.at(global_index)].is_pivot(layout_->local_of[global_index]);
}

std::vector<int> close_under(BlockedSubspace& space, const std::vector<SparseVector>& seeds,
                             std::span<const SparseMatrix* const> ops, int tag) {
    std::vector<int> added;
    std::deque<SparseVector> queue;
    auto push = [&](const SparseVector& v) {
        for (auto& [b, part] : split_by_block(v, space.layout())) {
            int id = space.insert(part, tag);
            if (id >= 0) {
                added.push_back(id);
                queue.push_back(space.row(id));
            }
        }
    };
    for (const auto& s : seeds) push(s);
    while (!queue.empty()) {
        SparseVector v = std::move(queue.front());
        queue.pop_front();
        for (const SparseMatrix* op : ops) {
            SparseVector w = op->apply(v);
            if (!w.is_zero()) push(w);
        }
    }
    return added;
}

}  // namespace curalg
