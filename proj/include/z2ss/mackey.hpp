#pragma once

// F2-level Mackey functors for Z/2: the four axioms, the catalog of named
// functors, and decomposition of block-diagonal shapes into catalog summands.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace z2ss {

// Dense 0/1 matrix over F2, one 64-bit mask per row.  Shapes here never
// exceed a handful of rows, so no blocking is needed.
class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), bits_(static_cast<size_t>(rows), 0) {
        if (rows < 0 || cols < 0 || cols > 64) throw std::invalid_argument("F2Matrix: bad shape");
    }

    static F2Matrix identity(int n) {
        F2Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int r, int c) const {
        check(r, c);
        return static_cast<int>((bits_[static_cast<size_t>(r)] >> c) & 1u);
    }
    void set(int r, int c, int v) {
        check(r, c);
        if (v != 0)
            bits_[static_cast<size_t>(r)] |= (uint64_t{1} << c);
        else
            bits_[static_cast<size_t>(r)] &= ~(uint64_t{1} << c);
    }

    F2Matrix operator*(const F2Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("F2Matrix: shape mismatch in product");
        F2Matrix out(rows_, rhs.cols_);
        for (int i = 0; i < rows_; ++i) {
            uint64_t acc = 0;
            for (int k = 0; k < cols_; ++k)
                if (((bits_[static_cast<size_t>(i)] >> k) & 1u) != 0) acc ^= rhs.bits_[static_cast<size_t>(k)];
            out.bits_[static_cast<size_t>(i)] = acc;
        }
        return out;
    }

    F2Matrix operator+(const F2Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("F2Matrix: shape mismatch in sum");
        F2Matrix out(rows_, cols_);
        for (int i = 0; i < rows_; ++i) out.bits_[static_cast<size_t>(i)] = bits_[static_cast<size_t>(i)] ^ rhs.bits_[static_cast<size_t>(i)];
        return out;
    }

    bool is_zero() const {
        for (uint64_t row : bits_)
            if (row != 0) return false;
        return true;
    }

    friend bool operator==(const F2Matrix& a, const F2Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
    }

  private:
    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("F2Matrix: index out of range");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<uint64_t> bits_;
};

// A Z/2 Mackey functor with F2 vector-space levels.  `res` maps the fixed
// level into the free level (i^*), `tr` maps back (i_*), `invol` is the Weyl
// action t^* on the free level.
struct MackeyShape {
    int dim_fixed = 0;
    int dim_free = 0;
    F2Matrix invol;  // free x free
    F2Matrix res;    // free x fixed
    F2Matrix tr;     // fixed x free

    void check_dims() const {
        if (dim_fixed < 0 || dim_free < 0) throw std::invalid_argument("MackeyShape: negative dimension");
        if (invol.rows() != dim_free || invol.cols() != dim_free) throw std::invalid_argument("MackeyShape: invol shape");
        if (res.rows() != dim_free || res.cols() != dim_fixed) throw std::invalid_argument("MackeyShape: res shape");
        if (tr.rows() != dim_fixed || tr.cols() != dim_free) throw std::invalid_argument("MackeyShape: tr shape");
    }

    friend bool operator==(const MackeyShape& a, const MackeyShape& b) {
        return a.dim_fixed == b.dim_fixed && a.dim_free == b.dim_free && a.invol == b.invol && a.res == b.res &&
               a.tr == b.tr;
    }
};

// The four conditions, by index:
//   1: invol^2 = id          2: invol . res = res
//   3: tr . invol = tr       4: res . tr = id + invol
// Returns the indices that fail; empty means pass.
inline std::vector<int> check_axioms(const MackeyShape& m) {
    m.check_dims();
    std::vector<int> violated;
    const F2Matrix id_free = F2Matrix::identity(m.dim_free);
    if (!(m.invol * m.invol == id_free)) violated.push_back(1);
    if (!(m.invol * m.res == m.res)) violated.push_back(2);
    if (!(m.tr * m.invol == m.tr)) violated.push_back(3);
    if (!(m.res * m.tr == id_free + m.invol)) violated.push_back(4);
    return violated;
}

enum class NamedFunctor { Constant, Bracket, DualConstant, FreeOnly, Zero };

inline const char* functor_name(NamedFunctor f) {
    switch (f) {
        case NamedFunctor::Constant: return "constant";
        case NamedFunctor::Bracket: return "bracket";
        case NamedFunctor::DualConstant: return "dual";
        case NamedFunctor::FreeOnly: return "free";
        case NamedFunctor::Zero: return "zero";
    }
    return "?";
}

// Multisets are kept sorted; the zero functor is the empty multiset.
using FunctorMultiset = std::vector<NamedFunctor>;

inline MackeyShape named_shape(NamedFunctor f) {
    switch (f) {
        case NamedFunctor::Constant: {
            MackeyShape m{1, 1, F2Matrix::identity(1), F2Matrix(1, 1), F2Matrix(1, 1)};
            m.res.set(0, 0, 1);
            return m;
        }
        case NamedFunctor::Bracket:
            return MackeyShape{1, 0, F2Matrix(0, 0), F2Matrix(0, 1), F2Matrix(1, 0)};
        case NamedFunctor::DualConstant: {
            MackeyShape m{1, 1, F2Matrix::identity(1), F2Matrix(1, 1), F2Matrix(1, 1)};
            m.tr.set(0, 0, 1);
            return m;
        }
        case NamedFunctor::FreeOnly:
            return MackeyShape{0, 1, F2Matrix::identity(1), F2Matrix(1, 0), F2Matrix(0, 1)};
        case NamedFunctor::Zero:
            return MackeyShape{0, 0, F2Matrix(0, 0), F2Matrix(0, 0), F2Matrix(0, 0)};
    }
    throw std::invalid_argument("named_shape: bad functor");
}

inline MackeyShape direct_sum(const FunctorMultiset& summands) {
    int dim_fixed = 0;
    int dim_free = 0;
    for (NamedFunctor f : summands) {
        MackeyShape s = named_shape(f);
        dim_fixed += s.dim_fixed;
        dim_free += s.dim_free;
    }
    MackeyShape out{dim_fixed, dim_free, F2Matrix(dim_free, dim_free), F2Matrix(dim_free, dim_fixed),
                    F2Matrix(dim_fixed, dim_free)};
    int fo = 0;  // fixed offset
    int uo = 0;  // free offset
    for (NamedFunctor f : summands) {
        MackeyShape s = named_shape(f);
        for (int i = 0; i < s.dim_free; ++i)
            for (int j = 0; j < s.dim_free; ++j) out.invol.set(uo + i, uo + j, s.invol.at(i, j));
        for (int i = 0; i < s.dim_free; ++i)
            for (int j = 0; j < s.dim_fixed; ++j) out.res.set(uo + i, fo + j, s.res.at(i, j));
        for (int i = 0; i < s.dim_fixed; ++i)
            for (int j = 0; j < s.dim_free; ++j) out.tr.set(fo + i, uo + j, s.tr.at(i, j));
        fo += s.dim_fixed;
        uo += s.dim_free;
    }
    return out;
}

// Splits a block-diagonal shape into catalog summands: nodes are basis vectors
// of the two levels, joined when res/tr/invol couples them; each connected
// component must match a catalog functor.  Returns nullopt (Unrecognized) for
// anything larger — shapes assembled by mackey_eval are always block-diagonal,
// a general Krull-Schmidt decomposition is out of scope.
inline std::optional<FunctorMultiset> decompose(const MackeyShape& m) {
    if (!check_axioms(m).empty()) throw std::invalid_argument("decompose: shape violates the Mackey axioms");

    const int n = m.dim_fixed + m.dim_free;  // fixed nodes first
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };

    for (int u = 0; u < m.dim_free; ++u)
        for (int f = 0; f < m.dim_fixed; ++f)
            if (m.res.at(u, f) != 0 || m.tr.at(f, u) != 0) unite(f, m.dim_fixed + u);
    for (int u = 0; u < m.dim_free; ++u)
        for (int v = 0; v < m.dim_free; ++v)
            if (u != v && m.invol.at(u, v) != 0) unite(m.dim_fixed + u, m.dim_fixed + v);

    struct Block {
        std::vector<int> fixed;
        std::vector<int> free;
    };
    std::vector<Block> blocks(static_cast<size_t>(n));
    for (int f = 0; f < m.dim_fixed; ++f) blocks[static_cast<size_t>(find(f))].fixed.push_back(f);
    for (int u = 0; u < m.dim_free; ++u) blocks[static_cast<size_t>(find(m.dim_fixed + u))].free.push_back(u);

    FunctorMultiset out;
    for (const Block& blk : blocks) {
        const size_t nf = blk.fixed.size();
        const size_t nu = blk.free.size();
        if (nf == 0 && nu == 0) continue;
        if (nf == 1 && nu == 0) {
            out.push_back(NamedFunctor::Bracket);
        } else if (nf == 0 && nu == 1) {
            if (m.invol.at(blk.free[0], blk.free[0]) != 1) return std::nullopt;
            out.push_back(NamedFunctor::FreeOnly);
        } else if (nf == 1 && nu == 1) {
            const int f = blk.fixed[0];
            const int u = blk.free[0];
            if (m.invol.at(u, u) != 1) return std::nullopt;
            const int r = m.res.at(u, f);
            const int t = m.tr.at(f, u);
            if (r == 1 && t == 0)
                out.push_back(NamedFunctor::Constant);
            else if (r == 0 && t == 1)
                out.push_back(NamedFunctor::DualConstant);
            else
                return std::nullopt;
        } else {
            return std::nullopt;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace z2ss
