#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Dense bit-packed linear algebra over GF(2). Everything downstream (Pauli
// spaces, gauge maps, subspace calculus) is built on these three types.

namespace f2g {

using u64 = std::uint64_t;

class Bits {
  public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static Bits unit(std::size_t n, std::size_t i) {
        Bits b(n);
        b.set(i, true);
        return b;
    }

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        u64 m = u64(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }

    void flip(std::size_t i) { w_[i >> 6] ^= u64(1) << (i & 63); }

    Bits& operator^=(const Bits& o) {
        if (o.n_ != n_) throw std::invalid_argument("Bits: xor size mismatch");
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }

    Bits operator^(const Bits& o) const {
        Bits r = *this;
        r ^= o;
        return r;
    }

    Bits operator&(const Bits& o) const {
        if (o.n_ != n_) throw std::invalid_argument("Bits: and size mismatch");
        Bits r = *this;
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= o.w_[k];
        return r;
    }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bits& o) const { return !(*this == o); }

    // lexicographic by coordinate, bit 0 most significant for determinism
    bool operator<(const Bits& o) const;

    bool any() const {
        for (u64 w : w_)
            if (w) return true;
        return false;
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (u64 w : w_) c += std::size_t(__builtin_popcountll(w));
        return c;
    }

    // parity of <*this, o> under the plain dot product
    bool dot(const Bits& o) const {
        if (o.n_ != n_) throw std::invalid_argument("Bits: dot size mismatch");
        u64 acc = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
        return __builtin_parityll(acc);
    }

    int lowest_set() const {  // -1 if zero
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(64 * k + std::size_t(__builtin_ctzll(w_[k])));
        return -1;
    }

    std::vector<std::size_t> ones() const {
        std::vector<std::size_t> v;
        for (std::size_t i = 0; i < n_; ++i)
            if (get(i)) v.push_back(i);
        return v;
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    const std::vector<u64>& words() const { return w_; }

  private:
    std::size_t n_ = 0;
    std::vector<u64> w_;
};

class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Bits(cols)) {}

    static F2Matrix identity(std::size_t n) {
        F2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.rows_[i].set(i, true);
        return m;
    }

    static F2Matrix from_rows(std::vector<Bits> rows, std::size_t cols) {
        F2Matrix m;
        m.cols_ = cols;
        m.rows_ = std::move(rows);
        for (const Bits& r : m.rows_)
            if (r.size() != cols) throw std::invalid_argument("F2Matrix: ragged rows");
        return m;
    }

    std::size_t nrows() const { return rows_.size(); }
    std::size_t ncols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

    const Bits& row(std::size_t r) const { return rows_[r]; }
    Bits& row(std::size_t r) { return rows_[r]; }

    void append_row(const Bits& b) {
        if (b.size() != cols_) throw std::invalid_argument("F2Matrix: row size mismatch");
        rows_.push_back(b);
    }

    Bits col(std::size_t c) const {
        Bits b(nrows());
        for (std::size_t r = 0; r < nrows(); ++r)
            if (rows_[r].get(c)) b.set(r, true);
        return b;
    }

    // matrix * column vector
    Bits mul(const Bits& v) const {
        if (v.size() != cols_) throw std::invalid_argument("F2Matrix: mul size mismatch");
        Bits out(nrows());
        for (std::size_t r = 0; r < nrows(); ++r)
            if (rows_[r].dot(v)) out.set(r, true);
        return out;
    }

    F2Matrix mul(const F2Matrix& o) const;
    F2Matrix transposed() const;

    bool operator==(const F2Matrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

    bool is_zero() const {
        for (const Bits& r : rows_)
            if (r.any()) return false;
        return true;
    }

  private:
    std::size_t cols_ = 0;
    std::vector<Bits> rows_;
};

std::size_t rank(F2Matrix m);

// Reduced row echelon form (in place); returns pivot columns.
std::vector<std::size_t> rref(F2Matrix& m);

// Canonical subspace: basis held in reduced row echelon form, zero rows
// dropped. Two subspaces are equal iff their representations are bit-equal.
class Subspace {
  public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
    Subspace(std::size_t ambient, F2Matrix spanning);

    static Subspace full(std::size_t ambient) {
        return Subspace(ambient, F2Matrix::identity(ambient));
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.nrows(); }
    const F2Matrix& basis() const { return basis_; }

    bool contains(const Bits& v) const { return !reduce(v).any(); }
    bool contains(const Subspace& other) const;

    // v reduced modulo the subspace (canonical coset representative)
    Bits reduce(Bits v) const;

    // coordinates of v in this basis; nullopt if v is outside
    std::optional<Bits> coords(const Bits& v) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

  private:
    std::size_t ambient_ = 0;
    F2Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace row_space(const F2Matrix& m);
Subspace kernel_basis(const F2Matrix& m);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

// Bilinear forms used throughout: the plain dot product, the symplectic
// pairing on a 2n-dimensional Pauli space (x/z block swap), or an explicit
// Gram matrix. Kept implicit where possible so no 2N x 2N Gram is stored.
class BilinearForm {
  public:
    static BilinearForm dot(std::size_t ambient) { return BilinearForm(Kind::Dot, ambient); }
    static BilinearForm symplectic(std::size_t n_qubits) {
        return BilinearForm(Kind::Symplectic, 2 * n_qubits);
    }
    static BilinearForm gram(F2Matrix g);

    std::size_t ambient() const { return ambient_; }

    bool eval(const Bits& a, const Bits& b) const;

    // row vector a^T * G, i.e. the functional pairing with a
    Bits pair(const Bits& a) const;

    bool is_symplectic() const { return kind_ == Kind::Symplectic; }

  private:
    enum class Kind { Dot, Symplectic, Gram };
    BilinearForm(Kind k, std::size_t ambient) : kind_(k), ambient_(ambient) {}
    Kind kind_;
    std::size_t ambient_;
    F2Matrix gram_;
};

Subspace perp(const Subspace& u, const BilinearForm& form);
bool is_projective(const Subspace& u, const BilinearForm& form);

struct NonProjective : std::runtime_error {
    explicit NonProjective(const std::string& what) : std::runtime_error(what) {}
};

// Idempotent P with image U and kernel perp(U, form). Throws NonProjective
// when U meets its own perpendicular complement.
F2Matrix projector(const Subspace& u, const BilinearForm& form);

// Solve M x = b; nullopt when inconsistent.
std::optional<Bits> solve(const F2Matrix& m, const Bits& b);

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(const std::string& what, std::size_t bound)
        : std::runtime_error(what), certified_lower_bound(bound) {}
    std::size_t certified_lower_bound;
};

inline constexpr std::size_t kDefaultEnumerationBudget = 10'000'000;

// Weight = number of coordinate groups touched. Pauli searches group the x/z
// coordinates of one qubit; plain searches use singleton groups.
using CoordGroups = std::vector<std::vector<std::size_t>>;

CoordGroups singleton_groups(std::size_t n);
std::size_t group_weight(const Bits& v, const CoordGroups& groups);

// Minimum group-weight over elements of `space` that lie outside `modulo`
// (pass a zero-dim subspace for a plain minimum over nonzero elements).
// Exhaustive over supports of <= w_max groups; nullopt when none exists in
// that range. Throws BudgetExceeded when more than `budget` support sets
// would be visited.
std::optional<std::size_t> min_weight_bounded(const Subspace& space, const Subspace& modulo,
                                              const CoordGroups& groups, std::size_t w_max,
                                              std::size_t budget = kDefaultEnumerationBudget,
                                              Bits* witness = nullptr);

std::optional<std::size_t> min_weight_bounded(const Subspace& space, const Subspace& modulo,
                                              std::size_t w_max,
                                              std::size_t budget = kDefaultEnumerationBudget,
                                              Bits* witness = nullptr);

}  // namespace f2g
