#include "f2gauge/bits.hpp"

#include <algorithm>

namespace f2g {

bool Bits::operator<(const Bits& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (std::size_t k = 0; k < w_.size(); ++k) {
        if (w_[k] == o.w_[k]) continue;
        // compare on the lowest differing coordinate: set beats unset
        u64 diff = w_[k] ^ o.w_[k];
        u64 low = diff & (~diff + 1);
        return (w_[k] & low) != 0;
    }
    return false;
}

F2Matrix F2Matrix::mul(const F2Matrix& o) const {
    if (cols_ != o.nrows()) throw std::invalid_argument("F2Matrix: mul shape mismatch");
    F2Matrix out(nrows(), o.ncols());
    for (std::size_t r = 0; r < nrows(); ++r) {
        Bits acc(o.ncols());
        const Bits& row = rows_[r];
        for (std::size_t k = 0; k < cols_; ++k)
            if (row.get(k)) acc ^= o.row(k);
        out.rows_[r] = std::move(acc);
    }
    return out;
}

F2Matrix F2Matrix::transposed() const {
    F2Matrix out(ncols(), nrows());
    for (std::size_t r = 0; r < nrows(); ++r) {
        const Bits& row = rows_[r];
        for (std::size_t c = 0; c < cols_; ++c)
            if (row.get(c)) out.set(c, r, true);
    }
    return out;
}

std::vector<std::size_t> rref(F2Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.ncols() && r < m.nrows(); ++c) {
        std::size_t piv = r;
        while (piv < m.nrows() && !m.get(piv, c)) ++piv;
        if (piv == m.nrows()) continue;
        std::swap(m.row(r), m.row(piv));
        for (std::size_t i = 0; i < m.nrows(); ++i)
            if (i != r && m.get(i, c)) m.row(i) ^= m.row(r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(F2Matrix m) { return rref(m).size(); }

Subspace::Subspace(std::size_t ambient, F2Matrix spanning) : ambient_(ambient) {
    if (spanning.ncols() != ambient) throw std::invalid_argument("Subspace: ambient mismatch");
    pivots_ = rref(spanning);
    F2Matrix basis(0, ambient);
    for (std::size_t r = 0; r < pivots_.size(); ++r) basis.append_row(spanning.row(r));
    basis_ = std::move(basis);
}

Bits Subspace::reduce(Bits v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: reduce size mismatch");
    for (std::size_t r = 0; r < basis_.nrows(); ++r)
        if (v.get(pivots_[r])) v ^= basis_.row(r);
    return v;
}

std::optional<Bits> Subspace::coords(const Bits& v) const {
    Bits rem = v;
    Bits c(dim());
    for (std::size_t r = 0; r < basis_.nrows(); ++r)
        if (rem.get(pivots_[r])) {
            rem ^= basis_.row(r);
            c.set(r, true);
        }
    if (rem.any()) return std::nullopt;
    return c;
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t r = 0; r < other.basis().nrows(); ++r)
        if (!contains(other.basis().row(r))) return false;
    return true;
}

Subspace row_space(const F2Matrix& m) { return Subspace(m.ncols(), m); }

Subspace kernel_basis(const F2Matrix& m) {
    F2Matrix red = m;
    std::vector<std::size_t> piv = rref(red);
    std::vector<bool> is_piv(m.ncols(), false);
    for (std::size_t c : piv) is_piv[c] = true;

    F2Matrix basis(0, m.ncols());
    for (std::size_t c = 0; c < m.ncols(); ++c) {
        if (is_piv[c]) continue;
        Bits v(m.ncols());
        v.set(c, true);
        for (std::size_t r = 0; r < piv.size(); ++r)
            if (red.get(r, c)) v.set(piv[r], true);
        basis.append_row(v);
    }
    return Subspace(m.ncols(), std::move(basis));
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw std::invalid_argument("sum: ambient mismatch");
    F2Matrix all(0, u.ambient());
    for (std::size_t r = 0; r < u.basis().nrows(); ++r) all.append_row(u.basis().row(r));
    for (std::size_t r = 0; r < v.basis().nrows(); ++r) all.append_row(v.basis().row(r));
    return Subspace(u.ambient(), std::move(all));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
    // Zassenhaus: row reduce [U|U ; V|0]; rows with zero left half carry the
    // intersection in the right half.
    std::size_t n = u.ambient();
    F2Matrix work(0, 2 * n);
    auto widen = [n](const Bits& b, bool both) {
        Bits w(2 * n);
        for (std::size_t i = 0; i < n; ++i)
            if (b.get(i)) {
                w.set(i, true);
                if (both) w.set(n + i, true);
            }
        return w;
    };
    for (std::size_t r = 0; r < u.basis().nrows(); ++r) work.append_row(widen(u.basis().row(r), true));
    for (std::size_t r = 0; r < v.basis().nrows(); ++r) work.append_row(widen(v.basis().row(r), false));
    rref(work);
    F2Matrix inter(0, n);
    for (std::size_t r = 0; r < work.nrows(); ++r) {
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c) left_zero = !work.get(r, c);
        if (!left_zero) continue;
        Bits right(n);
        bool anyr = false;
        for (std::size_t c = 0; c < n; ++c)
            if (work.get(r, n + c)) {
                right.set(c, true);
                anyr = true;
            }
        if (anyr) inter.append_row(right);
    }
    return Subspace(n, std::move(inter));
}

BilinearForm BilinearForm::gram(F2Matrix g) {
    if (g.nrows() != g.ncols()) throw std::invalid_argument("BilinearForm: gram not square");
    BilinearForm f(Kind::Gram, g.nrows());
    f.gram_ = std::move(g);
    return f;
}

Bits BilinearForm::pair(const Bits& a) const {
    if (a.size() != ambient_) throw std::invalid_argument("BilinearForm: size mismatch");
    switch (kind_) {
        case Kind::Dot:
            return a;
        case Kind::Symplectic: {
            std::size_t n = ambient_ / 2;
            Bits out(ambient_);
            for (std::size_t i = 0; i < n; ++i) {
                if (a.get(i)) out.set(n + i, true);
                if (a.get(n + i)) out.set(i, true);
            }
            return out;
        }
        case Kind::Gram:
            return gram_.transposed().mul(a);
    }
    return Bits(ambient_);
}

bool BilinearForm::eval(const Bits& a, const Bits& b) const { return pair(a).dot(b); }

Subspace perp(const Subspace& u, const BilinearForm& form) {
    if (form.ambient() != u.ambient()) throw std::invalid_argument("perp: ambient mismatch");
    F2Matrix paired(0, u.ambient());
    for (std::size_t r = 0; r < u.basis().nrows(); ++r)
        paired.append_row(form.pair(u.basis().row(r)));
    return kernel_basis(paired);
}

bool is_projective(const Subspace& u, const BilinearForm& form) {
    return intersect(u, perp(u, form)).dim() == 0;
}

namespace {

// Inverse of a small dense GF(2) matrix; nullopt when singular.
std::optional<F2Matrix> inverse(F2Matrix m) {
    std::size_t n = m.nrows();
    if (n != m.ncols()) return std::nullopt;
    F2Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m.get(r, c));
        aug.set(r, n + r, true);
    }
    std::vector<std::size_t> piv = rref(aug);
    if (piv.size() != n || piv.back() != n - 1) {
        for (std::size_t r = 0; r < piv.size(); ++r)
            if (piv[r] >= n) return std::nullopt;
        if (piv.size() != n) return std::nullopt;
    }
    F2Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.set(r, c, aug.get(r, n + c));
    return inv;
}

}  // namespace

F2Matrix projector(const Subspace& u, const BilinearForm& form) {
    std::size_t n = u.ambient();
    std::size_t d = u.dim();
    // Gram of the basis under the form; invertible iff U is projective.
    F2Matrix g(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        Bits pi = form.pair(u.basis().row(i));
        for (std::size_t j = 0; j < d; ++j) g.set(i, j, pi.dot(u.basis().row(j)));
    }
    auto ginv = inverse(g);
    if (!ginv) throw NonProjective("projector: subspace meets its perpendicular complement");
    // P = B^T G^{-1} B J (column-vector convention)
    F2Matrix bj(d, n);
    for (std::size_t i = 0; i < d; ++i) bj.row(i) = form.pair(u.basis().row(i));
    F2Matrix bt(n, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t c = 0; c < n; ++c)
            if (u.basis().get(i, c)) bt.set(c, i, true);
    return bt.mul(ginv->mul(bj));
}

std::optional<Bits> solve(const F2Matrix& m, const Bits& b) {
    if (b.size() != m.nrows()) throw std::invalid_argument("solve: rhs size mismatch");
    F2Matrix aug(m.nrows(), m.ncols() + 1);
    for (std::size_t r = 0; r < m.nrows(); ++r) {
        for (std::size_t c = 0; c < m.ncols(); ++c) aug.set(r, c, m.get(r, c));
        aug.set(r, m.ncols(), b.get(r));
    }
    std::vector<std::size_t> piv = rref(aug);
    Bits x(m.ncols());
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == m.ncols()) return std::nullopt;  // 0 = 1 row
        if (aug.get(r, m.ncols())) x.set(piv[r], true);
    }
    return x;
}

CoordGroups singleton_groups(std::size_t n) {
    CoordGroups g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = {i};
    return g;
}

std::size_t group_weight(const Bits& v, const CoordGroups& groups) {
    std::size_t w = 0;
    for (const auto& g : groups)
        for (std::size_t c : g)
            if (v.get(c)) {
                ++w;
                break;
            }
    return w;
}

namespace {

// Support enumeration with a shared incremental echelon over the columns of
// a parity-check matrix H (space = ker H). A dependent column certifies an
// element supported inside the chosen groups; exactness comes from visiting
// support sizes in increasing order.
struct WeightSearch {
    std::vector<Bits> hcols;       // column c of H, indexed by ambient coord
    const CoordGroups& groups;
    const Subspace& modulo;
    std::size_t ambient;
    std::size_t budget;
    std::size_t visited = 0;

    struct Entry {
        Bits vec;    // reduced column, in H-row coordinates
        int pivot;
        Bits combo;  // ambient coordinates combining to vec
    };
    std::vector<Entry> echelon;
    std::vector<Bits> nulls;  // combos that reduced to zero along the path

    bool found = false;
    Bits witness;

    WeightSearch(const F2Matrix& h, const CoordGroups& groups, const Subspace& modulo,
                 std::size_t budget)
        : groups(groups), modulo(modulo), ambient(h.ncols()), budget(budget), witness(0) {
        hcols.resize(ambient);
        for (std::size_t c = 0; c < ambient; ++c) hcols[c] = h.col(c);
    }

    void run(std::size_t w_max) {
        for (std::size_t k = 1; k <= w_max && !found; ++k) {
            try {
                recurse(0, k);
            } catch (BudgetExceeded&) {
                throw BudgetExceeded("min_weight_bounded: enumeration budget", k - 1);
            }
        }
    }

  private:
    // Reduce column c against the echelon; true if it came out zero (its
    // combo is then a space element supported in the chosen groups).
    bool reduce(std::size_t c, Bits& vec, Bits& combo) const {
        vec = hcols[c];
        combo = Bits(ambient);
        combo.set(c, true);
        for (const Entry& e : echelon)
            if (e.pivot >= 0 && vec.get(std::size_t(e.pivot))) {
                vec ^= e.vec;
                combo ^= e.combo;
            }
        return !vec.any();
    }

    void accept(const std::vector<Bits>& terminal) {
        // candidates live in the span of terminal dependencies and path nulls
        std::vector<const Bits*> gens;
        for (const Bits& b : nulls) gens.push_back(&b);
        for (const Bits& b : terminal) gens.push_back(&b);
        if (gens.empty()) return;
        std::size_t d = gens.size();
        if (d > 16) d = 16;  // defensive cap; dependency spaces here are tiny
        for (std::size_t mask = 1; mask < (std::size_t(1) << d) && !found; ++mask) {
            Bits v(ambient);
            for (std::size_t b = 0; b < d; ++b)
                if ((mask >> b) & 1) v ^= *gens[b];
            if (!v.any()) continue;
            if (modulo.dim() > 0 && modulo.contains(v)) continue;
            found = true;
            witness = v;
        }
    }

    void recurse(std::size_t start, std::size_t remaining) {
        if (found) return;
        if (remaining == 1) {
            if (++visited > budget)
                throw BudgetExceeded("min_weight_bounded: enumeration budget", 0);
            for (std::size_t g = start; g < groups.size() && !found; ++g) {
                std::vector<Bits> terminal;
                std::size_t pushed = 0;
                for (std::size_t c : groups[g]) {
                    Bits vec(0), combo(0);
                    if (reduce(c, vec, combo)) {
                        terminal.push_back(combo);
                    } else {
                        echelon.push_back({vec, vec.lowest_set(), combo});
                        ++pushed;
                        // a pair like (x_i, y_i-ish) can be dependent jointly
                    }
                }
                // dependencies among the just-pushed columns of this group
                // were caught by sequential reduction above
                accept(terminal);
                while (pushed--) echelon.pop_back();
            }
            return;
        }
        for (std::size_t g = start; g + remaining <= groups.size() && !found; ++g) {
            std::size_t pushed = 0, nulled = 0;
            for (std::size_t c : groups[g]) {
                Bits vec(0), combo(0);
                if (reduce(c, vec, combo)) {
                    nulls.push_back(combo);
                    ++nulled;
                } else {
                    echelon.push_back({vec, vec.lowest_set(), combo});
                    ++pushed;
                }
            }
            recurse(g + 1, remaining - 1);
            while (pushed--) echelon.pop_back();
            while (nulled--) nulls.pop_back();
        }
    }
};

}  // namespace

std::optional<std::size_t> min_weight_bounded(const Subspace& space, const Subspace& modulo,
                                              const CoordGroups& groups, std::size_t w_max,
                                              std::size_t budget, Bits* witness) {
    if (space.dim() == 0) return std::nullopt;
    F2Matrix h = kernel_basis(space.basis()).basis();
    WeightSearch s(h, groups, modulo, budget);
    s.run(w_max);
    if (!s.found) return std::nullopt;
    if (witness) *witness = s.witness;
    return group_weight(s.witness, groups);
}

std::optional<std::size_t> min_weight_bounded(const Subspace& space, const Subspace& modulo,
                                              std::size_t w_max, std::size_t budget,
                                              Bits* witness) {
    return min_weight_bounded(space, modulo, singleton_groups(space.ambient()), w_max, budget,
                              witness);
}

}  // namespace f2g
