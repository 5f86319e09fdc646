#include "ccshell/linalg.hpp"

#include "ccshell/error.hpp"

#include <algorithm>

namespace ccs {

namespace {

// Euclidean data for the integers, carried in mpz to avoid rational overhead.
struct IntegerPolicy {
    using T = mpz_class;

    bool smaller(const T& a, const T& b) const { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
    T quotient(const T& a, const T& b) const
    {
        T q;
        mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    bool divides(const T& b, const T& a) const { return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0; }
    T reduce(const T& a) const { return a; }
    // Unit u and its inverse such that u * a is the canonical associate.
    std::pair<T, T> normalizer(const T& a) const { return a < 0 ? std::pair<T, T>(-1, -1) : std::pair<T, T>(1, 1); }
    Scalar to_scalar(const T& a) const { return Scalar(a); }
    T from_scalar(const Scalar& s) const { return s.get_num(); }
};

// Exact division in Q or Z/p.
struct FieldPolicy {
    using T = Scalar;
    const Ring* ring;

    bool smaller(const T& a, const T& b) const
    {
        // Prefer entries of small height; any rule works, this one is stable.
        mpz_class ha = abs(a.get_num()) + a.get_den();
        mpz_class hb = abs(b.get_num()) + b.get_den();
        return ha < hb;
    }
    T quotient(const T& a, const T& b) const { return ring->mul(a, ring->inverse(b)); }
    bool divides(const T&, const T&) const { return true; }
    T reduce(const T& a) const { return ring->reduce(a); }
    std::pair<T, T> normalizer(const T& a) const { return {ring->inverse(a), a}; }
    Scalar to_scalar(const T& a) const { return a; }
    T from_scalar(const Scalar& s) const { return s; }
};

template <class P>
class Elimination {
public:
    using T = typename P::T;

    Elimination(const P& policy, const SparseMatrix& m, bool track)
        : p_(policy), m_(m.rows()), n_(m.cols()), a_(m_ * n_), track_(track)
    {
        for (std::size_t j = 0; j < n_; ++j)
            for (const auto& [i, x] : m.column(j))
                a_[i * n_ + j] = p_.from_scalar(x);
        if (track_) {
            u_ = identity(m_);
            u_inv_ = identity(m_);
            v_ = identity(n_);
            v_inv_ = identity(n_);
        }
    }

    std::size_t run()
    {
        std::size_t t = 0;
        const std::size_t limit = std::min(m_, n_);
        while (t < limit) {
            std::size_t pi = 0, pj = 0;
            if (!find_pivot(t, pi, pj))
                break;
            row_swap(t, pi);
            col_swap(t, pj);
            reduce_at(t);
            auto [u, u_inv] = p_.normalizer(A(t, t));
            if (u != 1)
                row_scale(t, u, u_inv);
            ++t;
        }
        return t;
    }

    DenseMatrix result(std::size_t rows, std::size_t cols, const std::vector<T>& data) const
    {
        DenseMatrix out(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                out(i, j) = p_.to_scalar(data[i * cols + j]);
        return out;
    }

    const P& p_;
    std::size_t m_, n_;
    std::vector<T> a_;
    bool track_;
    std::vector<T> u_, u_inv_, v_, v_inv_;

private:
    static std::vector<T> identity(std::size_t n)
    {
        std::vector<T> id(n * n);
        for (std::size_t i = 0; i < n; ++i)
            id[i * n + i] = 1;
        return id;
    }

    T& A(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj)
    {
        bool found = false;
        for (std::size_t j = t; j < n_; ++j)
            for (std::size_t i = t; i < m_; ++i) {
                const T& x = A(i, j);
                if (x == 0)
                    continue;
                if (!found || p_.smaller(x, A(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    }

    // Clears row t and column t beyond the pivot and enforces divisibility.
    void reduce_at(std::size_t t)
    {
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m_; ++i) {
                if (A(i, t) == 0)
                    continue;
                T q = p_.quotient(A(i, t), A(t, t));
                row_add(i, t, -q);
                dirty = dirty || A(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < n_; ++j) {
                if (A(t, j) == 0)
                    continue;
                T q = p_.quotient(A(t, j), A(t, t));
                col_add(j, t, -q);
                dirty = dirty || A(t, j) != 0;
            }
            if (dirty) {
                // A remainder smaller than the pivot survived; move it to (t, t).
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m_; ++i)
                    if (A(i, t) != 0 && p_.smaller(A(i, t), A(bi, bj))) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < n_; ++j)
                    if (A(t, j) != 0 && p_.smaller(A(t, j), A(bi, bj))) {
                        bi = t;
                        bj = j;
                    }
                row_swap(t, bi);
                col_swap(t, bj);
                continue;
            }
            bool fixed = false;
            for (std::size_t i = t + 1; i < m_ && !fixed; ++i)
                for (std::size_t j = t + 1; j < n_; ++j)
                    if (A(i, j) != 0 && !p_.divides(A(t, t), A(i, j))) {
                        row_add(t, i, 1);
                        fixed = true;
                        break;
                    }
            if (!fixed)
                return;
        }
    }

    void row_swap(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < n_; ++j)
            std::swap(A(a, j), A(b, j));
        if (track_) {
            for (std::size_t j = 0; j < m_; ++j)
                std::swap(u_[a * m_ + j], u_[b * m_ + j]);
            for (std::size_t i = 0; i < m_; ++i)
                std::swap(u_inv_[i * m_ + a], u_inv_[i * m_ + b]);
        }
    }

    void col_swap(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < m_; ++i)
            std::swap(A(i, a), A(i, b));
        if (track_) {
            for (std::size_t i = 0; i < n_; ++i)
                std::swap(v_[i * n_ + a], v_[i * n_ + b]);
            for (std::size_t j = 0; j < n_; ++j)
                std::swap(v_inv_[a * n_ + j], v_inv_[b * n_ + j]);
        }
    }

    // row dst += q * row src
    void row_add(std::size_t dst, std::size_t src, const T& q)
    {
        for (std::size_t j = 0; j < n_; ++j)
            if (A(src, j) != 0)
                A(dst, j) = p_.reduce(A(dst, j) + q * A(src, j));
        if (track_) {
            for (std::size_t j = 0; j < m_; ++j)
                if (u_[src * m_ + j] != 0)
                    u_[dst * m_ + j] = p_.reduce(u_[dst * m_ + j] + q * u_[src * m_ + j]);
            for (std::size_t i = 0; i < m_; ++i)
                if (u_inv_[i * m_ + dst] != 0)
                    u_inv_[i * m_ + src] = p_.reduce(u_inv_[i * m_ + src] - q * u_inv_[i * m_ + dst]);
        }
    }

    // col dst += q * col src
    void col_add(std::size_t dst, std::size_t src, const T& q)
    {
        for (std::size_t i = 0; i < m_; ++i)
            if (A(i, src) != 0)
                A(i, dst) = p_.reduce(A(i, dst) + q * A(i, src));
        if (track_) {
            for (std::size_t i = 0; i < n_; ++i)
                if (v_[i * n_ + src] != 0)
                    v_[i * n_ + dst] = p_.reduce(v_[i * n_ + dst] + q * v_[i * n_ + src]);
            for (std::size_t j = 0; j < n_; ++j)
                if (v_inv_[dst * n_ + j] != 0)
                    v_inv_[src * n_ + j] = p_.reduce(v_inv_[src * n_ + j] - q * v_inv_[dst * n_ + j]);
        }
    }

    void row_scale(std::size_t r, const T& u, const T& u_inv)
    {
        for (std::size_t j = 0; j < n_; ++j)
            if (A(r, j) != 0)
                A(r, j) = p_.reduce(u * A(r, j));
        if (track_) {
            for (std::size_t j = 0; j < m_; ++j)
                u_[r * m_ + j] = p_.reduce(u * u_[r * m_ + j]);
            for (std::size_t i = 0; i < m_; ++i)
                u_inv_[i * m_ + r] = p_.reduce(u_inv_[i * m_ + r] * u_inv);
        }
    }
};

template <class P>
SNFDecomposition decompose(const P& policy, const SparseMatrix& m)
{
    Elimination<P> e(policy, m, true);
    SNFDecomposition out;
    out.rank = e.run();
    out.D = e.result(e.m_, e.n_, e.a_);
    out.U = e.result(e.m_, e.m_, e.u_);
    out.U_inv = e.result(e.m_, e.m_, e.u_inv_);
    out.V = e.result(e.n_, e.n_, e.v_);
    out.V_inv = e.result(e.n_, e.n_, e.v_inv_);
    return out;
}

template <class P>
Vector factors(const P& policy, const SparseMatrix& m)
{
    Elimination<P> e(policy, m, false);
    std::size_t r = e.run();
    Vector d(r);
    for (std::size_t i = 0; i < r; ++i)
        d[i] = policy.to_scalar(e.a_[i * e.n_ + i]);
    return d;
}

Vector multiply_dense(const Ring& ring, const DenseMatrix& a, const Vector& x)
{
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Scalar s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (x[j] != 0 && a(i, j) != 0)
                s += a(i, j) * x[j];
        y[i] = ring.reduce(s);
    }
    return y;
}

}  // namespace

Vector SNFDecomposition::diagonal() const
{
    Vector d(std::min(D.rows(), D.cols()));
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = D(i, i);
    return d;
}

SNFDecomposition smith_normal_form(const SparseMatrix& m)
{
    if (m.ring().is_field())
        return decompose(FieldPolicy{&m.ring()}, m);
    return decompose(IntegerPolicy{}, m);
}

Vector invariant_factors(const SparseMatrix& m)
{
    if (m.ring().is_field())
        return factors(FieldPolicy{&m.ring()}, m);
    return factors(IntegerPolicy{}, m);
}

std::size_t rank(const SparseMatrix& m) { return invariant_factors(m).size(); }

std::vector<Vector> kernel_basis(const SparseMatrix& m)
{
    SNFDecomposition snf = smith_normal_form(m);
    std::vector<Vector> basis;
    for (std::size_t j = snf.rank; j < m.cols(); ++j)
        basis.push_back(snf.V.column(j));
    return basis;
}

SpanSolver::SpanSolver(const SparseMatrix& m) : ring_(m.ring()), snf_(smith_normal_form(m)) {}

std::optional<Vector> SpanSolver::solve(const Vector& v) const
{
    if (v.size() != snf_.U.cols())
        throw Error(ErrorKind::InvalidInput, "right-hand side has the wrong length");
    Vector w = multiply_dense(ring_, snf_.U, v);
    for (std::size_t i = snf_.rank; i < w.size(); ++i)
        if (w[i] != 0)
            return std::nullopt;
    Vector y(snf_.V.rows());
    for (std::size_t i = 0; i < snf_.rank; ++i) {
        const Scalar& d = snf_.D(i, i);
        if (ring_.is_field()) {
            y[i] = ring_.mul(w[i], ring_.inverse(d));
        } else {
            if (!mpz_divisible_p(w[i].get_num().get_mpz_t(), d.get_num().get_mpz_t()))
                return std::nullopt;
            y[i] = Scalar(mpz_class(w[i].get_num() / d.get_num()));
        }
    }
    return multiply_dense(ring_, snf_.V, y);
}

std::optional<SpanWitness> SpanSolver::solve_rational(const Vector& v) const
{
    if (ring_.is_field()) {
        auto x = solve(v);
        if (!x)
            return std::nullopt;
        return SpanWitness{Scalar(1), std::move(*x)};
    }
    if (v.size() != snf_.U.cols())
        throw Error(ErrorKind::InvalidInput, "right-hand side has the wrong length");
    Vector w = multiply_dense(ring_, snf_.U, v);
    for (std::size_t i = snf_.rank; i < w.size(); ++i)
        if (w[i] != 0)
            return std::nullopt;
    mpz_class lead = 1;
    for (std::size_t i = 0; i < snf_.rank; ++i) {
        Scalar q = w[i] / snf_.D(i, i);
        mpz_lcm(lead.get_mpz_t(), lead.get_mpz_t(), q.get_den().get_mpz_t());
    }
    Vector y(snf_.V.rows());
    for (std::size_t i = 0; i < snf_.rank; ++i)
        y[i] = Scalar(w[i] / snf_.D(i, i) * lead);
    return SpanWitness{Scalar(lead), multiply_dense(ring_, snf_.V, y)};
}

std::optional<Vector> lattice_membership(const SparseMatrix& m, const Vector& v) { return SpanSolver(m).solve(v); }

std::optional<SpanWitness> rational_span_membership(const SparseMatrix& m, const Vector& v)
{
    return SpanSolver(m).solve_rational(v);
}

std::optional<QuotientSolution> solve_in_quotient(const SparseMatrix& m, const Vector& v,
                                                  const std::vector<std::size_t>& kill_rows,
                                                  bool unit_required)
{
    if (v.size() != m.rows())
        throw Error(ErrorKind::InvalidTarget, "target has the wrong length");
    std::size_t target = v.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        if (v[i] != 1 || target != v.size())
            throw Error(ErrorKind::InvalidTarget, "target is not a standard basis column");
        target = i;
    }
    if (target == v.size())
        throw Error(ErrorKind::InvalidTarget, "target is not a standard basis column");

    std::vector<bool> killed(m.rows(), false);
    for (std::size_t r : kill_rows) {
        if (r >= m.rows())
            throw Error(ErrorKind::IndexOutOfRange, "kill row out of range");
        killed[r] = true;
    }
    if (killed[target])
        return QuotientSolution{Scalar(1), Vector(m.cols())};

    std::vector<std::size_t> keep;
    std::size_t target_row = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!killed[i]) {
            if (i == target)
                target_row = keep.size();
            keep.push_back(i);
        }
    SparseMatrix reduced = m.select_rows(keep);
    Vector e(keep.size());
    e[target_row] = 1;
    SpanSolver solver(reduced);
    if (unit_required || m.ring().is_field()) {
        auto x = solver.solve(e);
        if (!x)
            return std::nullopt;
        return QuotientSolution{Scalar(1), std::move(*x)};
    }
    auto w = solver.solve_rational(e);
    if (!w)
        return std::nullopt;
    return QuotientSolution{w->lead, std::move(w->x)};
}

}  // namespace ccs
