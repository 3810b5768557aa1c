#include "stabwall/lattice.hpp"

#include <algorithm>

namespace stabwall {

NSVecQ to_q(const NSVecZ& v) {
    NSVecQ out;
    out.reserve(v.size());
    for (const Int& e : v) out.emplace_back(e);
    return out;
}

std::pair<int, int> symmetric_signature(const MatQ& m_in) {
    const int n = static_cast<int>(m_in.size());
    MatQ m = m_in;
    std::vector<bool> done(n, false);
    int pos = 0, neg = 0;
    for (int step = 0; step < n; ++step) {
        int piv = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && m[i][i] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) {
            // all remaining diagonal entries vanish; look for an off-diagonal
            // entry and fold it onto the diagonal by x_i -> x_i + x_j
            int a = -1, b = -1;
            for (int i = 0; i < n && a < 0; ++i) {
                if (done[i]) continue;
                for (int j = i + 1; j < n; ++j) {
                    if (done[j]) continue;
                    if (m[i][j] != 0) {
                        a = i;
                        b = j;
                        break;
                    }
                }
            }
            if (a < 0) throw PreconditionError("degenerate Gram matrix");
            for (int k = 0; k < n; ++k) m[a][k] += m[b][k];
            for (int k = 0; k < n; ++k) m[k][a] += m[k][b];
            piv = a;
        }
        const Rat d = m[piv][piv];
        if (d > 0)
            ++pos;
        else
            ++neg;
        for (int i = 0; i < n; ++i) {
            if (i == piv || done[i]) continue;
            if (m[i][piv] == 0) continue;
            const Rat f = m[i][piv] / d;
            for (int k = 0; k < n; ++k) m[i][k] -= f * m[piv][k];
            for (int k = 0; k < n; ++k) m[k][i] -= f * m[k][piv];
        }
        done[piv] = true;
    }
    return {pos, neg};
}

SurfaceLattice::SurfaceLattice(SurfaceKind kind, MatZ gram, NSVecZ polarization,
                               NodalPolicy nodal_policy,
                               std::vector<std::vector<int>> nodal_residues)
    : kind_(kind), gram_(std::move(gram)), h_(std::move(polarization)),
      nodal_policy_(nodal_policy) {
    rank_ = static_cast<int>(gram_.size());
    if (rank_ < 1) throw PreconditionError("lattice rank must be positive");
    for (const auto& row : gram_)
        if (static_cast<int>(row.size()) != rank_)
            throw PreconditionError("Gram matrix is not square");
    for (int i = 0; i < rank_; ++i) {
        if (gram_[i][i] % 2 != 0)
            throw PreconditionError("odd diagonal entry: the lattice must be even");
        for (int j = i + 1; j < rank_; ++j)
            if (gram_[i][j] != gram_[j][i]) throw PreconditionError("Gram matrix not symmetric");
    }
    if (static_cast<int>(h_.size()) != rank_)
        throw PreconditionError("polarization dimension mismatch");

    MatQ mq(rank_, std::vector<Rat>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) mq[i][j] = Rat(gram_[i][j]);
    auto [pos, neg] = symmetric_signature(mq);
    if (pos != 1 || neg != rank_ - 1)
        throw PreconditionError("Gram matrix must have signature (1, rank-1)");

    h2_ = ns_inner(to_q(h_), to_q(h_));
    if (h2_ <= 0) throw PreconditionError("(H.H) must be positive");

    degree_gcd_ = 0;
    for (int i = 0; i < rank_; ++i) {
        Int d = 0;
        for (int j = 0; j < rank_; ++j) d += gram_[i][j] * h_[j];
        degree_gcd_ = gcd(degree_gcd_, d);
    }
    if (degree_gcd_ < 0) degree_gcd_ = -degree_gcd_;
    if (degree_gcd_ == 0) throw InvariantError("degree map vanishes on the whole lattice");

    if (!nodal_residues.empty() && kind_ != SurfaceKind::Enriques)
        throw PreconditionError("nodal residues are Enriques-only data");
    for (auto& res : nodal_residues) {
        if (static_cast<int>(res.size()) != rank_)
            throw PreconditionError("nodal residue dimension mismatch");
        for (int& b : res) b = ((b % 2) + 2) % 2;
        nodal_residues_.insert(res);
    }
    if (nodal_policy_ == NodalPolicy::ExplicitSet && nodal_residues_.empty() &&
        kind_ == SurfaceKind::Enriques)
        throw PreconditionError("explicit nodal policy requires at least one residue");
}

Rat SurfaceLattice::ns_inner(const NSVecQ& a, const NSVecQ& b) const {
    if (static_cast<int>(a.size()) != rank_ || static_cast<int>(b.size()) != rank_)
        throw PreconditionError("NS vector dimension mismatch");
    Rat acc = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a[i] == 0) continue;
        Rat row = 0;
        for (int j = 0; j < rank_; ++j) row += Rat(gram_[i][j]) * b[j];
        acc += a[i] * row;
    }
    return acc;
}

Rat SurfaceLattice::degree(const NSVecQ& a) const { return ns_inner(a, to_q(h_)); }

bool SurfaceLattice::nodal_obstructs(const NSVecZ& xi) const {
    switch (nodal_policy_) {
        case NodalPolicy::AcceptAll:
            return true;
        case NodalPolicy::RejectAll:
            return false;
        case NodalPolicy::ExplicitSet: {
            std::vector<int> res(rank_);
            for (int i = 0; i < rank_; ++i) res[i] = static_cast<int>(((xi[i] % 2) + 2) % 2);
            return nodal_residues_.count(res) > 0;
        }
    }
    return false;
}

Rat SurfaceLattice::perp_norm(const NSVecQ& x) const {
    Rat deg = degree(x);
    return deg * deg / h2_ - ns_square(x);
}

std::vector<NSVecZ> SurfaceLattice::enumerate_degree_window(const NSVecQ& center, const Int& klo,
                                                            const Int& khi, const Rat& cap) const {
    std::vector<NSVecZ> out;
    if (klo > khi || cap < 0) return out;
    // P0(x) = 2 (x.H)^2/(H^2) - (x^2) is positive definite: on the H-axis it
    // equals (x.H)^2/(H^2), transverse to it the negative definite -(x^2)
    // flips sign. Points with (x.H) in the window and perp distance <= cap lie
    // in the ellipsoid P0(x - c) <= cap + (half window width)^2/(H^2) about
    // the recentred c below.
    NSVecZ w(rank_);
    for (int i = 0; i < rank_; ++i) {
        Int d = 0;
        for (int j = 0; j < rank_; ++j) d += gram_[i][j] * h_[j];
        w[i] = d;
    }
    MatQ p0(rank_, std::vector<Rat>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            p0[i][j] = Rat(2) * Rat(w[i]) * Rat(w[j]) / h2_ - Rat(gram_[i][j]);

    Rat mid = (Rat(klo) + Rat(khi)) / 2;
    Rat mu = (mid - degree(center)) / h2_;
    NSVecQ c = center;
    for (int i = 0; i < rank_; ++i) c[i] += mu * Rat(h_[i]);
    Rat half_width = (Rat(khi) - Rat(klo)) / 2;
    Rat bound = cap + half_width * half_width / h2_;

    for (NSVecZ& x : enumerate_ellipsoid(p0, c, bound)) {
        Int deg = 0;
        for (int i = 0; i < rank_; ++i) deg += w[i] * x[i];
        if (deg < klo || deg > khi) continue;
        NSVecQ diff(rank_);
        for (int i = 0; i < rank_; ++i) diff[i] = Rat(x[i]) - center[i];
        if (perp_norm(diff) > cap) continue;
        out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Ldlt {
    std::vector<Rat> d;
    MatQ mu;  // mu[i][j] for j > i
};

Ldlt ldlt_decompose(const MatQ& a) {
    const int n = static_cast<int>(a.size());
    Ldlt f;
    f.d.assign(n, Rat(0));
    f.mu.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        Rat di = a[i][i];
        for (int k = 0; k < i; ++k) di -= f.d[k] * f.mu[k][i] * f.mu[k][i];
        if (di <= 0) throw InvariantError("form is not positive definite");
        f.d[i] = di;
        for (int j = i + 1; j < n; ++j) {
            Rat v = a[i][j];
            for (int k = 0; k < i; ++k) v -= f.d[k] * f.mu[k][i] * f.mu[k][j];
            f.mu[i][j] = v / di;
        }
    }
    return f;
}

void enum_rec(const Ldlt& f, const NSVecQ& center, int level, const Rat& budget,
              std::vector<Int>& x, std::vector<NSVecZ>& out) {
    if (level < 0) {
        out.push_back(x);
        return;
    }
    if (budget < 0) return;
    // s = sum_{j>level} mu[level][j] (x_j - center_j)
    Rat s = 0;
    const int n = static_cast<int>(center.size());
    for (int j = level + 1; j < n; ++j) s += f.mu[level][j] * (Rat(x[j]) - center[j]);
    const Rat mid = center[level] - s;
    const Rat rad2 = budget / f.d[level];
    Int lo = ceil_sub_sqrt(mid, rad2);
    Int hi = floor_add_sqrt(mid, rad2);
    for (Int xi = lo; xi <= hi; ++xi) {
        x[level] = xi;
        Rat dev = Rat(xi) - mid;
        Rat used = f.d[level] * dev * dev;
        enum_rec(f, center, level - 1, budget - used, x, out);
    }
}

}  // namespace

std::vector<NSVecZ> enumerate_ellipsoid(const MatQ& p, const NSVecQ& center, const Rat& bound) {
    std::vector<NSVecZ> out;
    if (bound < 0) return out;
    const int n = static_cast<int>(p.size());
    Ldlt f = ldlt_decompose(p);
    std::vector<Int> x(n, Int(0));
    enum_rec(f, center, n - 1, bound, x, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace stabwall
