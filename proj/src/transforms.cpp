#include "stabwall/transforms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "stabwall/slice.hpp"

namespace stabwall {

std::string GenStep::str() const {
    switch (kind) {
        case Kind::Shift: return "shift";
        case Kind::Dual: return "dual";
        case Kind::SphericalTwist: return "twist" + cls.str();
        case Kind::ExceptionalTwist: return "etwist" + cls.str();
        case Kind::Tensor: {
            std::ostringstream os;
            os << "tensor[";
            for (size_t i = 0; i < divisor.size(); ++i) {
                if (i) os << ",";
                os << rat_str(divisor[i]);
            }
            os << "]";
            return os.str();
        }
    }
    return "?";
}

MatQ mukai_gram(const SurfaceLattice& surface) {
    const int n = surface.rank();
    MatQ g(n + 2, std::vector<Rat>(n + 2, Rat(0)));
    g[0][n + 1] = -1;
    g[n + 1][0] = -1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[1 + i][1 + j] = Rat(surface.gram()[i][j]);
    return g;
}

namespace {

MatQ mat_mul(const MatQ& a, const MatQ& b) {
    const size_t n = a.size();
    MatQ c(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

MatQ mat_transpose(const MatQ& a) {
    const size_t n = a.size();
    MatQ t(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
    return t;
}

MatQ mat_identity(size_t n) {
    MatQ m(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// Gauss-Jordan inverse over Q.
MatQ mat_inverse(const MatQ& a) {
    const size_t n = a.size();
    MatQ m = a, inv = mat_identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw InvariantError("singular isometry matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::vector<Rat> coords_of(const MukaiVector& v) {
    std::vector<Rat> c;
    c.reserve(v.xi.size() + 2);
    c.push_back(v.r);
    for (const Rat& e : v.xi) c.push_back(e);
    c.push_back(v.a);
    return c;
}

MukaiVector vector_of(const std::vector<Rat>& c) {
    MukaiVector v;
    v.r = c.front();
    v.xi.assign(c.begin() + 1, c.end() - 1);
    v.a = c.back();
    return v;
}

}  // namespace

LatticeIsometry LatticeIsometry::identity(const SurfaceLattice& surface) {
    return LatticeIsometry(&surface, mat_identity(surface.rank() + 2), {});
}

LatticeIsometry LatticeIsometry::from_matrix(const SurfaceLattice& surface, MatQ m,
                                             std::vector<GenStep> word) {
    const size_t n = surface.rank() + 2;
    if (m.size() != n) throw PreconditionError("isometry matrix dimension mismatch");
    for (const auto& row : m)
        if (row.size() != n) throw PreconditionError("isometry matrix not square");
    MatQ g = mukai_gram(surface);
    MatQ check = mat_mul(mat_transpose(m), mat_mul(g, m));
    if (check != g) throw PreconditionError("matrix does not preserve the Mukai pairing");
    return LatticeIsometry(&surface, std::move(m), std::move(word));
}

MukaiVector LatticeIsometry::apply(const MukaiVector& v) const {
    std::vector<Rat> in = coords_of(v);
    if (in.size() != m_.size()) throw PreconditionError("vector dimension mismatch");
    std::vector<Rat> out(in.size(), Rat(0));
    for (size_t i = 0; i < m_.size(); ++i)
        for (size_t j = 0; j < m_.size(); ++j)
            if (m_[i][j] != 0) out[i] += m_[i][j] * in[j];
    return vector_of(out);
}

LatticeIsometry LatticeIsometry::compose(const LatticeIsometry& inner) const {
    std::vector<GenStep> w = word_;
    w.insert(w.end(), inner.word_.begin(), inner.word_.end());
    return LatticeIsometry(surface_, mat_mul(m_, inner.m_), std::move(w));
}

LatticeIsometry LatticeIsometry::inverse() const {
    return LatticeIsometry(surface_, mat_inverse(m_), {});
}

bool LatticeIsometry::is_identity() const { return m_ == mat_identity(m_.size()); }

bool LatticeIsometry::is_integral_matrix() const {
    for (const auto& row : m_)
        for (const Rat& e : row)
            if (denominator(e) != 1) return false;
    return true;
}

namespace {

LatticeIsometry reflection_isometry(const SurfaceLattice& surface, const MukaiVector& cls,
                                    const Rat& coeff, GenStep step) {
    // v -> v + coeff <v, cls> cls
    const int n = surface.rank();
    MatQ g = mukai_gram(surface);
    std::vector<Rat> c = coords_of(cls);
    std::vector<Rat> gc(n + 2, Rat(0));
    for (int i = 0; i < n + 2; ++i)
        for (int j = 0; j < n + 2; ++j) gc[i] += g[i][j] * c[j];
    MatQ m = mat_identity(n + 2);
    for (int i = 0; i < n + 2; ++i)
        for (int j = 0; j < n + 2; ++j) m[i][j] += coeff * c[i] * gc[j];
    return LatticeIsometry::from_matrix(surface, std::move(m), {std::move(step)});
}

}  // namespace

LatticeIsometry spherical_twist(const SurfaceLattice& surface, const MukaiVector& a) {
    require_integral(surface, a, "spherical_twist");
    if (mukai_square(surface, a) != -2)
        throw PreconditionError("spherical twist class must have square -2");
    return reflection_isometry(surface, a, Rat(1),
                               GenStep{GenStep::Kind::SphericalTwist, a, {}});
}

LatticeIsometry exceptional_twist(const SurfaceLattice& surface, const MukaiVector& b) {
    if (surface.kind() != SurfaceKind::Enriques)
        throw PreconditionError("exceptional twists live on Enriques surfaces");
    require_integral(surface, b, "exceptional_twist");
    if (mukai_square(surface, b) != -1)
        throw PreconditionError("exceptional twist class must have square -1");
    return reflection_isometry(surface, b, Rat(2),
                               GenStep{GenStep::Kind::ExceptionalTwist, b, {}});
}

LatticeIsometry tensor_isometry(const SurfaceLattice& surface, const NSVecQ& d) {
    const int n = surface.rank();
    if (static_cast<int>(d.size()) != n) throw PreconditionError("divisor dimension mismatch");
    MatQ m = mat_identity(n + 2);
    // column of r: (1, d, (d^2)/2); column of xi_j: a-row picks up (e_j . d)
    for (int i = 0; i < n; ++i) m[1 + i][0] = d[i];
    m[n + 1][0] = surface.ns_square(d) / 2;
    for (int j = 0; j < n; ++j) {
        NSVecQ ej(n, Rat(0));
        ej[j] = 1;
        m[n + 1][1 + j] = surface.ns_inner(ej, d);
    }
    return LatticeIsometry::from_matrix(surface, std::move(m),
                                        {GenStep{GenStep::Kind::Tensor, {}, d}});
}

LatticeIsometry shift_isometry(const SurfaceLattice& surface) {
    MatQ m = mat_identity(surface.rank() + 2);
    for (auto& row : m)
        for (Rat& e : row) e = -e;
    return LatticeIsometry::from_matrix(surface, std::move(m),
                                        {GenStep{GenStep::Kind::Shift, {}, {}}});
}

LatticeIsometry dual_map(const SurfaceLattice& surface) {
    MatQ m = mat_identity(surface.rank() + 2);
    for (int i = 0; i < surface.rank(); ++i) m[1 + i][1 + i] = -1;
    return LatticeIsometry::from_matrix(surface, std::move(m),
                                        {GenStep{GenStep::Kind::Dual, {}, {}}});
}

std::pair<NSVecQ, NSVecQ> fm_normalize(const SurfaceLattice& surface, const LatticeIsometry& phi,
                                       const MukaiVector& v0, const NSVecQ& beta,
                                       const NSVecQ& omega) {
    if (mukai_square(surface, v0) != 0)
        throw PreconditionError("fm_normalize needs an isotropic v0");
    MukaiVector re_e{Rat(1), beta, (surface.ns_square(beta) - surface.ns_square(omega)) / 2};
    MukaiVector im_e{Rat(0), omega, surface.ns_inner(beta, omega)};
    // denominator z = -<e^{beta+i omega}, v0>, a complex rational
    Rat zr = -mukai_pairing(surface, re_e, v0);
    Rat zi = -mukai_pairing(surface, im_e, v0);
    Rat norm = zr * zr + zi * zi;
    if (norm == 0) throw PreconditionError("fm_normalize: vanishing denominator");
    MukaiVector tr = phi.apply(re_e);
    MukaiVector ti = phi.apply(im_e);
    // (tr + i ti)/(zr + i zi)
    MukaiVector out_re = Rat(zr / norm) * tr + Rat(zi / norm) * ti;
    MukaiVector out_im = Rat(zr / norm) * ti - Rat(zi / norm) * tr;
    if (out_re.r != 1 || out_im.r != 0)
        throw PreconditionError("fm_normalize: result is not of exponential shape");
    NSVecQ beta_out = out_re.xi, omega_out = out_im.xi;
    Rat want_re_a = (surface.ns_square(beta_out) - surface.ns_square(omega_out)) / 2;
    Rat want_im_a = surface.ns_inner(beta_out, omega_out);
    if (out_re.a != want_re_a || out_im.a != want_im_a)
        throw PreconditionError("fm_normalize: result is not of exponential shape");
    if (!charge_positivity(surface, beta_out, omega_out))
        throw PreconditionError("fm_normalize: transported omega is not positive");
    return {beta_out, omega_out};
}

MukaiVector apply_word(const SurfaceLattice& surface, const std::vector<GenStep>& word,
                       const MukaiVector& v) {
    MukaiVector cur = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (it->kind) {
            case GenStep::Kind::Shift: cur = shift(cur); break;
            case GenStep::Kind::Dual: cur = dual(cur); break;
            case GenStep::Kind::Tensor: cur = tensor_exp(surface, cur, it->divisor); break;
            case GenStep::Kind::SphericalTwist:
                cur = cur + mukai_pairing(surface, cur, it->cls) * it->cls;
                break;
            case GenStep::Kind::ExceptionalTwist:
                cur = cur + Rat(2 * mukai_pairing(surface, cur, it->cls)) * it->cls;
                break;
        }
    }
    return cur;
}

LatticeIsometry word_to_isometry(const SurfaceLattice& surface, const std::vector<GenStep>& word) {
    LatticeIsometry acc = LatticeIsometry::identity(surface);
    for (const GenStep& g : word) {
        LatticeIsometry step = [&]() {
            switch (g.kind) {
                case GenStep::Kind::Shift: return shift_isometry(surface);
                case GenStep::Kind::Dual: return dual_map(surface);
                case GenStep::Kind::Tensor: return tensor_isometry(surface, g.divisor);
                case GenStep::Kind::SphericalTwist: return spherical_twist(surface, g.cls);
                case GenStep::Kind::ExceptionalTwist: return exceptional_twist(surface, g.cls);
            }
            throw InvariantError("unknown generator");
        }();
        acc = acc.compose(step);
    }
    return acc;
}

namespace {

std::string key_of(const SurfaceLattice& surface, const MukaiVector& v) {
    // canonical key on the integral lattice: (r, xi, 2a)
    std::ostringstream os;
    os << rat_str(v.r);
    for (const Rat& e : v.xi) os << "," << rat_str(e);
    os << "," << rat_str(Rat(2 * v.a));
    (void)surface;
    return os.str();
}

}  // namespace

std::optional<std::vector<GenStep>> word_search_to_rho(const SurfaceLattice& surface,
                                                       const MukaiVector& v0, int depth,
                                                       const std::vector<NSVecZ>& tensor_generators) {
    if (surface.kind() != SurfaceKind::Enriques)
        throw PreconditionError("word search is an Enriques-surface routine");
    if (!is_integral(surface, v0))
        throw PreconditionError("word search: v0 fails parity integrality");
    if (mukai_square(surface, v0) != 0)
        throw PreconditionError("word search: v0 must be isotropic");
    Int content = numerator(v0.r);
    for (const Rat& e : v0.xi) content = gcd(content, numerator(e));
    content = gcd(content, numerator(Rat(2 * v0.a)));
    if (content < 0) content = -content;
    if (content != 2)
        throw PreconditionError("word search: v0 must have gcd(r, xi, 2a) = 2, found " +
                                content.str());
    if (depth < 0) throw PreconditionError("depth must be nonnegative");

    // generator list in deterministic order; every generator is an involution
    // or paired with its inverse, so the same list serves both BFS directions
    MukaiVector half_struct{Rat(1), NSVecQ(surface.rank(), Rat(0)), Rat(1, 2)};
    std::vector<GenStep> gens;
    gens.push_back(GenStep{GenStep::Kind::ExceptionalTwist, half_struct, {}});
    for (const NSVecZ& d : tensor_generators) {
        NSVecQ dq = to_q(d);
        gens.push_back(GenStep{GenStep::Kind::Tensor, {}, dq});
        NSVecQ neg = dq;
        for (Rat& e : neg) e = -e;
        gens.push_back(GenStep{GenStep::Kind::Tensor, {}, neg});
    }
    gens.push_back(GenStep{GenStep::Kind::Shift, {}, {}});

    auto apply_gen = [&](const GenStep& g, const MukaiVector& v) {
        return apply_word(surface, {g}, v);
    };
    auto invert_gen = [&](const GenStep& g) {
        if (g.kind == GenStep::Kind::Tensor) {
            GenStep inv = g;
            for (Rat& e : inv.divisor) e = -e;
            return inv;
        }
        return g;  // involutions
    };

    MukaiVector rho = point_class(surface);
    // forward words map v0 along; backward words will be inverted and appended
    struct Node {
        MukaiVector v;
        std::vector<GenStep> word;  // application order (first applied first)
    };
    std::map<std::string, Node> fwd, bwd;
    fwd[key_of(surface, v0)] = Node{v0, {}};
    bwd[key_of(surface, rho)] = Node{rho, {}};

    auto assemble = [&](const std::vector<GenStep>& fw, const std::vector<GenStep>& bw) {
        // total application order: fw then reversed inverted bw; stored word is
        // composition order (reverse of application order)
        std::vector<GenStep> app = fw;
        for (auto it = bw.rbegin(); it != bw.rend(); ++it) app.push_back(invert_gen(*it));
        std::reverse(app.begin(), app.end());
        return app;
    };

    if (auto hit = bwd.find(key_of(surface, v0)); hit != bwd.end())
        return assemble({}, hit->second.word);

    std::deque<Node> fq{fwd.begin()->second}, bq{bwd.begin()->second};
    int fdepth = 0, bdepth = 0;
    while (fdepth + bdepth < depth && (!fq.empty() || !bq.empty())) {
        bool expand_fwd = (fq.size() <= bq.size() && !fq.empty()) || bq.empty();
        auto& queue = expand_fwd ? fq : bq;
        auto& mine = expand_fwd ? fwd : bwd;
        auto& theirs = expand_fwd ? bwd : fwd;
        (expand_fwd ? fdepth : bdepth) += 1;

        std::deque<Node> next;
        std::vector<std::pair<std::vector<GenStep>, std::vector<GenStep>>> meets;
        while (!queue.empty()) {
            Node cur = queue.front();
            queue.pop_front();
            for (const GenStep& g : gens) {
                MukaiVector img = apply_gen(g, cur.v);
                std::string key = key_of(surface, img);
                if (mine.count(key)) continue;
                Node nxt{img, cur.word};
                nxt.word.push_back(g);
                mine[key] = nxt;
                next.push_back(nxt);
                if (auto hit = theirs.find(key); hit != theirs.end()) {
                    if (expand_fwd)
                        meets.emplace_back(nxt.word, hit->second.word);
                    else
                        meets.emplace_back(hit->second.word, nxt.word);
                }
            }
        }
        if (!meets.empty()) {
            // deterministic choice: assemble all meets of this layer, keep the
            // lexicographically smallest rendering
            std::vector<GenStep> best;
            std::string best_str;
            for (const auto& [fw, bw] : meets) {
                std::vector<GenStep> cand = assemble(fw, bw);
                std::string s;
                for (const GenStep& g : cand) s += g.str() + ";";
                if (best_str.empty() || s < best_str) {
                    best_str = s;
                    best = cand;
                }
            }
            return best;
        }
        queue = std::move(next);
    }
    return std::nullopt;
}

}  // namespace stabwall
