#include "stabwall/numeric.hpp"

#include <cmath>
#include <sstream>

namespace stabwall {

int sign(const Int& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
int sign(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

Int floor_rat(const Rat& q) {
    Int n = numerator(q), d = denominator(q);
    Int t = n / d;
    if (n % d != 0 && n < 0) --t;
    return t;
}

Int ceil_rat(const Rat& q) { return -floor_rat(Rat(-q)); }

Int isqrt_floor(const Int& n) {
    if (n < 0) throw InvariantError("isqrt of negative");
    Int r = sqrt(n);  // boost integer sqrt is floor(sqrt(n))
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = isqrt_floor(n);
    return root * root == n;
}

namespace {
// n <= c + sqrt(q)  <=>  n <= c  or  (n-c)^2 <= q
bool below_add_sqrt(const Int& n, const Rat& c, const Rat& q) {
    Rat d = Rat(n) - c;
    if (d <= 0) return true;
    return d * d <= q;
}
}  // namespace

Int floor_add_sqrt(const Rat& c, const Rat& q) {
    if (q < 0) throw InvariantError("floor_add_sqrt: negative radicand");
    Int lo = floor_rat(c);
    Int hi = lo + isqrt_floor(ceil_rat(q)) + 2;
    // invariant: below_add_sqrt(lo), !below_add_sqrt(hi+1)
    while (lo < hi) {
        Int mid = lo + (hi - lo + 1) / 2;
        if (below_add_sqrt(mid, c, q))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

Int ceil_sub_sqrt(const Rat& c, const Rat& q) { return -floor_add_sqrt(Rat(-c), q); }

Int floor_sqrt_rat(const Rat& q) { return floor_add_sqrt(Rat(0), q); }

Int square_free_core(const Int& n, Int& square_root_part) {
    if (n <= 0) throw InvariantError("square_free_core: nonpositive input");
    Int core = 1, sq = 1, m = n;
    for (Int p = 2; p * p <= m && p < 2000000; ++p) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (int i = 0; i + 1 < e; i += 2) sq *= p;
        if (e % 2 == 1) core *= p;
    }
    // leftover cofactor: either 1, a prime, or a perfect square of a prime
    Int r;
    if (is_perfect_square(m, r))
        sq *= r;
    else
        core *= m;
    square_root_part = sq;
    return core;
}

Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return b < 0 ? Rat(-b) : b;
    if (b == 0) return a < 0 ? Rat(-a) : a;
    Int n1 = numerator(a), d1 = denominator(a);
    Int n2 = numerator(b), d2 = denominator(b);
    Int num = gcd(Int(n1 * d2), Int(n2 * d1));
    return Rat(num, d1 * d2);
}

std::string rat_str(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ConfigError("empty rational literal");
    std::string t = s;
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(t));
        }
        Int num(t.substr(0, slash));
        Int den(t.substr(slash + 1));
        if (den == 0) throw ConfigError("zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const std::exception& e) {
        throw ConfigError("bad rational literal '" + s + "'");
    }
}

QuadExt::QuadExt(const Rat& x, const Rat& y, const Int& c) : x_(x), y_(y), c_(c) { normalize(); }

void QuadExt::normalize() {
    if (c_ < 0) throw PreconditionError("negative radicand in quadratic extension");
    if (c_ == 0) {
        y_ = 0;
        c_ = 1;
        return;
    }
    if (y_ == 0) {
        c_ = 1;
        return;
    }
    Int sq;
    Int core = square_free_core(c_, sq);
    if (sq != 1) {
        y_ *= Rat(sq);
        c_ = core;
    }
    if (c_ == 1) {
        x_ += y_;
        y_ = 0;
    }
}

QuadExt QuadExt::sqrt_of(const Rat& q) {
    if (q < 0) throw PreconditionError("sqrt of negative rational");
    if (q == 0) return QuadExt(Rat(0));
    // sqrt(p/d) = sqrt(p*d)/d
    Int p = numerator(q), d = denominator(q);
    return QuadExt(Rat(0), Rat(1, d), p * d);
}

const Rat& QuadExt::as_rational() const {
    if (!is_rational()) throw PreconditionError("value is irrational: " + str());
    return x_;
}

Int QuadExt::common_radicand(const QuadExt& a, const QuadExt& b) {
    if (a.y_ == 0) return b.c_;
    if (b.y_ == 0) return a.c_;
    if (a.c_ != b.c_)
        throw PreconditionError("mixed radicands sqrt(" + a.c_.str() + ") vs sqrt(" + b.c_.str() + ")");
    return a.c_;
}

QuadExt QuadExt::operator-() const {
    QuadExt r = *this;
    r.x_ = -r.x_;
    r.y_ = -r.y_;
    return r;
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    Int c = common_radicand(*this, o);
    return QuadExt(x_ + o.x_, y_ + o.y_, c);
}

QuadExt QuadExt::operator-(const QuadExt& o) const { return *this + (-o); }

QuadExt QuadExt::operator*(const QuadExt& o) const {
    Int c = common_radicand(*this, o);
    Rat nx = x_ * o.x_ + y_ * o.y_ * Rat(c);
    Rat ny = x_ * o.y_ + y_ * o.x_;
    return QuadExt(nx, ny, c);
}

QuadExt QuadExt::operator/(const QuadExt& o) const {
    Int c = common_radicand(*this, o);
    Rat nrm = o.x_ * o.x_ - o.y_ * o.y_ * Rat(c);
    if (nrm == 0) {
        if (o.x_ == 0 && o.y_ == 0) throw PreconditionError("division by zero");
        throw InvariantError("zero field norm for nonzero element");
    }
    QuadExt conj(o.x_, -o.y_, c);
    QuadExt num = *this * conj;
    return QuadExt(num.x_ / nrm, num.y_ / nrm, c);
}

int QuadExt::sign() const {
    int sx = stabwall::sign(x_), sy = stabwall::sign(y_);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // opposite signs: compare x^2 against y^2 c
    Rat lhs = x_ * x_, rhs = y_ * y_ * Rat(c_);
    if (lhs == rhs) return 0;  // only possible when c_ == 1, excluded by normalization
    return (lhs > rhs) ? sx : sy;
}

bool QuadExt::operator==(const QuadExt& o) const { return (*this - o).sign() == 0; }

double QuadExt::to_double() const {
    double xd = numerator(x_).convert_to<double>() / denominator(x_).convert_to<double>();
    double yd = numerator(y_).convert_to<double>() / denominator(y_).convert_to<double>();
    double cd = c_.convert_to<double>();
    return xd + yd * std::sqrt(cd);
}

std::string QuadExt::str() const {
    return "(" + rat_str(x_) + "," + rat_str(y_) + "," + c_.str() + ")";
}

QuadExt min(const QuadExt& a, const QuadExt& b) { return a <= b ? a : b; }
QuadExt max(const QuadExt& a, const QuadExt& b) { return a >= b ? a : b; }

}  // namespace stabwall
