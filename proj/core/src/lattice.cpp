#include "twd/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace twd {

Int gcd(const Int& a, const Int& b)
{
    Int x = abs(a), y = abs(b);
    while (y != 0) {
        Int r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }
int sign(const Int& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }
int sign(const Rational& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

namespace {

Int parse_int(const std::string& s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        throw DomainError("malformed integer: '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw DomainError("malformed integer: '" + s + "'");
    return Int(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0)
        throw DomainError("zero denominator: '" + s + "'");
    return Rational(num, den);
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rational& v)
{
    const Int& n = boost::multiprecision::numerator(v);
    const Int& d = boost::multiprecision::denominator(v);
    if (d == 1)
        return n.str();
    return n.str() + "/" + d.str();
}

bool IntVec2::primitive() const { return !is_zero() && gcd(x, y) == 1; }

bool lex_less(const IntVec2& a, const IntVec2& b)
{
    if (a.x != b.x)
        return a.x < b.x;
    return a.y < b.y;
}

Int cross(const IntVec2& a, const IntVec2& b) { return a.x * b.y - a.y * b.x; }
Int dot(const IntVec2& a, const IntVec2& b) { return a.x * b.x + a.y * b.y; }

std::string to_string(const IntVec2& v) { return "(" + v.x.str() + "," + v.y.str() + ")"; }

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half_plane(const IntVec2& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

}  // namespace

bool angle_less(const IntVec2& a, const IntVec2& b)
{
    int ha = half_plane(a), hb = half_plane(b);
    if (ha != hb)
        return ha < hb;
    return cross(a, b) > 0;
}

bool angle_less_from(const IntVec2& from, const IntVec2& a, const IntVec2& b)
{
    // Rotate the frame so that `from` becomes the reference direction.
    IntVec2 ra{dot(a, from), cross(from, a)};
    IntVec2 rb{dot(b, from), cross(from, b)};
    return angle_less(ra, rb);
}

Rational dot(const RatVec2& p, const IntVec2& v) { return p.x * Rational(v.x) + p.y * Rational(v.y); }

UniMat2::UniMat2() : a_(1), b_(0), c_(0), d_(1) {}

UniMat2::UniMat2(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
{
    if (a_ * d_ - b_ * c_ != 1)
        throw DomainError("matrix determinant is not 1");
}

IntVec2 UniMat2::apply(const IntVec2& v) const { return {a_ * v.x + b_ * v.y, c_ * v.x + d_ * v.y}; }

RatVec2 UniMat2::apply(const RatVec2& v) const
{
    return {Rational(a_) * v.x + Rational(b_) * v.y, Rational(c_) * v.x + Rational(d_) * v.y};
}

UniMat2 UniMat2::inverse() const { return {d_, -b_, -c_, a_}; }
UniMat2 UniMat2::transpose() const { return {a_, c_, b_, d_}; }

UniMat2 operator*(const UniMat2& l, const UniMat2& r)
{
    return {l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_,
            l.c_ * r.a_ + l.d_ * r.c_, l.c_ * r.b_ + l.d_ * r.d_};
}

bool operator==(const UniMat2& l, const UniMat2& r)
{
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw DomainError("ragged matrix literal");
        for (long long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const { return rows_ == cols_ && *this == transpose(); }

bool IntMatrix::is_diagonal() const
{
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0)
                return false;
    return true;
}

IntMatrix operator*(const IntMatrix& l, const IntMatrix& r)
{
    if (l.cols_ != r.rows_)
        throw DomainError("matrix size mismatch");
    IntMatrix out(l.rows_, r.cols_);
    for (std::size_t i = 0; i < l.rows_; ++i)
        for (std::size_t k = 0; k < l.cols_; ++k) {
            const Int& v = l(i, k);
            if (v == 0)
                continue;
            for (std::size_t j = 0; j < r.cols_; ++j)
                out(i, j) += v * r(k, j);
        }
    return out;
}

bool operator==(const IntMatrix& l, const IntMatrix& r)
{
    return l.rows_ == r.rows_ && l.cols_ == r.cols_ && l.data_ == r.data_;
}

Int determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw DomainError("determinant of non-square matrix");
    // Fraction-free Bareiss elimination.
    std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Int prev = 1;
    int s = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(p, j));
            s = -s;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return s * a(n - 1, n - 1);
}

std::string AbelianGroup::to_string() const
{
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1)
            os << "^" << free_rank;
        first = false;
    }
    for (const Int& t : torsion) {
        if (!first)
            os << " + ";
        os << "Z/" << t;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

Bezout bezout(const Int& a, const Int& b)
{
    if (a == 0 && b == 0)
        throw DomainError("bezout: both arguments are zero");
    Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        Int t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0 < 0) {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    return {r0, s0, t0};
}

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j)
{
    for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(i, c), m(j, c));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        std::swap(m(r, i), m(r, j));
}

// row_i -= q * row_j
void row_sub(IntMatrix& m, std::size_t i, std::size_t j, const Int& q)
{
    for (std::size_t c = 0; c < m.cols(); ++c)
        m(i, c) -= q * m(j, c);
}

// col_i -= q * col_j
void col_sub(IntMatrix& m, std::size_t i, std::size_t j, const Int& q)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        m(r, i) -= q * m(r, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M)
{
    const std::size_t m = M.rows(), n = M.cols();
    SmithForm f{IntMatrix::identity(m), M, IntMatrix::identity(n), 0};
    IntMatrix& D = f.D;
    std::size_t t = 0;
    while (t < m && t < n) {
        // Pivot: entry of least absolute value in the trailing block, first in
        // row-major order on ties.
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (D(i, j) == 0)
                    continue;
                Int v = abs(D(i, j));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (!found)
            break;
        if (pi != t) {
            swap_rows(D, t, pi);
            swap_rows(f.U, t, pi);
        }
        if (pj != t) {
            swap_cols(D, t, pj);
            swap_cols(f.V, t, pj);
        }
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
            if (D(i, t) == 0)
                continue;
            Int q = D(i, t) / D(t, t);
            row_sub(D, i, t, q);
            row_sub(f.U, i, t, q);
            if (D(i, t) != 0)
                clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (D(t, j) == 0)
                continue;
            Int q = D(t, j) / D(t, t);
            col_sub(D, j, t, q);
            col_sub(f.V, j, t, q);
            if (D(t, j) != 0)
                clean = false;
        }
        if (!clean)
            continue;  // a smaller remainder appeared; re-pivot at t
        // Divisibility: fold an offending row into row t and retry.
        bool divides = true;
        for (std::size_t i = t + 1; i < m && divides; ++i)
            for (std::size_t j = t + 1; j < n; ++j)
                if (D(i, j) % D(t, t) != 0) {
                    row_sub(D, t, i, Int(-1));
                    row_sub(f.U, t, i, Int(-1));
                    divides = false;
                    break;
                }
        if (!divides)
            continue;
        if (D(t, t) < 0) {
            for (std::size_t c = 0; c < n; ++c)
                D(t, c) = -D(t, c);
            for (std::size_t c = 0; c < m; ++c)
                f.U(t, c) = -f.U(t, c);
        }
        ++t;
    }
    f.rank = t;
    return f;
}

CokerKer coker_ker(const IntMatrix& M)
{
    SmithForm f = smith_normal_form(M);
    CokerKer out;
    out.coker.free_rank = M.rows() - f.rank;
    for (std::size_t i = 0; i < f.rank; ++i)
        if (f.D(i, i) != 1)
            out.coker.torsion.push_back(f.D(i, i));
    out.ker_rank = M.cols() - f.rank;
    return out;
}

TriangleCensus triangle_lattice_census(const IntVec2& v1, const IntVec2& v2)
{
    Int det = cross(v1, v2);
    if (det == 0)
        throw DomainError("triangle_lattice_census: collinear vectors " + to_string(v1) + ", " +
                          to_string(v2));
    const IntVec2 o{0, 0};
    const IntVec2* corner[3] = {&o, &v1, &v2};
    int orient = det > 0 ? 1 : -1;

    Int xmin = std::min({Int(0), v1.x, v2.x}), xmax = std::max({Int(0), v1.x, v2.x});
    Int ymin = std::min({Int(0), v1.y, v2.y}), ymax = std::max({Int(0), v1.y, v2.y});

    TriangleCensus c;
    c.interior = 0;
    c.boundary = 0;
    for (Int x = xmin; x <= xmax; ++x)
        for (Int y = ymin; y <= ymax; ++y) {
            IntVec2 p{x, y};
            int zeros = 0;
            bool inside = true;
            for (int e = 0; e < 3; ++e) {
                const IntVec2& a = *corner[e];
                const IntVec2& b = *corner[(e + 1) % 3];
                int s = sign(cross(b - a, p - a)) * orient;
                if (s < 0) {
                    inside = false;
                    break;
                }
                if (s == 0)
                    ++zeros;
            }
            if (!inside)
                continue;
            if (zeros > 0)
                ++c.boundary;
            else
                ++c.interior;
            if (p.primitive())
                c.primitive_points.push_back(p);
        }
    std::sort(c.primitive_points.begin(), c.primitive_points.end(),
              [&](const IntVec2& a, const IntVec2& b) { return sign(cross(a, b)) * orient > 0; });
    return c;
}

bool is_z2_basis(const IntVec2& v1, const IntVec2& v2) { return abs(cross(v1, v2)) == 1; }

}  // namespace twd
