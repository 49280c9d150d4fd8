#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twd {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an operation's precondition on its arguments fails.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Int gcd(const Int& a, const Int& b);
Int abs(const Int& a);
int sign(const Int& a);
int sign(const Rational& a);

/// Parses "p", "-p" or "p/q". Throws DomainError on malformed input.
Rational parse_rational(const std::string& s);
std::string to_string(const Int& v);
std::string to_string(const Rational& v);

struct IntVec2 {
    Int x;
    Int y;

    IntVec2() = default;
    IntVec2(Int x_, Int y_) : x(std::move(x_)), y(std::move(y_)) {}
    IntVec2(long long x_, long long y_) : x(x_), y(y_) {}

    bool is_zero() const { return x == 0 && y == 0; }
    bool primitive() const;

    friend bool operator==(const IntVec2& a, const IntVec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const IntVec2& a, const IntVec2& b) { return !(a == b); }
    friend IntVec2 operator+(const IntVec2& a, const IntVec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend IntVec2 operator-(const IntVec2& a, const IntVec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend IntVec2 operator-(const IntVec2& a) { return {-a.x, -a.y}; }
    friend IntVec2 operator*(const Int& k, const IntVec2& a) { return {k * a.x, k * a.y}; }
};

/// Lexicographic order, used only for canonical sorting.
bool lex_less(const IntVec2& a, const IntVec2& b);

Int cross(const IntVec2& a, const IntVec2& b);
Int dot(const IntVec2& a, const IntVec2& b);
std::string to_string(const IntVec2& v);

/// Exact counterclockwise angle order starting at direction (1,0) inclusive.
bool angle_less(const IntVec2& a, const IntVec2& b);
/// Counterclockwise angle order starting at `from` (inclusive).
bool angle_less_from(const IntVec2& from, const IntVec2& a, const IntVec2& b);

struct RatVec2 {
    Rational x;
    Rational y;
    friend bool operator==(const RatVec2& a, const RatVec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const RatVec2& a, const RatVec2& b) { return !(a == b); }
};

Rational dot(const RatVec2& p, const IntVec2& v);

/// Integer 2x2 matrix of determinant +1, acting on column vectors.
class UniMat2 {
public:
    UniMat2();
    UniMat2(Int a, Int b, Int c, Int d);

    static UniMat2 identity() { return {}; }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    IntVec2 apply(const IntVec2& v) const;
    RatVec2 apply(const RatVec2& v) const;
    UniMat2 inverse() const;
    UniMat2 transpose() const;
    /// (G^{-1})^T, the matching action on points.
    UniMat2 inverse_transpose() const { return inverse().transpose(); }

    friend UniMat2 operator*(const UniMat2& l, const UniMat2& r);
    friend bool operator==(const UniMat2& l, const UniMat2& r);

private:
    Int a_, b_, c_, d_;
};

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;
    bool is_symmetric() const;
    bool is_diagonal() const;

    friend IntMatrix operator*(const IntMatrix& l, const IntMatrix& r);
    friend bool operator==(const IntMatrix& l, const IntMatrix& r);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

Int determinant(const IntMatrix& m);

/// Finitely generated abelian group Z^free_rank + Z/d1 + ... with d1 | d2 | ...
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    static AbelianGroup free(std::size_t r) { return {r, {}}; }
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    std::string to_string() const;
    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b)
    {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
};

struct Bezout {
    Int g;
    Int p;
    Int q;
};

/// p*a + q*b = g = gcd(a,b) > 0.
Bezout bezout(const Int& a, const Int& b);

struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    std::size_t rank = 0;
};

/// U*M*V = D with D diagonal, nonnegative and d_i | d_{i+1}.
SmithForm smith_normal_form(const IntMatrix& M);

struct CokerKer {
    AbelianGroup coker;
    std::size_t ker_rank = 0;
};

CokerKer coker_ker(const IntMatrix& M);

struct TriangleCensus {
    Int interior;
    Int boundary;
    /// Primitive lattice points of the closed triangle (0, v1, v2), origin
    /// excluded, sorted by angle from v1 towards v2 (counterclockwise when
    /// det(v1, v2) > 0).
    std::vector<IntVec2> primitive_points;
};

TriangleCensus triangle_lattice_census(const IntVec2& v1, const IntVec2& v2);

bool is_z2_basis(const IntVec2& v1, const IntVec2& v2);

}  // namespace twd
