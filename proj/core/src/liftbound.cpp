#include "critheight/liftbound.hpp"

#include <stdexcept>
#include <vector>

namespace critheight {

namespace {

// Exact solve of M x = rhs by Gauss-Jordan over Q; returns false when singular.
// det receives the determinant of M.
bool solve_exact(std::vector<std::vector<Rational>> M, std::vector<Rational> rhs,
                 std::vector<Rational>& x, Rational& det) {
    const std::size_t n = M.size();
    det = Rational(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(M[piv][col]) == 0) ++piv;
        if (piv == n) {
            det = Rational(0);
            return false;
        }
        if (piv != col) {
            std::swap(M[piv], M[col]);
            std::swap(rhs[piv], rhs[col]);
            det = -det;
        }
        det *= M[col][col];
        Rational inv = make_rational(M[col][col].get_den(), M[col][col].get_num());
        for (std::size_t j = col; j < n; ++j) M[col][j] *= inv;
        rhs[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || sgn(M[row][col]) == 0) continue;
            Rational f = M[row][col];
            for (std::size_t j = col; j < n; ++j) M[row][j] -= f * M[col][j];
            rhs[row] -= f * rhs[col];
        }
    }
    x = std::move(rhs);
    return true;
}

struct ClearedIdentity {
    std::vector<Integer> a, b;  // integer cofactor coefficients
    Integer delta;              // positive scale
    Integer l1;                 // sum|a| + sum|b|
};

// Solve A F + B G = (target monomial of degree 2d-1), clear denominators.
ClearedIdentity bezout_identity(const std::vector<Integer>& F, const std::vector<Integer>& G,
                                std::size_t target_index, Rational& det_out) {
    const std::size_t d = F.size() - 1;
    const std::size_t dim = 2 * d;
    std::vector<std::vector<Rational>> M(dim, std::vector<Rational>(dim, Rational(0)));
    // column j < d: cofactor monomial X^j Y^(d-1-j) against F; column d+j against G
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i <= d; ++i) {
            M[i + j][j] += Rational(F[i]);
            M[i + j][d + j] += Rational(G[i]);
        }
    }
    std::vector<Rational> rhs(dim, Rational(0));
    rhs[target_index] = Rational(1);
    std::vector<Rational> sol;
    if (!solve_exact(M, rhs, sol, det_out)) {
        throw std::domain_error("lift_bounds: resultant vanishes (degenerate lift)");
    }
    Integer delta(1);
    for (const auto& s : sol) mpz_lcm(delta.get_mpz_t(), delta.get_mpz_t(), s.get_den().get_mpz_t());
    ClearedIdentity out;
    out.delta = delta;
    out.l1 = 0;
    for (std::size_t j = 0; j < dim; ++j) {
        Rational scaled = sol[j] * Rational(delta);
        Integer coeff = scaled.get_num();  // denominator is 1 by construction
        out.l1 += abs(coeff);
        (j < d ? out.a : out.b).push_back(coeff);
    }
    return out;
}

}  // namespace

long LiftBounds::content_bound(const Integer& p) const {
    Integer tmp;
    long e = 0;
    if (mpz_divisible_p(delta_x.get_mpz_t(), p.get_mpz_t())) {
        e = static_cast<long>(mpz_remove(tmp.get_mpz_t(), delta_x.get_mpz_t(), p.get_mpz_t()));
    }
    long e2 = 0;
    if (mpz_divisible_p(delta_y.get_mpz_t(), p.get_mpz_t())) {
        e2 = static_cast<long>(mpz_remove(tmp.get_mpz_t(), delta_y.get_mpz_t(), p.get_mpz_t()));
    }
    return e > e2 ? e : e2;
}

LiftBounds lift_bounds(const std::vector<Integer>& F, const std::vector<Integer>& G) {
    if (F.size() < 3 || F.size() != G.size()) {
        throw std::domain_error("lift_bounds: forms must share a degree >= 2");
    }
    const long d = static_cast<long>(F.size()) - 1;

    Rational det;
    ClearedIdentity idx = bezout_identity(F, G, 2 * d - 1, det);  // X^(2d-1) target
    Rational det2;
    ClearedIdentity idy = bezout_identity(F, G, 0, det2);  // Y^(2d-1) target

    LiftBounds out;
    out.degree = d;
    out.resultant = abs(det.get_num());  // integer for integer entries; sign immaterial here
    out.delta_x = idx.delta;
    out.delta_y = idy.delta;
    out.l1_x = idx.l1;
    out.l1_y = idy.l1;

    Integer sumF(0), sumG(0);
    for (const auto& c : F) sumF += abs(c);
    for (const auto& c : G) sumG += abs(c);
    out.c_plus = log_abs_integer(sumF > sumG ? sumF : sumG);

    Integer mx = idx.l1 * idy.delta;
    Integer my = idy.l1 * idx.delta;
    Integer m = mx > my ? mx : my;
    out.c_minus = m > 1 ? log_abs_integer(m) : 0.0;
    return out;
}

}  // namespace critheight
