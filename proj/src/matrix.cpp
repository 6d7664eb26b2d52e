#include "permpoly/matrix.h"

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "permpoly/orientation.h"

namespace permpoly {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) : IntMatrix(static_cast<int>(rows.size())) {
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_) throw Error(ErrorKind::InvalidInput, "matrix must be square");
        int c = 0;
        for (long long x : row) (*this)(r, c++) = x;
        ++r;
    }
}

IntMatrix IntMatrix::identity(int order) {
    IntMatrix m(order);
    for (int i = 0; i < order; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::principal(const std::vector<int>& rows) const {
    IntMatrix p(static_cast<int>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows.size(); ++c) p(static_cast<int>(r), static_cast<int>(c)) = (*this)(rows[r], rows[c]);
    return p;
}

bool IntMatrix::is_skew_symmetric() const {
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            if ((*this)(r, c) != -(*this)(c, r)) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.order() != b.order()) throw Error(ErrorKind::InvalidInput, "matrix orders differ");
    const int n = a.order();
    IntMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

IntMatrix operator-(const IntMatrix& a) {
    IntMatrix out(a.order());
    for (int r = 0; r < a.order(); ++r)
        for (int c = 0; c < a.order(); ++c) out(r, c) = -a(r, c);
    return out;
}

BigInt determinant(IntMatrix m) {
    const int n = m.order();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n && pivot < 0; ++i)
                if (m(i, k) != 0) pivot = i;
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign < 0 ? BigInt(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

namespace {

using u128 = unsigned __int128;

// Ryser in wrapping 128-bit arithmetic. Exact whenever |per| < 2^127.
BigInt ryser_small(const std::vector<std::int64_t>& a, int n) {
    std::vector<u128> row(static_cast<std::size_t>(n), 0);
    u128 total = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < limit; ++k) {
        const int j = std::countr_zero(k);
        const std::uint64_t gray = k ^ (k >> 1);
        const bool added = (gray >> j) & 1U;
        for (int i = 0; i < n; ++i) {
            const auto v = static_cast<u128>(static_cast<__int128>(a[static_cast<std::size_t>(i * n + j)]));
            row[static_cast<std::size_t>(i)] = added ? row[static_cast<std::size_t>(i)] + v : row[static_cast<std::size_t>(i)] - v;
        }
        u128 prod = 1;
        for (int i = 0; i < n && prod != 0; ++i) prod *= row[static_cast<std::size_t>(i)];
        if (std::popcount(gray) % 2 == n % 2) total += prod;
        else total -= prod;
    }
    const auto signed_total = static_cast<__int128>(total);
    const bool negative = signed_total < 0;
    u128 mag = negative ? static_cast<u128>(-(signed_total + 1)) + 1 : static_cast<u128>(signed_total);
    BigInt out = static_cast<std::uint64_t>(mag >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(mag);
    return negative ? BigInt(-out) : out;
}

BigInt ryser_big(const IntMatrix& m) {
    const int n = m.order();
    std::vector<BigInt> row(static_cast<std::size_t>(n), 0);
    BigInt total = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < limit; ++k) {
        const int j = std::countr_zero(k);
        const std::uint64_t gray = k ^ (k >> 1);
        const bool added = (gray >> j) & 1U;
        for (int i = 0; i < n; ++i) {
            if (added) row[static_cast<std::size_t>(i)] += m(i, j);
            else row[static_cast<std::size_t>(i)] -= m(i, j);
        }
        BigInt prod = 1;
        for (int i = 0; i < n && prod != 0; ++i) prod *= row[static_cast<std::size_t>(i)];
        if (std::popcount(gray) % 2 == n % 2) total += prod;
        else total -= prod;
    }
    return total;
}

}  // namespace

BigInt permanent(const IntMatrix& m, int bound) {
    const int n = m.order();
    if (n > bound || n > 62)
        throw Error(ErrorKind::TooLargeForOracle, "permanent limited to order <= " + std::to_string(bound) + ", got " + std::to_string(n));
    if (n == 0) return 1;
    BigInt maxabs = 0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            BigInt v = m(r, c) < 0 ? BigInt(-m(r, c)) : m(r, c);
            if (v > maxabs) maxabs = v;
        }
    BigInt bound_value = 1;
    for (int i = 2; i <= n; ++i) bound_value *= i;
    bound_value *= boost::multiprecision::pow(maxabs, static_cast<unsigned>(n));
    if (bound_value < (BigInt(1) << 126) && maxabs <= std::numeric_limits<std::int64_t>::max()) {
        std::vector<std::int64_t> a(static_cast<std::size_t>(n * n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) a[static_cast<std::size_t>(r * n + c)] = m(r, c).convert_to<std::int64_t>();
        return ryser_small(a, n);
    }
    return ryser_big(m);
}

IntPolynomial charpoly(const IntMatrix& m) {
    const int n = m.order();
    // forward differences of f(k) = det(kI - M) at k = 0..n
    std::vector<BigInt> diff;
    for (int k = 0; k <= n; ++k) {
        IntMatrix shifted = -m;
        for (int i = 0; i < n; ++i) shifted(i, i) += k;
        diff.push_back(determinant(std::move(shifted)));
    }
    std::vector<BigInt> leading;  // Δ^j f(0)
    for (int j = 0; j <= n; ++j) {
        leading.push_back(diff[0]);
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
    }
    // p(x) = sum_j Δ^j f(0) * x(x-1)...(x-j+1) / j!, all scaled by n!
    BigInt n_fact = 1;
    for (int i = 2; i <= n; ++i) n_fact *= i;
    IntPolynomial falling = IntPolynomial::constant(1);
    IntPolynomial scaled;
    BigInt j_fact = 1;
    for (int j = 0; j <= n; ++j) {
        if (j > 0) {
            falling *= IntPolynomial(std::vector<BigInt>{-(j - 1), 1});
            j_fact *= j;
        }
        scaled += falling * BigInt(leading[static_cast<std::size_t>(j)] * (n_fact / j_fact));
    }
    std::vector<BigInt> coeffs = scaled.coeffs();
    for (auto& c : coeffs) {
        if (c % n_fact != 0) throw std::logic_error("characteristic polynomial interpolation is not integral");
        c /= n_fact;
    }
    IntPolynomial p(std::move(coeffs));
    if (p.degree() != n || p.coefficient(n) != 1) throw std::logic_error("characteristic polynomial is not monic");
    return p;
}

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(g.num_vertices());
    for (const Edge& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1;
    return a;
}

IntMatrix skew_adjacency_matrix(const Graph& g, const Orientation& o) {
    check_orientation(g, o);
    IntMatrix a(g.num_vertices());
    for (const auto& [t, h] : o.direction) {
        a(t, h) = 1;
        a(h, t) = -1;
    }
    return a;
}

}  // namespace permpoly
