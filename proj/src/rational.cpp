#include "strat/rational.hpp"

#include <sstream>

namespace strat {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, text.c_str(), 10) != 0) {
        mpq_clear(q);
        throw ParseError("bad rational literal '" + text + "'");
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw ParseError("zero denominator in '" + text + "'");
    }
    mpq_canonicalize(q);
    Rational out(q);
    mpq_clear(q);
    return out;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool RationalVector::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

RationalVector RationalVector::operator+(const RationalVector& o) const {
    if (rank() != o.rank()) throw RankMismatch("vector addition");
    RationalVector out(*this);
    for (int i = 0; i < rank(); ++i) out[i] += o[i];
    return out;
}

RationalVector RationalVector::operator-(const RationalVector& o) const {
    if (rank() != o.rank()) throw RankMismatch("vector subtraction");
    RationalVector out(*this);
    for (int i = 0; i < rank(); ++i) out[i] -= o[i];
    return out;
}

RationalVector RationalVector::operator*(const Rational& s) const {
    RationalVector out(*this);
    for (auto& c : out.coords) c *= s;
    return out;
}

bool RationalVector::operator<(const RationalVector& o) const {
    if (rank() != o.rank()) return rank() < o.rank();
    for (int i = 0; i < rank(); ++i) {
        int c = cmp(coords[static_cast<size_t>(i)], o.coords[static_cast<size_t>(i)]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string RationalVector::str() const {
    if (rank() == 1) return to_string(coords[0]);
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < rank(); ++i) {
        if (i) os << ",";
        os << to_string(coords[static_cast<size_t>(i)]);
    }
    os << ")";
    return os.str();
}

InnerProduct InnerProduct::identity(int rank) {
    std::vector<std::vector<Rational>> g(static_cast<size_t>(rank),
                                         std::vector<Rational>(static_cast<size_t>(rank), Rational(0)));
    for (int i = 0; i < rank; ++i) g[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return InnerProduct(std::move(g));
}

InnerProduct::InnerProduct(std::vector<std::vector<Rational>> gram) : gram_(std::move(gram)) {
    const size_t r = gram_.size();
    if (r == 0) throw ValidationError("gram matrix is empty");
    for (const auto& row : gram_)
        if (row.size() != r) throw ValidationError("gram matrix is not square");
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i + 1; j < r; ++j)
            if (gram_[i][j] != gram_[j][i]) throw ValidationError("gram not symmetric");

    // Sylvester: all leading principal minors positive. Fraction-free Gaussian
    // elimination would do; plain rational elimination is fine at these sizes.
    std::vector<std::vector<Rational>> m = gram_;
    for (size_t k = 0; k < r; ++k) {
        // Minor determinant via elimination on the leading (k+1)x(k+1) block.
        std::vector<std::vector<Rational>> blk(k + 1, std::vector<Rational>(k + 1));
        for (size_t i = 0; i <= k; ++i)
            for (size_t j = 0; j <= k; ++j) blk[i][j] = gram_[i][j];
        Rational det(1);
        bool zero = false;
        for (size_t col = 0; col <= k && !zero; ++col) {
            size_t piv = col;
            while (piv <= k && blk[piv][col] == 0) ++piv;
            if (piv > k) {
                zero = true;
                break;
            }
            if (piv != col) {
                std::swap(blk[piv], blk[col]);
                det = -det;
            }
            det *= blk[col][col];
            for (size_t i = col + 1; i <= k; ++i) {
                if (blk[i][col] == 0) continue;
                Rational f = blk[i][col] / blk[col][col];
                for (size_t j = col; j <= k; ++j) blk[i][j] -= f * blk[col][j];
            }
        }
        if (zero || det <= 0) throw ValidationError("gram not positive definite");
    }
}

Rational InnerProduct::dot(const RationalVector& a, const RationalVector& b) const {
    if (a.rank() != rank() || b.rank() != rank()) throw RankMismatch("inner product");
    Rational acc(0);
    for (int i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        Rational row(0);
        for (int j = 0; j < rank(); ++j) {
            if (b[j] == 0) continue;
            row += gram_[static_cast<size_t>(i)][static_cast<size_t>(j)] * b[j];
        }
        acc += a[i] * row;
    }
    return acc;
}

}  // namespace strat
