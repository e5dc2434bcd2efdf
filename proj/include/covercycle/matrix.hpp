#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "covercycle/bigint.hpp"

namespace covercycle {

/// Dense square matrix of unbounded integers. All arithmetic is exact.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t size() const { return n_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool operator==(const IntMatrix& other) const = default;

    Int trace() const {
        Int t = 0;
        for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
        return t;
    }

    IntMatrix operator*(const IntMatrix& rhs) const {
        IntMatrix out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const Int& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < n_; ++j) {
                    const Int& bkj = rhs(k, j);
                    if (bkj != 0) out(i, j) += aik * bkj;
                }
            }
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<Int> a_;
};

/// Integer polynomial, coefficient index = degree, trailing zeros trimmed.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial one() { return Polynomial({Int(1)}); }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const Polynomial& other) const = default;

    Polynomial operator*(const Polynomial& rhs) const {
        if (is_zero() || rhs.is_zero()) return {};
        std::vector<Int> out(c_.size() + rhs.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
        }
        return Polynomial(std::move(out));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

/// Exact Tr m^N by iterated multiplication.
inline Int trace_power(const IntMatrix& m, unsigned n) {
    if (n == 0 || m.size() == 0) return m.size() == 0 ? Int(0) : Int(m.size());
    IntMatrix p = m;
    for (unsigned i = 1; i < n; ++i) p = p * m;
    return p.trace();
}

/// Traces of m^1 .. m^n_max in one pass; index N-1 holds Tr m^N.
inline std::vector<Int> trace_powers(const IntMatrix& m, unsigned n_max) {
    std::vector<Int> out(n_max);
    if (m.size() == 0) return out;
    IntMatrix p = m;
    out[0] = p.trace();
    for (unsigned n = 2; n <= n_max; ++n) {
        p = p * m;
        out[n - 1] = p.trace();
    }
    return out;
}

/// Characteristic polynomial det(lambda*I - m) = lambda^n + c[1] lambda^{n-1} + ... + c[n],
/// by the Faddeev-LeVerrier recurrence. Every division is exact over the integers.
inline std::vector<Int> characteristic_polynomial(const IntMatrix& m) {
    const std::size_t n = m.size();
    std::vector<Int> c(n + 1);
    c[0] = 1;
    IntMatrix aux = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        aux = m * aux;
        Int t = aux.trace();
        Int q, r;
        divide_qr(t, Int(k), q, r);
        if (r != 0) throw ConsistencyError("Faddeev-LeVerrier trace not divisible");
        c[k] = -q;
        for (std::size_t i = 0; i < n; ++i) aux(i, i) += c[k];
    }
    return c;
}

/// det(I - z*m) as an integer polynomial in z (the reversed characteristic polynomial).
inline Polynomial det_one_minus_z(const IntMatrix& m) {
    return Polynomial(characteristic_polynomial(m));
}

}  // namespace covercycle
