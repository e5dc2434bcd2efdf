#pragma once

#include <algorithm>
#include <vector>

#include "covercycle/bigint.hpp"
#include "covercycle/matrix.hpp"

namespace covercycle {

/// Truncated formal power series with exact rational coefficients.
/// Binary operations truncate to the smaller order of the operands.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(int order) : order_(order), c_(static_cast<std::size_t>(order) + 1) {}
    PowerSeries(int order, std::vector<Rat> coeffs) : order_(order), c_(std::move(coeffs)) {
        c_.resize(static_cast<std::size_t>(order) + 1);
    }

    static PowerSeries one(int order) {
        PowerSeries s(order);
        s.c_[0] = 1;
        return s;
    }

    static PowerSeries from_polynomial(const Polynomial& p, int order) {
        PowerSeries s(order);
        for (int k = 0; k <= order && k <= p.degree(); ++k) s.c_[static_cast<std::size_t>(k)] = Rat(p.coeff(static_cast<std::size_t>(k)));
        return s;
    }

    int order() const { return order_; }
    const Rat& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    Rat& coeff(int k) { return c_[static_cast<std::size_t>(k)]; }

    bool operator==(const PowerSeries& other) const = default;

private:
    int order_ = 0;
    std::vector<Rat> c_;
};

inline PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
    const int m = std::min(a.order(), b.order());
    PowerSeries out(m);
    for (int i = 0; i <= m; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j <= m; ++j)
            if (b.coeff(j) != 0) out.coeff(i + j) += a.coeff(i) * b.coeff(j);
    }
    return out;
}

inline PowerSeries series_div(const PowerSeries& a, const PowerSeries& b) {
    if (b.coeff(0) == 0) throw PreconditionError("series division by zero constant term");
    const int m = std::min(a.order(), b.order());
    PowerSeries q(m);
    for (int n = 0; n <= m; ++n) {
        Rat acc = a.coeff(n);
        for (int k = 1; k <= n; ++k) acc -= b.coeff(k) * q.coeff(n - k);
        q.coeff(n) = acc / b.coeff(0);
    }
    return q;
}

/// Formal exponential; requires zero constant term.
/// Recurrence from f' = a' f:  n f_n = sum_{k=1}^{n} k a_k f_{n-k}.
inline PowerSeries series_exp(const PowerSeries& a) {
    if (a.coeff(0) != 0) throw PreconditionError("series_exp requires zero constant term");
    PowerSeries f(a.order());
    f.coeff(0) = 1;
    for (int n = 1; n <= a.order(); ++n) {
        Rat acc = 0;
        for (int k = 1; k <= n; ++k) acc += Rat(k) * a.coeff(k) * f.coeff(n - k);
        f.coeff(n) = acc / n;
    }
    return f;
}

/// Formal logarithm; requires constant term 1.
/// Recurrence: n g_n = n a_n - sum_{k=1}^{n-1} k g_k a_{n-k}.
inline PowerSeries series_log(const PowerSeries& a) {
    if (a.coeff(0) != 1) throw PreconditionError("series_log requires constant term 1");
    PowerSeries g(a.order());
    for (int n = 1; n <= a.order(); ++n) {
        Rat acc = Rat(n) * a.coeff(n);
        for (int k = 1; k < n; ++k) acc -= Rat(k) * g.coeff(k) * a.coeff(n - k);
        g.coeff(n) = acc / n;
    }
    return g;
}

inline PowerSeries series_neg(const PowerSeries& a) {
    PowerSeries out(a.order());
    for (int k = 0; k <= a.order(); ++k) out.coeff(k) = -a.coeff(k);
    return out;
}

}  // namespace covercycle
