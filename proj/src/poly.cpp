#include "torusgate/poly.hpp"

#include <stdexcept>

namespace torusgate {

TorusPoly torus_linear(const TorusPoly& a, const TorusPoly& b, LinearOp op) {
    if (a.size() != b.size()) throw std::invalid_argument("torus_linear: degree mismatch");
    TorusPoly r(a.size());
    if (op == LinearOp::Add) {
        for (uint32_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    } else {
        for (uint32_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    }
    return r;
}

void add_in_place(TorusPoly& a, const TorusPoly& b) {
    for (uint32_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

void sub_in_place(TorusPoly& a, const TorusPoly& b) {
    for (uint32_t i = 0; i < a.size(); ++i) a[i] -= b[i];
}

TorusPoly negate(const TorusPoly& a) {
    TorusPoly r(a.size());
    for (uint32_t i = 0; i < a.size(); ++i) r[i] = static_cast<Torus32>(0) - a[i];
    return r;
}

namespace {

template <typename P, typename V>
P rotate_impl(const P& p, uint32_t e) {
    const uint32_t n = p.size();
    P r(n);
    e &= 2 * n - 1;
    for (uint32_t j = 0; j < n; ++j) {
        uint32_t t = j + e;
        V v = p[j];
        if (t >= n) {
            t -= n;
            v = static_cast<V>(0) - v;
        }
        if (t >= n) {  // e up to 2N-1 can wrap twice
            t -= n;
            v = static_cast<V>(0) - v;
        }
        r[t] = v;
    }
    return r;
}

}  // namespace

TorusPoly rotate_monomial(const TorusPoly& p, uint32_t e) {
    return rotate_impl<TorusPoly, Torus32>(p, e);
}

IntPoly rotate_monomial(const IntPoly& p, uint32_t e) {
    return rotate_impl<IntPoly, int32_t>(p, e);
}

TorusPoly schoolbook_negacyclic_mul(const IntPoly& a, const TorusPoly& b) {
    if (a.size() != b.size()) throw std::invalid_argument("schoolbook: degree mismatch");
    const uint32_t n = a.size();
    TorusPoly r(n);
    for (uint32_t i = 0; i < n; ++i) {
        const Torus32 ai = static_cast<Torus32>(a[i]);
        if (ai == 0) continue;
        for (uint32_t j = 0; j < n; ++j) {
            const Torus32 prod = ai * b[j];
            const uint32_t t = i + j;
            if (t < n)
                r[t] += prod;
            else
                r[t - n] -= prod;
        }
    }
    return r;
}

std::vector<int64_t> schoolbook_negacyclic_mul_i64(const IntPoly& a, const TorusPoly& b) {
    if (a.size() != b.size()) throw std::invalid_argument("schoolbook: degree mismatch");
    const uint32_t n = a.size();
    std::vector<int64_t> r(n, 0);
    for (uint32_t i = 0; i < n; ++i) {
        const int64_t ai = a[i];
        if (ai == 0) continue;
        for (uint32_t j = 0; j < n; ++j) {
            const int64_t prod = ai * static_cast<int32_t>(b[j]);
            const uint32_t t = i + j;
            if (t < n)
                r[t] += prod;
            else
                r[t - n] -= prod;
        }
    }
    return r;
}

}  // namespace torusgate
