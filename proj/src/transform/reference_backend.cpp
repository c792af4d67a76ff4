#include <cmath>
#include <stdexcept>

#include "torusgate/transform/backend.hpp"

// High-precision floating baseline: same slot convention as the integer
// flow (slot j = evaluation at exp(i pi (1-4j)/N)) so forward outputs are
// comparable slot-for-slot, but computed by an independent radix-2
// decimation-in-time recursion over complex doubles.

namespace torusgate {

namespace {

using cplx = std::complex<double>;

class ReferenceBackend final : public TransformBackend {
public:
    explicit ReferenceBackend(uint32_t ring_degree) : n_(ring_degree), m_(ring_degree / 2) {
        if (ring_degree < 4 || (ring_degree & (ring_degree - 1)) != 0)
            throw std::invalid_argument("reference backend: N must be a power of two >= 4");
        twist_.resize(m_);
        for (uint32_t t = 0; t < m_; ++t) {
            const double ang = 3.14159265358979323846 * t / n_;
            twist_[t] = {std::cos(ang), std::sin(ang)};
        }
        roots_.resize(m_);  // roots_[k] = exp(-2 pi i k / M)
        for (uint32_t k = 0; k < m_; ++k) {
            const double ang = -2.0 * 3.14159265358979323846 * k / m_;
            roots_[k] = {std::cos(ang), std::sin(ang)};
        }
        root_pow_.resize(2 * n_);  // exp(i pi e / N)
        for (uint32_t e = 0; e < 2 * n_; ++e) {
            const double ang = 3.14159265358979323846 * e / n_;
            root_pow_[e] = {std::cos(ang), std::sin(ang)};
        }
    }

    BackendKind kind() const override { return BackendKind::Reference; }
    uint32_t ring_degree() const override { return n_; }
    uint32_t beta() const override { return 0; }

    LagrangeRep forward_torus(const TorusPoly& p, TransformCounters* tc) const override {
        check_degree(p.size());
        return forward_impl([&](uint32_t t) {
            return cplx(static_cast<int32_t>(p[t]), static_cast<int32_t>(p[t + m_]));
        }, tc);
    }

    LagrangeRep forward_int(const IntPoly& p, TransformCounters* tc) const override {
        check_degree(p.size());
        return forward_impl([&](uint32_t t) { return cplx(p[t], p[t + m_]); }, tc);
    }

    TorusPoly inverse(const LagrangeRep& rep, TransformCounters* tc) const override {
        std::vector<cplx> c = inverse_impl(rep, tc);
        TorusPoly out(n_);
        for (uint32_t t = 0; t < m_; ++t) {
            out[t] = static_cast<Torus32>(
                static_cast<uint64_t>(static_cast<int64_t>(std::llround(c[t].real()))));
            out[t + m_] = static_cast<Torus32>(
                static_cast<uint64_t>(static_cast<int64_t>(std::llround(c[t].imag()))));
        }
        return out;
    }

    RawCoeffs inverse_raw(const LagrangeRep& rep, TransformCounters* tc) const override {
        std::vector<cplx> c = inverse_impl(rep, tc);
        RawCoeffs rc;
        rc.fv.resize(n_);
        for (uint32_t t = 0; t < m_; ++t) {
            rc.fv[t] = c[t].real();
            rc.fv[t + m_] = c[t].imag();
        }
        return rc;
    }

    LagrangeRep pointwise_mul(const LagrangeRep& a, const LagrangeRep& b,
                              TransformCounters* tc) const override {
        LagrangeRep acc = product_zero();
        pointwise_mul_acc(acc, a, b, tc);
        return acc;
    }

    void pointwise_mul_acc(LagrangeRep& acc, const LagrangeRep& a, const LagrangeRep& b,
                           TransformCounters* tc) const override {
        check_float(a);
        check_float(b);
        check_float(acc);
        for (uint32_t j = 0; j < m_; ++j) acc.fv[j] += a.fv[j] * b.fv[j];
        if (tc) tc->pointwise_mul_count += 4ull * m_;
    }

    LagrangeRep product_zero() const override { return float_zero(); }
    LagrangeRep torus_zero() const override { return float_zero(); }

    void monomial_scale_acc(LagrangeRep& acc, const LagrangeRep& src, uint32_t e) const override {
        check_float(acc);
        check_float(src);
        const uint32_t two_n = 2 * n_;
        for (uint32_t j = 0; j < m_; ++j) {
            const int64_t slot_exp = ((1 - 4 * static_cast<int64_t>(j)) % two_n + two_n) % two_n;
            const uint32_t expo = static_cast<uint32_t>(
                (static_cast<int64_t>(e & (two_n - 1)) * slot_exp) % two_n);
            acc.fv[j] += (root_pow_[expo] - 1.0) * src.fv[j];
        }
    }

    void add_dc(LagrangeRep& rep, Torus32 c) const override {
        check_float(rep);
        const double v = static_cast<int32_t>(c);
        for (uint32_t j = 0; j < m_; ++j) rep.fv[j] += v;
    }

private:
    void check_degree(uint32_t n) const {
        if (n != n_) throw std::invalid_argument("transform: size mismatch");
    }
    void check_float(const LagrangeRep& r) const {
        if (r.kind != LagrangeRep::Kind::ReferenceFloat || r.ring_degree != n_)
            throw std::invalid_argument("transform: representation mismatch");
    }

    LagrangeRep float_zero() const {
        LagrangeRep r;
        r.kind = LagrangeRep::Kind::ReferenceFloat;
        r.ring_degree = n_;
        r.fv.assign(m_, cplx{});
        return r;
    }

    // out[k] = sum_t in[(base + t*stride) mod M] * exp(-2 pi i t k / L)
    void fft(cplx* out, const cplx* in, uint32_t base, uint32_t stride, uint32_t L) const {
        if (L == 1) {
            out[0] = in[base & (m_ - 1)];
            return;
        }
        fft(out, in, base, 2 * stride, L / 2);
        fft(out + L / 2, in, (base + stride) & (m_ - 1), 2 * stride, L / 2);
        const uint32_t step = m_ / L;
        for (uint32_t k = 0; k < L / 2; ++k) {
            const cplx t = roots_[k * step] * out[L / 2 + k];
            const cplx u = out[k];
            out[k] = u + t;
            out[L / 2 + k] = u - t;
        }
    }

    // IDFT via the conjugation sandwich: conj(DFT(conj(x))) / L.
    void ifft(cplx* out, const cplx* in, uint32_t L) const {
        std::vector<cplx> tmp(L);
        for (uint32_t k = 0; k < L; ++k) tmp[k] = std::conj(in[k]);
        std::vector<cplx> res(L);
        fft(res.data(), tmp.data(), 0, 1, L);
        for (uint32_t k = 0; k < L; ++k) out[k] = std::conj(res[k]) / static_cast<double>(L);
    }

    template <typename FoldFn>
    LagrangeRep forward_impl(FoldFn&& fold, TransformCounters* tc) const {
        std::vector<cplx> c(m_);
        for (uint32_t t = 0; t < m_; ++t) c[t] = fold(t) * twist_[t];
        LagrangeRep rep = float_zero();
        fft(rep.fv.data(), c.data(), 0, 1, m_);
        if (tc) tc->forward_count += 1;
        return rep;
    }

    std::vector<cplx> inverse_impl(const LagrangeRep& rep, TransformCounters* tc) const {
        check_float(rep);
        std::vector<cplx> c(m_);
        ifft(c.data(), rep.fv.data(), m_);
        for (uint32_t t = 0; t < m_; ++t) c[t] *= std::conj(twist_[t]);
        if (tc) tc->inverse_count += 1;
        return c;
    }

    uint32_t n_;
    uint32_t m_;
    std::vector<cplx> twist_;
    std::vector<cplx> roots_;
    std::vector<cplx> root_pow_;
};

}  // namespace

std::shared_ptr<const TransformBackend> make_reference_backend(uint32_t ring_degree) {
    return std::make_shared<ReferenceBackend>(ring_degree);
}

}  // namespace torusgate
