#include <cmath>
#include <stdexcept>

#include "torusgate/transform/backend.hpp"

// Approximate multiplication-less integer transform.
//
// Forward flow (M = N/2 complex lanes):
//   fold      c_t = (p_t + i p_{t+M}) << guard
//   twist     c_t rotated by +pi*t/N            (lifting)
//   DFT_M     depth-first conjugate-pair split radix, kernel exp(-2pi i/M):
//             the radix-4 butterfly at position k of a size-L block rotates
//             its two quarter-lane values by -2pi k/L and +2pi k/L from one
//             table entry, then combines with adds and exact i-multiplies.
// Slot j of the result holds the evaluation at exp(i pi (1-4j)/N), scaled by
// 2^guard. The inverse runs the network backwards: every lifting shear and
// every butterfly halving is exactly invertible on integers, so
// inverse(forward(p)) == p bit-for-bit at any twiddle bitwidth, and the
// halvings carry the 1/M normalization.
//
// Magnitude budget in the 64-bit lanes: inputs enter below 2^51 after the
// guard shift (torus words get 18 guard bits, gadget digits -- |d| <= 2048
// enforced -- get 40), DFT growth is bounded by M*sqrt(2) and the lifting
// transient by 2x, keeping intermediates below 2^63 for honest inputs.
// Pointwise products renormalize to 8 fractional bits.

namespace torusgate {

namespace {

struct FlowCounts {
    uint64_t butterflies = 0;
    uint64_t twiddle_reads = 0;
    uint64_t adds = 0;
    uint64_t shifts = 0;
};

inline int64_t round_half(int64_t v) { return (v + 1) >> 1; }

inline void book_dyadic(FlowCounts* fc, const DyadicCoefficient& c) {
    fc->adds += c.recipe.size() + 2;    // term sums, rounding add, lane add
    fc->shifts += c.recipe.size() + 1;  // term shifts, renormalization
}

template <bool Strict>
inline int64_t dy(int64_t x, const DyadicCoefficient& c) {
    if constexpr (Strict)
        return apply_dyadic_recipe(x, c);
    else
        return apply_dyadic(x, c);
}

// R(theta) as three lifting shears; fc non-null only during dry-run counting.
template <bool Strict>
inline void rot_fwd(Cplx64& v, const LiftingRotation& r, FlowCounts* fc) {
    if (r.is_identity()) return;
    v.re += dy<Strict>(v.im, r.pre);
    v.im += dy<Strict>(v.re, r.mid);
    v.re += dy<Strict>(v.im, r.post);
    if (fc) {
        book_dyadic(fc, r.pre);
        book_dyadic(fc, r.mid);
        book_dyadic(fc, r.post);
    }
}

// R(theta)^{-1} = R(-theta): the exact integer inverse of rot_fwd.
template <bool Strict>
inline void rot_bwd(Cplx64& v, const LiftingRotation& r, FlowCounts* fc) {
    if (r.is_identity()) return;
    v.re -= dy<Strict>(v.im, r.post);
    v.im -= dy<Strict>(v.re, r.mid);
    v.re -= dy<Strict>(v.im, r.pre);
    if (fc) {
        book_dyadic(fc, r.pre);
        book_dyadic(fc, r.mid);
        book_dyadic(fc, r.post);
    }
}

inline Cplx64 cadd(Cplx64 a, Cplx64 b) { return {a.re + b.re, a.im + b.im}; }
inline Cplx64 csub(Cplx64 a, Cplx64 b) { return {a.re - b.re, a.im - b.im}; }
inline Cplx64 mul_neg_i(Cplx64 a) { return {a.im, -a.re}; }
inline Cplx64 chalf(Cplx64 a) { return {round_half(a.re), round_half(a.im)}; }

uint32_t log2u(uint32_t v) {
    uint32_t r = 0;
    while ((v >> r) > 1) ++r;
    return r;
}

template <bool Strict>
class Flow {
public:
    Flow(const DyadicTwiddleTable& tab, uint32_t m, FlowCounts* fc)
        : tab_(tab), mask_(m - 1), fc_(fc) {}

    // out[0..L) <- DFT_L of in[(base + t*stride) mod M].
    void forward(Cplx64* out, const Cplx64* in, uint32_t base, uint32_t stride, uint32_t L) {
        if (L == 1) {
            out[0] = in[base & mask_];
            return;
        }
        if (L == 2) {
            const Cplx64 a = in[base & mask_];
            const Cplx64 b = in[(base + stride) & mask_];
            out[0] = cadd(a, b);
            out[1] = csub(a, b);
            if (fc_) fc_->adds += 4;
            return;
        }
        const uint32_t q = L / 4;
        if (L == 4) {
            const Cplx64 x0 = in[base & mask_];
            const Cplx64 x2 = in[(base + 2 * stride) & mask_];
            out[0] = cadd(x0, x2);
            out[1] = csub(x0, x2);
            out[2] = in[(base + stride) & mask_];
            out[3] = in[(base - stride) & mask_];
            if (fc_) fc_->adds += 4;
            combine_at(out, 0, 1, out[2], out[3]);
            return;
        }
        forward(out, in, base, 2 * stride, L / 2);
        forward(out + L / 2, in, (base + stride) & mask_, 4 * stride, q);
        forward(out + 3 * q, in, (base - stride) & mask_, 4 * stride, q);
        const auto& tw = tab_.stages[log2u(L)];
        for (uint32_t k = 0; k < q; ++k) {
            Cplx64 t1 = out[L / 2 + k];
            Cplx64 t2 = out[3 * q + k];
            rot_fwd<Strict>(t1, tw[k], fc_);
            rot_bwd<Strict>(t2, tw[k], fc_);
            if (fc_) fc_->twiddle_reads += 1;
            combine_at(out, k, q, t1, t2);
        }
    }

    // Exact inverse: un-butterfly this block, then invert the children.
    void inverse(Cplx64* seg, Cplx64* out, uint32_t base, uint32_t stride, uint32_t L) {
        if (L == 1) {
            out[base & mask_] = seg[0];
            return;
        }
        if (L == 2) {
            const Cplx64 a = chalf(cadd(seg[0], seg[1]));
            const Cplx64 b = chalf(csub(seg[0], seg[1]));
            out[base & mask_] = a;
            out[(base + stride) & mask_] = b;
            if (fc_) {
                fc_->adds += 8;
                fc_->shifts += 4;
            }
            return;
        }
        const uint32_t q = L / 4;
        if (L == 4) {
            Cplx64 u0, u1, z, zp;
            split_at(seg, 0, 1, u0, u1, z, zp);
            out[base & mask_] = chalf(cadd(u0, u1));
            out[(base + 2 * stride) & mask_] = chalf(csub(u0, u1));
            out[(base + stride) & mask_] = z;
            out[(base - stride) & mask_] = zp;
            if (fc_) {
                fc_->adds += 8;
                fc_->shifts += 4;
            }
            return;
        }
        const auto& tw = tab_.stages[log2u(L)];
        for (uint32_t k = 0; k < q; ++k) {
            Cplx64 uk, ukq, t1, t2;
            split_at(seg, k, q, uk, ukq, t1, t2);
            rot_bwd<Strict>(t1, tw[k], fc_);
            rot_fwd<Strict>(t2, tw[k], fc_);
            if (fc_) fc_->twiddle_reads += 1;
            seg[k] = uk;
            seg[k + q] = ukq;
            seg[L / 2 + k] = t1;
            seg[3 * q + k] = t2;
        }
        inverse(seg, out, base, 2 * stride, L / 2);
        inverse(seg + L / 2, out, (base + stride) & mask_, 4 * stride, q);
        inverse(seg + 3 * q, out, (base - stride) & mask_, 4 * stride, q);
    }

private:
    // X_k = U_k + (t1+t2); X_{k+L/2} = U_k - (t1+t2);
    // X_{k+L/4} = U_{k+L/4} - i(t1-t2); X_{k+3L/4} = U_{k+L/4} + i(t1-t2).
    void combine_at(Cplx64* seg, uint32_t k, uint32_t q, Cplx64 t1, Cplx64 t2) {
        const Cplx64 s = cadd(t1, t2);
        const Cplx64 id = mul_neg_i(csub(t1, t2));
        const Cplx64 uk = seg[k];
        const Cplx64 ukq = seg[k + q];
        seg[k] = cadd(uk, s);
        seg[k + 2 * q] = csub(uk, s);
        seg[k + q] = cadd(ukq, id);
        seg[k + 3 * q] = csub(ukq, id);
        if (fc_) {
            fc_->butterflies += 1;
            fc_->adds += 12;
        }
    }

    // Recovers U_k, U_{k+L/4} and the rotated quarter-lane values from the
    // four outputs; halvings are exact on forward images.
    void split_at(const Cplx64* seg, uint32_t k, uint32_t q, Cplx64& uk, Cplx64& ukq, Cplx64& t1,
                  Cplx64& t2) {
        const Cplx64 xk = seg[k];
        const Cplx64 xkq = seg[k + q];
        const Cplx64 xk2 = seg[k + 2 * q];
        const Cplx64 xk3 = seg[k + 3 * q];
        uk = chalf(cadd(xk, xk2));
        const Cplx64 s = chalf(csub(xk, xk2));
        ukq = chalf(cadd(xkq, xk3));
        const Cplx64 d = mul_neg_i(chalf(csub(xk3, xkq)));  // undo the +i of X_{k+3L/4}
        t1 = chalf(cadd(s, d));
        t2 = chalf(csub(s, d));
        if (fc_) {
            fc_->butterflies += 1;
            fc_->adds += 24;
            fc_->shifts += 12;
        }
    }

    const DyadicTwiddleTable& tab_;
    uint32_t mask_;
    FlowCounts* fc_;
};

class ApproxBackend final : public TransformBackend {
public:
    ApproxBackend(DyadicTwiddleTable table, bool strict)
        : tab_(std::move(table)), strict_(strict), m_(tab_.ring_degree / 2) {
        build_root_table();
        count_flows();
    }

    BackendKind kind() const override { return BackendKind::Approximate; }
    uint32_t ring_degree() const override { return tab_.ring_degree; }
    uint32_t beta() const override { return tab_.beta; }

    LagrangeRep forward_torus(const TorusPoly& p, TransformCounters* tc) const override {
        check_degree(p.size());
        return forward_impl(
            [&](uint32_t t) {
                return Cplx64{
                    static_cast<int64_t>(static_cast<int32_t>(p[t])) << kTorusGuardBits,
                    static_cast<int64_t>(static_cast<int32_t>(p[t + m_])) << kTorusGuardBits};
            },
            kTorusGuardBits, tc);
    }

    LagrangeRep forward_int(const IntPoly& p, TransformCounters* tc) const override {
        check_degree(p.size());
        for (uint32_t i = 0; i < p.size(); ++i)
            if (p[i] > 2048 || p[i] < -2048)
                throw std::invalid_argument("forward_int: digit exceeds guard budget");
        return forward_impl(
            [&](uint32_t t) {
                return Cplx64{static_cast<int64_t>(p[t]) << kDigitGuardBits,
                              static_cast<int64_t>(p[t + m_]) << kDigitGuardBits};
            },
            kDigitGuardBits, tc);
    }

    TorusPoly inverse(const LagrangeRep& rep, TransformCounters* tc) const override {
        std::vector<Cplx64> coeffs = inverse_impl(rep, tc);
        TorusPoly out(tab_.ring_degree);
        const int32_t s = rep.scale_bits;
        const int64_t half = s > 0 ? (int64_t{1} << (s - 1)) : 0;
        for (uint32_t t = 0; t < m_; ++t) {
            out[t] = static_cast<Torus32>(static_cast<uint64_t>((coeffs[t].re + half) >> s));
            out[t + m_] = static_cast<Torus32>(static_cast<uint64_t>((coeffs[t].im + half) >> s));
        }
        return out;
    }

    RawCoeffs inverse_raw(const LagrangeRep& rep, TransformCounters* tc) const override {
        std::vector<Cplx64> coeffs = inverse_impl(rep, tc);
        RawCoeffs rc;
        rc.scale_bits = rep.scale_bits;
        rc.iv.resize(tab_.ring_degree);
        for (uint32_t t = 0; t < m_; ++t) {
            rc.iv[t] = coeffs[t].re;
            rc.iv[t + m_] = coeffs[t].im;
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
        check_fixed(a);
        check_fixed(b);
        check_fixed(acc);
        if (acc.scale_bits != kProductGuardBits)
            throw std::invalid_argument("pointwise: accumulator scale mismatch");
        const int shift = a.scale_bits + b.scale_bits - kProductGuardBits;
        if (shift <= 0) throw std::invalid_argument("pointwise: operand scales too small");
        const int128_t half = static_cast<int128_t>(1) << (shift - 1);
        for (uint32_t j = 0; j < m_; ++j) {
            const Cplx64 x = a.iv[j];
            const Cplx64 y = b.iv[j];
            const int128_t re =
                static_cast<int128_t>(x.re) * y.re - static_cast<int128_t>(x.im) * y.im;
            const int128_t im =
                static_cast<int128_t>(x.re) * y.im + static_cast<int128_t>(x.im) * y.re;
            acc.iv[j].re += static_cast<int64_t>((re + half) >> shift);
            acc.iv[j].im += static_cast<int64_t>((im + half) >> shift);
        }
        if (tc) tc->pointwise_mul_count += 4ull * m_;
    }

    LagrangeRep product_zero() const override { return fixed_zero(kProductGuardBits); }
    LagrangeRep torus_zero() const override { return fixed_zero(kTorusGuardBits); }

    void monomial_scale_acc(LagrangeRep& acc, const LagrangeRep& src, uint32_t e) const override {
        check_fixed(acc);
        check_fixed(src);
        if (acc.scale_bits != src.scale_bits)
            throw std::invalid_argument("monomial_scale_acc: scale mismatch");
        const Cplx64* w = &root_m1_[static_cast<size_t>(e & (2 * tab_.ring_degree - 1)) * m_];
        const int128_t half = static_cast<int128_t>(1) << (kRootFractionBits - 1);
        for (uint32_t j = 0; j < m_; ++j) {
            const Cplx64 x = src.iv[j];
            const int128_t re =
                static_cast<int128_t>(x.re) * w[j].re - static_cast<int128_t>(x.im) * w[j].im;
            const int128_t im =
                static_cast<int128_t>(x.re) * w[j].im + static_cast<int128_t>(x.im) * w[j].re;
            acc.iv[j].re += static_cast<int64_t>((re + half) >> kRootFractionBits);
            acc.iv[j].im += static_cast<int64_t>((im + half) >> kRootFractionBits);
        }
    }

    void add_dc(LagrangeRep& rep, Torus32 c) const override {
        check_fixed(rep);
        const int64_t v = static_cast<int64_t>(static_cast<int32_t>(c)) << rep.scale_bits;
        for (uint32_t j = 0; j < m_; ++j) rep.iv[j].re += v;
    }

private:
    static constexpr int kRootFractionBits = 40;

    void check_degree(uint32_t n) const {
        if (n != tab_.ring_degree) throw std::invalid_argument("transform: size mismatch");
    }
    void check_fixed(const LagrangeRep& r) const {
        if (r.kind != LagrangeRep::Kind::FixedPoint || r.ring_degree != tab_.ring_degree)
            throw std::invalid_argument("transform: representation mismatch");
    }

    LagrangeRep fixed_zero(int32_t scale) const {
        LagrangeRep r;
        r.kind = LagrangeRep::Kind::FixedPoint;
        r.ring_degree = tab_.ring_degree;
        r.scale_bits = scale;
        r.iv.assign(m_, Cplx64{});
        return r;
    }

    template <typename FoldFn>
    LagrangeRep forward_impl(FoldFn&& fold, int32_t scale, TransformCounters* tc) const {
        std::vector<Cplx64> c(m_);
        LagrangeRep rep = fixed_zero(scale);
        if (strict_) {
            for (uint32_t t = 0; t < m_; ++t) {
                c[t] = fold(t);
                rot_fwd<true>(c[t], tab_.twist[t], nullptr);
            }
            Flow<true>(tab_, m_, nullptr).forward(rep.iv.data(), c.data(), 0, 1, m_);
        } else {
            for (uint32_t t = 0; t < m_; ++t) {
                c[t] = fold(t);
                rot_fwd<false>(c[t], tab_.twist[t], nullptr);
            }
            Flow<false>(tab_, m_, nullptr).forward(rep.iv.data(), c.data(), 0, 1, m_);
        }
        if (tc) {
            tc->forward_count += 1;
            book_flow(tc, fwd_counts_);
        }
        return rep;
    }

    std::vector<Cplx64> inverse_impl(const LagrangeRep& rep, TransformCounters* tc) const {
        check_fixed(rep);
        std::vector<Cplx64> seg(rep.iv);
        std::vector<Cplx64> c(m_);
        if (strict_) {
            Flow<true>(tab_, m_, nullptr).inverse(seg.data(), c.data(), 0, 1, m_);
            for (uint32_t t = 0; t < m_; ++t) rot_bwd<true>(c[t], tab_.twist[t], nullptr);
        } else {
            Flow<false>(tab_, m_, nullptr).inverse(seg.data(), c.data(), 0, 1, m_);
            for (uint32_t t = 0; t < m_; ++t) rot_bwd<false>(c[t], tab_.twist[t], nullptr);
        }
        if (tc) {
            tc->inverse_count += 1;
            book_flow(tc, inv_counts_);
        }
        return c;
    }

    static void book_flow(TransformCounters* tc, const FlowCounts& fc) {
        tc->butterfly_count += fc.butterflies;
        tc->twiddle_read_count += fc.twiddle_reads;
        tc->add_count += fc.adds;
        tc->shift_count += fc.shifts;
        // butterfly_mul_count stays zero: rotations are recipe shifts and adds.
    }

    // (omega_j^e - 1) in Q40, indexed e*M + j; omega_j = exp(i pi (1-4j)/N).
    void build_root_table() {
        const uint32_t two_n = 2 * tab_.ring_degree;
        root_m1_.resize(static_cast<size_t>(two_n) * m_);
        const double scale = std::pow(2.0, kRootFractionBits);
        for (uint32_t e = 0; e < two_n; ++e) {
            for (uint32_t j = 0; j < m_; ++j) {
                const int64_t slot_exp =
                    ((1 - 4 * static_cast<int64_t>(j)) % two_n + two_n) % two_n;
                const int64_t expo = (static_cast<int64_t>(e) * slot_exp) % two_n;
                const double ang =
                    3.14159265358979323846 * static_cast<double>(expo) / tab_.ring_degree;
                root_m1_[static_cast<size_t>(e) * m_ + j] =
                    Cplx64{static_cast<int64_t>(std::llround((std::cos(ang) - 1.0) * scale)),
                           static_cast<int64_t>(std::llround(std::sin(ang) * scale))};
            }
        }
    }

    // Per-transform operation totals are fixed by the table; one dry run
    // records them so live calls book counters in O(1).
    void count_flows() {
        std::vector<Cplx64> c(m_, Cplx64{});
        std::vector<Cplx64> out(m_, Cplx64{});
        FlowCounts fwd;
        for (uint32_t t = 0; t < m_; ++t) rot_fwd<false>(c[t], tab_.twist[t], &fwd);
        Flow<false>(tab_, m_, &fwd).forward(out.data(), c.data(), 0, 1, m_);
        fwd_counts_ = fwd;

        FlowCounts inv;
        Flow<false>(tab_, m_, &inv).inverse(out.data(), c.data(), 0, 1, m_);
        for (uint32_t t = 0; t < m_; ++t) rot_bwd<false>(c[t], tab_.twist[t], &inv);
        inv_counts_ = inv;
    }

    DyadicTwiddleTable tab_;
    bool strict_;
    uint32_t m_;
    std::vector<Cplx64> root_m1_;
    FlowCounts fwd_counts_;
    FlowCounts inv_counts_;
};

}  // namespace

Cplx64 lifting_rotate(Cplx64 x, const LiftingRotation& rot, LiftDirection dir,
                      TransformCounters* tc) {
    FlowCounts fc;
    if (dir == LiftDirection::Forward)
        rot_fwd<true>(x, rot, tc ? &fc : nullptr);
    else
        rot_bwd<true>(x, rot, tc ? &fc : nullptr);
    if (tc) {
        tc->add_count += fc.adds;
        tc->shift_count += fc.shifts;
    }
    return x;
}

std::shared_ptr<const TransformBackend> make_approx_backend(DyadicTwiddleTable table,
                                                            bool strict_lifting) {
    return std::make_shared<ApproxBackend>(std::move(table), strict_lifting);
}

std::shared_ptr<const TransformBackend> make_approx_backend(uint32_t ring_degree, uint32_t beta) {
    return make_approx_backend(build_twiddle_table(ring_degree, beta), false);
}

}  // namespace torusgate
