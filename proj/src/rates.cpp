#include "corotan/rates.hpp"

#include "corotan/errors.hpp"
#include "corotan/kinematics.hpp"
#include "corotan/materials.hpp"

namespace corotan {

const char* rate_name(RateKind kind) {
    switch (kind) {
        case RateKind::ZarembaJaumann: return "zj";
        case RateKind::Truesdell: return "truesdell";
        case RateKind::Oldroyd: return "oldroyd";
        case RateKind::CotterRivlin: return "cotter_rivlin";
        case RateKind::BiezenoHencky: return "biezeno_hencky";
        case RateKind::GreenNaghdi: return "green_naghdi";
        case RateKind::LieKirchhoff: return "lie";
    }
    return "?";
}

RateKind rate_from_name(const std::string& name) {
    for (RateKind k : all_rate_kinds())
        if (name == rate_name(k)) return k;
    throw ConfigError("unknown rate '" + name + "'");
}

const std::vector<RateKind>& all_rate_kinds() {
    static const std::vector<RateKind> kinds = {
        RateKind::ZarembaJaumann, RateKind::Truesdell,    RateKind::Oldroyd,
        RateKind::CotterRivlin,   RateKind::BiezenoHencky, RateKind::GreenNaghdi,
        RateKind::LieKirchhoff,
    };
    return kinds;
}

Tensor2 rate_value(RateKind kind, const RateInput& in) {
    const Tensor2& s = in.stress;
    const Tensor2& sd = in.stress_dot;
    const Tensor2& L = in.L;
    const Tensor2 D = sym(L);
    const Tensor2 W = skew(L);
    switch (kind) {
        case RateKind::ZarembaJaumann:
            return sd + s * W - W * s;
        case RateKind::CotterRivlin:
            return sd + transpose(L) * s + s * L;
        case RateKind::Oldroyd:
            return sd - (L * s + s * transpose(L));
        case RateKind::BiezenoHencky:
            return sd + s * W - W * s + trace(D) * s;
        case RateKind::Truesdell:
            return sd - (L * s + s * transpose(L)) + trace(D) * s;
        case RateKind::GreenNaghdi: {
            if (!in.spin_override)
                throw MissingSpin("rate_value: green_naghdi needs a polar spin");
            const Tensor2& omega = *in.spin_override;
            return sd + s * omega - omega * s;
        }
        case RateKind::LieKirchhoff:
            return sd - L * s - s * transpose(L);
    }
    throw Error("rate_value: unreachable");
}

Tensor2 zj_from_lie(const Tensor2& lie_tau, const Tensor2& tau, const Tensor2& D) {
    return lie_tau + tau * D + D * tau;
}

Tensor2 zj_from_truesdell(const Tensor2& tr_sigma, const Tensor2& sigma, const Tensor2& D) {
    return tr_sigma + sigma * D + D * sigma - trace(D) * sigma;
}

Tensor2 polar_spin_fd(const MotionPath& path, double t, double h) {
    const Tensor2 r_plus = make_state(path.F_at(t + h)).R;
    const Tensor2 r_minus = make_state(path.F_at(t - h)).R;
    const Tensor2 r = make_state(path.F_at(t)).R;
    const Tensor2 rdot = (1.0 / (2.0 * h)) * (r_plus - r_minus);
    // project onto skew in case of residual polar noise
    return skew(rdot * transpose(r));
}

namespace {

// one RK4 march of Qdot = W(t) Q from t_from to t_to
Tensor2 integrate_spin_frame(const std::function<Tensor2(double)>& L_at, double t_from,
                             double t_to, int substeps) {
    Tensor2 q = Tensor2::identity();
    const double dt = (t_to - t_from) / substeps;
    auto w = [&](double t) { return skew(L_at(t)); };
    for (int i = 0; i < substeps; ++i) {
        const double t = t_from + i * dt;
        const Tensor2 k1 = w(t) * q;
        const Tensor2 k2 = w(t + 0.5 * dt) * (q + (0.5 * dt) * k1);
        const Tensor2 k3 = w(t + 0.5 * dt) * (q + (0.5 * dt) * k2);
        const Tensor2 k4 = w(t + dt) * (q + dt * k3);
        q += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return q;
}

} // namespace

Tensor2 rotated_frame_rate(const std::function<Tensor2(double)>& stress_at,
                           const std::function<Tensor2(double)>& L_at, double t, double h) {
    const int substeps = 8;
    const Tensor2 q_plus = integrate_spin_frame(L_at, t, t + h, substeps);
    const Tensor2 q_minus = integrate_spin_frame(L_at, t, t - h, substeps);
    const Tensor2 g_plus = transpose(q_plus) * stress_at(t + h) * q_plus;
    const Tensor2 g_minus = transpose(q_minus) * stress_at(t - h) * q_minus;
    return (1.0 / (2.0 * h)) * (g_plus - g_minus);
}

Tensor2 rotated_frame_zj(const MotionPath& path, double t, double h,
                         const MaterialModel& model) {
    auto sigma_at = [&](double s) {
        return model.stresses(make_state(path.F_at(s))).sigma;
    };
    auto L_at = [&](double s) { return path.L_at(s); };
    return rotated_frame_rate(sigma_at, L_at, t, h);
}

Tensor2 rotated_frame_zj_tau(const MotionPath& path, double t, double h,
                             const MaterialModel& model) {
    auto tau_at = [&](double s) { return model.kirchhoff(make_state(path.F_at(s))); };
    auto L_at = [&](double s) { return path.L_at(s); };
    return rotated_frame_rate(tau_at, L_at, t, h);
}

} // namespace corotan
