#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ti {

using Complex = std::complex<double>;

/// Single-qubit injection state |chi> = alpha|0> + beta|1>, unit norm.
struct InjectionState {
    Complex alpha{1.0, 0.0};
    Complex beta{0.0, 0.0};

    static InjectionState from_angles(double theta, double phi) {
        InjectionState chi;
        chi.alpha = Complex(std::cos(theta / 2), 0.0);
        chi.beta = std::polar(std::sin(theta / 2), phi);
        return chi;
    }

    /// Accepts any nonzero pair and normalises it.
    static InjectionState from_pair(Complex alpha, Complex beta) {
        double n2 = std::norm(alpha) + std::norm(beta);
        if (n2 <= 0.0) throw std::invalid_argument("injection state must be nonzero");
        double inv = 1.0 / std::sqrt(n2);
        return InjectionState{alpha * inv, beta * inv};
    }

    double theta() const { return 2.0 * std::atan2(std::abs(beta), std::abs(alpha)); }
    double phi() const { return std::abs(beta) == 0.0 ? 0.0 : std::arg(beta) - std::arg(alpha); }
};

struct ZeroProbabilityTrajectory : std::runtime_error {
    ZeroProbabilityTrajectory() : std::runtime_error("trajectory has zero probability at this chi") {}
};

/// Exact homogeneous polynomial sum_w c_w alpha^(N-w) beta^w with signed
/// 64-bit integer coefficients. Coefficient overflow throws, never wraps.
class AmplitudePoly {
  public:
    AmplitudePoly() = default;
    explicit AmplitudePoly(int num_data)
        : num_data_(num_data), coeffs_(static_cast<size_t>(num_data) + 1, 0) {}

    int num_data() const { return num_data_; }
    const std::vector<int64_t>& coeffs() const { return coeffs_; }
    int64_t coeff(int w) const { return coeffs_[static_cast<size_t>(w)]; }
    bool is_zero() const {
        for (int64_t c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    /// c_weight += sign. Throws std::overflow_error rather than wrapping.
    void add_term(int weight, int64_t sign) {
        if (weight < 0 || weight > num_data_) throw std::out_of_range("term weight out of range");
        checked_add(coeffs_[static_cast<size_t>(weight)], sign);
    }

    AmplitudePoly& operator+=(const AmplitudePoly& other) {
        if (other.num_data_ != num_data_) throw std::invalid_argument("polynomial width mismatch");
        for (size_t w = 0; w < coeffs_.size(); ++w) checked_add(coeffs_[w], other.coeffs_[w]);
        return *this;
    }

    void negate() {
        for (int64_t& c : coeffs_) c = -c;
    }

    /// Divides every coefficient by 2^shift, requiring exact divisibility.
    void exact_shift_down(int shift) {
        int64_t div = int64_t(1) << shift;
        for (int64_t& c : coeffs_) {
            if (c % div != 0) throw std::logic_error("coefficient not divisible by group order");
            c /= div;
        }
    }

    /// sum_w c_w alpha^(N-w) beta^w.
    Complex evaluate(const InjectionState& chi) const {
        std::vector<Complex> apow(static_cast<size_t>(num_data_) + 1);
        std::vector<Complex> bpow(static_cast<size_t>(num_data_) + 1);
        apow[0] = bpow[0] = Complex(1.0, 0.0);
        for (int k = 1; k <= num_data_; ++k) {
            apow[static_cast<size_t>(k)] = apow[static_cast<size_t>(k - 1)] * chi.alpha;
            bpow[static_cast<size_t>(k)] = bpow[static_cast<size_t>(k - 1)] * chi.beta;
        }
        Complex acc(0.0, 0.0);
        for (int w = 0; w <= num_data_; ++w) {
            int64_t c = coeffs_[static_cast<size_t>(w)];
            if (c == 0) continue;
            acc += double(c) * apow[static_cast<size_t>(num_data_ - w)] * bpow[static_cast<size_t>(w)];
        }
        return acc;
    }

    friend bool operator==(const AmplitudePoly& a, const AmplitudePoly& b) {
        return a.num_data_ == b.num_data_ && a.coeffs_ == b.coeffs_;
    }

  private:
    static void checked_add(int64_t& into, int64_t v) {
        if (__builtin_add_overflow(into, v, &into))
            throw std::overflow_error("amplitude coefficient overflow");
    }

    int num_data_ = 0;
    std::vector<int64_t> coeffs_;
};

/// Unnormalised logical amplitudes of |0>_L and |1>_L.
struct LogicalState {
    AmplitudePoly a;  // |0>_L
    AmplitudePoly b;  // |1>_L
};

struct NormalizedState {
    Complex alpha_l;
    Complex beta_l;
    double norm2;  // pre-normalisation |A|^2 + |B|^2
};

/// Evaluates and normalises a logical state at chi. Throws
/// ZeroProbabilityTrajectory when both amplitudes vanish.
inline NormalizedState normalize(const LogicalState& s, const InjectionState& chi) {
    Complex a = s.a.evaluate(chi);
    Complex b = s.b.evaluate(chi);
    double n2 = std::norm(a) + std::norm(b);
    if (n2 == 0.0) throw ZeroProbabilityTrajectory();
    double inv = 1.0 / std::sqrt(n2);
    return {a * inv, b * inv, n2};
}

/// Bloch coordinates of a unit (alpha_L, beta_L) pair.
inline Eigen::Vector3d bloch(Complex alpha_l, Complex beta_l) {
    double n2 = std::norm(alpha_l) + std::norm(beta_l);
    if (std::abs(n2 - 1.0) > 1e-9)
        throw std::invalid_argument("bloch() requires a unit-norm amplitude pair");
    Complex cross = std::conj(alpha_l) * beta_l;
    return {2.0 * cross.real(), 2.0 * cross.imag(),
            std::norm(alpha_l) - std::norm(beta_l)};
}

}  // namespace ti
