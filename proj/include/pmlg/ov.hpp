#ifndef PMLG_OV_HPP
#define PMLG_OV_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmlg/error.hpp"

namespace pmlg {

// A vector in {0,1}^d.
class BinaryVector {
public:
    BinaryVector() = default;
    explicit BinaryVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_) {
            if (b > 1) throw std::invalid_argument("binary vector entries must be 0 or 1");
        }
    }
    BinaryVector(std::initializer_list<int> bits) {
        for (int b : bits) {
            if (b != 0 && b != 1) throw std::invalid_argument("binary vector entries must be 0 or 1");
            bits_.push_back(static_cast<std::uint8_t>(b));
        }
    }

    static BinaryVector filled(std::size_t d, bool value) {
        return BinaryVector(std::vector<std::uint8_t>(d, value ? 1 : 0));
    }

    std::size_t dim() const noexcept { return bits_.size(); }
    bool operator[](std::size_t h) const { return bits_[h] != 0; }
    void set(std::size_t h, bool value) { bits_.at(h) = value ? 1 : 0; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    bool all_zero() const noexcept {
        for (auto b : bits_) {
            if (b) return false;
        }
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (auto b : bits_) s.push_back(b ? '1' : '0');
        return s;
    }

    friend bool operator==(const BinaryVector&, const BinaryVector&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

inline std::size_t dot(const BinaryVector& x, const BinaryVector& y) {
    if (x.dim() != y.dim()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(x.dim()) + " vs " +
                                    std::to_string(y.dim()));
    }
    std::size_t s = 0;
    for (std::size_t h = 0; h < x.dim(); ++h) s += static_cast<std::size_t>(x[h] && y[h]);
    return s;
}

/*
 * Orthogonal Vectors instance: |X| = |Y| = n >= 1, all vectors of dimension d >= 1.
 */
class OvInstance {
public:
    OvInstance(std::vector<BinaryVector> xs, std::vector<BinaryVector> ys)
        : xs_(std::move(xs)), ys_(std::move(ys)) {
        if (xs_.empty() || xs_.size() != ys_.size()) {
            throw std::invalid_argument("OV instance needs |X| = |Y| >= 1");
        }
        const auto d = xs_.front().dim();
        if (d == 0) throw std::invalid_argument("OV instance needs d >= 1");
        for (const auto* set : {&xs_, &ys_}) {
            for (const auto& v : *set) {
                if (v.dim() != d) throw std::invalid_argument("OV instance vectors differ in dimension");
            }
        }
    }

    std::size_t n() const noexcept { return xs_.size(); }
    std::size_t d() const noexcept { return xs_.front().dim(); }
    const std::vector<BinaryVector>& xs() const noexcept { return xs_; }
    const std::vector<BinaryVector>& ys() const noexcept { return ys_; }

    bool has_all_zero_y() const noexcept {
        for (const auto& y : ys_) {
            if (y.all_zero()) return true;
        }
        return false;
    }

    friend bool operator==(const OvInstance&, const OvInstance&) = default;

private:
    std::vector<BinaryVector> xs_;
    std::vector<BinaryVector> ys_;
};

// 1-based witness (i, j) with x_i . y_j = 0.
struct OvPair {
    std::size_t i;
    std::size_t j;

    friend bool operator==(const OvPair&, const OvPair&) = default;
};

// Lexicographically smallest orthogonal pair, O(n^2 d).
inline std::optional<OvPair> solve_ov_bruteforce(const OvInstance& inst) {
    for (std::size_t i = 0; i < inst.n(); ++i) {
        for (std::size_t j = 0; j < inst.n(); ++j) {
            if (dot(inst.xs()[i], inst.ys()[j]) == 0) return OvPair{i + 1, j + 1};
        }
    }
    return std::nullopt;
}

enum class GenMode { random, planted_orthogonal, no_orthogonal };

inline std::string_view to_string(GenMode m) {
    switch (m) {
    case GenMode::random: return "random";
    case GenMode::planted_orthogonal: return "planted-orthogonal";
    case GenMode::no_orthogonal: return "no-orthogonal";
    }
    return "";
}

inline std::optional<GenMode> gen_mode_from_string(std::string_view s) {
    for (auto m : {GenMode::random, GenMode::planted_orthogonal, GenMode::no_orthogonal}) {
        if (to_string(m) == s) return m;
    }
    return std::nullopt;
}

/*
 * Seeded instance generator. Bits are fair coin flips from mt19937_64.
 * planted-orthogonal overwrites one x with the complement of one y;
 * no-orthogonal repairs every orthogonal pair by switching on a shared
 * random coordinate (raising bits never creates a new orthogonal pair).
 */
inline OvInstance gen_ov_instance(std::size_t n, std::size_t d, std::uint64_t seed, GenMode mode) {
    if (n == 0 || d == 0) throw std::invalid_argument("gen_ov_instance needs n >= 1 and d >= 1");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    auto draw = [&] {
        std::vector<BinaryVector> vs;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::uint8_t> bits(d);
            for (auto& b : bits) b = coin(rng) ? 1 : 0;
            vs.emplace_back(std::move(bits));
        }
        return vs;
    };
    auto xs = draw();
    auto ys = draw();
    std::uniform_int_distribution<std::size_t> pick_vec(0, n - 1);
    std::uniform_int_distribution<std::size_t> pick_coord(0, d - 1);

    if (mode == GenMode::planted_orthogonal) {
        const auto i = pick_vec(rng);
        const auto j = pick_vec(rng);
        for (std::size_t h = 0; h < d; ++h) xs[i].set(h, !ys[j][h]);
    } else if (mode == GenMode::no_orthogonal) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (dot(xs[i], ys[j]) == 0) {
                    const auto h = pick_coord(rng);
                    xs[i].set(h, true);
                    ys[j].set(h, true);
                }
            }
        }
    }
    OvInstance inst(std::move(xs), std::move(ys));
    const bool found = solve_ov_bruteforce(inst).has_value();
    if ((mode == GenMode::planted_orthogonal && !found) || (mode == GenMode::no_orthogonal && found)) {
        throw std::logic_error("generator guarantee violated");
    }
    return inst;
}

} // namespace pmlg

#endif
