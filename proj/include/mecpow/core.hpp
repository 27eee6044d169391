#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mecpow {

// ============================================================================
// System-wide economic / protocol constants
// ============================================================================

// Global constants of the offloading economy: block reward, fee rate, the
// per-hash price charged by the edge server, the difficulty exponent and the
// nonce search-space width. The difficulty factor is real-valued; a hash
// succeeds with probability 2^-h.
struct SystemParams {
    double fixed_reward = 1e4;    // reward for mining a block (B)
    double fee_rate = 2.0;        // transaction fee per size unit (r)
    double hash_price = 1e-3;     // price charged per hash computation (c)
    double difficulty = 12.0;     // difficulty exponent (h), success prob 2^-h
    unsigned nonce_bits = 32;     // nonce space is [0, 2^nonce_bits - 1] (L)
    std::size_t user_count = 3;   // number of IoT users (N)

    void validate() const {
        if (fixed_reward < 0.0) throw std::invalid_argument("B: fixed_reward must be >= 0");
        if (fee_rate < 0.0) throw std::invalid_argument("r: fee_rate must be >= 0");
        if (!(hash_price > 0.0)) throw std::invalid_argument("c: hash_price must be > 0");
        if (difficulty < 0.0 || difficulty > static_cast<double>(nonce_bits))
            throw std::invalid_argument("h: difficulty must lie in [0, L]");
        if (nonce_bits == 0 || nonce_bits > 64)
            throw std::invalid_argument("L: nonce_bits must lie in [1, 64]");
        if (user_count == 0) throw std::invalid_argument("N: user_count must be >= 1");
    }
};

// One IoT user: the transaction payload size it would put in a block and the
// number of nonces it currently demands from the edge server.
struct UserProfile {
    std::uint32_t user_id = 0;
    double block_size = 0.0;          // s_i, transaction size units
    std::uint64_t nonce_length = 0;   // M_i

    void validate(const SystemParams& params) const {
        if (!(block_size > 0.0)) throw std::invalid_argument("block_size must be > 0");
        if (params.nonce_bits < 64 &&
            nonce_length > (std::uint64_t{1} << params.nonce_bits) - 1)
            throw std::invalid_argument("nonce_length exceeds 2^L - 1");
    }
};

// Gross reward a user collects when it mines a block: fixed bonus plus fees.
inline double gross_reward(const SystemParams& params, double block_size) {
    return params.fixed_reward + params.fee_rate * block_size;
}

// ============================================================================
// Timing / difficulty-control constants
// ============================================================================

struct TimingParams {
    double hash_time_s = 1e-4;    // t0, seconds per hash computation
    double round_time_s = 120.0;  // beta, seconds per server-user interaction round
    double target_rounds = 5.0;   // R_th, controller target rounds per block
    std::size_t window_blocks = 10;  // G, difficulty-adjustment interval

    void validate() const {
        if (!(hash_time_s > 0.0)) throw std::invalid_argument("t0: hash_time_s must be > 0");
        if (!(round_time_s > 0.0)) throw std::invalid_argument("beta: round_time_s must be > 0");
        if (!(target_rounds > 0.0)) throw std::invalid_argument("R_th: target_rounds must be > 0");
        if (window_blocks < 1) throw std::invalid_argument("G: window_blocks must be >= 1");
    }
};

// Discount structure of the repeated nonce-selection game. A missing horizon
// means the infinitely repeated game.
struct RepeatedGameParams {
    double discount = 0.9;                 // delta in [0, 1)
    std::optional<std::size_t> horizon;    // stage count T; nullopt = infinite

    void validate() const {
        if (discount < 0.0 || discount >= 1.0)
            throw std::invalid_argument("delta: discount must lie in [0, 1)");
    }
};

// Thrown when every user leaves the system and no mining can proceed.
struct crash_error : std::runtime_error {
    explicit crash_error(const std::string& what, std::size_t block = 0)
        : std::runtime_error(what), block_index(block) {}
    std::size_t block_index;
};

// 2^x for real x.
inline double pow2(double x) { return std::exp2(x); }

}  // namespace mecpow
