#ifndef VIC_MANIFEST_HPP
#define VIC_MANIFEST_HPP

// Run provenance. Every CLI invocation emits a manifest recording what ran,
// content hashes of its inputs, the seed if one was involved, tool versions,
// wall time, and a one-line result summary — enough to check that re-running
// the same command on the same bytes reproduces the same answer.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"

namespace vic {

inline constexpr const char* kVicVersion = "0.1.0";

// Compact SHA-256, for content-addressing inputs; no external dependency.
class Sha256 {
  public:
    Sha256() { reset(); }

    void reset() {
        state_ = {0x6a09e667u, 0xbb67ae85u, 0x3c6ef372u, 0xa54ff53au,
                  0x510e527fu, 0x9b05688cu, 0x1f83d9abu, 0x5be0cd19u};
        buffered_ = 0;
        total_bits_ = 0;
    }

    void update(const void* data, std::size_t len) {
        const auto* p = static_cast<const unsigned char*>(data);
        total_bits_ += static_cast<std::uint64_t>(len) * 8;
        while (len > 0) {
            std::size_t take = std::min(len, block_.size() - buffered_);
            std::memcpy(block_.data() + buffered_, p, take);
            buffered_ += take;
            p += take;
            len -= take;
            if (buffered_ == block_.size()) {
                compress();
                buffered_ = 0;
            }
        }
    }

    // Hex digest; the object is spent afterwards (call reset to reuse).
    std::string hex() {
        std::uint64_t bits = total_bits_;
        unsigned char pad = 0x80;
        update(&pad, 1);
        unsigned char zero = 0;
        while (buffered_ != 56) update(&zero, 1);
        for (int i = 7; i >= 0; --i) {
            unsigned char b = static_cast<unsigned char>((bits >> (8 * i)) & 0xff);
            update(&b, 1);
        }
        static const char* digits = "0123456789abcdef";
        std::string out;
        out.reserve(64);
        for (std::uint32_t word : state_) {
            for (int i = 28; i >= 0; i -= 4) out.push_back(digits[(word >> i) & 0xf]);
        }
        return out;
    }

  private:
    static std::uint32_t rotr(std::uint32_t x, int s) { return (x >> s) | (x << (32 - s)); }

    void compress() {
        static constexpr std::array<std::uint32_t, 64> k = {
            0x428a2f98u, 0x71374491u, 0xb5c0fbcfu, 0xe9b5dba5u, 0x3956c25bu, 0x59f111f1u,
            0x923f82a4u, 0xab1c5ed5u, 0xd807aa98u, 0x12835b01u, 0x243185beu, 0x550c7dc3u,
            0x72be5d74u, 0x80deb1feu, 0x9bdc06a7u, 0xc19bf174u, 0xe49b69c1u, 0xefbe4786u,
            0x0fc19dc6u, 0x240ca1ccu, 0x2de92c6fu, 0x4a7484aau, 0x5cb0a9dcu, 0x76f988dau,
            0x983e5152u, 0xa831c66du, 0xb00327c8u, 0xbf597fc7u, 0xc6e00bf3u, 0xd5a79147u,
            0x06ca6351u, 0x14292967u, 0x27b70a85u, 0x2e1b2138u, 0x4d2c6dfcu, 0x53380d13u,
            0x650a7354u, 0x766a0abbu, 0x81c2c92eu, 0x92722c85u, 0xa2bfe8a1u, 0xa81a664bu,
            0xc24b8b70u, 0xc76c51a3u, 0xd192e819u, 0xd6990624u, 0xf40e3585u, 0x106aa070u,
            0x19a4c116u, 0x1e376c08u, 0x2748774cu, 0x34b0bcb5u, 0x391c0cb3u, 0x4ed8aa4au,
            0x5b9cca4fu, 0x682e6ff3u, 0x748f82eeu, 0x78a5636fu, 0x84c87814u, 0x8cc70208u,
            0x90befffau, 0xa4506cebu, 0xbef9a3f7u, 0xc67178f2u};
        std::array<std::uint32_t, 64> w{};
        for (int t = 0; t < 16; ++t)
            w[t] = (std::uint32_t(block_[4 * t]) << 24) | (std::uint32_t(block_[4 * t + 1]) << 16) |
                   (std::uint32_t(block_[4 * t + 2]) << 8) | std::uint32_t(block_[4 * t + 3]);
        for (int t = 16; t < 64; ++t) {
            std::uint32_t s0 = rotr(w[t - 15], 7) ^ rotr(w[t - 15], 18) ^ (w[t - 15] >> 3);
            std::uint32_t s1 = rotr(w[t - 2], 17) ^ rotr(w[t - 2], 19) ^ (w[t - 2] >> 10);
            w[t] = w[t - 16] + s0 + w[t - 7] + s1;
        }
        auto [a, b, c, d, e, f, g, h] =
            std::tuple{state_[0], state_[1], state_[2], state_[3],
                       state_[4], state_[5], state_[6], state_[7]};
        for (int t = 0; t < 64; ++t) {
            std::uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            std::uint32_t ch = (e & f) ^ (~e & g);
            std::uint32_t t1 = h + s1 + ch + k[t] + w[t];
            std::uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            std::uint32_t t2 = s0 + maj;
            h = g;
            g = f;
            f = e;
            e = d + t1;
            d = c;
            c = b;
            b = a;
            a = t1 + t2;
        }
        state_[0] += a;
        state_[1] += b;
        state_[2] += c;
        state_[3] += d;
        state_[4] += e;
        state_[5] += f;
        state_[6] += g;
        state_[7] += h;
    }

    std::array<std::uint32_t, 8> state_{};
    std::array<unsigned char, 64> block_{};
    std::size_t buffered_ = 0;
    std::uint64_t total_bits_ = 0;
};

inline std::string sha256_hex(const std::string& bytes) {
    Sha256 h;
    h.update(bytes.data(), bytes.size());
    return h.hex();
}

struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  // label -> sha256 of bytes
    std::optional<std::uint64_t> seed;
    std::string summary;
    double wall_seconds = 0.0;

    void add_input(const std::string& label, const std::string& bytes) {
        inputs.emplace_back(label, sha256_hex(bytes));
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["command"] = command;
        j["inputs"] = nlohmann::json::object();
        for (const auto& [label, hash] : inputs) j["inputs"][label] = hash;
        if (seed) j["seed"] = *seed;
        j["version"] = kVicVersion;
        j["toolchain"] = __VERSION__;
        j["wall_seconds"] = wall_seconds;
        j["summary"] = summary;
        return j;
    }
};

// Stopwatch for the manifest's wall time.
class WallClock {
  public:
    WallClock() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace vic

#endif  // VIC_MANIFEST_HPP
