#ifndef ELBOUND_RNG_HPP
#define ELBOUND_RNG_HPP

#include <array>
#include <cstdint>

namespace elbound::rng {

// Philox 4x32-10 block function (Salmon et al., SC 2011). Counter-based:
// the output is a pure function of (key, counter), so any replicate of a
// Monte Carlo run can be generated independently of thread scheduling.
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 2>& key,
                                        const std::array<std::uint32_t, 4>& counter);

// One logical random stream, keyed by (seed, stream). Streams with distinct
// ids never overlap: counter words 0..1 carry the stream id, words 2..3 the
// block index within the stream.
class Stream {
public:
    Stream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    // Uniform on the open interval (0, 1), 53-bit resolution.
    double next_uniform();
    // Standard normal via Box-Muller (pairs cached).
    double next_gaussian();
    // Uniform angle in [0, 2*pi).
    double next_angle();

private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_id_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int pos_ = 4;
    double spare_gaussian_ = 0.0;
    bool has_spare_ = false;
};

} // namespace elbound::rng

#endif
