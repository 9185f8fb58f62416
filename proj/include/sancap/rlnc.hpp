// rlnc.hpp - Random linear coding of chunk generations over GF(256).
//
// A generation is a window of r equal-length chunks coded together; a coded
// chunk is a random linear combination carrying its coefficient vector.  Any
// r coded chunks with an invertible coefficient matrix recover the generation
// exactly, which is what lets the coded layout pool stripe-set queues.

#ifndef SANCAP_RLNC_HPP
#define SANCAP_RLNC_HPP

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sancap/gf256.hpp"

namespace sancap {

struct Generation {
    std::uint32_t index = 0;                          // block-window id
    std::vector<std::vector<std::uint8_t>> payloads;  // r chunks, equal width

    Generation() = default;
    Generation(std::uint32_t idx, std::vector<std::vector<std::uint8_t>> chunks)
        : index(idx), payloads(std::move(chunks)) {
        if (payloads.empty()) throw std::invalid_argument("Generation: needs at least one chunk");
        for (const auto& p : payloads)
            if (p.size() != payloads.front().size())
                throw std::invalid_argument("Generation: chunks must have equal width");
    }

    std::size_t size() const { return payloads.size(); }           // r
    std::size_t width() const { return payloads.front().size(); }  // bytes per chunk
};

struct CodedChunk {
    std::uint32_t generation_index = 0;
    std::vector<std::uint8_t> coefficients;  // length r
    std::vector<std::uint8_t> payload;       // generation width
};

// payload = sum_p coeffs[p] * payloads[p], elementwise over GF(256).
inline CodedChunk encode(const Generation& gen, std::span<const std::uint8_t> coeffs) {
    if (coeffs.size() != gen.size())
        throw std::invalid_argument("encode: coefficient count must equal generation size");
    CodedChunk chunk;
    chunk.generation_index = gen.index;
    chunk.coefficients.assign(coeffs.begin(), coeffs.end());
    chunk.payload.assign(gen.width(), 0);
    for (std::size_t p = 0; p < gen.size(); ++p) {
        const std::uint8_t c = coeffs[p];
        if (c == 0) continue;
        const auto& src = gen.payloads[p];
        for (std::size_t w = 0; w < src.size(); ++w)
            chunk.payload[w] ^= gf256::mul(c, src[w]);
    }
    return chunk;
}

// Uniform coefficient bytes from an explicit engine; the low byte of
// mt19937_64 output is exactly uniform over [0, 256).
inline std::uint8_t random_field_element(std::mt19937_64& rng) {
    return static_cast<std::uint8_t>(rng() & 0xFF);
}

inline CodedChunk random_coded_chunk(const Generation& gen, std::mt19937_64& rng) {
    std::vector<std::uint8_t> coeffs(gen.size());
    for (auto& c : coeffs) c = random_field_element(rng);
    return encode(gen, coeffs);
}

inline CodedChunk random_coded_chunk(const Generation& gen, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_coded_chunk(gen, rng);
}

enum class DecodeStatus { ok, rank_deficient, generation_mismatch };

struct DecodeResult {
    DecodeStatus status = DecodeStatus::ok;
    std::size_t rank = 0;                             // achieved rank
    std::vector<std::vector<std::uint8_t>> payloads;  // filled iff status == ok

    explicit operator bool() const { return status == DecodeStatus::ok; }
};

// Gaussian elimination on the r x r coefficient matrix augmented with the
// payloads.  Rank deficiency is an expected outcome for random coefficients,
// so it is reported in the result rather than thrown.
inline DecodeResult decode(std::span<const CodedChunk> chunks) {
    if (chunks.empty()) throw std::invalid_argument("decode: no chunks");
    const std::size_t r = chunks.size();
    const std::size_t width = chunks.front().payload.size();
    for (const auto& c : chunks) {
        if (c.coefficients.size() != r)
            throw std::invalid_argument("decode: expected square coefficient matrix");
        if (c.payload.size() != width)
            throw std::invalid_argument("decode: payload widths differ");
    }

    DecodeResult result;
    for (const auto& c : chunks) {
        if (c.generation_index != chunks.front().generation_index) {
            result.status = DecodeStatus::generation_mismatch;
            return result;
        }
    }

    // Augmented rows: coefficients | payload.
    std::vector<std::vector<std::uint8_t>> rows(r);
    for (std::size_t k = 0; k < r; ++k) {
        rows[k].reserve(r + width);
        rows[k].assign(chunks[k].coefficients.begin(), chunks[k].coefficients.end());
        rows[k].insert(rows[k].end(), chunks[k].payload.begin(), chunks[k].payload.end());
    }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < r && rank < r; ++col) {
        std::size_t pivot = rank;
        while (pivot < r && rows[pivot][col] == 0) ++pivot;
        if (pivot == r) continue;
        std::swap(rows[rank], rows[pivot]);
        const std::uint8_t inv = gf256::inv(rows[rank][col]);
        for (auto& v : rows[rank]) v = gf256::mul(v, inv);
        for (std::size_t k = 0; k < r; ++k) {
            if (k == rank || rows[k][col] == 0) continue;
            const std::uint8_t factor = rows[k][col];
            for (std::size_t w = col; w < rows[k].size(); ++w)
                rows[k][w] ^= gf256::mul(factor, rows[rank][w]);
        }
        ++rank;
    }

    result.rank = rank;
    if (rank < r) {
        result.status = DecodeStatus::rank_deficient;
        return result;
    }

    // Rows are now the identity followed by the recovered payloads.
    result.payloads.resize(r);
    for (std::size_t k = 0; k < r; ++k)
        result.payloads[k].assign(rows[k].begin() + static_cast<std::ptrdiff_t>(r),
                                  rows[k].end());
    return result;
}

}  // namespace sancap

#endif  // SANCAP_RLNC_HPP
