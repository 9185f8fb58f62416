#include <catch2/catch.hpp>

#include <cmath>
#include <random>

#include "sancap/rlnc.hpp"

using namespace sancap;

namespace {

Generation random_generation(std::mt19937_64& rng, std::size_t r, std::size_t width) {
    std::vector<std::vector<std::uint8_t>> payloads(r, std::vector<std::uint8_t>(width));
    for (auto& p : payloads)
        for (auto& b : p) b = static_cast<std::uint8_t>(rng() & 0xFF);
    return Generation(static_cast<std::uint32_t>(rng() & 0xFFFF), std::move(payloads));
}

}  // namespace

TEST_CASE("gf256 field axioms") {
    using namespace sancap::gf256;
    // identity and commutativity, exhaustively over all pairs
    for (int a = 0; a < 256; ++a) {
        const auto ua = static_cast<std::uint8_t>(a);
        CHECK(mul(ua, 1) == ua);
        CHECK(add(ua, ua) == 0);  // characteristic 2: every element is its own negative
        if (a != 0) CHECK(mul(ua, inv(ua)) == 1);
        for (int b = 0; b < 256; ++b) {
            const auto ub = static_cast<std::uint8_t>(b);
            REQUIRE(mul(ua, ub) == mul(ub, ua));
            REQUIRE(mul(ua, ub) == detail::mul_slow(ua, ub));  // table vs shift-and-add
        }
    }
    // distributivity on sampled triples
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20000; ++k) {
        const auto a = static_cast<std::uint8_t>(rng() & 0xFF);
        const auto b = static_cast<std::uint8_t>(rng() & 0xFF);
        const auto c = static_cast<std::uint8_t>(rng() & 0xFF);
        REQUIRE(gf256::mul(a, gf256::add(b, c)) ==
                gf256::add(gf256::mul(a, b), gf256::mul(a, c)));
        REQUIRE(gf256::mul(gf256::mul(a, b), c) == gf256::mul(a, gf256::mul(b, c)));
    }
    CHECK_THROWS_AS(gf256::inv(0), std::domain_error);
}

TEST_CASE("encode basics") {
    const std::vector<std::uint8_t> p0{1, 2, 3, 4};
    const std::vector<std::uint8_t> p1{9, 8, 7, 6};
    const Generation gen(3, {p0, p1});

    const std::vector<std::uint8_t> e0{1, 0};
    CHECK(encode(gen, e0).payload == p0);
    const std::vector<std::uint8_t> e1{0, 1};
    CHECK(encode(gen, e1).payload == p1);

    const std::vector<std::uint8_t> both{1, 1};
    const CodedChunk sum = encode(gen, both);
    for (std::size_t w = 0; w < p0.size(); ++w)
        CHECK(sum.payload[w] == (p0[w] ^ p1[w]));

    const std::vector<std::uint8_t> zero{0, 0};
    CHECK(encode(gen, zero).payload == std::vector<std::uint8_t>{0, 0, 0, 0});

    const std::vector<std::uint8_t> wrong{1, 2, 3};
    CHECK_THROWS_AS(encode(gen, wrong), std::invalid_argument);
}

TEST_CASE("random coded chunks are deterministic per seed") {
    std::mt19937_64 rng(42);
    const Generation gen = random_generation(rng, 3, 16);
    const CodedChunk a = random_coded_chunk(gen, 777u);
    const CodedChunk b = random_coded_chunk(gen, 777u);
    CHECK(a.coefficients == b.coefficients);
    CHECK(a.payload == b.payload);
    const CodedChunk c = random_coded_chunk(gen, 778u);
    CHECK(a.coefficients != c.coefficients);
}

TEST_CASE("coefficient draws are uniform over the field") {
    std::mt19937_64 rng(11);
    std::array<int, 256> counts{};
    const int n = 10000;
    for (int k = 0; k < n; ++k) ++counts[random_field_element(rng)];
    const double p = 1.0 / 256.0;
    const double sigma = std::sqrt(n * p * (1.0 - p));
    for (int v = 0; v < 256; ++v)
        REQUIRE(std::abs(counts[v] - n * p) <= 5.0 * sigma);
}

TEST_CASE("decode recovers from independent combinations") {
    const std::vector<std::uint8_t> x1{'a', 'b', 'c'};
    const std::vector<std::uint8_t> x2{'x', 'y', 'z'};
    const Generation gen(0, {x1, x2});
    const std::vector<CodedChunk> chunks{encode(gen, std::vector<std::uint8_t>{1, 0}),
                                         encode(gen, std::vector<std::uint8_t>{1, 1})};
    const DecodeResult r = decode(chunks);
    REQUIRE(r);
    CHECK(r.payloads[0] == x1);
    CHECK(r.payloads[1] == x2);
}

TEST_CASE("decode reports rank deficiency and generation mismatch") {
    std::mt19937_64 rng(8);
    const Generation gen = random_generation(rng, 2, 8);
    const CodedChunk c = encode(gen, std::vector<std::uint8_t>{3, 5});
    const DecodeResult dup = decode(std::vector<CodedChunk>{c, c});
    CHECK(dup.status == DecodeStatus::rank_deficient);
    CHECK(dup.rank == 1);
    CHECK_FALSE(dup);

    CodedChunk other = c;
    other.generation_index = gen.index + 1;
    const DecodeResult mismatch = decode(std::vector<CodedChunk>{c, other});
    CHECK(mismatch.status == DecodeStatus::generation_mismatch);
}

TEST_CASE("encode/decode round trip with random coefficients") {
    std::mt19937_64 rng(123);
    int successes = 0, trials = 0;
    for (std::size_t r : {2u, 4u}) {
        for (int k = 0; k < 500; ++k) {
            const Generation gen = random_generation(rng, r, 64);
            std::vector<CodedChunk> chunks;
            for (std::size_t j = 0; j < r; ++j) chunks.push_back(random_coded_chunk(gen, rng));
            const DecodeResult res = decode(chunks);
            ++trials;
            if (res) {
                ++successes;
                REQUIRE(res.payloads == gen.payloads);
            } else {
                REQUIRE(res.status == DecodeStatus::rank_deficient);
                REQUIRE(res.rank < r);
            }
        }
    }
    // success rate should track prod_{k=1..r}(1 - q^-k); both r values sit
    // near 0.996, so pool the trials for a coarse 3-sigma band
    const double p = 0.996;
    const double se = std::sqrt(p * (1.0 - p) / trials);
    CHECK(std::abs(static_cast<double>(successes) / trials - p) <= 3.0 * se + 3e-4);
}

TEST_CASE("random square matrices over gf256 are almost always invertible") {
    // rank of a 2x2 via the determinant; target prod_{k=1}^{2}(1 - 256^-k)
    std::mt19937_64 rng(31337);
    const int n = 100000;
    int invertible = 0;
    for (int k = 0; k < n; ++k) {
        const auto a = static_cast<std::uint8_t>(rng() & 0xFF);
        const auto b = static_cast<std::uint8_t>(rng() & 0xFF);
        const auto c = static_cast<std::uint8_t>(rng() & 0xFF);
        const auto d = static_cast<std::uint8_t>(rng() & 0xFF);
        if ((gf256::mul(a, d) ^ gf256::mul(b, c)) != 0) ++invertible;
    }
    const double p = (1.0 - 1.0 / 256.0) * (1.0 - 1.0 / 65536.0);
    const double se = std::sqrt(p * (1.0 - p) / n);
    CHECK(std::abs(static_cast<double>(invertible) / n - p) <= 3.0 * se);
}
