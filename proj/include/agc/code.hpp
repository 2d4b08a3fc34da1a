#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "rational.hpp"

namespace agc {

using Word = std::vector<FieldElement>;
using Matrix = std::vector<Word>;

inline std::size_t hamming(const Word& x, const Word& y) {
    require(x.size() == y.size(), errc::length_mismatch, "words must have equal length");
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        require(x[i].data()->same(*y[i].data()), errc::spec_mismatch, "words over different fields");
        if (x[i] != y[i]) ++d;
    }
    return d;
}

inline std::size_t weight(const Word& x) {
    std::size_t w = 0;
    for (const auto& c : x)
        if (!c.is_zero()) ++w;
    return w;
}

/// Rank of a matrix over F_q by Gaussian elimination.
inline std::size_t matrix_rank(Matrix rows) {
    if (rows.empty()) return 0;
    const std::size_t n = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        FieldElement inv = rows[rank][col].inv();
        for (std::size_t j = col; j < n; ++j) rows[rank][j] = rows[rank][j] * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            FieldElement f = rows[r][col];
            for (std::size_t j = col; j < n; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline std::size_t code_dimension(const Matrix& gen) {
    require(!gen.empty() && !gen[0].empty(), errc::domain, "generator matrix must be nonempty");
    return matrix_rank(gen);
}

/// Linear [n,k] code over F_q given by a full-rank generator matrix.
struct LinearCode {
    Field field;
    Matrix gen;  // k rows, each of length n
    std::size_t n;
    std::size_t k;

    LinearCode(Field f, Matrix g) : field(std::move(f)), gen(std::move(g)) {
        require(!gen.empty(), errc::domain, "generator matrix must have at least one row");
        k = gen.size();
        n = gen[0].size();
        for (const auto& row : gen) {
            require(row.size() == n, errc::length_mismatch, "generator rows must have equal length");
            for (const auto& e : row)
                require(field.owns(e), errc::spec_mismatch, "generator entries must live in the code's field");
        }
        require(n >= k && k >= 1, errc::domain, "need n >= k >= 1");
        require(matrix_rank(gen) == k, errc::domain, "generator rows are linearly dependent");
    }
};

/// Verified or bounded parameter triple, with exact rationals R = k/n and
/// delta = d/n. `d_exact` distinguishes an exact minimum distance from the
/// lower bound an AG construction guarantees.
struct CodeParams {
    std::size_t n;
    std::size_t k;
    long long d;
    bool d_exact;
    std::uint64_t q;
    Rational rate;
    Rational rel_distance;

    CodeParams(std::size_t n_, std::size_t k_, long long d_, bool exact, std::uint64_t q_)
        : n(n_), k(k_), d(d_), d_exact(exact), q(q_),
          rate(static_cast<long long>(k_), static_cast<long long>(n_)),
          rel_distance(d_, static_cast<long long>(n_)) {
        require(n >= 1 && k >= 1, errc::domain, "need n, k >= 1");
        require(d >= 1 && d <= static_cast<long long>(n), errc::domain, "need 1 <= d <= n");
    }
};

/// k + d <= n + 1. Requires an exact d; every honestly constructed code
/// passes, so a `false` only ever flags bogus input.
inline bool singleton_holds(const CodeParams& p) {
    require(p.d_exact, errc::d_not_exact, "Singleton check needs an exact minimum distance");
    return p.k + static_cast<std::size_t>(p.d) <= p.n + 1;
}

namespace detail {

// Walks every message of F_q^k in enumeration order (component 0 cycling
// fastest) and hands (index, codeword) to the visitor. The codeword is
// updated incrementally: an odometer step at digit j adds a precomputed
// delta row, so a full scan costs O(q^k * n) instead of O(q^k * k * n).
// Returning false from the visitor stops the scan.
template <typename Visitor>
void scan_messages(const LinearCode& code, std::uint64_t total, Visitor&& visit) {
    const std::uint64_t q = code.field.order();
    const std::size_t k = code.k, n = code.n;

    // delta[j][t] = (elem(t+1 mod q) - elem(t)) * row_j; the wrap-around delta
    // is exactly what a carry needs as well.
    std::vector<std::vector<Word>> delta(k);
    for (std::size_t j = 0; j < k; ++j) {
        delta[j].resize(q);
        for (std::uint64_t t = 0; t < q; ++t) {
            FieldElement step =
                code.field.element_at((t + 1) % q) - code.field.element_at(t);
            Word row;
            row.reserve(n);
            for (std::size_t c = 0; c < n; ++c) row.push_back(step * code.gen[j][c]);
            delta[j][t] = std::move(row);
        }
    }

    std::vector<std::uint64_t> digits(k, 0);
    Word cw(n, code.field.zero());
    if (!visit(std::uint64_t(0), cw)) return;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::size_t j = 0;
        while (true) {
            std::uint64_t t = digits[j];
            for (std::size_t c = 0; c < n; ++c) cw[c] = cw[c] + delta[j][t][c];
            digits[j] = (t + 1) % q;
            if (digits[j] != 0) break;
            ++j;
        }
        if (!visit(idx, cw)) return;
    }
}

inline std::uint64_t message_space_size(const LinearCode& code, std::uint64_t budget, const char* what) {
    auto total = checked_pow(code.field.order(), static_cast<std::uint32_t>(code.k), budget);
    require(total.has_value(), errc::budget_exceeded, std::string(what) + ": q^k exceeds the budget");
    return *total;
}

}  // namespace detail

/// Exact minimum distance by enumerating all q^k - 1 nonzero codewords.
inline long long min_distance_bruteforce(const LinearCode& code) {
    require(code.k >= 1, errc::zero_dimensional, "code has dimension 0");
    std::uint64_t total = detail::message_space_size(code, std::uint64_t(1) << 24, "min_distance");
    std::size_t best = code.n + 1;
    detail::scan_messages(code, total, [&](std::uint64_t idx, const Word& cw) {
        if (idx == 0) return true;
        std::size_t w = weight(cw);
        if (w < best) best = w;
        return best > 1;  // weight 1 cannot be beaten
    });
    return static_cast<long long>(best);
}

/// Reed-Solomon generator: rows evaluate 1, x, ..., x^(k-1) at the alphas.
inline LinearCode rs_generator(const Field& field, const std::vector<FieldElement>& alphas, std::size_t k) {
    const std::size_t n = alphas.size();
    require(k >= 1 && k <= n, errc::k_out_of_range, "need 1 <= k <= n");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            require(alphas[i] != alphas[j], errc::duplicate_evaluation_point,
                    "evaluation points must be pairwise distinct");
    Matrix gen(k, Word(n, field.one()));
    for (std::size_t j = 1; j < k; ++j)
        for (std::size_t c = 0; c < n; ++c) gen[j][c] = gen[j - 1][c] * alphas[c];
    return LinearCode(field, std::move(gen));
}

/// Closest codeword to `received` in Hamming distance; ties resolve to the
/// smallest message-enumeration index.
inline Word nearest_codeword(const LinearCode& code, const Word& received) {
    require(received.size() == code.n, errc::length_mismatch, "received word has wrong length");
    std::uint64_t total = detail::message_space_size(code, std::uint64_t(1) << 20, "nearest_codeword");
    Word best;
    std::size_t best_d = code.n + 1;
    detail::scan_messages(code, total, [&](std::uint64_t, const Word& cw) {
        std::size_t d = hamming(cw, received);
        if (d < best_d) {
            best_d = d;
            best = cw;
        }
        return best_d > 0;
    });
    return best;
}

/// q-ary symmetric channel: each symbol is corrupted independently with
/// probability p_err, uniformly over the q-1 wrong symbols.
struct ChannelSpec {
    std::uint64_t q;
    double p_err;
    std::uint64_t seed;

    ChannelSpec(std::uint64_t q_, double p, std::uint64_t seed_) : q(q_), p_err(p), seed(seed_) {
        require(q >= 2, errc::domain, "alphabet size must be >= 2");
        require(p >= 0.0 && p <= 1.0 - 1.0 / static_cast<double>(q), errc::domain,
                "need 0 <= p_err <= 1 - 1/q");
    }
};

/// Streaming sampler over one mt19937_64 stream (the named deterministic
/// generator of this toolkit; no global state). Symbols are indices in
/// [0, q), 0 meaning "no error". One 64-bit draw decides corruption via the
/// top 53 bits; a second draw picks the wrong symbol.
class ChannelSampler {
  public:
    explicit ChannelSampler(const ChannelSpec& spec) : spec_(spec), rng_(spec.seed) {}

    std::vector<std::uint32_t> sample(std::size_t n) {
        std::vector<std::uint32_t> e(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
            if (u < spec_.p_err)
                e[i] = 1 + static_cast<std::uint32_t>(rng_() % (spec_.q - 1));
        }
        return e;
    }

    /// Same stream, symbols materialized as field elements.
    Word sample_elements(const Field& field, std::size_t n) {
        require(field.order() == spec_.q, errc::spec_mismatch, "channel alphabet must match field order");
        Word w;
        w.reserve(n);
        for (std::uint32_t s : sample(n)) w.push_back(field.element_at(s));
        return w;
    }

  private:
    ChannelSpec spec_;
    std::mt19937_64 rng_;
};

/// One-shot error word from a fresh stream at spec.seed.
inline std::vector<std::uint32_t> channel_sample(const ChannelSpec& spec, std::size_t n) {
    return ChannelSampler(spec).sample(n);
}

namespace detail {
// RFC 4180 quoting for element strings that contain commas (m >= 2).
inline std::string csv_cell(const std::string& s) {
    if (s.find(',') == std::string::npos) return s;
    return "\"" + s + "\"";
}
}  // namespace detail

/// CSV form: header `q,n,k`, then k rows of n serialized elements.
inline std::string code_to_csv(const LinearCode& code) {
    std::string out = "q,n,k\n" + std::to_string(code.field.order()) + "," + std::to_string(code.n) + "," +
                      std::to_string(code.k) + "\n";
    for (const auto& row : code.gen) {
        for (std::size_t c = 0; c < code.n; ++c) {
            if (c) out += ',';
            out += detail::csv_cell(row[c].str());
        }
        out += '\n';
    }
    return out;
}

}  // namespace agc
