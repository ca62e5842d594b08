#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scuba/fitness.hpp"
#include "scuba/neutrality.hpp"
#include "scuba/random.hpp"

namespace scuba {

enum class LinkKind { adjacent, random };

inline std::string_view to_string(LinkKind kind) {
    return kind == LinkKind::adjacent ? "adjacent" : "random";
}

inline LinkKind parse_link_kind(std::string_view text) {
    if (text == "adjacent") {
        return LinkKind::adjacent;
    }
    if (text == "random") {
        return LinkKind::random;
    }
    throw std::invalid_argument("unknown link kind: " + std::string(text));
}

struct NkqParams {
    int n = 64;
    int k = 0;
    int q = 2;
    LinkKind kind = LinkKind::random;
    std::uint64_t seed = 0;
};

inline constexpr int max_nkq_epistasis = 20;

inline void validate(const NkqParams& p) {
    if (p.n < 1) {
        throw std::invalid_argument("NKq: N must be positive");
    }
    if (p.k < 0 || p.k >= p.n) {
        throw std::invalid_argument("NKq: K must satisfy 0 <= K <= N-1");
    }
    if (p.k > max_nkq_epistasis) {
        throw std::invalid_argument("NKq: K above 20 is not supported");
    }
    if (p.q < 2) {
        throw std::invalid_argument("NKq: q must be at least 2");
    }
}

/// Fixed-length bit string.
class BitGenotype {
public:
    BitGenotype() = default;
    explicit BitGenotype(std::size_t n) : bits_(n, 0) {}
    explicit BitGenotype(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto& b : bits_) {
            if (b > 1) {
                throw std::invalid_argument("BitGenotype: bits must be 0 or 1");
            }
        }
    }

    /// Parses "0101..." (leftmost character is locus 0).
    static BitGenotype from_string(std::string_view text) {
        std::vector<std::uint8_t> bits;
        bits.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1') {
                throw std::invalid_argument("BitGenotype: expected 0/1 characters");
            }
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return BitGenotype(std::move(bits));
    }

    /// Locus i takes bit i of `code`.
    static BitGenotype from_code(std::uint64_t code, std::size_t n) {
        BitGenotype g(n);
        for (std::size_t i = 0; i < n; ++i) {
            g.bits_[i] = static_cast<std::uint8_t>((code >> i) & 1U);
        }
        return g;
    }

    std::size_t size() const noexcept { return bits_.size(); }
    int operator[](std::size_t i) const { return bits_[i]; }
    void flip(std::size_t i) { bits_[i] ^= 1U; }

    std::string to_string() const {
        std::string out(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            out[i] = static_cast<char>('0' + bits_[i]);
        }
        return out;
    }

    auto operator<=>(const BitGenotype&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

inline std::size_t hamming(const BitGenotype& a, const BitGenotype& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("hamming: length mismatch");
    }
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d += a[i] != b[i] ? 1 : 0;
    }
    return d;
}

/// NKq landscape instance: one component table of 2^(K+1) entries in [0, q-1]
/// per locus, indexed by (own allele, linked alleles in link order) read as a
/// binary number with the own allele most significant.
class NkqInstance {
public:
    using solution_type = BitGenotype;

    NkqInstance(NkqParams params, std::vector<std::vector<int>> links, std::vector<std::vector<std::uint32_t>> tables)
        : params_(params), links_(std::move(links)), tables_(std::move(tables)) {
        validate(params_);
        const auto n = static_cast<std::size_t>(params_.n);
        const std::size_t entries = std::size_t{1} << (params_.k + 1);
        if (links_.size() != n || tables_.size() != n) {
            throw std::invalid_argument("NKq: expected one link list and one table per locus");
        }
        dependents_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& li = links_[i];
            if (li.size() != static_cast<std::size_t>(params_.k)) {
                throw std::invalid_argument("NKq: link list must have exactly K entries");
            }
            for (std::size_t a = 0; a < li.size(); ++a) {
                if (li[a] < 0 || li[a] >= params_.n || static_cast<std::size_t>(li[a]) == i) {
                    throw std::invalid_argument("NKq: link index out of range or self-link");
                }
                for (std::size_t b = 0; b < a; ++b) {
                    if (li[a] == li[b]) {
                        throw std::invalid_argument("NKq: duplicate link");
                    }
                }
            }
            if (tables_[i].size() != entries) {
                throw std::invalid_argument("NKq: component table must have 2^(K+1) entries");
            }
            for (std::uint32_t v : tables_[i]) {
                if (v >= static_cast<std::uint32_t>(params_.q)) {
                    throw std::invalid_argument("NKq: table entry outside [0, q-1]");
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            dependents_[i].push_back({static_cast<int>(i), std::uint32_t{1} << params_.k});
            for (std::size_t a = 0; a < links_[i].size(); ++a) {
                const auto mask = std::uint32_t{1} << (params_.k - 1 - static_cast<int>(a));
                dependents_[static_cast<std::size_t>(links_[i][a])].push_back({static_cast<int>(i), mask});
            }
        }
    }

    const NkqParams& params() const noexcept { return params_; }
    const std::vector<std::vector<int>>& links() const noexcept { return links_; }
    const std::vector<std::vector<std::uint32_t>>& tables() const noexcept { return tables_; }
    int size() const noexcept { return params_.n; }

    Direction direction() const noexcept { return Direction::maximize; }
    std::size_t neighborhood_size() const noexcept { return static_cast<std::size_t>(params_.n); }

    /// Largest attainable raw fitness, N(q-1).
    std::int64_t max_raw() const noexcept { return std::int64_t{params_.n} * (params_.q - 1); }

    double normalized(Fitness f) const noexcept {
        return static_cast<double>(f.value) / static_cast<double>(max_raw());
    }

    std::uint32_t table_index(std::size_t locus, const BitGenotype& g) const {
        std::uint32_t idx = static_cast<std::uint32_t>(g[locus]);
        for (int l : links_[locus]) {
            idx = (idx << 1) | static_cast<std::uint32_t>(g[static_cast<std::size_t>(l)]);
        }
        return idx;
    }

    std::uint32_t component(std::size_t locus, const BitGenotype& g) const {
        return tables_[locus][table_index(locus, g)];
    }

    Fitness evaluate(const BitGenotype& g) const {
        check_length(g);
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < tables_.size(); ++i) {
            sum += component(i, g);
        }
        return Fitness{sum};
    }

    /// One-bit flip of locus `move`.
    BitGenotype neighbor(const BitGenotype& g, std::size_t move) const {
        check_length(g);
        BitGenotype out = g;
        out.flip(move);
        return out;
    }

    /// Fitness after flipping locus `move`, touching only the affected components.
    Fitness neighbor_fitness(const BitGenotype& g, Fitness fg, std::size_t move) const {
        std::int64_t value = fg.value;
        for (const auto& dep : dependents_[move]) {
            const auto c = static_cast<std::size_t>(dep.component);
            const std::uint32_t idx = table_index(c, g);
            value += static_cast<std::int64_t>(tables_[c][idx ^ dep.mask]) - static_cast<std::int64_t>(tables_[c][idx]);
        }
        return Fitness{value};
    }

    BitGenotype random_solution(Rng& rng) const {
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(params_.n));
        for (auto& b : bits) {
            b = rng.coin() ? 1 : 0;
        }
        return BitGenotype(std::move(bits));
    }

private:
    struct Dependent {
        int component;
        std::uint32_t mask;  // bit of the flipped locus inside that component's table index
    };

    void check_length(const BitGenotype& g) const {
        if (g.size() != static_cast<std::size_t>(params_.n)) {
            throw std::invalid_argument("NKq: genotype length does not match N");
        }
    }

    NkqParams params_;
    std::vector<std::vector<int>> links_;
    std::vector<std::vector<std::uint32_t>> tables_;
    std::vector<std::vector<Dependent>> dependents_;
};

/// Adjacent links of locus i: ceil(K/2) loci to the right, then floor(K/2) to
/// the left, with periodic boundaries.
inline std::vector<int> adjacent_links(int locus, int n, int k) {
    std::vector<int> out;
    const int right = (k + 1) / 2;
    const int left = k / 2;
    for (int d = 1; d <= right; ++d) {
        out.push_back((locus + d) % n);
    }
    for (int d = 1; d <= left; ++d) {
        out.push_back(((locus - d) % n + n) % n);
    }
    return out;
}

/// Deterministic in (params, params.seed). Links for all loci are drawn first,
/// then the tables, locus by locus.
inline NkqInstance nkq_build(const NkqParams& params) {
    validate(params);
    Rng rng(params.seed);
    const auto n = static_cast<std::size_t>(params.n);
    std::vector<std::vector<int>> links(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (params.kind == LinkKind::adjacent) {
            links[i] = adjacent_links(static_cast<int>(i), params.n, params.k);
            continue;
        }
        // Partial Fisher-Yates over {0..N-1} \ {i}.
        std::vector<int> pool;
        pool.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                pool.push_back(static_cast<int>(j));
            }
        }
        for (int a = 0; a < params.k; ++a) {
            const auto pick = static_cast<std::size_t>(a) + rng.index(pool.size() - static_cast<std::size_t>(a));
            std::swap(pool[static_cast<std::size_t>(a)], pool[pick]);
            links[i].push_back(pool[static_cast<std::size_t>(a)]);
        }
    }
    const std::size_t entries = std::size_t{1} << (params.k + 1);
    std::vector<std::vector<std::uint32_t>> tables(n, std::vector<std::uint32_t>(entries));
    for (auto& table : tables) {
        for (auto& v : table) {
            v = static_cast<std::uint32_t>(rng.below(static_cast<std::uint64_t>(params.q)));
        }
    }
    return NkqInstance(params, std::move(links), std::move(tables));
}

inline double nkq_sample_neutral_degree(const NkqInstance& inst, std::size_t samples, std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    return mean_neutral_degree(inst, samples, rng);
}

/// Builds one instance from params and averages Degn over uniform genotypes.
inline double nkq_sample_neutral_degree(const NkqParams& params, std::size_t samples, std::uint64_t rng_seed) {
    return nkq_sample_neutral_degree(nkq_build(params), samples, rng_seed);
}

// Instance file:
//   NKQ 1
//   N K q kind seed
//   N lines of K link indices
//   N lines of 2^(K+1) table entries
inline void write_nkq(std::ostream& out, const NkqInstance& inst) {
    const auto& p = inst.params();
    out << "NKQ 1\n" << p.n << ' ' << p.k << ' ' << p.q << ' ' << to_string(p.kind) << ' ' << p.seed << '\n';
    for (const auto& li : inst.links()) {
        for (std::size_t a = 0; a < li.size(); ++a) {
            out << (a ? " " : "") << li[a];
        }
        out << '\n';
    }
    for (const auto& table : inst.tables()) {
        for (std::size_t a = 0; a < table.size(); ++a) {
            out << (a ? " " : "") << table[a];
        }
        out << '\n';
    }
}

inline NkqInstance read_nkq(std::istream& in) {
    auto fail = [](const std::string& what) -> std::runtime_error {
        return std::runtime_error("NKq instance file: " + what);
    };
    std::string line;
    if (!std::getline(in, line) || line != "NKQ 1") {
        throw fail("missing 'NKQ 1' header");
    }
    if (!std::getline(in, line)) {
        throw fail("missing parameter line");
    }
    NkqParams p;
    {
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> p.n >> p.k >> p.q >> kind >> p.seed)) {
            throw fail("malformed parameter line");
        }
        p.kind = parse_link_kind(kind);
    }
    validate(p);
    auto read_row = [&](std::size_t expected, auto& row) {
        if (!std::getline(in, line)) {
            throw fail("truncated file");
        }
        std::istringstream ls(line);
        typename std::decay_t<decltype(row)>::value_type v{};
        while (ls >> v) {
            row.push_back(v);
        }
        if (!ls.eof() || row.size() != expected) {
            throw fail("row has the wrong number of entries");
        }
    };
    const auto n = static_cast<std::size_t>(p.n);
    std::vector<std::vector<int>> links(n);
    for (auto& li : links) {
        read_row(static_cast<std::size_t>(p.k), li);
    }
    std::vector<std::vector<std::uint32_t>> tables(n);
    for (auto& table : tables) {
        read_row(std::size_t{1} << (p.k + 1), table);
    }
    return NkqInstance(p, std::move(links), std::move(tables));
}

}  // namespace scuba
