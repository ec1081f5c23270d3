#include "braidrep/search.hpp"

#include <cstdlib>
#include <random>

namespace braidrep {

namespace {

ResidueMatrix residue_identity(std::size_t n) {
    ResidueMatrix m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
}

ResidueMatrix residue_multiply(const ResidueMatrix& a, const ResidueMatrix& b, std::size_t n,
                               std::uint64_t modulus) {
    ResidueMatrix r(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::uint64_t aik = a[i * n + k];
            if (!aik) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!b[k * n + j]) continue;
                r[i * n + j] = (r[i * n + j] + mul_mod(aik, b[k * n + j], modulus)) % modulus;
            }
        }
    return r;
}

ResidueMatrix substitute_matrix(const PolyMatrix& m,
                                const std::map<char, std::uint64_t>& assignment,
                                std::uint64_t modulus) {
    std::size_t n = m.dim();
    ResidueMatrix r(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r[i * n + j] = m.at(i, j).substitute(assignment, modulus);
    return r;
}

struct Searcher {
    const SearchConfig& config;
    std::map<char, std::uint64_t> assignment;
    std::map<int, ResidueMatrix> gen_residues;  // letter -> residue image
    ResidueMatrix identity;
    std::vector<int> letter_order;
    SearchResult result;
    std::vector<int> current;

    explicit Searcher(const SearchConfig& cfg) : config(cfg) {
        assignment = fingerprint_assignment(cfg.seed, cfg.modulus);
        identity = residue_identity(cfg.n);
        for (std::size_t i = cfg.n - 1; i >= 1; --i) letter_order.push_back(-static_cast<int>(i));
        for (std::size_t i = 1; i <= cfg.n - 1; ++i) letter_order.push_back(static_cast<int>(i));
        for (int k : letter_order) {
            PolyMatrix img = generator_image(cfg.spec, static_cast<std::size_t>(std::abs(k)),
                                             k > 0 ? 1 : -1, cfg.n);
            gen_residues.emplace(k, substitute_matrix(img, assignment, cfg.modulus));
        }
    }

    bool done() const { return result.witnesses.size() >= config.limit; }

    void check_candidate() {
        result.fingerprint_hits += 1;
        BraidWord w{config.n, current};
        if (!evaluate(config.spec, w).is_identity()) return;
        result.confirmed += 1;
        KernelWitness witness = verify_kernel_witness(config.spec, w);
        if (witness.certified) result.witnesses.push_back(std::move(witness));
    }

    // Words of exactly `remaining` more letters, lexicographic in letter_order.
    void extend(const ResidueMatrix& product, std::size_t remaining) {
        for (int k : letter_order) {
            if (done()) return;
            if (!current.empty() && current.back() == -k) continue;  // would free-reduce
            current.push_back(k);
            ResidueMatrix next =
                residue_multiply(product, gen_residues.at(k), config.n, config.modulus);
            if (remaining == 1) {
                result.words_enumerated += 1;
                if (next == identity) check_candidate();
            } else {
                extend(next, remaining - 1);
            }
            current.pop_back();
        }
    }
};

}  // namespace

std::map<char, std::uint64_t> fingerprint_assignment(std::uint64_t seed, std::uint64_t modulus) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(1, modulus - 1);
    std::map<char, std::uint64_t> assignment;
    for (char v : kVarNames) assignment[v] = dist(rng);
    return assignment;
}

ResidueMatrix fingerprint(const RepSpec& spec, const BraidWord& w,
                          const std::map<char, std::uint64_t>& assignment, std::uint64_t modulus) {
    ResidueMatrix acc = residue_identity(w.n);
    for (int k : w.letters) {
        PolyMatrix img =
            generator_image(spec, static_cast<std::size_t>(std::abs(k)), k > 0 ? 1 : -1, w.n);
        acc = residue_multiply(acc, substitute_matrix(img, assignment, modulus), w.n, modulus);
    }
    return acc;
}

SearchResult search_kernel(const SearchConfig& config) {
    if (config.n < 2) throw InvalidConfig("search needs n >= 2");
    if (config.max_len < 1) throw InvalidConfig("search needs max_len >= 1");
    if (config.modulus <= (1ULL << 31)) throw InvalidConfig("modulus must exceed 2^31");
    if (!config.spec.evaluable()) throw InvalidConfig("raw spec is not searchable");
    Searcher searcher(config);
    ResidueMatrix start = residue_identity(config.n);
    for (std::size_t len = 1; len <= config.max_len && !searcher.done(); ++len)
        searcher.extend(start, len);
    return std::move(searcher.result);
}

}  // namespace braidrep
