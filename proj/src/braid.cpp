#include "braidrep/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace braidrep {

namespace {

void check_letter(int k, std::size_t n, std::size_t pos) {
    if (k == 0) throw SyntaxError("generator index must be nonzero", pos);
    std::size_t idx = static_cast<std::size_t>(std::abs(k));
    if (idx + 1 > n)
        throw GeneratorOutOfRange("generator s" + std::to_string(idx) + " not in B_" +
                                  std::to_string(n));
}

}  // namespace

BraidWord parse_word(std::string_view text, std::size_t n) {
    if (n < 1) throw InvalidParams("strand count must be >= 1");
    BraidWord w;
    w.n = n;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        std::size_t start = pos;
        std::string tok;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
            tok += text[pos++];
        if (tok == "e" && w.letters.empty()) continue;
        int letter;
        long power = 1;
        try {
            if (tok[0] == 's') {
                std::size_t caret = tok.find('^');
                std::string idx_part = tok.substr(1, caret == std::string::npos
                                                         ? std::string::npos
                                                         : caret - 1);
                std::size_t used = 0;
                letter = std::stoi(idx_part, &used);
                if (used != idx_part.size() || letter <= 0)
                    throw SyntaxError("bad generator token '" + tok + "'", start);
                if (caret != std::string::npos) {
                    std::string pow_part = tok.substr(caret + 1);
                    power = std::stol(pow_part, &used);
                    if (used != pow_part.size())
                        throw SyntaxError("bad exponent in '" + tok + "'", start);
                }
            } else {
                std::size_t used = 0;
                letter = std::stoi(tok, &used);
                if (used != tok.size())
                    throw SyntaxError("bad letter '" + tok + "'", start);
            }
        } catch (const std::invalid_argument&) {
            throw SyntaxError("bad token '" + tok + "'", start);
        } catch (const std::out_of_range&) {
            throw SyntaxError("number out of range in '" + tok + "'", start);
        }
        check_letter(letter, n, start);
        int signed_letter = power < 0 ? -letter : letter;
        for (long i = 0; i < std::labs(power); ++i) w.letters.push_back(signed_letter);
    }
    return w;
}

std::string format_word(const BraidWord& w) {
    if (w.letters.empty()) return "e";
    std::ostringstream out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out << ' ';
        out << w.letters[i];
    }
    return out.str();
}

BraidWord inverse(const BraidWord& w) {
    BraidWord r;
    r.n = w.n;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

BraidWord compose(const BraidWord& u, const BraidWord& v) {
    if (u.n != v.n) throw StrandCountMismatch("cannot compose words with different strand counts");
    BraidWord r = u;
    r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
    return r;
}

BraidWord free_reduce(const BraidWord& w) {
    BraidWord r;
    r.n = w.n;
    for (int k : w.letters) {
        if (!r.letters.empty() && r.letters.back() == -k)
            r.letters.pop_back();
        else
            r.letters.push_back(k);
    }
    return r;
}

StrandPermutation permutation(const BraidWord& w) {
    // position[p-1] = strand currently at position p; crossings are applied
    // in word order as the strands travel downward.
    std::vector<std::size_t> position(w.n);
    for (std::size_t i = 0; i < w.n; ++i) position[i] = i + 1;
    for (int k : w.letters) {
        std::size_t i = static_cast<std::size_t>(std::abs(k));
        std::swap(position[i - 1], position[i]);
    }
    StrandPermutation perm(w.n);
    for (std::size_t p = 0; p < w.n; ++p) perm[position[p] - 1] = p + 1;
    return perm;
}

}  // namespace braidrep
