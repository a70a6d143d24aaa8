#include "hopfact/freegroup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hopfact {

GroupWord free_reduce(const GroupWord& w) {
    GroupWord out;
    for (int l : w) {
        if (l == 0) throw std::invalid_argument("zero letter in group word");
        if (!out.empty() && out.back() == -l) out.pop_back();
        else out.push_back(l);
    }
    return out;
}

GroupWord word_inverse(const GroupWord& w) {
    GroupWord out(w.rbegin(), w.rend());
    for (int& l : out) l = -l;
    return out;
}

GroupWord word_concat(const GroupWord& a, const GroupWord& b) {
    GroupWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(out);
}

GroupWord parse_word(const std::string& s) {
    GroupWord out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;
        if (tok.size() < 2 || tok[0] != 'x')
            throw std::invalid_argument("bad word token: " + tok);
        size_t caret = tok.find('^');
        int gen = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        int exp = 1;
        if (caret != std::string::npos) exp = std::stoi(tok.substr(caret + 1));
        if (gen < 1) throw std::invalid_argument("bad generator index: " + tok);
        int letter = exp >= 0 ? gen : -gen;
        for (int r = 0; r < std::abs(exp); ++r) out.push_back(letter);
    }
    return free_reduce(out);
}

std::string format_word(const GroupWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += "x" + std::to_string(std::abs(w[i]));
        if (w[i] < 0) out += "^-1";
    }
    return out;
}

FreeGroupMap FreeGroupMap::identity(int n) {
    FreeGroupMap f;
    f.n = n;
    for (int i = 1; i <= n; ++i) f.images.push_back({i});
    return f;
}

GroupWord apply(const FreeGroupMap& f, const GroupWord& w) {
    GroupWord out;
    for (int l : w) {
        int g = std::abs(l);
        if (g > f.n) throw std::invalid_argument("generator exceeds rank");
        const GroupWord& img = f.images[g - 1];
        if (l > 0) out.insert(out.end(), img.begin(), img.end());
        else {
            GroupWord inv = word_inverse(img);
            out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    return free_reduce(out);
}

FreeGroupMap compose(const FreeGroupMap& f, const FreeGroupMap& g) {
    if (f.n != g.n) throw std::invalid_argument("rank mismatch");
    FreeGroupMap out;
    out.n = f.n;
    for (const auto& img : g.images) out.images.push_back(apply(f, img));
    return out;
}

FreeGroupMap inner(const GroupWord& g, int n) {
    FreeGroupMap out;
    out.n = n;
    GroupWord gi = word_inverse(g);
    for (int i = 1; i <= n; ++i)
        out.images.push_back(word_concat(word_concat(gi, {i}), g));
    return out;
}

FreeGroupMap nielsen_gen_map(const NielsenGen& g, int n) {
    FreeGroupMap f = FreeGroupMap::identity(n);
    auto check = [&](int idx) {
        if (idx < 1 || idx > n) throw std::invalid_argument("Nielsen index out of range");
    };
    switch (g.kind) {
    case NielsenGen::Swap:
        check(g.i); check(g.j);
        if (g.i == g.j) throw std::invalid_argument("swap needs i != j");
        std::swap(f.images[g.i - 1], f.images[g.j - 1]);
        break;
    case NielsenGen::Invert:
        check(g.i);
        f.images[g.i - 1] = {-g.i};
        break;
    case NielsenGen::LeftMul:
        check(g.i); check(g.j);
        if (g.i == g.j) throw std::invalid_argument("leftmul needs i != j");
        f.images[g.i - 1] = {-g.j, g.i};
        break;
    }
    return f;
}

FreeGroupMap nielsen_to_map(const NielsenSeq& seq, int n) {
    FreeGroupMap f = FreeGroupMap::identity(n);
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
        f = compose(nielsen_gen_map(*it, n), f);
    return f;
}

NielsenSeq inverse_of_sequence(const NielsenSeq& seq) {
    NielsenSeq out;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        switch (it->kind) {
        case NielsenGen::Swap:
        case NielsenGen::Invert:
            out.push_back(*it);
            break;
        case NielsenGen::LeftMul:
            out.push_back(NielsenGen::invert(it->j));
            out.push_back(*it);
            out.push_back(NielsenGen::invert(it->j));
            break;
        }
    }
    return out;
}

NielsenSeq eta_sequence() {
    return {NielsenGen::left_mul(1, 2), NielsenGen::invert(2)};
}

NielsenGen parse_nielsen_gen(const std::string& s) {
    std::istringstream in(s);
    std::string kind;
    in >> kind;
    int i = 0, j = 0;
    if (kind == "swap") {
        if (!(in >> i >> j)) throw std::invalid_argument("swap needs two indices");
        return NielsenGen::swap(i, j);
    }
    if (kind == "invert") {
        if (!(in >> i)) throw std::invalid_argument("invert needs one index");
        return NielsenGen::invert(i);
    }
    if (kind == "leftmul") {
        if (!(in >> i >> j)) throw std::invalid_argument("leftmul needs two indices");
        return NielsenGen::left_mul(i, j);
    }
    throw std::invalid_argument("unknown Nielsen generator: " + s);
}

NielsenSeq parse_nielsen_seq(const std::vector<std::string>& items) {
    NielsenSeq out;
    for (const auto& s : items) out.push_back(parse_nielsen_gen(s));
    return out;
}

std::string format_nielsen_gen(const NielsenGen& g) {
    switch (g.kind) {
    case NielsenGen::Swap: return "swap " + std::to_string(g.i) + " " + std::to_string(g.j);
    case NielsenGen::Invert: return "invert " + std::to_string(g.i);
    default: return "leftmul " + std::to_string(g.i) + " " + std::to_string(g.j);
    }
}

} // namespace hopfact
