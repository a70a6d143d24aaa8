#include "hopfact/hopf.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <json.hpp>

namespace hopfact {

int HopfDescriptor::z_index(int i, int j) const {
    if (i < 0 || j <= i || j >= dim_v) throw std::invalid_argument("bad z pair");
    // pairs (0,1),(0,2),...,(0,d-1),(1,2),...
    int idx = 0;
    for (int a = 0; a < i; ++a) idx += dim_v - 1 - a;
    return idx + (j - i - 1);
}

std::pair<int, int> HopfDescriptor::z_pair(int idx) const {
    for (int a = 0; a < dim_v; ++a) {
        int block = dim_v - 1 - a;
        if (idx < block) return {a, a + 1 + idx};
        idx -= block;
    }
    throw std::invalid_argument("bad z index");
}

int degree(const HopfDescriptor& desc, const BasisWord& w) {
    if (desc.kind == HopfKind::TensorAlgebra) return (int)w.data.size();
    int deg = 0;
    for (int i = 0; i < desc.dim_v; ++i) deg += w.data[i];
    for (int i = desc.dim_v; i < (int)w.data.size(); ++i) deg += 2 * w.data[i];
    return deg;
}

bool is_unit_word(const HopfDescriptor& desc, const BasisWord& w) {
    if (desc.kind == HopfKind::TensorAlgebra) return w.data.empty();
    return std::all_of(w.data.begin(), w.data.end(), [](int e) { return e == 0; });
}

BasisWord unit_word(const HopfDescriptor& desc) {
    BasisWord w;
    if (desc.kind == HopfKind::EnvelopingNil2)
        w.data.assign(desc.dim_v + desc.z_count(), 0);
    return w;
}

namespace {

void enumerate_exponents(int slots, int total, std::vector<int>& cur,
                         const std::function<void(const std::vector<int>&)>& emit) {
    if (slots == 1) {
        cur.push_back(total);
        emit(cur);
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= total; ++e) {
        cur.push_back(e);
        enumerate_exponents(slots - 1, total - e, cur, emit);
        cur.pop_back();
    }
}

} // namespace

std::vector<BasisWord> words_of_degree(const HopfDescriptor& desc, int deg) {
    std::vector<BasisWord> out;
    if (deg < 0 || deg > desc.truncation) return out;
    if (desc.kind == HopfKind::TensorAlgebra) {
        BasisWord w;
        w.data.assign(deg, 0);
        while (true) {
            out.push_back(w);
            int pos = deg - 1;
            while (pos >= 0 && w.data[pos] == desc.dim_v - 1) w.data[pos--] = 0;
            if (pos < 0) break;
            ++w.data[pos];
        }
        return out;
    }
    // nil2: x exponents summing to deg - 2s, z exponents summing to s
    std::vector<int> cur;
    for (int s = 0; 2 * s <= deg; ++s) {
        int xs = deg - 2 * s;
        std::vector<std::vector<int>> xparts, zparts;
        enumerate_exponents(desc.dim_v, xs, cur,
                            [&](const std::vector<int>& v) { xparts.push_back(v); });
        if (desc.z_count() == 0) {
            if (s != 0) continue;
            zparts.push_back({});
        } else {
            enumerate_exponents(desc.z_count(), s, cur,
                                [&](const std::vector<int>& v) { zparts.push_back(v); });
        }
        for (const auto& xp : xparts)
            for (const auto& zp : zparts) {
                BasisWord w;
                w.data = xp;
                w.data.insert(w.data.end(), zp.begin(), zp.end());
                out.push_back(w);
            }
    }
    return out;
}

void AlgebraElement::add_term(const BasisWord& w, const Rational& c) {
    if (c == 0) return;
    if (degree(desc, w) > desc.truncation) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

AlgebraElement unit(const HopfDescriptor& desc, const Rational& c) {
    AlgebraElement a(desc);
    a.add_term(unit_word(desc), c);
    return a;
}

AlgebraElement generator(const HopfDescriptor& desc, int i) {
    if (i < 0 || i >= desc.dim_v) throw std::invalid_argument("generator index out of range");
    AlgebraElement a(desc);
    BasisWord w = unit_word(desc);
    if (desc.kind == HopfKind::TensorAlgebra) w.data.push_back(i);
    else w.data[i] = 1;
    a.add_term(w, Rational(1));
    return a;
}

AlgebraElement z_generator(const HopfDescriptor& desc, int i, int j) {
    if (desc.kind != HopfKind::EnvelopingNil2)
        throw std::invalid_argument("z generators exist only in EnvelopingNil2");
    AlgebraElement a(desc);
    BasisWord w = unit_word(desc);
    w.data[desc.dim_v + desc.z_index(i, j)] = 1;
    a.add_term(w, Rational(1));
    return a;
}

std::vector<std::pair<AlgebraElement, int>> primitive_generators(const HopfDescriptor& desc) {
    std::vector<std::pair<AlgebraElement, int>> out;
    for (int i = 0; i < desc.dim_v; ++i) out.emplace_back(generator(desc, i), 1);
    if (desc.kind == HopfKind::EnvelopingNil2)
        for (int i = 0; i < desc.dim_v; ++i)
            for (int j = i + 1; j < desc.dim_v; ++j)
                out.emplace_back(z_generator(desc, i, j), 2);
    return out;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.desc != b.desc) throw std::invalid_argument("descriptor mismatch");
    AlgebraElement out = a;
    for (const auto& [w, c] : b.terms) out.add_term(w, c);
    return out;
}

AlgebraElement scale(const AlgebraElement& a, const Rational& c) {
    AlgebraElement out(a.desc);
    if (c == 0) return out;
    for (const auto& [w, v] : a.terms) out.terms.emplace(w, v * c);
    return out;
}

namespace {

// Straighten an x-letter sequence in U(L2): x_j x_i = x_i x_j - z_ij (i<j),
// z's central.  Appends the resulting PBW terms (letters resorted, z
// exponents accumulated) onto `out` with coefficient `coef`.
void straighten_into(const HopfDescriptor& desc, std::vector<int> letters,
                     std::vector<int> zexp, Rational coef, AlgebraElement& out) {
    struct Item {
        std::vector<int> letters;
        std::vector<int> zexp;
        Rational coef;
    };
    std::vector<Item> stack;
    stack.push_back({std::move(letters), std::move(zexp), std::move(coef)});
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        size_t k = 0;
        bool sorted = true;
        for (; k + 1 < it.letters.size(); ++k) {
            if (it.letters[k] > it.letters[k + 1]) { sorted = false; break; }
        }
        if (sorted) {
            BasisWord w = unit_word(desc);
            for (int l : it.letters) ++w.data[l];
            for (size_t z = 0; z < it.zexp.size(); ++z) w.data[desc.dim_v + z] += it.zexp[z];
            out.add_term(w, it.coef);
            continue;
        }
        int j = it.letters[k], i = it.letters[k + 1]; // j > i
        Item swapped = it;
        std::swap(swapped.letters[k], swapped.letters[k + 1]);
        Item collapsed;
        collapsed.letters = it.letters;
        collapsed.letters.erase(collapsed.letters.begin() + k, collapsed.letters.begin() + k + 2);
        collapsed.zexp = it.zexp;
        ++collapsed.zexp[desc.z_index(i, j)];
        collapsed.coef = -it.coef;
        stack.push_back(std::move(swapped));
        stack.push_back(std::move(collapsed));
    }
}

std::vector<int> expand_x_letters(const HopfDescriptor& desc, const BasisWord& w) {
    std::vector<int> letters;
    for (int i = 0; i < desc.dim_v; ++i)
        for (int e = 0; e < w.data[i]; ++e) letters.push_back(i);
    return letters;
}

} // namespace

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.desc != b.desc) throw std::invalid_argument("descriptor mismatch");
    AlgebraElement out(a.desc);
    const auto& desc = a.desc;
    for (const auto& [wa, ca] : a.terms) {
        for (const auto& [wb, cb] : b.terms) {
            if (degree(desc, wa) + degree(desc, wb) > desc.truncation) continue;
            Rational c = ca * cb;
            if (desc.kind == HopfKind::TensorAlgebra) {
                BasisWord w = wa;
                w.data.insert(w.data.end(), wb.data.begin(), wb.data.end());
                out.add_term(w, c);
            } else {
                std::vector<int> letters = expand_x_letters(desc, wa);
                auto lb = expand_x_letters(desc, wb);
                letters.insert(letters.end(), lb.begin(), lb.end());
                std::vector<int> zexp(desc.z_count());
                for (int z = 0; z < desc.z_count(); ++z)
                    zexp[z] = wa.data[desc.dim_v + z] + wb.data[desc.dim_v + z];
                straighten_into(desc, std::move(letters), std::move(zexp), c, out);
            }
        }
    }
    return out;
}

AlgebraElement antipode(const AlgebraElement& a) {
    AlgebraElement out(a.desc);
    const auto& desc = a.desc;
    for (const auto& [w, c] : a.terms) {
        if (desc.kind == HopfKind::TensorAlgebra) {
            BasisWord r;
            r.data.assign(w.data.rbegin(), w.data.rend());
            out.add_term(r, (w.data.size() % 2 ? -c : c));
        } else {
            std::vector<int> letters = expand_x_letters(desc, w);
            std::reverse(letters.begin(), letters.end());
            int zsum = 0;
            std::vector<int> zexp(desc.z_count());
            for (int z = 0; z < desc.z_count(); ++z) {
                zexp[z] = w.data[desc.dim_v + z];
                zsum += zexp[z];
            }
            int sign = (letters.size() + zsum) % 2 ? -1 : 1;
            straighten_into(desc, std::move(letters), std::move(zexp), sign * c, out);
        }
    }
    return out;
}

Rational counit(const AlgebraElement& a) {
    auto it = a.terms.find(unit_word(a.desc));
    return it == a.terms.end() ? Rational(0) : it->second;
}

AlgebraElement lie_bracket(const AlgebraElement& a, const AlgebraElement& b) {
    return add(mul(a, b), scale(mul(b, a), Rational(-1)));
}

int homogeneous_degree(const AlgebraElement& a) {
    int deg = -2;
    for (const auto& [w, c] : a.terms) {
        int d = degree(a.desc, w);
        if (deg == -2) deg = d;
        else if (deg != d) return -1;
    }
    return deg == -2 ? 0 : deg;
}

void TensorElement::add_term(const std::vector<BasisWord>& ws, const Rational& c) {
    if (c == 0) return;
    if ((int)ws.size() != arity) throw std::invalid_argument("tensor arity mismatch");
    auto it = terms.find(ws);
    if (it == terms.end()) {
        terms.emplace(ws, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

TensorElement tensor_of(const std::vector<AlgebraElement>& factors) {
    if (factors.empty()) throw std::invalid_argument("tensor_of: empty factor list");
    TensorElement t(factors[0].desc, (int)factors.size());
    std::vector<std::pair<std::vector<BasisWord>, Rational>> acc = {{{}, Rational(1)}};
    for (const auto& f : factors) {
        if (f.desc != t.desc) throw std::invalid_argument("descriptor mismatch");
        std::vector<std::pair<std::vector<BasisWord>, Rational>> next;
        for (const auto& [ws, c] : acc)
            for (const auto& [w, cw] : f.terms) {
                auto ws2 = ws;
                ws2.push_back(w);
                next.emplace_back(std::move(ws2), c * cw);
            }
        acc = std::move(next);
    }
    for (auto& [ws, c] : acc) t.add_term(ws, c);
    return t;
}

TensorElement as_tensor(const AlgebraElement& a) { return tensor_of({a}); }

TensorElement tensor_add(const TensorElement& a, const TensorElement& b) {
    if (a.desc != b.desc || a.arity != b.arity)
        throw std::invalid_argument("tensor mismatch");
    TensorElement out = a;
    for (const auto& [ws, c] : b.terms) out.add_term(ws, c);
    return out;
}

TensorElement tensor_scale(const TensorElement& a, const Rational& c) {
    TensorElement out(a.desc, a.arity);
    if (c == 0) return out;
    for (const auto& [ws, v] : a.terms) out.terms.emplace(ws, v * c);
    return out;
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
    if (a.desc != b.desc || a.arity != b.arity)
        throw std::invalid_argument("tensor mismatch");
    TensorElement out(a.desc, a.arity);
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            // slotwise products; distribute (each slot product may expand)
            std::vector<std::pair<std::vector<BasisWord>, Rational>> acc = {{{}, ca * cb}};
            bool dead = false;
            for (int s = 0; s < a.arity && !dead; ++s) {
                AlgebraElement pa(a.desc), pb(a.desc);
                pa.terms.emplace(wa[s], Rational(1));
                pb.terms.emplace(wb[s], Rational(1));
                AlgebraElement prod = mul(pa, pb);
                if (prod.terms.empty()) { dead = true; break; }
                std::vector<std::pair<std::vector<BasisWord>, Rational>> next;
                for (const auto& [ws, c] : acc)
                    for (const auto& [w, cw] : prod.terms) {
                        auto ws2 = ws;
                        ws2.push_back(w);
                        next.emplace_back(std::move(ws2), c * cw);
                    }
                acc = std::move(next);
            }
            if (dead) continue;
            for (auto& [ws, c] : acc) out.add_term(ws, c);
        }
    return out;
}

TensorElement tensor_antipode_slot(const TensorElement& t, int slot) {
    TensorElement out(t.desc, t.arity);
    for (const auto& [ws, c] : t.terms) {
        AlgebraElement e(t.desc);
        e.terms.emplace(ws[slot], Rational(1));
        AlgebraElement s = antipode(e);
        for (const auto& [w, cw] : s.terms) {
            auto ws2 = ws;
            ws2[slot] = w;
            out.add_term(ws2, c * cw);
        }
    }
    return out;
}

TensorElement tensor_swap(const TensorElement& t, int s1, int s2) {
    TensorElement out(t.desc, t.arity);
    for (const auto& [ws, c] : t.terms) {
        auto ws2 = ws;
        std::swap(ws2[s1], ws2[s2]);
        out.add_term(ws2, c);
    }
    return out;
}

int tensor_total_degree(const std::vector<BasisWord>& ws, const HopfDescriptor& desc) {
    int d = 0;
    for (const auto& w : ws) d += degree(desc, w);
    return d;
}

int tensor_homogeneous_degree(const TensorElement& t) {
    int deg = -2;
    for (const auto& [ws, c] : t.terms) {
        int d = tensor_total_degree(ws, t.desc);
        if (deg == -2) deg = d;
        else if (deg != d) return -1;
    }
    return deg == -2 ? 0 : deg;
}

namespace {

mpz_class binom(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

// Delta^{k-1} of a single basis word, streamed.
// TensorAlgebra: letters distributed order-preservingly, coefficient 1.
// EnvelopingNil2: exponents distributed with multinomial coefficients.
void coproduct_terms(const HopfDescriptor& desc, const BasisWord& w, int k,
                     const std::function<void(const std::vector<BasisWord>&, const Rational&)>& emit) {
    if (k == 1) {
        emit({w}, Rational(1));
        return;
    }
    if (desc.kind == HopfKind::TensorAlgebra) {
        size_t n = w.data.size();
        std::vector<int> assign(n, 0);
        while (true) {
            std::vector<BasisWord> slots(k);
            for (size_t p = 0; p < n; ++p) slots[assign[p]].data.push_back(w.data[p]);
            emit(slots, Rational(1));
            size_t pos = n;
            while (pos > 0 && assign[pos - 1] == k - 1) assign[--pos] = 0;
            if (pos == 0) break;
            ++assign[pos - 1];
        }
        return;
    }
    // distribute each exponent over k slots with multinomial weight
    int ngen = desc.dim_v + desc.z_count();
    std::vector<BasisWord> slots(k, unit_word(desc));
    std::function<void(int, Rational)> rec = [&](int g, Rational coef) {
        if (g == ngen) {
            emit(slots, coef);
            return;
        }
        int e = w.data[g];
        if (e == 0) { rec(g + 1, coef); return; }
        // compositions of e into k parts
        std::vector<int> comp(k, 0);
        std::function<void(int, int, Rational)> dist = [&](int slot, int rem, Rational c) {
            if (slot == k - 1) {
                comp[slot] = rem;
                for (int s = 0; s < k; ++s) slots[s].data[g] = comp[s];
                Rational cc = c; // remaining binomial(rem, rem) = 1
                rec(g + 1, coef * cc);
                for (int s = 0; s < k; ++s) slots[s].data[g] = 0;
                return;
            }
            for (int take = 0; take <= rem; ++take) {
                comp[slot] = take;
                dist(slot + 1, rem - take, c * Rational(binom(rem, take)));
            }
            comp[slot] = 0;
        };
        dist(0, e, Rational(1));
    };
    rec(0, Rational(1));
}

TensorElement coproduct_iter(const AlgebraElement& a, int k) {
    if (k < 0) throw std::invalid_argument("coproduct_iter: k must be >= 0 (use counit)");
    TensorElement out(a.desc, k + 1);
    for (const auto& [w, c] : a.terms) {
        Rational cc = c;
        coproduct_terms(a.desc, w, k + 1,
                       [&](const std::vector<BasisWord>& slots, const Rational& coef) {
                           out.add_term(slots, cc * coef);
                       });
    }
    return out;
}

AlgebraElement multiply_out(const TensorElement& t) {
    AlgebraElement out(t.desc);
    for (const auto& [ws, c] : t.terms) {
        AlgebraElement prod = unit(t.desc, c);
        for (const auto& w : ws) {
            AlgebraElement f(t.desc);
            f.terms.emplace(w, Rational(1));
            prod = mul(prod, f);
            if (prod.is_zero()) break;
        }
        out = add(out, prod);
    }
    return out;
}

// ---------------------------------------------------------------- JSON

namespace {

using nlohmann::json;

json desc_to_json(const HopfDescriptor& d) {
    return json{{"kind", d.kind == HopfKind::TensorAlgebra ? "tensor" : "nil2"},
                {"dim", d.dim_v},
                {"truncation", d.truncation}};
}

HopfDescriptor desc_from_json(const json& j) {
    HopfDescriptor d;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "tensor") d.kind = HopfKind::TensorAlgebra;
    else if (kind == "nil2") d.kind = HopfKind::EnvelopingNil2;
    else throw std::invalid_argument("unknown Hopf kind: " + kind);
    d.dim_v = j.at("dim").get<int>();
    d.truncation = j.at("truncation").get<int>();
    if (d.dim_v < 1 || d.truncation < 1) throw std::invalid_argument("bad descriptor");
    return d;
}

// tensor words as 1-based letter lists, nil2 words as {"x": [...], "z": [...]}
json word_to_json(const HopfDescriptor& d, const BasisWord& w) {
    if (d.kind == HopfKind::TensorAlgebra) {
        json a = json::array();
        for (int l : w.data) a.push_back(l + 1);
        return a;
    }
    json x = json::array(), z = json::array();
    for (int i = 0; i < d.dim_v; ++i) x.push_back(w.data[i]);
    for (int i = d.dim_v; i < (int)w.data.size(); ++i) z.push_back(w.data[i]);
    return json{{"x", x}, {"z", z}};
}

BasisWord word_from_json(const HopfDescriptor& d, const json& j) {
    BasisWord w;
    if (d.kind == HopfKind::TensorAlgebra) {
        for (const auto& l : j) {
            int v = l.get<int>();
            if (v < 1 || v > d.dim_v) throw std::invalid_argument("letter out of range");
            w.data.push_back(v - 1);
        }
        return w;
    }
    w = unit_word(d);
    auto x = j.at("x");
    auto z = j.at("z");
    if ((int)x.size() != d.dim_v || (int)z.size() != d.z_count())
        throw std::invalid_argument("bad nil2 word shape");
    for (int i = 0; i < d.dim_v; ++i) w.data[i] = x[i].get<int>();
    for (int i = 0; i < d.z_count(); ++i) w.data[d.dim_v + i] = z[i].get<int>();
    return w;
}

} // namespace

std::string to_json(const AlgebraElement& a, int indent) {
    json terms = json::array();
    for (const auto& [w, c] : a.terms)
        terms.push_back(json{{"coeff", rat_str(c)}, {"word", word_to_json(a.desc, w)}});
    json j{{"descriptor", desc_to_json(a.desc)}, {"terms", terms}};
    return j.dump(indent);
}

std::string to_json(const TensorElement& t, int indent) {
    json terms = json::array();
    for (const auto& [ws, c] : t.terms) {
        json words = json::array();
        for (const auto& w : ws) words.push_back(word_to_json(t.desc, w));
        terms.push_back(json{{"coeff", rat_str(c)}, {"words", words}});
    }
    json j{{"descriptor", desc_to_json(t.desc)}, {"arity", t.arity}, {"terms", terms}};
    return j.dump(indent);
}

AlgebraElement algebra_from_json(const std::string& text) {
    json j = json::parse(text);
    AlgebraElement a(desc_from_json(j.at("descriptor")));
    for (const auto& t : j.at("terms"))
        a.add_term(word_from_json(a.desc, t.at("word")),
                   rat_parse(t.at("coeff").get<std::string>()));
    return a;
}

TensorElement tensor_from_json(const std::string& text) {
    json j = json::parse(text);
    TensorElement t(desc_from_json(j.at("descriptor")), j.at("arity").get<int>());
    for (const auto& term : j.at("terms")) {
        std::vector<BasisWord> ws;
        for (const auto& wj : term.at("words")) ws.push_back(word_from_json(t.desc, wj));
        t.add_term(ws, rat_parse(term.at("coeff").get<std::string>()));
    }
    return t;
}

} // namespace hopfact
