#include "qsup/superalgebra.hpp"

#include <cassert>
#include <cctype>
#include <deque>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qsup {

namespace {

// Cached pairings (alpha_i, alpha_j) and node parities per diagram.
struct PairData {
    std::vector<std::vector<int>> pair;  // (alpha_i, alpha_j)
    std::vector<int> parity;
    std::vector<int> di;  // symmetrizers d_i (q_i = q^{d_i})
};

const PairData& pair_data(const Diagram& D) {
    static std::map<Diagram, PairData> cache;
    auto it = cache.find(D);
    if (it != cache.end())
        return it->second;
    PairData pd;
    int n = D.nodes();
    pd.pair.assign(n, std::vector<int>(n, 0));
    pd.parity.resize(n);
    for (int i = 0; i < n; ++i) {
        pd.parity[i] = D.node_parity(i);
        for (int j = 0; j < n; ++j)
            pd.pair[i][j] = bform(D, simple_root(D, i), simple_root(D, j));
    }
    CartanData cd = cartan(D);
    pd.di = cd.d;
    return cache.emplace(D, std::move(pd)).first->second;
}

// ---------------------------------------------------------------------------
// Straightening. A token sequence mixes the four letter classes; repeatedly
// resolving the leftmost out-of-order adjacent pair terminates because every
// rule strictly decreases the number of class inversions, except the EF rule
// whose Cartan branch drops two tokens.
// ---------------------------------------------------------------------------
enum class Tok { F, R, K, E };

struct Token {
    Tok type;
    int idx = 0;  // node index (F, K, E)
    int exp = 0;  // K exponent
};

int tok_class(Tok t) {
    switch (t) {
        case Tok::F: return 0;
        case Tok::R: return 1;
        case Tok::K: return 2;
        case Tok::E: return 3;
    }
    return 0;
}

struct Branch {
    std::vector<Token> toks;
    Scalar coeff;
};

void collect_normal(const Diagram& D, const std::vector<Token>& toks, const Scalar& coeff,
                    std::map<Monomial, Scalar>& out) {
    const PairData& pd = pair_data(D);
    Monomial m;
    m.kvec.assign(D.nodes(), 0);
    for (const Token& t : toks) {
        switch (t.type) {
            case Tok::F: m.fword.push_back(t.idx); break;
            case Tok::R: m.rho ^= 1; break;
            case Tok::K: m.kvec[t.idx] += t.exp; break;
            case Tok::E: m.eword.push_back(t.idx); break;
        }
    }
    // Odd generators square to zero.
    for (size_t i = 0; i + 1 < m.fword.size(); ++i)
        if (m.fword[i] == m.fword[i + 1] && pd.parity[m.fword[i]])
            return;
    for (size_t i = 0; i + 1 < m.eword.size(); ++i)
        if (m.eword[i] == m.eword[i + 1] && pd.parity[m.eword[i]])
            return;
    auto it = out.find(m);
    if (it == out.end()) {
        if (!coeff.is_zero())
            out.emplace(std::move(m), coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero())
            out.erase(it);
    }
}

void straighten(const Diagram& D, std::vector<Token> toks, Scalar coeff,
                std::map<Monomial, Scalar>& out) {
    const PairData& pd = pair_data(D);
    std::deque<Branch> work;
    work.push_back({std::move(toks), std::move(coeff)});
    while (!work.empty()) {
        Branch br = std::move(work.front());
        work.pop_front();
        auto& ts = br.toks;
        bool reduced = false;
        for (size_t p = 0; p + 1 < ts.size(); ++p) {
            const Token L = ts[p];
            const Token R = ts[p + 1];
            int cl = tok_class(L.type), cr = tok_class(R.type);
            if (cl <= cr)
                continue;
            reduced = true;
            if (L.type == Tok::E && R.type == Tok::F) {
                int i = L.idx, j = R.idx;
                // E_i F_j = (-1)^{|i||j|} F_j E_i + delta_ij (K_i - K_i^{-1})/(q_i - q_i^{-1})
                Branch swapped = br;
                swapped.toks[p] = R;
                swapped.toks[p + 1] = L;
                if (pd.parity[i] && pd.parity[j])
                    swapped.coeff = -swapped.coeff;
                work.push_back(std::move(swapped));
                if (i == j) {
                    Scalar qi = Scalar::qpow(pd.di[i]);
                    Scalar denom = qi - qi.inv();
                    for (int sgn : {+1, -1}) {
                        Branch cart;
                        cart.toks.assign(ts.begin(), ts.begin() + p);
                        cart.toks.push_back(Token{Tok::K, i, sgn});
                        cart.toks.insert(cart.toks.end(), ts.begin() + p + 2, ts.end());
                        cart.coeff = br.coeff * Scalar(sgn) / denom;
                        work.push_back(std::move(cart));
                    }
                }
            } else if (L.type == Tok::E && R.type == Tok::K) {
                // E_j K_i^e = q^{-e (alpha_i, alpha_j)} K_i^e E_j
                br.coeff = br.coeff * Scalar::vpow(-2 * R.exp * pd.pair[R.idx][L.idx]);
                ts[p] = R;
                ts[p + 1] = L;
                work.push_back(std::move(br));
            } else if (L.type == Tok::K && R.type == Tok::F) {
                // K_i^e F_j = q^{-e (alpha_i, alpha_j)} F_j K_i^e
                br.coeff = br.coeff * Scalar::vpow(-2 * L.exp * pd.pair[L.idx][R.idx]);
                ts[p] = R;
                ts[p + 1] = L;
                work.push_back(std::move(br));
            } else if (L.type == Tok::E && R.type == Tok::R) {
                // E_i rho = (-1)^{|i|} rho E_i
                if (pd.parity[L.idx])
                    br.coeff = -br.coeff;
                ts[p] = R;
                ts[p + 1] = L;
                work.push_back(std::move(br));
            } else if (L.type == Tok::R && R.type == Tok::F) {
                // rho F_j = (-1)^{|j|} F_j rho
                if (pd.parity[R.idx])
                    br.coeff = -br.coeff;
                ts[p] = R;
                ts[p + 1] = L;
                work.push_back(std::move(br));
            } else if (L.type == Tok::K && R.type == Tok::R) {
                ts[p] = R;
                ts[p + 1] = L;
                work.push_back(std::move(br));
            } else {
                throw std::logic_error("straighten: unhandled token pair");
            }
            break;
        }
        if (!reduced)
            collect_normal(D, ts, br.coeff, out);
    }
}

std::vector<Token> monomial_tokens(const Monomial& m) {
    std::vector<Token> ts;
    for (int f : m.fword)
        ts.push_back({Tok::F, f, 0});
    if (m.rho)
        ts.push_back({Tok::R, 0, 0});
    for (int i = 0; i < static_cast<int>(m.kvec.size()); ++i)
        if (m.kvec[i] != 0)
            ts.push_back({Tok::K, i, m.kvec[i]});
    for (int e : m.eword)
        ts.push_back({Tok::E, e, 0});
    return ts;
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgElem basics
// ---------------------------------------------------------------------------
void AlgElem::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

AlgElem AlgElem::unit(const Diagram& D) { return scalar(D, Scalar(1)); }

AlgElem AlgElem::scalar(const Diagram& D, const Scalar& c) {
    AlgElem x(D);
    Monomial m;
    m.kvec.assign(D.nodes(), 0);
    x.add_term(m, c);
    return x;
}

AlgElem AlgElem::gen_E(const Diagram& D, int i) {
    AlgElem x(D);
    Monomial m;
    m.kvec.assign(D.nodes(), 0);
    m.eword.push_back(i);
    x.add_term(m, Scalar(1));
    return x;
}

AlgElem AlgElem::gen_F(const Diagram& D, int i) {
    AlgElem x(D);
    Monomial m;
    m.kvec.assign(D.nodes(), 0);
    m.fword.push_back(i);
    x.add_term(m, Scalar(1));
    return x;
}

AlgElem AlgElem::gen_K(const Diagram& D, int i, int exp) {
    AlgElem x(D);
    Monomial m;
    m.kvec.assign(D.nodes(), 0);
    m.kvec.at(i) = exp;
    x.add_term(m, Scalar(1));
    return x;
}

AlgElem AlgElem::gen_Kmono(const Diagram& D, const std::vector<int>& kvec) {
    if (static_cast<int>(kvec.size()) != D.nodes())
        throw std::invalid_argument("gen_Kmono: size mismatch");
    AlgElem x(D);
    Monomial m;
    m.kvec = kvec;
    x.add_term(m, Scalar(1));
    return x;
}

AlgElem AlgElem::gen_rho(const Diagram& D) {
    AlgElem x(D);
    Monomial m;
    m.kvec.assign(D.nodes(), 0);
    m.rho = 1;
    x.add_term(m, Scalar(1));
    return x;
}

AlgElem AlgElem::operator+(const AlgElem& o) const {
    if (diagram_ != o.diagram_)
        throw std::invalid_argument("AlgElem: diagram mismatch");
    AlgElem r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

AlgElem AlgElem::operator-(const AlgElem& o) const { return *this + (-o); }

AlgElem AlgElem::operator-() const {
    AlgElem r(diagram_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

AlgElem AlgElem::scaled(const Scalar& c) const {
    AlgElem r(diagram_);
    if (c.is_zero())
        return r;
    for (const auto& [m, co] : terms_)
        r.terms_.emplace(m, co * c);
    return r;
}

AlgElem AlgElem::operator*(const AlgElem& o) const {
    if (diagram_ != o.diagram_)
        throw std::invalid_argument("AlgElem: diagram mismatch");
    std::map<Monomial, Scalar> out;
    for (const auto& [mx, cx] : terms_) {
        std::vector<Token> base = monomial_tokens(mx);
        for (const auto& [my, cy] : o.terms_) {
            std::vector<Token> ts = base;
            std::vector<Token> right = monomial_tokens(my);
            ts.insert(ts.end(), right.begin(), right.end());
            straighten(diagram_, std::move(ts), cx * cy, out);
        }
    }
    AlgElem r(diagram_);
    r.terms_ = std::move(out);
    return r;
}

AlgElem AlgElem::power(int k) const {
    if (k < 0)
        throw std::invalid_argument("AlgElem::power: negative exponent");
    AlgElem r = unit(diagram_);
    for (int t = 0; t < k; ++t)
        r = r * *this;
    return r;
}

// ---------------------------------------------------------------------------
// Grading
// ---------------------------------------------------------------------------
Weight monomial_weight(const Diagram& D, const Monomial& m) {
    Weight w = weight_zero(D.dim());
    for (int e : m.eword)
        w = weight_add(w, simple_root(D, e));
    for (int f : m.fword)
        w = weight_sub(w, simple_root(D, f));
    return w;
}

int monomial_parity(const Diagram& D, const Monomial& m) {
    int p = 0;
    for (int e : m.eword)
        p ^= D.node_parity(e);
    for (int f : m.fword)
        p ^= D.node_parity(f);
    return p;
}

std::vector<GradedComponent> weight_parity(const AlgElem& x) {
    std::map<std::pair<Weight, int>, AlgElem> comps;
    for (const auto& [m, c] : x.terms()) {
        auto key = std::make_pair(monomial_weight(x.diagram(), m), monomial_parity(x.diagram(), m));
        auto it = comps.find(key);
        if (it == comps.end())
            it = comps.emplace(key, AlgElem(x.diagram())).first;
        it->second.add_term(m, c);
    }
    std::vector<GradedComponent> out;
    for (auto& [key, comp] : comps)
        out.push_back({key.first, key.second, std::move(comp)});
    return out;
}

AlgElem weight_component(const AlgElem& x, const Weight& mu) {
    AlgElem r(x.diagram());
    for (const auto& [m, c] : x.terms())
        if (monomial_weight(x.diagram(), m) == mu)
            r.add_term(m, c);
    return r;
}

// ---------------------------------------------------------------------------
// Serre relation elements
// ---------------------------------------------------------------------------
namespace {

// x^2 y - [2]_i x y x + y x^2 for an even node i adjacent to j.
AlgElem even_serre(const Diagram& D, const AlgElem& xi, const AlgElem& xj, int i) {
    Scalar two_i = qint(2, cartan(D).d[i]);
    return xi * xi * xj - (xi * xj * xi).scaled(two_i) + xj * xi * xi;
}

// S_{t1,t2}(x1, x2, x3) for the super Serre relation centered on an odd node;
// t1, t2 are the parities of the outer nodes.
AlgElem super_serre(const AlgElem& x1, const AlgElem& x2, const AlgElem& x3, int t1, int t2) {
    Scalar qpq = Scalar::qpow(1) + Scalar::qpow(-1);
    auto sgn = [](int s) { return s % 2 ? Scalar(-1) : Scalar(1); };
    AlgElem r = (x2 * x3 * x1 * x2).scaled(qpq);
    r = r - (x2 * x3 * x2 * x1).scaled(sgn(t1));
    r = r - (x1 * x2 * x3 * x2).scaled(sgn(t1 + t1 * t2));
    r = r - (x2 * x1 * x2 * x3).scaled(sgn(t1 * t2 + t2));
    r = r - (x3 * x2 * x1 * x2).scaled(sgn(t2));
    return r;
}

}  // namespace

std::vector<AlgElem> serre_residual(const Diagram& D, SerrePattern pattern) {
    std::vector<AlgElem> out;
    int n = D.nodes();
    if (pattern == SerrePattern::Even) {
        for (int i = 0; i < n; ++i) {
            if (D.node_parity(i))
                continue;
            for (int j : {i - 1, i + 1}) {
                if (j < 0 || j >= n)
                    continue;
                out.push_back(even_serre(D, AlgElem::gen_E(D, i), AlgElem::gen_E(D, j), i));
                out.push_back(even_serre(D, AlgElem::gen_F(D, i), AlgElem::gen_F(D, j), i));
            }
        }
    } else {
        for (int j = 1; j + 1 < n; ++j) {
            if (!D.node_parity(j))
                continue;
            int t1 = D.node_parity(j - 1), t2 = D.node_parity(j + 1);
            out.push_back(super_serre(AlgElem::gen_E(D, j - 1), AlgElem::gen_E(D, j),
                                      AlgElem::gen_E(D, j + 1), t1, t2));
            out.push_back(super_serre(AlgElem::gen_F(D, j - 1), AlgElem::gen_F(D, j),
                                      AlgElem::gen_F(D, j + 1), t1, t2));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Operators
// ---------------------------------------------------------------------------
AlgElem apply_psi(const AlgElem& x) {
    AlgElem r(x.diagram());
    for (const auto& [m, c] : x.terms()) {
        Monomial im = m;
        for (int& e : im.kvec)
            e = -e;
        r.add_term(im, c.bar());
    }
    return r;
}

// Shared reversal core for the two anti-involutions.  `graded` selects the
// convention: plain reversal sends K_i to (-1)^{|i|} K_i^{-1}, while graded
// reversal inserts Koszul signs ((-1)^{t(t-1)/2} for a word with t odd
// letters; rho and the K's are even) and sends K_i to K_i^{-1} unsigned.
// Each pairing is forced by compatibility with the EF commutation relation.
static AlgElem sigma_impl(const AlgElem& x, bool graded) {
    const Diagram& D = x.diagram();
    AlgElem r(D);
    for (const auto& [m, c] : x.terms()) {
        // Reverse the product and substitute generator images; the result
        // needs restraightening since E-letters land left of F-letters.
        std::vector<Token> ts;
        int rsign = 0;
        if (graded) {
            int odd = 0;
            for (int a : m.fword)
                odd += D.node_parity(a);
            for (int a : m.eword)
                odd += D.node_parity(a);
            rsign = (odd * (odd - 1) / 2) & 1;
        }
        for (auto it = m.eword.rbegin(); it != m.eword.rend(); ++it)
            ts.push_back({Tok::E, *it, 0});
        int ksign = 0;
        for (int i = 0; i < D.nodes(); ++i)
            if (m.kvec[i] != 0) {
                ts.push_back({Tok::K, i, -m.kvec[i]});
                if (!graded && D.node_parity(i))
                    ksign ^= (m.kvec[i] & 1);
            }
        if (m.rho)
            ts.push_back({Tok::R, 0, 0});
        for (auto it = m.fword.rbegin(); it != m.fword.rend(); ++it)
            ts.push_back({Tok::F, *it, 0});
        std::map<Monomial, Scalar> out;
        straighten(D, std::move(ts), (ksign ^ rsign) ? -c : c, out);
        for (const auto& [mm, cc] : out)
            r.add_term(mm, cc);
    }
    return r;
}

AlgElem apply_sigma(const AlgElem& x) { return sigma_impl(x, false); }

AlgElem apply_sigma_graded(const AlgElem& x) { return sigma_impl(x, true); }

AlgElem apply_tau(const AlgElem& x, const SatakeDiagram& I) {
    const Diagram& D = x.diagram();
    if (static_cast<int>(D.parities.size()) != I.diagram.dim())
        throw std::invalid_argument("apply_tau: size mismatch");
    for (int i = 0; i < D.nodes(); ++i) {
        if (D.node_parity(i) != D.node_parity(I.tau(i)))
            throw std::invalid_argument("apply_tau: diagram is not tau-symmetric");
        if (D.node_parity(i) && I.tau(i) == i)
            throw std::invalid_argument("apply_tau: isotropic node fixed by the flip");
    }
    AlgElem r(D);
    for (const auto& [m, c] : x.terms()) {
        Monomial im;
        im.rho = m.rho;
        im.kvec.assign(D.nodes(), 0);
        int sign = 0;
        for (int f : m.fword)
            im.fword.push_back(I.tau(f));
        for (int e : m.eword) {
            // E_i -> (-1)^{|i|} E_{tau(i)}: the sign compensates the
            // antisymmetry d_{tau(i)} = -d_i of the isotropic symmetrizer
            // entries, so the EF commutation relation is preserved.
            im.eword.push_back(I.tau(e));
            sign ^= D.node_parity(e);
        }
        for (int i = 0; i < D.nodes(); ++i)
            im.kvec[I.tau(i)] = m.kvec[i];
        r.add_term(im, sign ? -c : c);
    }
    return r;
}

AlgElem apply_rescale(const AlgElem& x, const std::vector<Scalar>& a) {
    const Diagram& D = x.diagram();
    if (static_cast<int>(a.size()) != D.nodes())
        throw std::invalid_argument("apply_rescale: size mismatch");
    std::vector<Scalar> root(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        root[i] = scalar_sqrt(a[i]);
    AlgElem r(D);
    for (const auto& [m, c] : x.terms()) {
        Scalar factor(1);
        for (int e : m.eword)
            factor = factor * root[e];
        for (int f : m.fword)
            factor = factor / root[f];
        r.add_term(m, c * factor);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Text format:  "F[-1]F[0] rho K[-1]^2 E[1] * (v^2 - 1)/(v)" with terms
// joined by " + "; node labels are the symmetric display labels.
// ---------------------------------------------------------------------------
namespace {

std::string bracket_label(const Diagram& D, int i) { return "[" + node_label(D, i) + "]"; }

std::string monomial_text(const Diagram& D, const Monomial& m) {
    std::ostringstream os;
    bool any = false;
    auto sep = [&] {
        if (any)
            os << ' ';
        any = true;
    };
    if (!m.fword.empty()) {
        sep();
        for (int f : m.fword)
            os << 'F' << bracket_label(D, f);
    }
    if (m.rho) {
        sep();
        os << "rho";
    }
    for (int i = 0; i < D.nodes(); ++i)
        if (m.kvec[i] != 0) {
            sep();
            os << 'K' << bracket_label(D, i);
            if (m.kvec[i] != 1)
                os << '^' << m.kvec[i];
        }
    if (!m.eword.empty()) {
        sep();
        for (int e : m.eword)
            os << 'E' << bracket_label(D, e);
    }
    if (!any)
        os << '1';
    return os.str();
}

// Parses a node label like "-1" or "3/2" into twice its value.
int parse_twice_label(const std::string& s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos)
        return 2 * std::stoi(s);
    if (s.substr(slash + 1) != "2")
        throw std::invalid_argument("bad node label: " + s);
    return std::stoi(s.substr(0, slash));
}

}  // namespace

std::string AlgElem::to_text() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << monomial_text(diagram_, m) << " * (" << c.to_string() << ")";
    }
    return os.str();
}

AlgElem elem_from_text(const Diagram& D, const std::string& text) {
    AlgElem r(D);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip_ws();
    if (text.compare(pos, 1, "0") == 0 && pos + 1 >= text.size())
        return r;
    while (pos < text.size()) {
        std::vector<Token> toks;
        bool any_letter = false;
        Scalar coeff(1);
        bool saw_coeff = false;
        while (pos < text.size()) {
            skip_ws();
            if (pos >= text.size())
                break;
            char ch = text[pos];
            if (ch == '+' && !saw_coeff && !any_letter) {
                throw std::invalid_argument("elem_from_text: empty term");
            }
            if (ch == '+' || (saw_coeff && ch != '+')) {
                break;
            }
            if (ch == '*') {
                ++pos;
                skip_ws();
                // Coefficient runs to the end of the term: scan to a " + "
                // separator at depth zero.
                int depth = 0;
                size_t start = pos;
                while (pos < text.size()) {
                    char c2 = text[pos];
                    if (c2 == '(')
                        ++depth;
                    else if (c2 == ')')
                        --depth;
                    else if (c2 == '+' && depth == 0)
                        break;
                    ++pos;
                }
                coeff = parse_scalar(text.substr(start, pos - start));
                saw_coeff = true;
                continue;
            }
            if (ch == '1' && !any_letter) {
                ++pos;
                any_letter = true;
                continue;
            }
            if (text.compare(pos, 3, "rho") == 0) {
                toks.push_back({Tok::R, 0, 0});
                pos += 3;
                any_letter = true;
                continue;
            }
            if (ch == 'F' || ch == 'K' || ch == 'E') {
                ++pos;
                if (pos >= text.size() || text[pos] != '[')
                    throw std::invalid_argument("elem_from_text: expected '['");
                size_t close = text.find(']', pos);
                if (close == std::string::npos)
                    throw std::invalid_argument("elem_from_text: unclosed '['");
                int node = node_from_double_label(D, parse_twice_label(text.substr(pos + 1, close - pos - 1)));
                if (node < 0)
                    throw std::invalid_argument("elem_from_text: label out of range");
                pos = close + 1;
                int exp = 1;
                if (ch == 'K' && pos < text.size() && text[pos] == '^') {
                    ++pos;
                    size_t len = 0;
                    exp = std::stoi(text.substr(pos), &len);
                    pos += len;
                }
                if (ch == 'F')
                    toks.push_back({Tok::F, node, 0});
                else if (ch == 'E')
                    toks.push_back({Tok::E, node, 0});
                else
                    toks.push_back({Tok::K, node, exp});
                any_letter = true;
                continue;
            }
            throw std::invalid_argument(std::string("elem_from_text: unexpected '") + ch + "'");
        }
        if (!any_letter)
            throw std::invalid_argument("elem_from_text: empty term");
        // Straighten so arbitrary letter orders are accepted, not just
        // normal forms.
        std::map<Monomial, Scalar> out;
        straighten(D, std::move(toks), coeff, out);
        for (const auto& [mm, cc] : out)
            r.add_term(mm, cc);
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != '+')
                throw std::invalid_argument("elem_from_text: expected '+'");
            ++pos;
        }
    }
    return r;
}

std::string AlgElem::to_json() const {
    nlohmann::json j;
    j["diagram"] = nlohmann::json::parse(diagram_to_json(diagram_));
    j["terms"] = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json t;
        t["f"] = m.fword;
        t["rho"] = m.rho;
        t["k"] = m.kvec;
        t["e"] = m.eword;
        t["coeff"] = c.to_string();
        j["terms"].push_back(std::move(t));
    }
    return j.dump();
}

AlgElem elem_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Diagram D = diagram_from_json(j.at("diagram").dump());
    AlgElem r(D);
    for (const auto& t : j.at("terms")) {
        Monomial m;
        m.fword = t.at("f").get<std::vector<int>>();
        m.rho = t.at("rho").get<int>();
        m.kvec = t.at("k").get<std::vector<int>>();
        m.eword = t.at("e").get<std::vector<int>>();
        if (static_cast<int>(m.kvec.size()) != D.nodes())
            throw std::invalid_argument("elem_from_json: kvec size mismatch");
        r.add_term(m, parse_scalar(t.at("coeff").get<std::string>()));
    }
    return r;
}

}  // namespace qsup
