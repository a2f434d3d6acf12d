#include "qsup/repr.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qsup {

// ---------------------------------------------------------------------------
// SparseMat
// ---------------------------------------------------------------------------
SparseMat SparseMat::identity(int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.r[i][i] = Scalar(1);
    return m;
}

void SparseMat::set(int i, int j, const Scalar& s) {
    if (s.is_zero())
        r[i].erase(j);
    else
        r[i][j] = s;
}

void SparseMat::add(int i, int j, const Scalar& s) {
    auto it = r[i].find(j);
    if (it == r[i].end()) {
        if (!s.is_zero())
            r[i][j] = s;
    } else {
        it->second = it->second + s;
        if (it->second.is_zero())
            r[i].erase(it);
    }
}

Scalar SparseMat::get(int i, int j) const {
    auto it = r[i].find(j);
    return it == r[i].end() ? Scalar() : it->second;
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
    if (cols != o.rows)
        throw std::invalid_argument("SparseMat: shape mismatch");
    SparseMat out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (const auto& [k, a] : r[i])
            for (const auto& [j, b] : o.r[k])
                out.add(i, j, a * b);
    return out;
}

SparseMat SparseMat::operator+(const SparseMat& o) const {
    if (rows != o.rows || cols != o.cols)
        throw std::invalid_argument("SparseMat: shape mismatch");
    SparseMat out = *this;
    for (int i = 0; i < rows; ++i)
        for (const auto& [j, b] : o.r[i])
            out.add(i, j, b);
    return out;
}

SparseMat SparseMat::operator-(const SparseMat& o) const { return *this + o.scaled(Scalar(-1)); }

SparseMat SparseMat::scaled(const Scalar& c) const {
    SparseMat out(rows, cols);
    if (c.is_zero())
        return out;
    for (int i = 0; i < rows; ++i)
        for (const auto& [j, a] : r[i])
            out.r[i][j] = a * c;
    return out;
}

bool SparseMat::is_zero() const {
    for (const auto& row : r)
        if (!row.empty())
            return false;
    return true;
}

bool SparseMat::operator==(const SparseMat& o) const {
    return rows == o.rows && cols == o.cols && r == o.r;
}

SparseMat kron(const SparseMat& a, const SparseMat& b) {
    SparseMat out(a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (const auto& [j, x] : a.r[i])
            for (int p = 0; p < b.rows; ++p)
                for (const auto& [q, y] : b.r[p])
                    out.r[i * b.rows + p][j * b.cols + q] = x * y;
    return out;
}

// ---------------------------------------------------------------------------
// The natural module
// ---------------------------------------------------------------------------
namespace {

// (eps_a, eps_a) in the supertrace form.
int eps_norm(const Diagram& D, int a) {
    return D.form_sign * (D.parities[a] ? -1 : 1);
}

Rep build_vector_rep(const Diagram& D, const std::vector<int>& odd_signs) {
    CartanData cd = cartan(D);
    int n = D.dim();
    Rep rep;
    rep.diagram = D;
    rep.dim = n;
    rep.rho = SparseMat(n, n);
    for (int a = 0; a < n; ++a) {
        Weight w = weight_zero(n);
        w[a] = 1;
        rep.basis_weights.push_back(w);
        rep.basis_parities.push_back(D.parities[a]);
        rep.rho.set(a, a, Scalar(D.parities[a] ? -1 : 1));
    }
    for (int i = 0; i < D.nodes(); ++i) {
        SparseMat Ei(n, n), Fi(n, n), Ki(n, n), Kii(n, n);
        // E_i F_i acts on v_i as x_i y_i, forced to (eps_i,eps_i) * d_i by the
        // commutation with the Cartan term; odd nodes carry a searched sign.
        int xi = eps_norm(D, i) * cd.d[i] * (D.node_parity(i) ? odd_signs[i] : 1);
        int yi = D.node_parity(i) ? odd_signs[i] : 1;
        Ei.set(i, i + 1, Scalar(xi));
        Fi.set(i + 1, i, Scalar(yi));
        Weight ai = simple_root(D, i);
        for (int a = 0; a < n; ++a) {
            int pairing = bform(D, ai, rep.basis_weights[a]);
            Ki.set(a, a, Scalar::qpow(pairing));
            Kii.set(a, a, Scalar::qpow(-pairing));
        }
        rep.E.push_back(std::move(Ei));
        rep.F.push_back(std::move(Fi));
        rep.K.push_back(std::move(Ki));
        rep.Kinv.push_back(std::move(Kii));
    }
    return rep;
}

}  // namespace

void verify_relations(const Rep& rep) {
    const Diagram& D = rep.diagram;
    CartanData cd = cartan(D);
    int n = D.nodes();
    SparseMat id = SparseMat::identity(rep.dim);
    auto fail = [](const std::string& what) {
        throw std::runtime_error("verify_relations: " + what);
    };
    if (!((rep.rho * rep.rho) == id))
        fail("rho^2 != 1");
    for (int i = 0; i < n; ++i) {
        if (!((rep.K[i] * rep.Kinv[i]) == id))
            fail("K K^{-1} != 1");
        Scalar se(D.node_parity(i) ? -1 : 1);
        if (!((rep.rho * rep.E[i]) == (rep.E[i] * rep.rho).scaled(se)))
            fail("rho E relation");
        if (!((rep.rho * rep.F[i]) == (rep.F[i] * rep.rho).scaled(se)))
            fail("rho F relation");
        if (!((rep.rho * rep.K[i]) == (rep.K[i] * rep.rho)))
            fail("rho K relation");
        if (D.node_parity(i)) {
            if (!(rep.E[i] * rep.E[i]).is_zero() || !(rep.F[i] * rep.F[i]).is_zero())
                fail("odd square");
        }
        for (int j = 0; j < n; ++j) {
            int pairing = bform(D, simple_root(D, i), simple_root(D, j));
            if (!((rep.K[i] * rep.E[j]) == (rep.E[j] * rep.K[i]).scaled(Scalar::qpow(pairing))))
                fail("K E relation");
            if (!((rep.K[i] * rep.F[j]) == (rep.F[j] * rep.K[i]).scaled(Scalar::qpow(-pairing))))
                fail("K F relation");
            Scalar koszul(D.node_parity(i) && D.node_parity(j) ? -1 : 1);
            SparseMat lhs = rep.E[i] * rep.F[j] - (rep.F[j] * rep.E[i]).scaled(koszul);
            if (i == j) {
                Scalar qi = Scalar::qpow(cd.d[i]);
                SparseMat cartr = (rep.K[i] - rep.Kinv[i]).scaled((qi - qi.inv()).inv());
                if (!(lhs == cartr))
                    fail("E F Cartan relation");
            } else if (!lhs.is_zero()) {
                fail("E F commutation");
            }
            if (j > i + 1) {
                if (!(rep.E[i] * rep.E[j] - (rep.E[j] * rep.E[i]).scaled(koszul)).is_zero())
                    fail("distant E commutation");
                if (!(rep.F[i] * rep.F[j] - (rep.F[j] * rep.F[i]).scaled(koszul)).is_zero())
                    fail("distant F commutation");
            }
        }
    }
    for (auto pattern : {SerrePattern::Even, SerrePattern::Super})
        for (const AlgElem& rel : serre_residual(D, pattern))
            if (!evaluate(rel, rep).is_zero())
                fail("Serre residual nonzero");
}

const Rep& vector_rep(const Diagram& D) {
    static std::map<Diagram, Rep> cache;
    auto it = cache.find(D);
    if (it != cache.end())
        return it->second;
    std::vector<int> odd_nodes;
    for (int i = 0; i < D.nodes(); ++i)
        if (D.node_parity(i))
            odd_nodes.push_back(i);
    int combos = 1 << odd_nodes.size();
    for (int mask = 0; mask < combos; ++mask) {
        std::vector<int> signs(D.nodes(), 1);
        for (size_t t = 0; t < odd_nodes.size(); ++t)
            if (mask & (1 << t))
                signs[odd_nodes[t]] = -1;
        Rep rep = build_vector_rep(D, signs);
        try {
            verify_relations(rep);
            verify_relations(tensor(rep, rep));
        } catch (const std::runtime_error&) {
            continue;
        }
        return cache.emplace(D, std::move(rep)).first->second;
    }
    throw std::logic_error("vector_rep: no consistent sign assignment");
}

Rep tensor(const Rep& r1, const Rep& r2) {
    if (r1.diagram != r2.diagram)
        throw std::invalid_argument("tensor: diagram mismatch");
    Rep rep;
    rep.diagram = r1.diagram;
    rep.dim = r1.dim * r2.dim;
    SparseMat id1 = SparseMat::identity(r1.dim), id2 = SparseMat::identity(r2.dim);
    rep.rho = kron(r1.rho, r2.rho);
    for (int i = 0; i < r1.diagram.nodes(); ++i) {
        // The parity twist enters only for odd generators (rho^{|i|}); with a
        // bare rho the mixed even/odd EF commutation fails on V ox V.
        bool odd = r1.diagram.node_parity(i) != 0;
        const SparseMat& tw1 = odd ? r1.rho : id1;
        rep.E.push_back(kron(r1.E[i], id2) + kron(tw1 * r1.K[i], r2.E[i]));
        rep.F.push_back(kron(tw1, r2.F[i]) + kron(r1.F[i], r2.Kinv[i]));
        rep.K.push_back(kron(r1.K[i], r2.K[i]));
        rep.Kinv.push_back(kron(r1.Kinv[i], r2.Kinv[i]));
    }
    for (int a = 0; a < r1.dim; ++a)
        for (int b = 0; b < r2.dim; ++b) {
            rep.basis_weights.push_back(weight_add(r1.basis_weights[a], r2.basis_weights[b]));
            rep.basis_parities.push_back(r1.basis_parities[a] ^ r2.basis_parities[b]);
        }
    return rep;
}

const Rep& tensor_power(const Diagram& D, int k) {
    if (k < 1)
        throw std::invalid_argument("tensor_power: k >= 1 required");
    static std::map<std::pair<Diagram, int>, Rep> cache;
    auto key = std::make_pair(D, k);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    if (k == 1)
        return cache.emplace(key, vector_rep(D)).first->second;
    Rep rep = tensor(tensor_power(D, k - 1), vector_rep(D));
    return cache.emplace(key, std::move(rep)).first->second;
}

SparseMat evaluate(const AlgElem& x, const Rep& rep) {
    if (x.diagram() != rep.diagram)
        throw std::invalid_argument("evaluate: diagram mismatch");
    SparseMat out(rep.dim, rep.dim);
    for (const auto& [m, c] : x.terms()) {
        SparseMat acc = SparseMat::identity(rep.dim);
        for (int f : m.fword)
            acc = acc * rep.F[f];
        if (m.rho)
            acc = acc * rep.rho;
        for (int i = 0; i < static_cast<int>(m.kvec.size()); ++i) {
            const SparseMat& g = m.kvec[i] > 0 ? rep.K[i] : rep.Kinv[i];
            for (int t = 0; t < std::abs(m.kvec[i]); ++t)
                acc = acc * g;
        }
        for (int e : m.eword)
            acc = acc * rep.E[e];
        out = out + acc.scaled(c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Echelon bases
// ---------------------------------------------------------------------------
std::vector<std::vector<int>> weight_words(const Weight& mu) {
    std::vector<int> coords = simple_root_coords(mu);
    std::vector<int> letters;
    for (int k = 0; k < static_cast<int>(coords.size()); ++k) {
        if (coords[k] < 0)
            throw std::invalid_argument("weight_words: weight not in the positive cone");
        letters.insert(letters.end(), coords[k], k);
    }
    std::vector<std::vector<int>> out;
    std::sort(letters.begin(), letters.end());
    do {
        out.push_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

namespace {

std::string cache_dir;

std::map<int, Scalar> flatten_word(const Diagram& D, const std::vector<int>& word, int sign,
                                   int k) {
    const Rep& rep = tensor_power(D, k);
    SparseMat acc = SparseMat::identity(rep.dim);
    for (int w : word)
        acc = acc * (sign > 0 ? rep.E[w] : rep.F[w]);
    std::map<int, Scalar> flat;
    for (int i = 0; i < acc.rows; ++i)
        for (const auto& [j, s] : acc.r[i])
            flat[i * acc.cols + j] = s;
    return flat;
}

// Reduce v by the reduced rows in-place; returns v.
void rref_reduce(std::map<int, Scalar>& v, const std::vector<std::map<int, Scalar>>& rows,
                 const std::vector<int>& pivots, std::vector<Scalar>* coeffs = nullptr) {
    for (size_t b = 0; b < rows.size(); ++b) {
        auto it = v.find(pivots[b]);
        if (it == v.end())
            continue;
        Scalar c = it->second;
        if (coeffs)
            (*coeffs)[b] = c;
        for (const auto& [j, s] : rows[b]) {
            auto jt = v.find(j);
            Scalar nv = (jt == v.end() ? Scalar() : jt->second) - c * s;
            if (nv.is_zero())
                v.erase(j);
            else
                v[j] = nv;
        }
    }
}

// Tries to certify a basis at tensor power k from the given candidate words.
// On success fills eb and returns true.
bool try_certify(EchelonBasis& eb, const std::vector<std::vector<int>>& candidates, int k,
                 long target) {
    eb.words.clear();
    eb.rref_rows.clear();
    eb.pivots.clear();
    eb.transform.clear();
    eb.k_used = k;
    for (const auto& w : candidates) {
        std::map<int, Scalar> v = flatten_word(eb.diagram, w, eb.sign, k);
        std::vector<Scalar> red(eb.rref_rows.size());
        rref_reduce(v, eb.rref_rows, eb.pivots, &red);
        if (v.empty())
            continue;
        int piv = v.begin()->first;
        Scalar lead = v.begin()->second;
        for (auto& [j, s] : v)
            s = s / lead;
        // Reduced row = (flat(w) - sum red_b * row_b) / lead in word terms.
        std::vector<Scalar> trow(eb.words.size() + 1);
        trow.back() = lead.inv();
        for (size_t b = 0; b < eb.rref_rows.size(); ++b)
            for (size_t j = 0; j < eb.transform[b].size(); ++j)
                trow[j] = trow[j] - red[b] * eb.transform[b][j] / lead;
        // Clear the new pivot from earlier rows to keep the system reduced.
        for (size_t b = 0; b < eb.rref_rows.size(); ++b) {
            auto it = eb.rref_rows[b].find(piv);
            if (it == eb.rref_rows[b].end())
                continue;
            Scalar c = it->second;
            for (const auto& [j, s] : v) {
                auto jt = eb.rref_rows[b].find(j);
                Scalar nv = (jt == eb.rref_rows[b].end() ? Scalar() : jt->second) - c * s;
                if (nv.is_zero())
                    eb.rref_rows[b].erase(j);
                else
                    eb.rref_rows[b][j] = nv;
            }
            eb.transform[b].resize(trow.size());
            for (size_t j = 0; j < trow.size(); ++j)
                eb.transform[b][j] = eb.transform[b][j] - c * trow[j];
        }
        eb.words.push_back(w);
        eb.pivots.push_back(piv);
        eb.rref_rows.push_back(std::move(v));
        eb.transform.push_back(std::move(trow));
        if (static_cast<long>(eb.words.size()) == target)
            break;
    }
    for (auto& t : eb.transform)
        t.resize(eb.words.size());
    return static_cast<long>(eb.words.size()) == target;
}

std::string cache_key(const Diagram& D, const Weight& mu, int sign) {
    std::ostringstream os;
    os << "ech_v1";
    for (int p : D.parities)
        os << p;
    os << (D.form_sign > 0 ? "_p_" : "_n_");
    for (int c : mu)
        os << (c < 0 ? "m" : "") << std::abs(c);
    os << (sign > 0 ? "_E" : "_F");
    return os.str();
}

bool load_cached(EchelonBasis& eb, long target) {
    if (cache_dir.empty())
        return false;
    std::ifstream in(cache_dir + "/" + cache_key(eb.diagram, eb.mu, eb.sign) + ".json");
    if (!in)
        return false;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("version") != 1)
            return false;
        if (diagram_from_json(j.at("diagram").dump()) != eb.diagram)
            return false;
        if (j.at("mu").get<Weight>() != eb.mu || j.at("sign").get<int>() != eb.sign)
            return false;
        int k = j.at("k").get<int>();
        auto words = j.at("words").get<std::vector<std::vector<int>>>();
        // Re-certify: the stored words must still have full rank.
        return try_certify(eb, words, k, target);
    } catch (...) {
        return false;
    }
}

void store_cached(const EchelonBasis& eb) {
    if (cache_dir.empty())
        return;
    nlohmann::json j;
    j["version"] = 1;
    j["diagram"] = nlohmann::json::parse(diagram_to_json(eb.diagram));
    j["mu"] = eb.mu;
    j["sign"] = eb.sign;
    j["k"] = eb.k_used;
    j["words"] = eb.words;
    std::ofstream out(cache_dir + "/" + cache_key(eb.diagram, eb.mu, eb.sign) + ".json");
    out << j.dump();
}

}  // namespace

namespace {
std::map<std::tuple<Diagram, Weight, int>, EchelonBasis>& echelon_memory_cache() {
    static std::map<std::tuple<Diagram, Weight, int>, EchelonBasis> cache;
    return cache;
}
}  // namespace

void set_echelon_cache_dir(const std::string& dir) { cache_dir = dir; }

void clear_echelon_memory_cache() { echelon_memory_cache().clear(); }

std::vector<Scalar> EchelonBasis::coords(const std::vector<int>& word) const {
    std::map<int, Scalar> v = flatten_word(diagram, word, sign, k_used);
    std::vector<Scalar> red(words.size());
    rref_reduce(v, rref_rows, pivots, &red);
    if (!v.empty())
        throw std::logic_error("EchelonBasis::coords: word outside the certified span");
    std::vector<Scalar> out(words.size());
    for (size_t b = 0; b < words.size(); ++b)
        for (size_t j = 0; j < words.size(); ++j)
            out[j] = out[j] + red[b] * transform[b][j];
    return out;
}

const EchelonBasis& echelon_basis(const Diagram& D, const Weight& mu, int sign, int k_max) {
    auto& cache = echelon_memory_cache();
    auto key = std::make_tuple(D, mu, sign);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    EchelonBasis eb;
    eb.diagram = D;
    eb.mu = mu;
    eb.sign = sign;
    long target = kostant_dim(D, mu);
    if (weight_is_zero(mu)) {
        eb.k_used = 1;
        eb.words.push_back({});
        // The empty word evaluates to the identity matrix.
        std::map<int, Scalar> v = flatten_word(D, {}, sign, 1);
        eb.pivots.push_back(v.begin()->first);
        eb.rref_rows.push_back(std::move(v));
        eb.transform.push_back({Scalar(1)});
        return cache.emplace(key, std::move(eb)).first->second;
    }
    if (load_cached(eb, target))
        return cache.emplace(key, std::move(eb)).first->second;
    std::vector<std::vector<int>> candidates = weight_words(mu);
    for (int k = 1; k <= k_max; ++k) {
        if (try_certify(eb, candidates, k, target)) {
            store_cached(eb);
            return cache.emplace(key, std::move(eb)).first->second;
        }
    }
    throw std::runtime_error("echelon_basis: oracle exhausted (raise the tensor-power bound)");
}

// ---------------------------------------------------------------------------
// Equality oracle
// ---------------------------------------------------------------------------
bool is_zero(const AlgElem& x, int k_max) {
    const Diagram& D = x.diagram();
    // Aggregate triangular tensor coordinates keyed by
    // (F-weight, F-basis index, rho, kvec, E-weight, E-basis index).
    using Key = std::tuple<Weight, size_t, int, std::vector<int>, Weight, size_t>;
    std::map<Key, Scalar> agg;
    std::map<std::pair<Weight, int>, std::map<std::vector<int>, std::vector<Scalar>>> coord_cache;
    auto word_coords = [&](const std::vector<int>& word, int sign,
                           const Weight& mu) -> const std::vector<Scalar>& {
        auto& per = coord_cache[{mu, sign}];
        auto it = per.find(word);
        if (it != per.end())
            return it->second;
        const EchelonBasis& eb = echelon_basis(D, mu, sign, k_max);
        return per.emplace(word, eb.coords(word)).first->second;
    };
    for (const auto& [m, c] : x.terms()) {
        Weight fmu = weight_zero(D.dim()), emu = weight_zero(D.dim());
        for (int f : m.fword)
            fmu = weight_add(fmu, simple_root(D, f));
        for (int e : m.eword)
            emu = weight_add(emu, simple_root(D, e));
        const std::vector<Scalar>& fc = word_coords(m.fword, -1, fmu);
        const std::vector<Scalar>& ec = word_coords(m.eword, +1, emu);
        for (size_t b = 0; b < fc.size(); ++b) {
            if (fc[b].is_zero())
                continue;
            for (size_t d = 0; d < ec.size(); ++d) {
                if (ec[d].is_zero())
                    continue;
                Key key{fmu, b, m.rho, m.kvec, emu, d};
                auto it = agg.find(key);
                if (it == agg.end()) {
                    agg.emplace(std::move(key), c * fc[b] * ec[d]);
                } else {
                    it->second = it->second + c * fc[b] * ec[d];
                    if (it->second.is_zero())
                        agg.erase(it);
                }
            }
        }
    }
    return agg.empty();
}

}  // namespace qsup
