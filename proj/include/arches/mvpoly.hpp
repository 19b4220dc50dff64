#pragma once

// Sparse multivariate polynomials over Q(w).

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arches/exact.hpp"
#include "arches/linalg.hpp"

namespace arches {

class VarTable {
public:
    explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (names_[i] == names_[j]) throw Error(ErrorKind::InvalidSpec, "duplicate variable " + names_[i]);
    }

    /// prefix1 .. prefixN
    static std::shared_ptr<const VarTable> numbered(const std::string& prefix, std::size_t count) {
        std::vector<std::string> v;
        for (std::size_t i = 1; i <= count; ++i) v.push_back(prefix + std::to_string(i));
        return std::make_shared<const VarTable>(std::move(v));
    }

    std::size_t arity() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    std::optional<std::size_t> find(const std::string& n) const {
        auto it = std::find(names_.begin(), names_.end(), n);
        if (it == names_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - names_.begin());
    }

    std::size_t index_of(const std::string& n) const {
        auto i = find(n);
        if (!i) throw Error(ErrorKind::UnknownVariable, "no variable named " + n);
        return *i;
    }

private:
    std::vector<std::string> names_;
};

using TablePtr = std::shared_ptr<const VarTable>;
using Exponent = std::vector<int>;

struct Degrees {
    std::optional<int> total; ///< nullopt for the zero polynomial ("minus infinity")
    std::vector<int> partial; ///< -1 entries for the zero polynomial
};

class MultiPoly {
public:
    explicit MultiPoly(TablePtr table) : table_(std::move(table)) {}

    static MultiPoly constant(TablePtr table, const CycloNum& c) {
        MultiPoly p(std::move(table));
        p.add_term(Exponent(p.arity(), 0), c);
        return p;
    }

    static MultiPoly variable(TablePtr table, std::size_t index) {
        MultiPoly p(std::move(table));
        Exponent e(p.arity(), 0);
        e.at(index) = 1;
        p.add_term(e, CycloNum(1));
        return p;
    }

    static MultiPoly variable(const TablePtr& table, const std::string& name) {
        return variable(table, table->index_of(name));
    }

    /// c0 * var_i + c1 * var_j
    static MultiPoly linear(TablePtr table, std::size_t i, const CycloNum& ci, std::size_t j, const CycloNum& cj) {
        MultiPoly p(std::move(table));
        Exponent e(p.arity(), 0);
        e[i] = 1;
        p.add_term(e, ci);
        e[i] = 0;
        e[j] += 1;
        p.add_term(e, cj);
        return p;
    }

    const TablePtr& table() const noexcept { return table_; }
    std::size_t arity() const noexcept { return table_->arity(); }
    const std::map<Exponent, CycloNum>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    void add_term(const Exponent& e, const CycloNum& c) {
        if (e.size() != arity()) throw Error(ErrorKind::InconsistentSize, "exponent arity mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    CycloNum coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? CycloNum(0) : it->second;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_table(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_table(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MultiPoly& operator*=(const CycloNum& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const CycloNum& s) { return a *= s; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_table(b);
        MultiPoly r(a.table_);
        Exponent e(a.arity());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.table_->names() == b.table_->names() && a.terms_ == b.terms_;
    }

    /// Evaluation at a point given in table order.
    CycloNum eval(std::span<const CycloNum> point) const {
        if (point.size() != arity()) throw Error(ErrorKind::MissingVariable, "point has wrong arity");
        std::vector<std::vector<CycloNum>> powers(arity());
        for (std::size_t v = 0; v < arity(); ++v) powers[v].push_back(CycloNum(1));
        CycloNum sum;
        for (const auto& [e, c] : terms_) {
            CycloNum t = c;
            for (std::size_t v = 0; v < arity(); ++v) {
                if (e[v] == 0) continue;
                auto& pw = powers[v];
                while (static_cast<int>(pw.size()) <= e[v]) pw.push_back(pw.back() * point[v]);
                t *= pw[e[v]];
            }
            sum += t;
        }
        return sum;
    }

    CycloNum eval(const std::map<std::string, CycloNum>& point) const {
        std::vector<CycloNum> p(arity());
        for (std::size_t v = 0; v < arity(); ++v) {
            auto it = point.find(table_->name(v));
            if (it == point.end()) {
                if (depends_on(v)) throw Error(ErrorKind::MissingVariable, "no value for " + table_->name(v));
                continue;
            }
            p[v] = it->second;
        }
        return eval(p);
    }

    bool depends_on(std::size_t v) const {
        return std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first[v] != 0; });
    }

    /// var := value.  The table is kept; the variable simply no longer occurs.
    MultiPoly specialize(std::size_t var, const CycloNum& value) const {
        if (var >= arity()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
        MultiPoly r(table_);
        std::vector<CycloNum> pw{CycloNum(1)};
        for (const auto& [e, c] : terms_) {
            while (static_cast<int>(pw.size()) <= e[var]) pw.push_back(pw.back() * value);
            Exponent f = e;
            f[var] = 0;
            r.add_term(f, c * pw[e[var]]);
        }
        return r;
    }

    MultiPoly specialize(const std::string& var, const CycloNum& value) const {
        return specialize(table_->index_of(var), value);
    }

    /// var := scale * other (exponents merge into `other`).
    MultiPoly substitute(std::size_t var, std::size_t other, const CycloNum& scale = CycloNum(1)) const {
        if (var >= arity() || other >= arity()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
        if (var == other) return scale == CycloNum(1) ? *this : specialize_scale(var, scale);
        MultiPoly r(table_);
        std::vector<CycloNum> pw{CycloNum(1)};
        for (const auto& [e, c] : terms_) {
            while (static_cast<int>(pw.size()) <= e[var]) pw.push_back(pw.back() * scale);
            Exponent f = e;
            f[other] += f[var];
            f[var] = 0;
            r.add_term(f, c * pw[e[var]]);
        }
        return r;
    }

    MultiPoly substitute(const std::string& var, const std::string& other, const CycloNum& scale = CycloNum(1)) const {
        return substitute(table_->index_of(var), table_->index_of(other), scale);
    }

    /// Exchange two variables.
    MultiPoly swapped(std::size_t i, std::size_t j) const {
        MultiPoly r(table_);
        for (const auto& [e, c] : terms_) {
            Exponent f = e;
            std::swap(f[i], f[j]);
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

    Degrees degrees() const {
        Degrees d;
        d.partial.assign(arity(), is_zero() ? -1 : 0);
        for (const auto& [e, c] : terms_) {
            int tot = 0;
            for (std::size_t v = 0; v < arity(); ++v) {
                d.partial[v] = std::max(d.partial[v], e[v]);
                tot += e[v];
            }
            d.total = std::max(d.total.value_or(0), tot);
        }
        return d;
    }

    /// True iff every term has total degree d.
    bool is_homogeneous(int d) const {
        return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
            int s = 0;
            for (int x : t.first) s += x;
            return s == d;
        });
    }

    /// Invariance under every adjacent transposition of the listed variables.
    bool is_symmetric(std::span<const std::size_t> vars) const {
        for (std::size_t k = 0; k + 1 < vars.size(); ++k) {
            for (const auto& [e, c] : terms_) {
                Exponent f = e;
                std::swap(f[vars[k]], f[vars[k + 1]]);
                auto it = terms_.find(f);
                if (it == terms_.end() || it->second != c) return false;
            }
        }
        return true;
    }

    bool is_symmetric(const std::vector<std::string>& names) const {
        std::vector<std::size_t> idx;
        for (const auto& n : names) idx.push_back(table_->index_of(n));
        return is_symmetric(idx);
    }

    /// Exact division by (ci * var_i + cj * var_j), ci != 0; nullopt when the
    /// remainder is nonzero.
    std::optional<MultiPoly> divide_linear(std::size_t i, const CycloNum& ci, std::size_t j, const CycloNum& cj) const {
        if (ci.is_zero()) throw Error(ErrorKind::DivisionByZero, "leading coefficient of divisor is zero");
        // Write p = sum_k P_k x^k in x = var_i; divide by (x - r y), r = -cj/ci, y = var_j.
        CycloNum r = -cj / ci;
        std::map<int, MultiPoly> slices;
        int top = -1;
        for (const auto& [e, c] : terms_) {
            Exponent f = e;
            int k = f[i];
            f[i] = 0;
            auto it = slices.try_emplace(k, table_).first;
            it->second.add_term(f, c);
            top = std::max(top, k);
        }
        if (top < 0) return MultiPoly(table_);
        MultiPoly y_times_r = MultiPoly::variable(table_, j) * r;
        std::vector<MultiPoly> quot(static_cast<std::size_t>(std::max(top, 0)), MultiPoly(table_));
        MultiPoly carry(table_);
        for (int k = top; k >= 1; --k) {
            MultiPoly cur(table_);
            if (auto it = slices.find(k); it != slices.end()) cur = it->second;
            cur += carry;
            quot[static_cast<std::size_t>(k - 1)] = cur;
            carry = cur * y_times_r;
        }
        MultiPoly rem(table_);
        if (auto it = slices.find(0); it != slices.end()) rem = it->second;
        rem += carry;
        if (!rem.is_zero()) return std::nullopt;
        MultiPoly q(table_);
        for (std::size_t k = 0; k < quot.size(); ++k)
            for (const auto& [e, c] : quot[k].terms_) {
                Exponent f = e;
                f[i] = static_cast<int>(k);
                q.add_term(f, c);
            }
        q *= ci.inv();
        return q;
    }

    /// One term per line, "e1 e2 ... ek : coeff", ascending lexicographic order.
    std::string to_text() const {
        std::ostringstream os;
        for (const auto& [e, c] : terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) os << (k ? " " : "") << e[k];
            os << " : " << c.to_string() << '\n';
        }
        return os.str();
    }

    static MultiPoly from_text(TablePtr table, const std::string& text) {
        MultiPoly p(std::move(table));
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            auto colon = line.find(':');
            if (colon == std::string::npos) throw Error(ErrorKind::Parse, "missing ':' in term line");
            std::istringstream es(line.substr(0, colon));
            Exponent e;
            int x;
            while (es >> x) {
                if (x < 0) throw Error(ErrorKind::Parse, "negative exponent");
                e.push_back(x);
            }
            if (!es.eof()) throw Error(ErrorKind::Parse, "bad exponent list");
            std::string coeff = line.substr(colon + 1);
            coeff.erase(0, coeff.find_first_not_of(' '));
            coeff.erase(coeff.find_last_not_of(" \r") + 1);
            p.add_term(e, CycloNum::parse(coeff));
        }
        return p;
    }

private:
    MultiPoly specialize_scale(std::size_t var, const CycloNum& scale) const {
        MultiPoly r(table_);
        for (const auto& [e, c] : terms_) r.add_term(e, c * scale.pow(e[var]));
        return r;
    }

    void check_table(const MultiPoly& o) const {
        if (table_ != o.table_ && table_->names() != o.table_->names())
            throw Error(ErrorKind::InconsistentSize, "polynomials over different variable tables");
    }

    TablePtr table_;
    std::map<Exponent, CycloNum> terms_;
};

inline CycloNum poly_eval(const MultiPoly& p, const std::map<std::string, CycloNum>& point) { return p.eval(point); }

namespace detail {

/// Inverse of the Vandermonde matrix V[i][j] = x_i^j.
inline std::vector<std::vector<BigRational>> inverse_vandermonde(const std::vector<BigRational>& nodes) {
    const std::size_t m = nodes.size();
    // Gauss-Jordan on [V | I] over Q.
    std::vector<std::vector<BigRational>> a(m, std::vector<BigRational>(2 * m));
    for (std::size_t i = 0; i < m; ++i) {
        BigRational p(1);
        for (std::size_t j = 0; j < m; ++j) {
            a[i][j] = p;
            p *= nodes[i];
        }
        a[i][m + i] = BigRational(1);
    }
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t p = c;
        while (a[p][c].is_zero()) ++p;
        std::swap(a[p], a[c]);
        BigRational inv = BigRational(1) / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            BigRational f = a[i][c];
            for (std::size_t k = 0; k < 2 * m; ++k) a[i][k] -= f * a[c][k];
        }
    }
    std::vector<std::vector<BigRational>> inv(m, std::vector<BigRational>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) inv[i][j] = a[i][m + j];
    return inv;
}

} // namespace detail

/// Tensor-grid interpolation.  `values` is row-major over the variables in
/// table order (last variable fastest); nodes[v] lists variable v's nodes and
/// fixes its degree bound at nodes[v].size() - 1.
inline MultiPoly interpolate_grid(const TablePtr& table, const std::vector<std::vector<BigRational>>& nodes,
                                  std::vector<CycloNum> values) {
    const std::size_t k = table->arity();
    if (nodes.size() != k) throw Error(ErrorKind::InconsistentGrid, "one node list per variable required");
    std::size_t total = 1;
    for (const auto& nv : nodes) {
        if (nv.empty()) throw Error(ErrorKind::InconsistentGrid, "empty node list");
        for (std::size_t i = 0; i < nv.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (nv[i] == nv[j]) throw Error(ErrorKind::DuplicateNode, "node " + nv[i].to_string() + " repeated");
        total *= nv.size();
    }
    if (values.size() != total) throw Error(ErrorKind::InconsistentGrid, "sample count does not match grid");

    std::size_t stride = total;
    std::vector<CycloNum> fiber, coef;
    for (std::size_t v = 0; v < k; ++v) {
        const std::size_t m = nodes[v].size();
        stride /= m;
        if (m == 1) continue;
        auto vinv = detail::inverse_vandermonde(nodes[v]);
        fiber.resize(m);
        coef.resize(m);
        for (std::size_t base = 0; base < total; ++base) {
            if ((base / stride) % m != 0) continue;
            for (std::size_t i = 0; i < m; ++i) fiber[i] = values[base + i * stride];
            for (std::size_t j = 0; j < m; ++j) {
                CycloNum s;
                for (std::size_t i = 0; i < m; ++i)
                    if (!vinv[j][i].is_zero() && !fiber[i].is_zero()) s += fiber[i] * vinv[j][i];
                coef[j] = std::move(s);
            }
            for (std::size_t j = 0; j < m; ++j) values[base + j * stride] = std::move(coef[j]);
        }
    }

    MultiPoly p(table);
    Exponent e(k, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (std::size_t v = k; v-- > 0;) {
            e[v] = static_cast<int>(rest % nodes[v].size());
            rest /= nodes[v].size();
        }
        p.add_term(e, values[idx]);
    }
    return p;
}

/// Interpolation from an explicit sample map.  The sample points must form
/// a full tensor grid with degree_bounds[v] + 1 distinct nodes per variable.
inline MultiPoly interpolate(const TablePtr& table, const std::map<std::vector<BigRational>, CycloNum>& samples,
                             const std::vector<int>& degree_bounds) {
    const std::size_t k = table->arity();
    if (degree_bounds.size() != k) throw Error(ErrorKind::InconsistentGrid, "one degree bound per variable required");
    std::vector<std::vector<BigRational>> nodes(k);
    for (const auto& [pt, val] : samples) {
        if (pt.size() != k) throw Error(ErrorKind::InconsistentGrid, "sample point arity mismatch");
        for (std::size_t v = 0; v < k; ++v)
            if (std::find(nodes[v].begin(), nodes[v].end(), pt[v]) == nodes[v].end()) nodes[v].push_back(pt[v]);
    }
    std::size_t total = 1;
    for (std::size_t v = 0; v < k; ++v) {
        std::sort(nodes[v].begin(), nodes[v].end());
        if (static_cast<int>(nodes[v].size()) != degree_bounds[v] + 1)
            throw Error(ErrorKind::InconsistentGrid, "variable " + table->name(v) + " needs " +
                                                         std::to_string(degree_bounds[v] + 1) + " distinct nodes");
        total *= nodes[v].size();
    }
    if (samples.size() != total) throw Error(ErrorKind::InconsistentGrid, "samples do not fill the tensor grid");
    std::vector<CycloNum> flat(total);
    for (const auto& [pt, val] : samples) {
        std::size_t idx = 0;
        for (std::size_t v = 0; v < k; ++v) {
            auto pos = static_cast<std::size_t>(std::find(nodes[v].begin(), nodes[v].end(), pt[v]) - nodes[v].begin());
            idx = idx * nodes[v].size() + pos;
        }
        flat[idx] = val;
    }
    return interpolate_grid(table, nodes, std::move(flat));
}

} // namespace arches
