#ifndef ZETAPOLY_SYMBOLIC_HPP
#define ZETAPOLY_SYMBOLIC_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "hp_real.hpp"

namespace zetapoly {

/// Formal constant: Euler's gamma or zeta(k), k >= 2. Ordered gamma < zeta2 < zeta3 < ...
class ConstSymbol {
public:
    static ConstSymbol gamma() { return ConstSymbol(0); }
    static ConstSymbol zeta(int k) {
        if (k < 2)
            throw DomainError("zeta symbol needs index >= 2, got " + std::to_string(k));
        return ConstSymbol(k);
    }

    bool is_gamma() const noexcept { return key_ == 0; }
    int zeta_index() const noexcept { return key_; }

    /// Scaling weight under alpha ~ 1/L: gamma -> 1, zeta(k) -> k.
    int weight() const noexcept { return is_gamma() ? 1 : key_; }

    std::string name() const { return is_gamma() ? "gamma" : "zeta" + std::to_string(key_); }

    friend auto operator<=>(const ConstSymbol&, const ConstSymbol&) = default;

private:
    explicit ConstSymbol(int key) : key_(key) {}
    int key_;
};

/// Product of ConstSymbols with multiplicity; factors kept sorted.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(ConstSymbol s) : factors_{s} {}

    unsigned degree() const noexcept { return static_cast<unsigned>(factors_.size()); }
    int weight() const {
        int w = 0;
        for (const auto& s : factors_)
            w += s.weight();
        return w;
    }
    const std::vector<ConstSymbol>& factors() const noexcept { return factors_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.factors_.reserve(a.factors_.size() + b.factors_.size());
        std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
                   std::back_inserter(r.factors_));
        return r;
    }

    /// "gamma^2*zeta3"; empty monomial renders as "1".
    std::string to_string() const {
        if (factors_.empty())
            return "1";
        std::string out;
        for (std::size_t i = 0; i < factors_.size();) {
            std::size_t j = i;
            while (j < factors_.size() && factors_[j] == factors_[i])
                ++j;
            if (!out.empty())
                out += "*";
            out += factors_[i].name();
            if (j - i > 1)
                out += "^" + std::to_string(j - i);
            i = j;
        }
        return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<ConstSymbol> factors_;
};

/// Graded order: higher degree first, then lexicographic in the sorted factors.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree())
            return a.degree() > b.degree();
        return a.factors() < b.factors();
    }
};

using ConstantBinding = std::map<ConstSymbol, HPReal>;

/**
 * Polynomial with exact rational coefficients in gamma, zeta2, zeta3, ...
 * No zero coefficient is ever stored, so structural equality is value equality.
 */
class SymbolicConstantPoly {
public:
    using Terms = std::map<Monomial, ExactRational, MonomialOrder>;

    SymbolicConstantPoly() = default;
    SymbolicConstantPoly(long c) { add_term(Monomial(), c); }
    SymbolicConstantPoly(const ExactRational& c) { add_term(Monomial(), c); }
    SymbolicConstantPoly(ConstSymbol s) { add_term(Monomial(s), 1); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Monomial& m, const ExactRational& c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    ExactRational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ExactRational(0) : it->second;
    }

    /// True when every monomial has the same weight; `w` receives it (0 for the zero polynomial).
    bool is_weight_homogeneous(int* w = nullptr) const {
        if (terms_.empty()) {
            if (w)
                *w = 0;
            return true;
        }
        const int first = terms_.begin()->first.weight();
        for (const auto& [m, c] : terms_)
            if (m.weight() != first)
                return false;
        if (w)
            *w = first;
        return true;
    }

    SymbolicConstantPoly& operator+=(const SymbolicConstantPoly& o) {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    SymbolicConstantPoly& operator-=(const SymbolicConstantPoly& o) {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    SymbolicConstantPoly operator-() const {
        SymbolicConstantPoly r;
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, -c);
        return r;
    }

    friend SymbolicConstantPoly operator+(SymbolicConstantPoly a, const SymbolicConstantPoly& b) { return a += b; }
    friend SymbolicConstantPoly operator-(SymbolicConstantPoly a, const SymbolicConstantPoly& b) { return a -= b; }
    friend SymbolicConstantPoly operator*(const SymbolicConstantPoly& a, const SymbolicConstantPoly& b) {
        SymbolicConstantPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma * mb, ca * cb);
        return r;
    }
    SymbolicConstantPoly& operator*=(const SymbolicConstantPoly& o) { return *this = *this * o; }

    friend bool operator==(const SymbolicConstantPoly& a, const SymbolicConstantPoly& b) {
        return a.terms_ == b.terms_;
    }

    /// Numeric value under `binding`; throws BindingError naming the first unbound symbol.
    HPReal evaluate(const ConstantBinding& binding, Precision p) const {
        HPReal sum(p);
        for (const auto& [m, c] : terms_) {
            HPReal term(c, p);
            for (const auto& s : m.factors()) {
                auto it = binding.find(s);
                if (it == binding.end())
                    throw BindingError(s.name());
                term *= it->second;
            }
            sum += term;
        }
        return sum.rounded(p);
    }

    /// "gamma^2 - zeta2", "-gamma^3 + 3*gamma*zeta2 - zeta3", "0".
    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const bool negative = c < 0;
            const ExactRational mag = abs(c);
            if (first)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            const bool unit = mag == 1;
            const std::string coeff = mag.get_den() == 1 ? mag.get_num().get_str() : mag.get_str();
            if (m.degree() == 0)
                out += coeff;
            else if (unit)
                out += m.to_string();
            else
                out += coeff + "*" + m.to_string();
            first = false;
        }
        return out;
    }

private:
    Terms terms_;
};

} // namespace zetapoly

#endif
