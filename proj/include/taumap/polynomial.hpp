#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "taumap/numeric.hpp"

namespace taumap {

// Sparse multivariate polynomial over the exact rationals.  A term maps an
// exponent vector (one entry per variable, all non-negative) to a nonzero
// coefficient; zero coefficients are never stored, so equality is equality
// of the term maps.
class Polynomial {
public:
    using Exponents = std::vector<int>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw std::domain_error("Polynomial: negative variable count");
    }

    static Polynomial constant(int nvars, const Rat& c) {
        Polynomial p(nvars);
        p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }

    // The i-th coordinate variable, 0-based.
    static Polynomial variable(int nvars, int i) {
        Polynomial p(nvars);
        Exponents e(static_cast<std::size_t>(nvars), 0);
        e.at(static_cast<std::size_t>(i)) = 1;
        p.add_term(e, 1);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    Rat coefficient(const Exponents& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Exponents& exps, const Rat& c) {
        if (static_cast<int>(exps.size()) != nvars_)
            throw std::invalid_argument("Polynomial: exponent vector has wrong length");
        for (int e : exps)
            if (e < 0) throw std::invalid_argument("Polynomial: negative exponent");
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(exps, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Polynomial& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [e, c] : terms_) c *= s;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial p, const Rat& s) { return p *= s; }
    friend Polynomial operator*(const Rat& s, Polynomial p) { return p *= s; }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        check_same_vars(o);
        Polynomial r(nvars_);
        Exponents sum(static_cast<std::size_t>(nvars_));
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                for (int i = 0; i < nvars_; ++i) sum[static_cast<std::size_t>(i)] = ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
                r.add_term(sum, ca * cb);
            }
        }
        return r;
    }

    Rat evaluate(const std::vector<Rat>& point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("Polynomial::evaluate: wrong point dimension");
        Rat total = 0;
        for (const auto& [e, c] : terms_) {
            Rat term = c;
            for (int i = 0; i < nvars_; ++i) {
                int exp = e[static_cast<std::size_t>(i)];
                if (exp) term *= rat_pow(point[static_cast<std::size_t>(i)], exp);
            }
            total += term;
        }
        return total;
    }

    // Largest term degree; the zero polynomial reports -1.
    long total_degree() const {
        long best = -1;
        for (const auto& [e, c] : terms_) {
            long d = 0;
            for (int x : e) d += x;
            best = std::max(best, d);
        }
        return best;
    }

    Polynomial homogeneous_part(long deg) const {
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_) {
            long d = 0;
            for (int x : e) d += x;
            if (d == deg) r.terms_.emplace(e, c);
        }
        return r;
    }

    Polynomial pow(int k) const {
        if (k < 0) throw std::domain_error("Polynomial::pow: negative exponent");
        Polynomial acc = constant(nvars_, 1);
        for (int i = 0; i < k; ++i) acc = acc * *this;
        return acc;
    }

    // Human-readable form, highest exponent vector first.  Variable names
    // default to z1..zn when none are supplied.
    std::string to_string(std::vector<std::string> names = {}) const {
        if (terms_.empty()) return "0";
        if (names.empty())
            for (int i = 1; i <= nvars_; ++i) names.push_back("z" + std::to_string(i));
        if (static_cast<int>(names.size()) != nvars_)
            throw std::invalid_argument("Polynomial::to_string: wrong number of names");
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rat& c = it->second;
            Rat mag = c < 0 ? Rat(-c) : c;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            bool has_vars = false;
            for (int x : it->first) has_vars = has_vars || x > 0;
            if (mag != 1 || !has_vars) out << rational_string(mag);
            bool printed = mag != 1 || !has_vars;
            for (int i = 0; i < nvars_; ++i) {
                int e = it->first[static_cast<std::size_t>(i)];
                if (!e) continue;
                if (printed) out << "*";
                out << names[static_cast<std::size_t>(i)];
                if (e > 1) out << "^" << e;
                printed = true;
            }
        }
        return out.str();
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check_same_vars(const Polynomial& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("Polynomial: mixed variable counts");
    }

    int nvars_ = 0;
    std::map<Exponents, Rat> terms_;
};

}  // namespace taumap
