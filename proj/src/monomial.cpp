#include "permres/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permres {

Ring::Ring(Layout layout, int n) : layout_(layout), n_(n) {
    if (n < 1) throw std::invalid_argument("ring size must be positive");
    if (num_vars() > 255) throw std::invalid_argument("at most 255 variables are supported");
}

Ring Ring::grid(int n) { return Ring(Layout::grid, n); }
Ring Ring::flat(int n) { return Ring(Layout::flat, n); }

int Ring::var(int row, int col) const {
    if (layout_ != Layout::grid) throw std::logic_error("var(row, col) on a flat ring");
    if (row < 0 || row >= n_ || col < 0 || col >= n_) throw std::out_of_range("matrix index out of range");
    return row * n_ + col;
}

std::pair<int, int> Ring::cell(int var) const {
    if (layout_ != Layout::grid) throw std::logic_error("cell() on a flat ring");
    return {var / n_, var % n_};
}

std::string Ring::var_name(int var) const {
    if (layout_ == Layout::flat) return "x" + std::to_string(var + 1);
    auto [r, c] = cell(var);
    if (n_ < 10) return "x" + std::to_string(r + 1) + std::to_string(c + 1);
    return "x" + std::to_string(r + 1) + "_" + std::to_string(c + 1);
}

Monomial Monomial::from_vars(std::vector<int> vars) {
    std::sort(vars.begin(), vars.end());
    std::string s;
    s.reserve(vars.size());
    for (int v : vars) {
        if (v < 0 || v > 255) throw std::out_of_range("variable index out of range");
        s.push_back(static_cast<char>(v));
    }
    return Monomial(std::move(s));
}

Monomial Monomial::from_exponents(const std::vector<int>& exponents) {
    std::string s;
    for (std::size_t v = 0; v < exponents.size(); ++v) {
        if (exponents[v] < 0) throw std::invalid_argument("negative exponent");
        s.append(static_cast<std::size_t>(exponents[v]), static_cast<char>(v));
    }
    return Monomial(std::move(s));
}

std::vector<int> Monomial::vars() const {
    std::vector<int> out;
    out.reserve(vars_.size());
    for (char c : vars_) out.push_back(static_cast<unsigned char>(c));
    return out;
}

std::vector<int> Monomial::exponents(int num_vars) const {
    std::vector<int> out(static_cast<std::size_t>(num_vars), 0);
    for (char c : vars_) ++out[static_cast<unsigned char>(c)];
    return out;
}

int Monomial::exponent(int var) const {
    return static_cast<int>(std::count(vars_.begin(), vars_.end(), static_cast<char>(var)));
}

Monomial Monomial::times(int var) const {
    std::string s = vars_;
    const char c = static_cast<char>(var);
    auto pos = std::upper_bound(s.begin(), s.end(), c,
                                [](char a, char b) { return static_cast<unsigned char>(a) < static_cast<unsigned char>(b); });
    s.insert(pos, c);
    return Monomial(std::move(s));
}

Monomial Monomial::times(const Monomial& other) const {
    std::string s;
    s.resize(vars_.size() + other.vars_.size());
    std::merge(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(), s.begin(),
               [](char a, char b) { return static_cast<unsigned char>(a) < static_cast<unsigned char>(b); });
    return Monomial(std::move(s));
}

void Monomial::add_weight(const Ring& ring, Weight& w) const {
    for (char c : vars_) {
        const int v = static_cast<unsigned char>(c);
        ++w[static_cast<std::size_t>(ring.row_coord(v))];
        if (ring.layout() == Ring::Layout::grid) ++w[static_cast<std::size_t>(ring.col_coord(v))];
    }
}

Weight Monomial::weight(const Ring& ring) const {
    Weight w(static_cast<std::size_t>(ring.weight_dims()), 0);
    add_weight(ring, w);
    return w;
}

std::string Monomial::to_string(const Ring& ring) const {
    if (vars_.empty()) return "1";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < vars_.size()) {
        std::size_t j = i;
        while (j < vars_.size() && vars_[j] == vars_[i]) ++j;
        if (!first) os << '*';
        first = false;
        os << ring.var_name(static_cast<unsigned char>(vars_[i]));
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

bool Monomial::operator<(const Monomial& other) const {
    // Sorted multisets compare like this: at the first differing position the
    // smaller variable index means a larger exponent on an earlier variable.
    const std::size_t common = std::min(vars_.size(), other.vars_.size());
    for (std::size_t i = 0; i < common; ++i) {
        const auto a = static_cast<unsigned char>(vars_[i]);
        const auto b = static_cast<unsigned char>(other.vars_[i]);
        if (a != b) return a < b;
    }
    // A proper prefix has smaller exponents, so it sorts later.
    return vars_.size() > other.vars_.size();
}

bool Wedge::normalize(std::vector<int> vars, Wedge& out, int& sign) {
    sign = 1;
    // Insertion sort counting transpositions; ranks are tiny.
    for (std::size_t i = 1; i < vars.size(); ++i) {
        for (std::size_t j = i; j > 0 && vars[j - 1] >= vars[j]; --j) {
            if (vars[j - 1] == vars[j]) return false;
            std::swap(vars[j - 1], vars[j]);
            sign = -sign;
        }
    }
    std::string s;
    s.reserve(vars.size());
    for (int v : vars) {
        if (v < 0 || v > 255) throw std::out_of_range("variable index out of range");
        s.push_back(static_cast<char>(v));
    }
    out.vars_ = std::move(s);
    return true;
}

std::vector<int> Wedge::vars() const {
    std::vector<int> out;
    for (char c : vars_) out.push_back(static_cast<unsigned char>(c));
    return out;
}

Wedge Wedge::without(std::size_t position) const {
    Wedge w;
    w.vars_ = vars_;
    w.vars_.erase(position, 1);
    return w;
}

bool Wedge::contains(int var) const { return vars_.find(static_cast<char>(var)) != std::string::npos; }

void Wedge::add_weight(const Ring& ring, Weight& w) const {
    for (char c : vars_) {
        const int v = static_cast<unsigned char>(c);
        ++w[static_cast<std::size_t>(ring.row_coord(v))];
        if (ring.layout() == Ring::Layout::grid) ++w[static_cast<std::size_t>(ring.col_coord(v))];
    }
}

std::string Wedge::to_string(const Ring& ring) const {
    if (vars_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) os << "^";
        os << ring.var_name(static_cast<unsigned char>(vars_[i]));
    }
    return os.str();
}

namespace {

void monomials_rec(int num_vars, int start, int remaining, std::string& prefix, std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.push_back(Monomial::from_vars([&] {
            std::vector<int> v;
            for (char c : prefix) v.push_back(static_cast<unsigned char>(c));
            return v;
        }()));
        return;
    }
    for (int v = start; v < num_vars; ++v) {
        prefix.push_back(static_cast<char>(v));
        monomials_rec(num_vars, v, remaining - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Monomial> all_monomials(const Ring& ring, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::string prefix;
    monomials_rec(ring.num_vars(), 0, degree, prefix, out);
    return out;
}

}  // namespace permres
