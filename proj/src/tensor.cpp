#include "permres/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace permres {

void TensorElement::add(const Monomial& m, const std::vector<int>& wedge_factors, std::int64_t coeff) {
    if (m.degree() != degree_ || static_cast<int>(wedge_factors.size()) != rank_) {
        throw std::invalid_argument("term shape does not match tensor element");
    }
    if (coeff == 0) return;
    TensorTerm term{m, {}};
    int sign = 1;
    if (!Wedge::normalize(wedge_factors, term.wedge, sign)) return;
    add(term, sign * coeff);
}

void TensorElement::add(const TensorTerm& term, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(term, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t TensorElement::coefficient(const TensorTerm& term) const {
    auto it = terms_.find(term);
    return it == terms_.end() ? 0 : it->second;
}

void TensorElement::check_shape(const TensorElement& other) const {
    if (degree_ != other.degree_ || rank_ != other.rank_) {
        throw std::invalid_argument("tensor elements live in different graded pieces");
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
    check_shape(other);
    for (const auto& [term, c] : other.terms_) add(term, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
    check_shape(other);
    for (const auto& [term, c] : other.terms_) add(term, -c);
    return *this;
}

TensorElement& TensorElement::operator*=(std::int64_t scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [term, c] : terms_) c *= scalar;
    return *this;
}

bool TensorElement::weight_homogeneous(const Ring& ring, Weight& out) const {
    bool first = true;
    for (const auto& [term, c] : terms_) {
        Weight w = term.mono.weight(ring);
        term.wedge.add_weight(ring, w);
        if (first) {
            out = std::move(w);
            first = false;
        } else if (w != out) {
            return false;
        }
    }
    if (first) out.assign(static_cast<std::size_t>(ring.weight_dims()), 0);
    return true;
}

std::string TensorElement::to_string(const Ring& ring) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [term, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const std::int64_t mag = c < 0 ? -c : c;
        if (mag != 1) os << mag << "*";
        os << term.mono.to_string(ring);
        if (rank_ > 0) os << " (x) " << term.wedge.to_string(ring);
    }
    return os.str();
}

TensorElement multiply(const TensorElement& x, const Monomial& m) {
    TensorElement out(x.degree() + m.degree(), x.rank());
    for (const auto& [term, c] : x.terms()) out.add(TensorTerm{term.mono.times(m), term.wedge}, c);
    return out;
}

TensorElement multiply(const TensorElement& x, const TensorElement& polynomial) {
    if (polynomial.rank() != 0) throw std::invalid_argument("multiplier must be a polynomial (rank 0)");
    TensorElement out(x.degree() + polynomial.degree(), x.rank());
    for (const auto& [pt, pc] : polynomial.terms()) {
        for (const auto& [term, c] : x.terms()) out.add(TensorTerm{term.mono.times(pt.mono), term.wedge}, c * pc);
    }
    return out;
}

TensorElement koszul_transpose(const TensorElement& x) {
    if (x.rank() < 1) throw std::invalid_argument("koszul_transpose needs exterior rank >= 1");
    TensorElement out(x.degree() + 1, x.rank() - 1);
    for (const auto& [term, c] : x.terms()) {
        for (int a = 0; a < term.wedge.rank(); ++a) {
            const std::int64_t sign = (a % 2 == 0) ? 1 : -1;
            out.add(TensorTerm{term.mono.times(term.wedge.var_at(static_cast<std::size_t>(a))),
                               term.wedge.without(static_cast<std::size_t>(a))},
                    sign * c);
        }
    }
    return out;
}

}  // namespace permres
